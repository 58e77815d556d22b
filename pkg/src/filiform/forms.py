"""Exterior forms on the dual basis e^2, e^3, ... (e^1 allowed, index 0 not).

A form is a rational combination of wedge monomials e^{i_1} ^ ... ^ e^{i_q}
with strictly increasing indices.  Monomials are stored canonically sorted;
construction from an unsorted index sequence picks up the permutation sign
and kills repeated indices.

Operators:
  d1       degree-0 derivation with e^2 -> 0, e^i -> e^{i-1}
  dminus1  right inverse to d1, weight +1 on monomials
  d_trivial   differential with d(e^i) = e^1 ^ e^{i-1}; on e^1-free forms
              it equals e^1 ^ d1(.)
  omega    the closed-form cocycle attached to a label (i_1 < ... < i_q, i_q+1)
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator


def _sort_with_sign(indices: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Sort a wedge index sequence, returning (sorted, sign); sign 0 on repeats."""
    seq = list(indices)
    sign = 1
    # insertion sort; count transpositions
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(seq, seq[1:]):
        if a == b:
            return tuple(seq), 0
    return tuple(seq), sign


class ExtForm:
    """Immutable exterior form; terms map sorted index tuples to rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[tuple[int, ...], Fraction]] = ()):
        acc: dict[tuple[int, ...], Fraction] = {}
        for mono, coeff in terms:
            for idx in mono:
                if idx < 1:
                    raise ValueError(f"dual index must be >= 1, got {idx}")
            sorted_mono, sign = _sort_with_sign(tuple(mono))
            if sign == 0:
                continue
            c = acc.get(sorted_mono, 0) + sign * Fraction(coeff)
            if c:
                acc[sorted_mono] = c
            else:
                acc.pop(sorted_mono, None)
        object.__setattr__(self, "terms", tuple(sorted(acc.items(), key=lambda t: (len(t[0]), t[0]))))

    def __setattr__(self, name, value):
        raise AttributeError("ExtForm is immutable")

    @classmethod
    def zero(cls) -> "ExtForm":
        return cls()

    @classmethod
    def monomial(cls, indices: Iterable[int], coeff=1) -> "ExtForm":
        return cls(((tuple(indices), Fraction(coeff)),))

    @classmethod
    def generator(cls, i: int) -> "ExtForm":
        return cls.monomial((i,))

    def coefficient(self, indices: Iterable[int]) -> Fraction:
        mono, sign = _sort_with_sign(tuple(indices))
        if sign == 0:
            return Fraction(0)
        for m, c in self.terms:
            if m == mono:
                return sign * c
        return Fraction(0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        return iter(self.terms)

    def degrees(self) -> set[int]:
        return {len(m) for m, _ in self.terms}

    def weights(self) -> set[int]:
        return {sum(m) for m, _ in self.terms}

    def __add__(self, other: "ExtForm") -> "ExtForm":
        return ExtForm(self.terms + other.terms)

    def __sub__(self, other: "ExtForm") -> "ExtForm":
        return self + (-other)

    def __neg__(self) -> "ExtForm":
        return ExtForm((m, -c) for m, c in self.terms)

    def scaled(self, factor) -> "ExtForm":
        factor = Fraction(factor)
        if not factor:
            return ExtForm()
        return ExtForm((m, c * factor) for m, c in self.terms)

    def __rmul__(self, factor) -> "ExtForm":
        return self.scaled(factor)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtForm):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms:
            body = "^".join(f"e{i}" for i in mono)
            if c == 1:
                frag = body
            elif c == -1:
                frag = f"-{body}"
            else:
                frag = f"{c}*{body}"
            if parts and not frag.startswith("-"):
                parts.append("+ " + frag)
            elif parts:
                parts.append("- " + frag[1:])
            else:
                parts.append(frag)
        return " ".join(parts)


def wedge(a: ExtForm, b: ExtForm) -> ExtForm:
    out = []
    for ma, ca in a.terms:
        for mb, cb in b.terms:
            out.append((ma + mb, ca * cb))
    return ExtForm(out)


def d1(f: ExtForm) -> ExtForm:
    """Degree-0 derivation: e^1 is rejected, e^2 -> 0, e^i -> e^{i-1}."""
    out = []
    for mono, c in f.terms:
        if 1 in mono:
            raise ValueError("d1 is undefined on forms containing e^1")
        for p, idx in enumerate(mono):
            if idx == 2:
                continue
            out.append((mono[:p] + (idx - 1,) + mono[p + 1:], c))
    return ExtForm(out)


def dminus1(f: ExtForm) -> ExtForm:
    """Right inverse of d1 on e^1-free forms.

    On a monomial xi ^ e^i (xi supported below i):
        sum_l (-1)^l d1^l(xi) ^ e^{i+1+l},
    and e^i -> e^{i+1} in degree one.  The sum is finite because d1 is
    nilpotent on any fixed monomial.
    """
    out = ExtForm()
    for mono, c in f.terms:
        if 1 in mono:
            raise ValueError("dminus1 is undefined on forms containing e^1")
        if len(mono) == 1:
            out = out + ExtForm.monomial((mono[0] + 1,), c)
            continue
        prefix = ExtForm.monomial(mono[:-1], c)
        top = mono[-1]
        l = 0
        while not prefix.is_zero:
            shifted = ExtForm((m + (top + 1 + l,), pc) for m, pc in prefix.terms)
            out = out + (shifted if l % 2 == 0 else -shifted)
            prefix = d1(prefix)
            l += 1
    return out


def d_trivial(f: ExtForm) -> ExtForm:
    """Differential of the chain algebra on scalars: d e^i = e^1 ^ e^{i-1}.

    e^1 and e^2 are closed.  Extends as an odd derivation; on e^1-free
    input this is exactly wedge(e^1, d1(f)).
    """
    out = []
    for mono, c in f.terms:
        for p, idx in enumerate(mono):
            if idx <= 2:
                continue
            # odd derivation: (-1)^p for the factors skipped, then the
            # replacement e^{i_p} -> e^1 ^ e^{i_p - 1} lands in place
            sign = -1 if p % 2 else 1
            out.append((mono[:p] + (1, idx - 1) + mono[p + 1:], sign * c))
    return ExtForm(out)


def omega(indices: Iterable[int]) -> ExtForm:
    """Cocycle generator for a label (i_1 < ... < i_q, i_q + 1), entries >= 2.

    omega = sum_l (-1)^l d1^l(e^{i_1} ^ ... ^ e^{i_q}) ^ e^{i_q + 1 + l}.
    Closed for d_trivial; leading monomial is the label itself.
    """
    idx = tuple(indices)
    if len(idx) < 2:
        raise ValueError("label needs at least two indices")
    if any(i < 2 for i in idx):
        raise ValueError("label indices must be >= 2")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError("label indices must be strictly increasing")
    if idx[-1] != idx[-2] + 1:
        raise ValueError("label must end with consecutive indices (i_q, i_q + 1)")
    prefix = ExtForm.monomial(idx[:-1])
    start = idx[-1]
    out = ExtForm()
    l = 0
    while not prefix.is_zero:
        shifted = ExtForm((m + (start + l,), pc) for m, pc in prefix.terms)
        out = out + (shifted if l % 2 == 0 else -shifted)
        prefix = d1(prefix)
        l += 1
    return out
