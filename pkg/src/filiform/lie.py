"""Sparse exact Lie algebra skeleton over a finite graded basis e_1..e_n.

Vectors are rational linear combinations of basis elements; structures keep
only the bracket relations [e_i, e_j] with i < j and a fixed index cutoff n.
Any bracket target above the cutoff is dropped and flagged, never wrapped
around, so a structure of cutoff n is the degree-n truncation of the
corresponding N-graded algebra.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping


class LieElement:
    """Immutable rational vector sum(c_i * e_i), plus a truncation marker.

    The marker records that terms beyond some cutoff were discarded while
    producing the value.  It is deliberately excluded from equality: two
    elements are equal iff their surviving terms agree.
    """

    __slots__ = ("terms", "truncated")

    def __init__(self, terms: Iterable[tuple[int, Fraction]] = (), truncated: bool = False):
        acc: dict[int, Fraction] = {}
        for index, coeff in terms:
            if index < 1:
                raise ValueError(f"basis index must be >= 1, got {index}")
            c = acc.get(index, 0) + Fraction(coeff)
            if c:
                acc[index] = c
            else:
                acc.pop(index, None)
        object.__setattr__(self, "terms", tuple(sorted(acc.items())))
        object.__setattr__(self, "truncated", bool(truncated))

    def __setattr__(self, name, value):
        raise AttributeError("LieElement is immutable")

    @classmethod
    def zero(cls, truncated: bool = False) -> "LieElement":
        return cls((), truncated)

    @classmethod
    def basis(cls, index: int, coeff=1) -> "LieElement":
        return cls(((index, Fraction(coeff)),))

    def coefficient(self, index: int) -> Fraction:
        for i, c in self.terms:
            if i == index:
                return c
        return Fraction(0)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LieElement") -> "LieElement":
        return LieElement(self.terms + other.terms, self.truncated or other.truncated)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __neg__(self) -> "LieElement":
        return LieElement(((i, -c) for i, c in self.terms), self.truncated)

    def scaled(self, factor) -> "LieElement":
        factor = Fraction(factor)
        if not factor:
            return LieElement.zero(self.truncated)
        return LieElement(((i, c * factor) for i, c in self.terms), self.truncated)

    def __rmul__(self, factor) -> "LieElement":
        return self.scaled(factor)

    def clipped(self, cutoff: int) -> "LieElement":
        """Drop terms with index > cutoff, flagging if anything was lost."""
        kept = tuple((i, c) for i, c in self.terms if i <= cutoff)
        return LieElement(kept, self.truncated or len(kept) < len(self.terms))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, c in self.terms:
            if c == 1:
                mon = f"e{i}"
            elif c == -1:
                mon = f"-e{i}"
            else:
                mon = f"{c}*e{i}"
            if parts and not mon.startswith("-"):
                parts.append("+ " + mon)
            elif parts:
                parts.append("- " + mon[1:])
            else:
                parts.append(mon)
        return " ".join(parts)


ZERO = LieElement.zero()


class LieStructure:
    """Bracket table on basis e_1..e_dim; relations stored only for i < j."""

    def __init__(self, dim: int, relations: Mapping[tuple[int, int], LieElement],
                 name: str = ""):
        if dim < 1:
            raise ValueError("dimension cutoff must be >= 1")
        table: dict[tuple[int, int], LieElement] = {}
        for (i, j), value in relations.items():
            if not (1 <= i < j <= dim):
                raise ValueError(f"relation key ({i},{j}) out of range for cutoff {dim}")
            for idx, _ in value.terms:
                if idx > dim:
                    raise ValueError(f"relation ({i},{j}) hits e_{idx} above cutoff {dim}")
            if not value.is_zero:
                table[(i, j)] = value
        self.dim = dim
        self.name = name
        self._table = table

    def bracket_basis(self, i: int, j: int) -> LieElement:
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise ValueError(f"basis index out of range: ({i},{j}) with cutoff {self.dim}")
        if i == j:
            return ZERO
        if i < j:
            return self._table.get((i, j), ZERO)
        return -self._table.get((j, i), ZERO)

    def bracket(self, a: LieElement, b: LieElement) -> LieElement:
        out = LieElement.zero(a.truncated or b.truncated)
        for i, ca in a.terms:
            for j, cb in b.terms:
                out = out + self.bracket_basis(i, j).scaled(ca * cb)
        return out

    def jacobi_defect(self, i: int, j: int, k: int) -> LieElement:
        """[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]."""
        ei, ej, ek = (LieElement.basis(m) for m in (i, j, k))
        return (self.bracket(self.bracket(ei, ej), ek)
                + self.bracket(self.bracket(ej, ek), ei)
                + self.bracket(self.bracket(ek, ei), ej))

    def relations(self) -> Iterator[tuple[int, int, LieElement]]:
        """Stored nonzero relations, sorted by (i, j)."""
        for (i, j) in sorted(self._table):
            yield i, j, self._table[(i, j)]

    def __repr__(self) -> str:
        label = self.name or "structure"
        return f"<LieStructure {label} dim={self.dim} relations={len(self._table)}>"


def _chain_relations(n: int) -> dict[tuple[int, int], LieElement]:
    # [e_1, e_i] = e_{i+1}, the backbone every fixture shares.
    return {(1, i): LieElement.basis(i + 1) for i in range(2, n)}


def _fixture_m0(n: int) -> LieStructure:
    return LieStructure(n, _chain_relations(n), name=f"m0({n})")


def _fixture_m1(n: int) -> LieStructure:
    if n < 6 or n % 2:
        raise ValueError("m1 requires even dimension n = 2k >= 6")
    rel = _chain_relations(n)
    k = n // 2
    # [e_{k-l}, e_{k+1+l}] = (-1)^l e_{2k} for l = 0..k-2.
    for l in range(k - 1):
        rel[(k - l, k + 1 + l)] = LieElement.basis(n, (-1) ** l)
    return LieStructure(n, rel, name=f"m1({n})")


def _fixture_mk(n: int, k: int) -> LieStructure:
    """m_k on the gapped basis e_1, e_k, e_{k+1}, ...; m_2 is the k = 2 case."""
    if k < 2:
        raise ValueError("mk requires k >= 2")
    # [e_1, e_i] = e_{i+1} and [e_k, e_i] = e_{k+i}, both for i >= k only:
    # indices 2..k-1 are not part of the algebra's basis.
    rel = {(1, i): LieElement.basis(i + 1) for i in range(k, n)}
    for i in range(k + 1, n + 1 - k):
        rel[(k, i)] = LieElement.basis(i + k)
    return LieStructure(n, rel, name=f"m{k}({n})")


def _fixture_Lk(n: int, k: int) -> LieStructure:
    """Positive-part Witt relations [e_i, e_j] = (j - i) e_{i+j} for i, j >= k."""
    if k < 1:
        raise ValueError("Lk requires k >= 1")
    rel: dict[tuple[int, int], LieElement] = {}
    for i in range(k, n + 1):
        for j in range(i + 1, n + 1 - i):
            rel[(i, j)] = LieElement.basis(i + j, j - i)
    return LieStructure(n, rel, name=f"L{k}({n})")


_LACUNA_BASES = ("m0", "m2", "L1")


def _fixture_lacuna(n: int, s: int, base: str) -> LieStructure:
    """Subalgebra spanned by e_1 and e_{s+2}..e_n inside a graded base fixture.

    The grading components 2..s+1 are empty: a lacuna of length s.
    """
    if s < 1:
        raise ValueError("lacuna gap s must be >= 1")
    if base not in _LACUNA_BASES:
        raise ValueError(f"lacuna base must be one of {_LACUNA_BASES}")
    parent = make_fixture(base, n)
    allowed = {1} | set(range(s + 2, n + 1))
    rel: dict[tuple[int, int], LieElement] = {}
    for i, j, value in parent.relations():
        if i in allowed and j in allowed:
            # closure: targets of a graded bracket never fall back into the gap
            for idx, _ in value.terms:
                if idx not in allowed:
                    raise ValueError(f"gap {s} does not give a subalgebra of {base}")
            rel[(i, j)] = value
    return LieStructure(n, rel, name=f"lacuna{s}-of-{base}({n})")


def make_fixture(name: str, n: int, k: int | None = None, s: int | None = None,
                 base: str | None = None) -> LieStructure:
    """Build one of the stock structures at cutoff n.

    Names: m0, m1, m2, mk (needs k >= 2), L1, Lk (needs k >= 1),
    lacuna-of (needs gap s and base in m0/m2/L1).
    """
    if n < 2:
        raise ValueError("fixture needs n >= 2")
    if name == "m0":
        return _fixture_m0(n)
    if name == "m1":
        return _fixture_m1(n)
    if name == "m2":
        return _fixture_mk(n, 2)
    if name == "mk":
        if k is None:
            raise ValueError("mk needs parameter k")
        return _fixture_mk(n, k)
    if name == "L1":
        return _fixture_Lk(n, 1)
    if name == "Lk":
        if k is None:
            raise ValueError("Lk needs parameter k")
        return _fixture_Lk(n, k)
    if name == "lacuna-of":
        if s is None or base is None:
            raise ValueError("lacuna-of needs gap s and base name")
        return _fixture_lacuna(n, s, base)
    raise ValueError(f"unknown fixture name: {name!r}")
