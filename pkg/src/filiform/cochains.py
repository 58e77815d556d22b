"""Adjoint-valued cochains on the chain algebra m0 and their calculus.

A cochain of degree q assigns a vector to each increasing basis q-tuple.
Values are memoized; evaluation on arbitrary index tuples routes through
the permutation sign, and any tuple containing index 1 evaluates to zero
for the standard weighted cocycles (their scalar parts have no e^1 factor).

The weight-s degree-2 cocycle attached to sill index j has the closed form
    Psi_{j,s}(e_k, e_m) = (-1)^{j-k} C(m-j-1, j-k) e_{m+k+s},  k < m,
supported on k <= j, k+m >= 2j+1, m+k+s <= n.  The same cochain arises as
    sum_r  e_{2j+1+s+r} (x) dminus1^r(omega(e^j ^ e^{j+1})),
and both constructions are kept side by side on purpose: one is the check
on the other.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .combinatorics import binomial
from .forms import ExtForm, dminus1, omega
from .lie import LieElement, LieStructure


class AdjointCochain:
    """Alternating multilinear map on basis tuples with vector values."""

    def __init__(self, degree: int, dim: int, rule: Callable[[tuple[int, ...]], LieElement],
                 weight: int | None = None, label: str = ""):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        if dim < 1:
            raise ValueError("dimension cutoff must be >= 1")
        self.degree = degree
        self.dim = dim
        self.weight = weight
        self.label = label
        self._rule = rule
        self._memo: dict[tuple[int, ...], LieElement] = {}
        self._lock = threading.Lock()
        self.truncation_seen = False

    def value_on_basis(self, tup: tuple[int, ...]) -> LieElement:
        """Value on a strictly increasing tuple (cached)."""
        cached = self._memo.get(tup)
        if cached is not None:
            return cached
        if len(tup) != self.degree:
            raise ValueError(f"expected {self.degree} indices, got {len(tup)}")
        if any(a >= b for a, b in zip(tup, tup[1:])):
            raise ValueError(f"tuple {tup} is not strictly increasing")
        if tup[0] < 1 or tup[-1] > self.dim:
            raise ValueError(f"tuple {tup} out of range 1..{self.dim}")
        val = self._rule(tup)
        with self._lock:
            self._memo.setdefault(tup, val)
            if val.truncated:
                self.truncation_seen = True
        return val

    def value(self, *indices: int) -> LieElement:
        """Value on any index tuple; repeats give zero, order gives the sign."""
        if len(indices) != self.degree:
            raise ValueError(f"expected {self.degree} indices, got {len(indices)}")
        if len(set(indices)) != len(indices):
            return LieElement.zero()
        order = sorted(range(len(indices)), key=lambda p: indices[p])
        sign = _permutation_sign(order)
        base = self.value_on_basis(tuple(sorted(indices)))
        return base if sign == 1 else -base

    def value_with_element(self, elem: LieElement, rest: Sequence[int]) -> LieElement:
        """Linear extension in the first slot: value(elem, *rest)."""
        out = LieElement.zero(elem.truncated)
        for idx, coeff in elem.terms:
            out = out + self.value(idx, *rest).scaled(coeff)
        return out

    def __repr__(self) -> str:
        tag = self.label or "cochain"
        w = "?" if self.weight is None else self.weight
        return f"<AdjointCochain {tag} deg={self.degree} weight={w} n={self.dim}>"


def _permutation_sign(order: list[int]) -> int:
    seen = [False] * len(order)
    sign = 1
    for start in range(len(order)):
        if seen[start]:
            continue
        length = 0
        p = start
        while not seen[p]:
            seen[p] = True
            p = order[p]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def psi2_value(j: int, s: int, n: int, k: int, m: int) -> LieElement:
    """Closed-form value Psi_{j,s}(e_k, e_m) for 2 <= k < m <= n.

    Returns (-1)^{j-k} C(m-j-1, j-k) e_{m+k+s}; the guarded binomial makes
    the sill support conditions automatic.  A target above n is dropped and
    the result flagged as truncated.  k = 1 is rejected here: the cocycles
    vanish on e_1 and callers handle that case themselves.
    """
    _check_psi2_params(j, s, n)
    if k < 2:
        raise ValueError("psi2_value needs k >= 2 (values on e_1 vanish)")
    if not k < m:
        raise ValueError("psi2_value needs k < m")
    if m > n:
        raise ValueError(f"index {m} above cutoff {n}")
    coeff = binomial(m - j - 1, j - k)
    if coeff == 0:
        return LieElement.zero()
    target = m + k + s
    if target > n:
        return LieElement.zero(truncated=True)
    sign = -1 if (j - k) % 2 else 1
    return LieElement.basis(target, sign * coeff)


def _check_psi2_params(j: int, s: int, n: int) -> None:
    if j < 2:
        raise ValueError("sill index j must be >= 2")
    if s == -1:
        if n % 2 or j != n // 2:
            raise ValueError("weight -1 needs even n and j = n/2")
    elif s < 0:
        raise ValueError("weight must be >= 0, or -1 for the top cocycle")
    elif 2 * j + 1 + s > n:
        raise ValueError(f"label (j={j}, s={s}) does not fit below cutoff {n}")


def psi2(j: int, s: int, n: int, method: str = "table") -> AdjointCochain:
    """Degree-2 cocycle of weight s with sill index j on e_1..e_n.

    method="table" uses the closed form; method="series" rebuilds the values
    from the scalar cocycle omega(e^j ^ e^{j+1}) and the shift operator.
    """
    _check_psi2_params(j, s, n)
    if method == "table":
        def rule(tup: tuple[int, ...]) -> LieElement:
            k, m = tup
            if k == 1:
                return LieElement.zero()
            return psi2_value(j, s, n, k, m)
    elif method == "series":
        forms = _shift_tower(omega((j, j + 1)), n - (2 * j + 1 + s))

        def rule(tup: tuple[int, ...]) -> LieElement:
            k, m = tup
            if k == 1:
                return LieElement.zero()
            step = k + m - (2 * j + 1)
            if step < 0:
                return LieElement.zero()
            if step >= len(forms):
                # series cut at the cutoff: the target would exceed n
                return LieElement.zero(truncated=True)
            coeff = forms[step].coefficient((k, m))
            if not coeff:
                return LieElement.zero()
            return LieElement.basis(k + m + s, coeff)
    else:
        raise ValueError("method must be 'table' or 'series'")
    return AdjointCochain(2, n, rule, weight=s, label=f"Psi_{{{j},{s}}}")


def psi_top(k: int) -> AdjointCochain:
    """The weight -1 cocycle e_{2k} (x) omega(e^k ^ e^{k+1}) on e_1..e_2k."""
    if k < 3:
        raise ValueError("top cocycle needs k >= 3")
    return psi2(k, -1, 2 * k)


def _shift_tower(base: ExtForm, count: int) -> list[ExtForm]:
    """[base, dminus1(base), dminus1^2(base), ...] with count+1 entries."""
    forms = [base]
    for _ in range(max(0, count)):
        forms.append(dminus1(forms[-1]))
    return forms


def psi3(i: int, j: int, s: int, n: int) -> AdjointCochain:
    """Degree-3 cocycle of weight s >= 0 for the label (i, j, j+1), 2 <= i < j.

    Values come from the scalar cocycle omega(e^i ^ e^j ^ e^{j+1}):
    the component at total input weight w is paired with e_{w+s}.
    """
    if not 2 <= i < j:
        raise ValueError("need 2 <= i < j")
    if s < 0:
        raise ValueError("weight must be >= 0")
    base_weight = i + 2 * j + 1
    if base_weight + s > n:
        raise ValueError(f"label (i={i}, j={j}, s={s}) does not fit below cutoff {n}")
    forms = _shift_tower(omega((i, j, j + 1)), n - base_weight - s)

    def rule(tup: tuple[int, ...]) -> LieElement:
        if tup[0] == 1:
            return LieElement.zero()
        step = sum(tup) - base_weight
        if step < 0:
            return LieElement.zero()
        if step >= len(forms):
            return LieElement.zero(truncated=True)
        coeff = forms[step].coefficient(tup)
        if not coeff:
            return LieElement.zero()
        return LieElement.basis(sum(tup) + s, coeff)

    return AdjointCochain(3, n, rule, weight=s, label=f"Psi_{{{i},{j},{s}}}")


def d_adjoint(c: AdjointCochain, base: LieStructure) -> AdjointCochain:
    """Chevalley-Eilenberg differential of c with respect to ad of base.

    (dc)(x_1..x_{q+1}) = sum_i (-1)^{i+1} [x_i, c(.. x_i ..)]
                       + sum_{i<j} (-1)^{i+j} c([x_i,x_j], .. x_i .. x_j ..)
    with 1-based positions and hats marking omitted arguments.
    """
    if base.dim < c.dim:
        raise ValueError("base structure cutoff below cochain cutoff")
    n = c.dim

    def rule(tup: tuple[int, ...]) -> LieElement:
        out = LieElement.zero()
        for p, idx in enumerate(tup):
            rest = tup[:p] + tup[p + 1:]
            inner = c.value_on_basis(rest)
            term = base.bracket(LieElement.basis(idx), inner).clipped(n)
            out = out + (term if p % 2 == 0 else -term)
        for p in range(len(tup)):
            for r in range(p + 1, len(tup)):
                br = base.bracket_basis(tup[p], tup[r]).clipped(n)
                if br.is_zero:
                    continue
                rest = tuple(v for t, v in enumerate(tup) if t != p and t != r)
                term = c.value_with_element(br, rest)
                # 1-based positions: sign (-1)^{(p+1)+(r+1)} = (-1)^{p+r}
                out = out + (term if (p + r) % 2 == 0 else -term)
        return out

    label = f"d({c.label})" if c.label else "d(cochain)"
    return AdjointCochain(c.degree + 1, n, rule, weight=c.weight, label=label)


def nr_bracket22(a: AdjointCochain, b: AdjointCochain) -> AdjointCochain:
    """Symmetric bracket of two degree-2 cochains, a degree-3 cochain.

    [a,b](x,y,z) = a(b(x,y),z) + a(b(y,z),x) + a(b(z,x),y)
                 + b(a(x,y),z) + b(a(y,z),x) + b(a(z,x),y).
    """
    if a.degree != 2 or b.degree != 2:
        raise ValueError("bracket is defined for degree-2 cochains")
    if a.dim != b.dim:
        raise ValueError("operands must share the dimension cutoff")
    weight = None if a.weight is None or b.weight is None else a.weight + b.weight

    def rule(tup: tuple[int, ...]) -> LieElement:
        x, y, z = tup
        out = LieElement.zero()
        for f, g in ((a, b), (b, a)):
            out = out + f.value_with_element(g.value(x, y), (z,))
            out = out + f.value_with_element(g.value(y, z), (x,))
            out = out + f.value_with_element(g.value(z, x), (y,))
        return out

    label = f"[{a.label or 'a'},{b.label or 'b'}]"
    return AdjointCochain(3, a.dim, rule, weight=weight, label=label)


def linear_combination(parts: Iterable[tuple[Fraction, AdjointCochain]], degree: int,
                       n: int) -> AdjointCochain:
    """sum c_i * f_i as a single cochain (weights need not match)."""
    parts = [(Fraction(c), f) for c, f in parts]
    for _, f in parts:
        if f.degree != degree or f.dim != n:
            raise ValueError("mixed degrees or cutoffs in linear combination")

    def rule(tup: tuple[int, ...]) -> LieElement:
        out = LieElement.zero()
        for c, f in parts:
            out = out + f.value_on_basis(tup).scaled(c)
        return out

    return AdjointCochain(degree, n, rule, weight=None, label="sum")


class DecompositionError(ValueError):
    def __init__(self, message: str, triple: tuple[int, ...]):
        super().__init__(f"{message} at {triple}")
        self.triple = triple


def decompose3(phi: AdjointCochain) -> dict[tuple[int, int, int], Fraction]:
    """Coordinates of a degree-3 cochain in the (j, q, r) cocycle basis.

    The coefficient of the basis cocycle with label (j, q, r) is read off
    the value on (e_j, e_q, e_{q+1}): that value's component at
    e_{j+2q+1+r}.  Requires phi to vanish on triples containing e_1 and to
    carry no component below weight -1.
    """
    if phi.degree != 3:
        raise ValueError("decompose3 expects a degree-3 cochain")
    n = phi.dim
    for k in range(2, n):
        for m in range(k + 1, n + 1):
            bad = phi.value_on_basis((1, k, m))
            if not bad.is_zero:
                raise DecompositionError("nonzero value on a triple containing e_1",
                                         (1, k, m))
    coords: dict[tuple[int, int, int], Fraction] = {}
    for j in range(2, n):
        for q in range(j + 1, n):
            val = phi.value_on_basis((j, q, q + 1))
            for idx, coeff in val.terms:
                r = idx - (j + 2 * q + 1)
                if r < -1:
                    raise DecompositionError(f"component e_{idx} below weight -1",
                                             (j, q, q + 1))
                coords[(j, q, r)] = coeff
    return coords
