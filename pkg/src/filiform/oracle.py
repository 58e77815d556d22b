"""Brute-force cross-checks, independent of the closed-form system builder.

oracle_coefficient expands the square of a symbolic linear combination of
basis cocycles straight from the cyclic-sum definition of the bracket.  It
shares only psi2_value and exact arithmetic with systems.py; agreement of
the two routes is the main correctness gate of the whole package.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping

from .cochains import psi2_value
from .lie import LieElement, LieStructure
from .polynomials import TOP, DeformPolynomial, Variable, var_key

KNOWN_FAMILIES = ("m2", "L1", "mk", "L1-lacuna2")


class InconclusiveInventoryError(ValueError):
    """The supplied inventory cannot decide the requested coefficient."""

    def __init__(self, label: tuple[int, int, int], missing):
        self.label = label
        self.missing = tuple(missing)
        super().__init__(
            f"inventory too small for label {label}: missing {self.missing}")


def conclusive_inventory(j: int, q: int, r: int,
                         with_top: bool = False) -> tuple[Variable, ...]:
    """Smallest variable set that settles the coefficient at label (j,q,r).

    Any pair (l,t) outside this set provably cannot touch the target basis
    vector: the weights must split r (or r+1 against the marker) and the
    sill conditions cap l.
    """
    if not (2 <= j < q):
        raise ValueError(f"label needs 2 <= j < q, got j={j}, q={q}")
    if r < -1:
        raise ValueError(f"r must be >= -1, got {r}")
    if r == -1 and not with_top:
        raise ValueError("label with r = -1 is meaningful only with the marker x")
    w = j + 2 * q + 1 + r
    if with_top and w % 2:
        raise ValueError(f"marker x needs an even total index, got {w}")
    t_hi = r + 1 if with_top else r
    pairs: list[Variable] = [(l, t) for l in range(2, (w - 1) // 2 + 1)
                             for t in range(t_hi + 1) if 2 * l + 1 + t <= w]
    pairs.sort(key=var_key)
    if with_top:
        pairs.append(TOP)
    return tuple(pairs)


def _pair_value(v: Variable, a: int, b: int, n: int) -> LieElement:
    """Value on (e_a, e_b) of the basis cocycle labeled v, any index order."""
    if a == b:
        return LieElement.zero()
    sign = 1
    if a > b:
        a, b, sign = b, a, -1
    if a == 1:
        return LieElement.zero()
    l, t = (n // 2, -1) if v == TOP else v
    value = psi2_value(l, t, n, a, b)
    return value if sign == 1 else -value


def oracle_coefficient(j: int, q: int, r: int,
                       inventory=None) -> DeformPolynomial:
    """Coefficient of e_{j+2q+1+r} in the half-square of the symbolic sum.

    Evaluates psi(psi(e_j,e_q),e_{q+1}) plus cyclic terms with psi running
    over the inventory, all coefficients symbolic.  A missing-but-needed
    variable raises rather than silently truncating the answer.
    """
    if not (2 <= j < q):
        raise ValueError(f"label needs 2 <= j < q, got j={j}, q={q}")
    if r < -1:
        raise ValueError(f"r must be >= -1, got {r}")
    w = j + 2 * q + 1 + r
    if inventory is None:
        inventory = conclusive_inventory(j, q, r, with_top=(r == -1))
    inv = list(dict.fromkeys(inventory))
    with_top = TOP in inv
    if r == -1 and not with_top:
        raise ValueError("label with r = -1 is meaningful only with the marker x")
    if with_top and w % 2:
        raise ValueError(f"marker x needs an even total index, got {w}")
    # conclusive means: every cross-weight class reachable from a declared
    # variable is fully declared, so no declared variable has a half-built
    # row.  An empty inventory is vacuously conclusive (the answer is 0).
    pairs = {v for v in inv if v != TOP}
    partner_weights = {r - t for _, t in pairs if r - t >= 0}
    if with_top:
        partner_weights.add(r + 1)
    needed = {(m, u) for u in partner_weights
              for m in range(2, (w - 1 - u) // 2 + 1)}
    missing = sorted(needed - pairs, key=var_key)
    if missing:
        raise InconclusiveInventoryError((j, q, r), missing)
    # pairs above the target index cannot reach e_w: skip, do not truncate
    usable = [v for v in inv if v == TOP or 2 * v[0] + 1 + v[1] <= w]

    acc = DeformPolynomial.zero()
    for a, b, c in ((j, q, q + 1), (q, q + 1, j), (q + 1, j, q)):
        inner: dict[int, DeformPolynomial] = {}
        for v in usable:
            for idx, coeff in _pair_value(v, a, b, w).terms:
                contrib = int(coeff) * DeformPolynomial.variable(v)
                inner[idx] = inner.get(idx, DeformPolynomial.zero()) + contrib
        for idx, poly in inner.items():
            for v in usable:
                coeff = _pair_value(v, idx, c, w).coefficient(w)
                if coeff:
                    acc = acc + int(coeff) * (DeformPolynomial.variable(v) * poly)
    return acc


def known_solution(name: str, t=1, k: int | None = None,
                   bound: int | None = None) -> dict[Variable, Fraction]:
    """Assignment for one of the families known to lie on the variety."""
    t = Fraction(t)
    if name == "m2":
        return {(2, 0): t}
    if name == "mk":
        if k is None or k < 2:
            raise ValueError("family mk needs an index k >= 2")
        return {(2, k - 2): t}
    if name == "L1":
        if bound is None or bound < 2:
            raise ValueError("family L1 needs a truncation bound >= 2")
        return {(m, 0): t * Fraction(6 * factorial(m - 2) * factorial(m - 1),
                                     factorial(2 * m - 1))
                for m in range(2, bound + 1)}
    if name == "L1-lacuna2":
        return {(m, 2): t * Fraction(6 * factorial(m) * factorial(m + 1),
                                     factorial(2 * m + 3))
                for m in range(2, 9)}
    raise ValueError(f"unknown solution family {name!r}")


def evaluate_system(system, assignment: Mapping[Variable, Fraction]):
    """Exact residual of every equation, in system order; missing vars are 0."""
    return [(eq.label, eq.poly.evaluate(assignment)) for eq in system.equations]


def first_violation(system, assignment: Mapping[Variable, Fraction]):
    """(label, residual) of the first nonzero residual, or None."""
    for label, value in evaluate_system(system, assignment):
        if value:
            return label, value
    return None


def deformed_structure(assignment: Mapping[Variable, Fraction], n: int,
                       name: str = "deformed") -> LieStructure:
    """Chain bracket plus the assigned cocycle combination, cut at e_n."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    support = {v: Fraction(a) for v, a in assignment.items() if a}
    if TOP in support and n % 2:
        raise ValueError("the marker x needs an even dimension")
    relations = {(1, i): LieElement.basis(i + 1) for i in range(2, n)}
    for a in range(2, n):
        for b in range(a + 1, n + 1):
            elem = LieElement.zero()
            for v, coeff in support.items():
                l, t = (n // 2, -1) if v == TOP else v
                if v != TOP and 2 * l + 1 + t > n:
                    continue  # sill below cutoff is unreachable from (a, b)
                elem = elem + psi2_value(l, t, n, a, b).scaled(coeff)
            if not elem.is_zero:
                relations[(a, b)] = elem
    return LieStructure(n, relations, name)


def jacobi_scan(structure: LieStructure):
    """All increasing triples with a nonzero cyclic defect, in order."""
    out = []
    n = structure.dim
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                defect = structure.jacobi_defect(i, j, k)
                if not defect.is_zero:
                    out.append(((i, j, k), defect))
    return out
