"""Deformations of the chain nilpotent Lie algebra, exactly.

Generates the quadratic systems that cut out the varieties of filiform
and maximal-class Lie brackets, together with the cocycle calculus behind
them and an independent brute-force oracle for every closed form.
"""

from .cochains import (AdjointCochain, DecompositionError, d_adjoint,
                       decompose3, linear_combination, nr_bracket22, psi2,
                       psi2_value, psi3, psi_top)
from .combinatorics import binomial, partitions_exact
from .forms import ExtForm, d1, d_trivial, dminus1, omega, wedge
from .lie import LieElement, LieStructure, make_fixture
from .oracle import (InconclusiveInventoryError, conclusive_inventory,
                     deformed_structure, evaluate_system, jacobi_scan,
                     known_solution, oracle_coefficient)
from .polynomials import TOP, DeformPolynomial
from .systems import (EquationSystem, dims_report, f_poly, g_poly,
                      system_finite, system_truncated)

__version__ = "0.1.0"

__all__ = [
    "AdjointCochain", "DecompositionError", "DeformPolynomial",
    "EquationSystem", "ExtForm", "InconclusiveInventoryError", "LieElement",
    "LieStructure", "TOP", "binomial", "conclusive_inventory", "d1",
    "d_adjoint", "d_trivial", "decompose3", "deformed_structure",
    "dims_report", "dminus1", "evaluate_system", "f_poly", "g_poly",
    "jacobi_scan", "known_solution", "linear_combination", "make_fixture",
    "nr_bracket22", "omega", "oracle_coefficient", "partitions_exact",
    "psi2", "psi2_value", "psi3", "psi_top", "system_finite",
    "system_truncated", "wedge",
]
