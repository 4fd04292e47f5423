"""Exact unit-group computations for rings F2[x,y]/(y^2 + gy + h)."""

from ._core import (
    Poly,
    apply_shift,
    brute_force_oracle,
    classify_type,
    derivative,
    factor,
    family_xm,
    format_poly,
    gcd,
    inverse_unit,
    is_irreducible,
    minimal_representative,
    mul_ring,
    parse_poly,
    solve_artin_schreier,
    sqrt_exact,
    squarefree_decompose,
    squarefree_divisors_proper,
    subst_x_plus1,
    sweep_conjecture,
    unit_group,
    valuation,
    verify_unit,
)
from ._core import __version__

__all__ = [
    "Poly",
    "apply_shift",
    "brute_force_oracle",
    "classify_type",
    "derivative",
    "factor",
    "family_xm",
    "format_poly",
    "gcd",
    "inverse_unit",
    "is_irreducible",
    "minimal_representative",
    "mul_ring",
    "parse_poly",
    "solve_artin_schreier",
    "sqrt_exact",
    "squarefree_decompose",
    "squarefree_divisors_proper",
    "subst_x_plus1",
    "sweep_conjecture",
    "unit_group",
    "valuation",
    "verify_unit",
    "__version__",
]
