"""scrimkit: SCRIM factors of x^n - 1 over GF(q^2) and the cyclic codes
they classify (Hermitian LCD over the field, Hermitian self-dual over
the chain ring GF(q^2)[u]/(u^t))."""

# cli is importable as scrimkit.cli but not imported eagerly, so that
# `python -m scrimkit.cli` does not trip runpy's double-import warning
from . import budgets, chainring, errors, fpoly, gf, hlcd, kernels, numtheory, scrim
from .chainring import (
    ChainRing,
    CyclicCodeCR,
    LiftedFactorization,
    codeword_duality_oracle,
    count_self_dual,
    dagger_is_preserved,
    enumerate_self_dual,
    hensel_lift,
    hermitian_dual,
    is_hermitian_self_dual,
    make_r0,
    self_dual_exists,
)
from .fpoly import Poly, conjugate_reciprocal_dagger, is_irreducible, parse, reciprocal_star, render
from .gf import FieldSpec, build_field, conjugate, element_order, primitive_nth_root
from .hlcd import (
    CyclicCodeGF,
    count_hermitian_lcd,
    enumerate_hermitian_lcd,
    hermitian_dual_generator,
    is_hermitian_lcd,
)
from .numtheory import (
    FactoredInteger,
    euler_phi,
    factorize,
    lambda_predicate,
    mult_order,
    two_adic_valuation,
)
from .scrim import (
    Coset,
    FactorizationReport,
    all_scrim,
    coset_partition,
    count_direct,
    count_recursive,
    factor_xn_minus_1,
    is_scrim_coset,
    only_trivial_scrim,
)

__version__ = "0.1.0"

__all__ = [
    "budgets", "chainring", "errors", "fpoly", "gf", "hlcd",
    "kernels", "numtheory", "scrim",
    "ChainRing", "CyclicCodeCR", "LiftedFactorization",
    "codeword_duality_oracle", "count_self_dual", "dagger_is_preserved",
    "enumerate_self_dual", "hensel_lift", "hermitian_dual",
    "is_hermitian_self_dual", "make_r0", "self_dual_exists",
    "Poly", "conjugate_reciprocal_dagger", "is_irreducible", "parse",
    "reciprocal_star", "render",
    "FieldSpec", "build_field", "conjugate", "element_order",
    "primitive_nth_root",
    "CyclicCodeGF", "count_hermitian_lcd", "enumerate_hermitian_lcd",
    "hermitian_dual_generator", "is_hermitian_lcd",
    "FactoredInteger", "euler_phi", "factorize", "lambda_predicate",
    "mult_order", "two_adic_valuation",
    "Coset", "FactorizationReport", "all_scrim", "coset_partition",
    "count_direct", "count_recursive", "factor_xn_minus_1",
    "is_scrim_coset", "only_trivial_scrim",
    "__version__",
]
