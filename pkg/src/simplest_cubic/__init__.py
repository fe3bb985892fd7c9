"""Exact solver and field classifier for a one-parameter family of cubic
Thue equations.

The family is F_m(x, y) = x^3 - m x^2 y - (m+3) x y^2 - y^3.  This package
finds every integer solution of F_m(x, y) = lambda where lambda > 0 divides
m^2 + 3m + 9, decides when two indices give the same splitting field,
computes the conductor of that field, and expands the real root of
f_m(X) = X^3 - m X^2 - (m+3) X - 1 lying in (-1/2, 0) as an exact continued
fraction.  All arithmetic is exact; floating point appears only as a hint
that is always confirmed with integers.
"""

from .arith import Factorization, divisors, factor, is_cube, is_prime
from .cf import (
    ContinuedFraction,
    Convergent,
    IsolatedRoot,
    approx_root,
    cf_expand,
    convergent_stream,
    convergents,
    isolate_root,
    isolate_theta2,
    expansion_prefix,
    theta2_enclosure_ok,
    theta2_series_bounds,
)
from .family import (
    CubicPoly,
    IdentityWitness,
    OrbitClass,
    Solution,
    eval_form,
    family_constant,
    identity_witness,
    is_trivial,
    normalize_index,
    orbit,
    poly_fm,
    poly_gm,
    sigma,
    trivial_solutions,
)
from .isofield import (
    Conductor,
    IsoWitness,
    SplitParam,
    classify_range,
    conductor,
    is_isomorphic,
    isomorphic_pairs,
    m_params,
    n_from_solution,
    splits_completely,
)
from .solver import (
    SearchPlan,
    SolutionSet,
    SolvedOrbit,
    brute_search,
    brute_y_bound,
    convergent_search,
    lpv_kappa,
    solve_family,
    solve_range,
    y_ceiling,
)

__version__ = "1.0.0"

__all__ = [
    "Factorization", "divisors", "factor", "is_cube", "is_prime",
    "ContinuedFraction", "Convergent", "IsolatedRoot", "approx_root",
    "cf_expand", "convergent_stream", "convergents", "isolate_root",
    "isolate_theta2", "expansion_prefix", "theta2_enclosure_ok",
    "theta2_series_bounds",
    "CubicPoly", "IdentityWitness", "OrbitClass", "Solution", "eval_form",
    "family_constant", "identity_witness", "is_trivial", "normalize_index",
    "orbit", "poly_fm", "poly_gm", "sigma", "trivial_solutions",
    "Conductor", "IsoWitness", "SplitParam", "classify_range", "conductor",
    "is_isomorphic", "isomorphic_pairs", "m_params", "n_from_solution",
    "splits_completely",
    "SearchPlan", "SolutionSet", "SolvedOrbit", "brute_search",
    "brute_y_bound", "convergent_search", "lpv_kappa", "solve_family",
    "solve_range", "y_ceiling",
    "__version__",
]
