"""Exact symbolic machinery for cluster characters of quiver
representations: sparse integer Laurent polynomials, generalized Chebyshev
and delta-polynomials, quiver Grassmannian point counting over prime
fields, seed mutation, and the three affine cluster bases.

Everything is exact integer arithmetic; positivity and identity checks
never involve floating point.
"""

from .laurent import Family, LaurentPoly, Monomial, VarId
from .quiver import (
    DimVector,
    IntRep,
    ModuleFamily,
    Quiver,
    catalog_module,
    direct_sum,
    euler_form,
)
from .grassmannian import CountProfile, count_subreps, counting_polynomial, euler_char
from .character import cf_cluster_char, char_via_chebyshev, cluster_char, term_L
from .chebyshev import (
    ChebWindow,
    cheb_first_kind,
    cheb_second_kind,
    delta,
    delta_cf,
    gen_cheb,
    gen_cheb_det,
    s_from_f,
)
from .mutation import Seed, cluster_variables_up_to, initial_seed, mutate
from .bases import BasisElement, basis_element, verify_positivity, x_delta

__version__ = "0.1.0"

__all__ = [
    "Family",
    "LaurentPoly",
    "Monomial",
    "VarId",
    "DimVector",
    "IntRep",
    "ModuleFamily",
    "Quiver",
    "catalog_module",
    "direct_sum",
    "euler_form",
    "CountProfile",
    "count_subreps",
    "counting_polynomial",
    "euler_char",
    "cf_cluster_char",
    "char_via_chebyshev",
    "cluster_char",
    "term_L",
    "ChebWindow",
    "cheb_first_kind",
    "cheb_second_kind",
    "delta",
    "delta_cf",
    "gen_cheb",
    "gen_cheb_det",
    "s_from_f",
    "Seed",
    "cluster_variables_up_to",
    "initial_seed",
    "mutate",
    "BasisElement",
    "basis_element",
    "verify_positivity",
    "x_delta",
    "__version__",
]
