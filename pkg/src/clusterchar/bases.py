"""The three affine cluster bases at desk scale.

Each basis couples the cluster monomials with a one-parameter family built
from a distinguished element X_delta (the coefficient-free character of a
quasi-simple module in a homogeneous tube, independent of the tube):

    kind B: F_n(X_delta) * X_R       (first-kind Chebyshev)
    kind C: S_n(X_delta) * X_R       (second-kind Chebyshev)
    kind G: X_delta^n    * X_R       (plain powers, the generic family)

with R ranging over regular rigid catalog modules.  Positivity of every
element is verified by exact expansion, and the change-of-basis triangles
(powers into the S-family, S into the F-family) have non-negative integer
coefficients by construction, checked symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .character import cf_cluster_char
from .chebyshev import cheb_first_kind, cheb_second_kind
from .errors import InvalidArgument, UnsupportedQuiver
from .laurent import LaurentPoly, zid
from .mutation import seeds_up_to
from .quiver import (
    ModuleFamily,
    Quiver,
    a21_homogeneous,
    affine_a2_quiver,
    catalog_module,
    homogeneous,
    kronecker_quiver,
    regular_rigid_catalog,
)

__all__ = [
    "BasisElement",
    "PositivityReport",
    "x_delta",
    "basis_element",
    "verify_positivity",
    "cluster_monomials",
    "power_in_second_kind",
]

KINDS = ("B", "C", "G")


def x_delta(quiver: Quiver) -> LaurentPoly:
    """Coefficient-free character of a homogeneous quasi-simple.

    Only the catalog affine quivers are supported; the value does not
    depend on the chosen tube parameter (checked in the test suite).
    """
    if quiver == kronecker_quiver():
        return cf_cluster_char(catalog_module(homogeneous(1, 1)))
    if quiver == affine_a2_quiver():
        return cf_cluster_char(catalog_module(a21_homogeneous(1, 1)))
    raise UnsupportedQuiver("x_delta is defined for the catalog affine quivers only")


@dataclass(frozen=True)
class BasisElement:
    kind: str
    n: int
    regular_part: ModuleFamily | None
    value: LaurentPoly

    def describe(self) -> str:
        reg = f" * X[{self.regular_part.describe()}]" if self.regular_part else ""
        fn = {"B": "F", "C": "S", "G": "pow"}[self.kind]
        return f"{fn}_{self.n}(X_delta){reg}"


def basis_element(
    kind: str,
    n: int,
    quiver: Quiver,
    regular_part: ModuleFamily | None = None,
) -> BasisElement:
    """Assemble one element of the chosen basis stratum.

    n = 0 with no regular part degenerates to the unit cluster monomial;
    with a regular part it is that module's coefficient-free character.
    """
    if kind not in KINDS:
        raise InvalidArgument(f"kind must be one of {KINDS}")
    if n < 0:
        raise InvalidArgument("n must be >= 0")
    xd = x_delta(quiver)
    if n == 0:
        head = LaurentPoly.one()
    elif kind == "B":
        head = cheb_first_kind(n).substitute({zid(): xd})
    elif kind == "C":
        head = cheb_second_kind(n).substitute({zid(): xd})
    else:
        head = xd ** n
    if regular_part is not None:
        head = head * cf_cluster_char(catalog_module(regular_part))
    return BasisElement(kind, n, regular_part, head)


def cluster_monomials(quiver: Quiver, depth: int, max_degree: int = 2) -> list[LaurentPoly]:
    """Monomials in the variables of a single cluster, over all seeds
    reachable within ``depth`` mutations, with exponent sum <= max_degree."""
    out: dict[LaurentPoly, None] = {}

    def extend(acc: LaurentPoly, vars_left: tuple[LaurentPoly, ...], budget: int) -> None:
        out.setdefault(acc, None)
        if budget == 0 or not vars_left:
            return
        for i, v in enumerate(vars_left):
            extend(acc * v, vars_left[i:], budget - 1)

    for seed in seeds_up_to(quiver, depth, principal=False):
        extend(LaurentPoly.one(), seed.cluster, max_degree)
    return list(out)


@dataclass(frozen=True)
class PositivityLine:
    description: str
    positive: bool
    witness: str = ""


@dataclass(frozen=True)
class PositivityReport:
    kind: str
    lines: tuple[PositivityLine, ...]

    @property
    def all_positive(self) -> bool:
        return all(line.positive for line in self.lines)

    def violations(self) -> list[PositivityLine]:
        return [line for line in self.lines if not line.positive]


def _offending_term(p: LaurentPoly) -> str:
    for m, c in p.canonical_terms():
        if c < 0:
            coeff = str(c) if m.is_one() else f"{c}*{m.text()}"
            return coeff
    return ""


def verify_positivity(
    kind: str,
    max_n: int,
    quiver: Quiver,
    monomial_depth: int = 4,
) -> PositivityReport:
    """Expand every element of the basis stratum with n <= max_n over the
    catalog regular rigid modules, plus the depth-limited cluster-monomial
    stratum, and report subtraction-freeness of each."""
    if kind not in KINDS:
        raise InvalidArgument(f"kind must be one of {KINDS}")
    lines: list[PositivityLine] = []
    regulars: list[ModuleFamily | None] = [None]
    regulars.extend(regular_rigid_catalog(quiver))
    for n in range(1, max_n + 1):
        for reg in regulars:
            elem = basis_element(kind, n, quiver, reg)
            lines.append(
                PositivityLine(
                    elem.describe(),
                    elem.value.is_subtraction_free(),
                    _offending_term(elem.value),
                )
            )
    for i, mono in enumerate(cluster_monomials(quiver, monomial_depth)):
        lines.append(
            PositivityLine(
                f"cluster monomial #{i}",
                mono.is_subtraction_free(),
                _offending_term(mono),
            )
        )
    return PositivityReport(kind, tuple(lines))


def power_in_second_kind(n: int) -> list[int]:
    """Coefficients a_k with z^n = sum_k a_k S_k(z); all non-negative.

    Built from z * S_k = S_{k+1} + S_{k-1} (and z * S_0 = S_1), so
    non-negativity is structural; exactness is checked symbolically in the
    test suite.
    """
    if n < 0:
        raise InvalidArgument("n must be >= 0")
    coeffs = [1]
    for _ in range(n):
        new = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k + 1] += c
            if k >= 1:
                new[k - 1] += c
        coeffs = new
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs
