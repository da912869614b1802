"""Cluster characters with principal coefficients, their coefficient-free
specialization, and the term decomposition they are assembled from.

A character is computed directly from its definition: the sum over all
sub-dimension vectors e of

    L(M, e) = chi(Gr_e(M)) * y^e * prod_i x_i^{-<e, S_i> - <S_i, dim M - e>},

with the exponents always going through the Euler form, never hand-coded
per quiver.  A second, independent route through generalized Chebyshev
polynomials (`char_via_chebyshev`) reproduces characters of tube modules
from their quasi-composition factors; agreement of the two pipelines is
the package's strongest self-check.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

from . import grassmannian
from .chebyshev import ChebWindow, gen_cheb
from .errors import IdentityFailed, InvalidArgument
from .laurent import Family, LaurentPoly, Monomial, qid, tid, xid, yid
from .quiver import DimVector, IntRep, euler_form, unit_vector

__all__ = [
    "CharTermTable",
    "term_L",
    "char_table",
    "cluster_char",
    "cf_cluster_char",
    "check_lemma_key",
    "char_via_chebyshev",
    "y_monomial",
]


def y_monomial(e: Sequence[int]) -> LaurentPoly:
    """y^e as a Laurent monomial (vertex position i pairs with y_{i+1})."""
    return LaurentPoly.from_monomial(
        Monomial({yid(i + 1): v for i, v in enumerate(e) if v})
    )


def _x_exponents(rep: IntRep, e: DimVector) -> Monomial:
    quiver = rep.quiver
    rest = tuple(d - v for d, v in zip(rep.dim, e))
    exps = {}
    for i in range(len(quiver.vertices)):
        s_i = unit_vector(quiver, i)
        k = -euler_form(quiver, e, s_i) - euler_form(quiver, s_i, rest)
        if k:
            exps[xid(i + 1)] = k
    return Monomial(exps)


def term_L(rep: IntRep, e: Sequence[int]) -> LaurentPoly:
    """The e-term of the character: a single monomial scaled by chi."""
    e = tuple(int(v) for v in e)
    chi = grassmannian.euler_char(rep, e)
    if chi == 0:
        return LaurentPoly.zero()
    mono = Monomial({yid(i + 1): v for i, v in enumerate(e) if v}).mul(_x_exponents(rep, e))
    return LaurentPoly.from_monomial(mono, chi)


@dataclass(frozen=True)
class CharTermTable:
    """All nonzero terms L(M, e) of one module's character."""

    rep: IntRep
    terms: tuple[tuple[DimVector, LaurentPoly], ...]
    total: LaurentPoly

    def term(self, e: Sequence[int]) -> LaurentPoly:
        e = tuple(int(v) for v in e)
        for f, val in self.terms:
            if f == e:
                return val
        return LaurentPoly.zero()

    def leading(self) -> LaurentPoly:
        """L(M, 0): always a single Laurent monomial."""
        return self.term((0,) * len(self.rep.dim))

    def full(self) -> LaurentPoly:
        """L(M, dim M)."""
        return self.term(self.rep.dim)

    def middle(self) -> LaurentPoly:
        """Sum of L(M, e) over e different from 0 and dim M."""
        zero = (0,) * len(self.rep.dim)
        out = LaurentPoly.zero()
        for f, val in self.terms:
            if f != zero and f != self.rep.dim:
                out = out + val
        return out


@functools.lru_cache(maxsize=None)
def char_table(rep: IntRep) -> CharTermTable:
    profiles = grassmannian.box_profiles(rep)
    terms: list[tuple[DimVector, LaurentPoly]] = []
    total = LaurentPoly.zero()
    for e in sorted(profiles):
        if profiles[e].chi == 0:
            continue
        val = term_L(rep, e)
        terms.append((e, val))
        total = total + val
    return CharTermTable(rep, tuple(terms), total)


@functools.lru_cache(maxsize=None)
def cluster_char(rep: IntRep) -> LaurentPoly:
    """The character with principal coefficients, in Z[y, x^{±1}]."""
    total = char_table(rep).total
    if total.min_family_exponent(Family.Y) < 0:
        raise IdentityFailed("character left Z[y, x^{±1}]: negative y exponent")
    return total


def cf_cluster_char(rep: IntRep) -> LaurentPoly:
    """Coefficient-free character: every y specialized to 1."""
    return cluster_char(rep).specialize_ones(Family.Y)


@dataclass(frozen=True)
class KeyIdentityReport:
    """Both sides of the translate identity L(M,0) * L(tM, dim tM) = y^{dim tM}."""

    lhs: LaurentPoly
    rhs: LaurentPoly

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def check_lemma_key(rep: IntRep, tau_rep: IntRep) -> KeyIdentityReport:
    """Verify the translate identity exactly; ``tau_rep`` must be the AR
    translate of ``rep`` (tube combinatorics supply it), and ``rep`` must
    not be projective.  A violated identity raises IdentityFailed carrying
    both sides."""
    left = char_table(rep).leading() * char_table(tau_rep).full()
    right = y_monomial(tau_rep.dim)
    report = KeyIdentityReport(left, right)
    if not report.holds:
        raise IdentityFailed(
            f"translate identity failed: {left} != {right} "
            f"(is the input projective, or tau_rep not the translate?)"
        )
    return report


def char_via_chebyshev(
    quasi_simples: Sequence[tuple[Sequence[int], LaurentPoly]], n: int
) -> LaurentPoly:
    """Character of a quasi-length-n tube module from its factors.

    ``quasi_simples`` lists (dim R_i, X_{R_i}) for i = 1..n in translate
    order (tau R_i = R_{i-1}, indices cyclic around the tube).  The value
    is P_n with q_i -> y^{dim R_i} and t_i -> X_{R_i}.
    """
    if len(quasi_simples) != n:
        raise InvalidArgument(f"need {n} quasi-simple entries, got {len(quasi_simples)}")
    sigma = {}
    for i, (dim_r, char_r) in enumerate(quasi_simples, start=1):
        sigma[qid(i)] = y_monomial(tuple(dim_r))
        sigma[tid(i)] = char_r
    value = gen_cheb(ChebWindow(1, n)).substitute(sigma)
    if value.min_family_exponent(Family.Y) < 0:
        raise IdentityFailed("assembled character left Z[y, x^{±1}]")
    return value
