"""Generalized Chebyshev polynomials, delta-polynomials, and the
one-variable normalized Chebyshev families.

The production path for P_n is the three-term recurrence

    P_n = t_n * P_{n-1} - q_n * P_{n-2},    P_0 = 1,  P_{-1} = 0,

over an index window [start, start+length-1] of q/t variables.  The
tridiagonal-determinant expansion is kept as an independent oracle
(`gen_cheb_det`) and the two must agree on every window.

P over an empty window is 1 and over a negative-length window is 0; these
conventions make the three-term relations and the degenerate
delta-polynomial cases well defined.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidArgument
from .laurent import Family, LaurentPoly, q, t, z

__all__ = [
    "ChebWindow",
    "gen_cheb",
    "gen_cheb_det",
    "gen_cheb_values",
    "delta",
    "delta_cf",
    "delta_values",
    "cheb_first_kind",
    "cheb_second_kind",
    "s_from_f",
]

_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.one()


@dataclass(frozen=True)
class ChebWindow:
    """The index interval [start, start+length-1] of q/t variables."""

    start: int
    length: int


@functools.lru_cache(maxsize=None)
def _gen_cheb_span(start: int, length: int) -> LaurentPoly:
    if length < 0:
        return _ZERO
    if length == 0:
        return _ONE
    last = start + length - 1
    return (
        t(last) * _gen_cheb_span(start, length - 1)
        - q(last) * _gen_cheb_span(start, length - 2)
    )


def gen_cheb(w: ChebWindow) -> LaurentPoly:
    """P over the window, by the three-term recurrence."""
    return _gen_cheb_span(w.start, w.length)


def gen_cheb_det(w: ChebWindow) -> LaurentPoly:
    """P over the window as a literal tridiagonal determinant.

    The matrix has diagonal t_{last}, ..., t_{start}, superdiagonal 1 and
    subdiagonal q_{last}, ..., q_{start+1}; the determinant is expanded by
    cofactors along the first active row, memoized on column subsets.
    """
    n = w.length
    if n < 0:
        return _ZERO
    if n == 0:
        return _ONE

    def entry(r: int, c: int) -> LaurentPoly:
        if r == c:
            return t(w.start + n - 1 - r)
        if c == r + 1:
            return _ONE
        if c == r - 1:
            return q(w.start + n - r)
        return _ZERO

    memo: dict[frozenset[int], LaurentPoly] = {}

    def minor(cols: frozenset[int]) -> LaurentPoly:
        if not cols:
            return _ONE
        got = memo.get(cols)
        if got is not None:
            return got
        row = n - len(cols)
        total = _ZERO
        for pos, c in enumerate(sorted(cols)):
            a = entry(row, c)
            if a.is_zero():
                continue
            sub = minor(cols - {c})
            term = a * sub
            total = total + (term if pos % 2 == 0 else -term)
        memo[cols] = total
        return total

    return minor(frozenset(range(n)))


def gen_cheb_values(qs: Sequence[LaurentPoly], ts: Sequence[LaurentPoly]) -> LaurentPoly:
    """Evaluate P_n at explicit argument lists (q_1..q_n, t_1..t_n).

    Evaluation runs the defining recurrence directly, which agrees with
    substituting into the window polynomial because both are ring maps.
    """
    if len(qs) != len(ts):
        raise InvalidArgument("q and t argument lists must have equal length")
    prev2: LaurentPoly = _ZERO
    prev: LaurentPoly = _ONE
    for qv, tv in zip(qs, ts):
        prev, prev2 = tv * prev - qv * prev2, prev
    return prev


def delta(l: int, p: int) -> LaurentPoly:
    """Delta_{l,p} = P_{lp}([1,lp]) - q_1 * P_{lp-2}([2,lp-1])."""
    if l < 1 or p < 1:
        raise InvalidArgument(f"delta requires l, p >= 1, got l={l}, p={p}")
    lp = l * p
    return gen_cheb(ChebWindow(1, lp)) - q(1) * gen_cheb(ChebWindow(2, lp - 2))


def delta_cf(l: int, p: int) -> LaurentPoly:
    """Coefficient-free delta: all q variables specialized to 1."""
    return delta(l, p).specialize_ones(Family.Q)


def delta_values(l: int, p: int, qs: Sequence[LaurentPoly], ts: Sequence[LaurentPoly]) -> LaurentPoly:
    """Delta_{l,p} evaluated at explicit argument lists of length lp."""
    if l < 1 or p < 1:
        raise InvalidArgument(f"delta requires l, p >= 1, got l={l}, p={p}")
    lp = l * p
    if len(qs) != lp or len(ts) != lp:
        raise InvalidArgument(f"expected {lp} q and t arguments")
    if lp < 2:
        return gen_cheb_values(qs, ts)  # the inner window has length -1
    return gen_cheb_values(qs, ts) - qs[0] * gen_cheb_values(qs[1:lp - 1], ts[1:lp - 1])


def cheb_first_kind(n: int) -> LaurentPoly:
    """Normalized first-kind polynomial: F_0 = 2, F_1 = z, F_{n+1} = z F_n - F_{n-1}."""
    if n < 0:
        raise InvalidArgument("n must be >= 0")
    zz = z()
    prev, cur = LaurentPoly.constant(2), zz
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, zz * cur - prev
    return cur


def cheb_second_kind(n: int) -> LaurentPoly:
    """Normalized second-kind polynomial: S_0 = 1, S_1 = z, S_{n+1} = z S_n - S_{n-1}.

    Equivalently S_n = P_n(1, ..., 1, z, ..., z).
    """
    if n < 0:
        raise InvalidArgument("n must be >= 0")
    zz = z()
    prev, cur = _ONE, zz
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, zz * cur - prev
    return cur


def s_from_f(n: int) -> list[tuple[int, int]]:
    """Decomposition of S_n into first-kind terms, as (index, multiplier).

    For odd n the terms are F_n, F_{n-2}, ..., F_1, each once.  For even n
    the chain F_n, ..., F_2 is closed by the constant 1 (index -1 denotes
    the constant), not by F_0 = 2: with F_0 the even-n sum overshoots by 1,
    e.g. F_2 + F_0 = x^2 while S_2 = x^2 - 1.
    """
    if n < 0:
        raise InvalidArgument("n must be >= 0")
    out = [(k, 1) for k in range(n, 0, -2)]
    if n % 2 == 0:
        out.append((-1, 1))
    return out


def s_from_f_value(n: int) -> LaurentPoly:
    """The right-hand side of the decomposition, expanded exactly."""
    total = LaurentPoly.zero()
    for idx, mult in s_from_f(n):
        part = _ONE if idx == -1 else cheb_first_kind(idx)
        total = total + mult * part
    return total
