"""Quiver Grassmannian point counting over prime fields and Euler
characteristics via counting-polynomial interpolation.

Subspaces are enumerated through reduced row-echelon bases (one canonical
representative each).  The walk proceeds in topological order with early
pruning: at each vertex only superspaces of the span of the incoming
images are generated, and the final vertex (a sink) is not enumerated at
all, only counted by a Gaussian binomial.  When the transpose-dual of the
representation is cheaper to walk, counting happens there; orthogonal
complements carry the counts back exactly.

The Euler characteristic is defined operationally as the counting
polynomial evaluated at 1.  The polynomial is interpolated through the
first D+1 admissible primes, with D the ambient product-of-Grassmannians
dimension bound, and verified against two held-out primes; disagreement
raises instead of guessing.

Counting at distinct primes or dimension vectors is independent and
side-effect-free; results aggregate deterministically by (prime, e) key.
"""

from __future__ import annotations

import functools
import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    DimOutOfRange,
    ExcludedPrime,
    InvalidArgument,
    NonPolynomialCount,
)
from .quiver import DimVector, IntRep, dual_rep

__all__ = [
    "CountProfile",
    "count_subreps",
    "counting_polynomial",
    "euler_char",
    "profile",
    "box_profiles",
    "gaussian_binomial",
    "default_primes",
    "PRIMES_ENV_VAR",
]

PRIMES_ENV_VAR = "CLUSTERCHAR_PRIMES"
_DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)


# ---------------------------------------------------------------------------
# primes


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def default_primes() -> tuple[int, ...]:
    """The configured base prime list (CLUSTERCHAR_PRIMES overrides)."""
    raw = os.environ.get(PRIMES_ENV_VAR)
    if raw is None:
        return _DEFAULT_PRIMES
    try:
        vals = sorted({int(tok) for tok in raw.split(",") if tok.strip()})
    except ValueError as exc:
        raise InvalidArgument(f"bad {PRIMES_ENV_VAR}: {raw!r}") from exc
    if not vals or any(not _is_prime(v) for v in vals):
        raise InvalidArgument(f"{PRIMES_ENV_VAR} must list primes, got {raw!r}")
    return tuple(vals)


def _prime_stream(base: Sequence[int]) -> Iterator[int]:
    """The base list in order, extended with the next primes beyond it
    whenever interpolation needs more samples than the list provides."""
    last = 1
    for p in base:
        yield p
        last = p
    n = last + 1
    while True:
        if _is_prime(n):
            yield n
        n += 1


def admissible_primes(rep: IntRep, base: Sequence[int] | None = None) -> Iterator[int]:
    excluded = rep.excluded_primes()
    for p in _prime_stream(base if base is not None else default_primes()):
        if p not in excluded:
            yield p


# ---------------------------------------------------------------------------
# linear algebra over F_p (vectors are tuples of ints in [0, p))


def _rref(rows: Sequence[Sequence[int]], p: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    cols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c] % p:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = pow(work[r][c] % p, p - 2, p)
        work[r] = [(v * inv) % p for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] % p:
                f = work[i][c] % p
                work[i] = [(a - f * b) % p for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def _apply(matrix: Sequence[Sequence[int]], basis: Sequence[Sequence[int]], p: int) -> list[tuple[int, ...]]:
    """Images of basis row-vectors under the matrix (acting on columns)."""
    rows = len(matrix)
    out = []
    for v in basis:
        img = tuple(sum(matrix[i][j] * v[j] for j in range(len(v))) % p for i in range(rows))
        out.append(img)
    return out


def _echelon_subspaces(d: int, k: int, p: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All k-dimensional subspaces of F_p^d as RREF bases, each exactly once."""
    if k < 0 or k > d:
        return
    if k == 0:
        yield ()
        return
    for pivots in itertools.combinations(range(d), k):
        pivot_set = set(pivots)
        free_cells = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, d)
            if j not in pivot_set
        ]
        for values in itertools.product(range(p), repeat=len(free_cells)):
            rows = [[0] * d for _ in range(k)]
            for i in range(k):
                rows[i][pivots[i]] = 1
            for (i, j), v in zip(free_cells, values):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def _superspaces(
    w_rows: tuple[tuple[int, ...], ...],
    w_pivots: tuple[int, ...],
    d: int,
    k: int,
    p: int,
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Bases of the k-dimensional subspaces containing the RREF span W.

    Subspaces above W correspond to subspaces of the quotient, coordinates
    taken on the non-pivot columns of W; each lift is joined to W's rows.
    """
    w = len(w_rows)
    if k < w or k > d:
        return
    if k == w:
        yield w_rows
        return
    non_pivot = [j for j in range(d) if j not in w_pivots]
    for qbasis in _echelon_subspaces(len(non_pivot), k - w, p):
        lifted = []
        for qrow in qbasis:
            vec = [0] * d
            for pos, val in zip(non_pivot, qrow):
                vec[pos] = val
            lifted.append(tuple(vec))
        yield w_rows + tuple(lifted)


@functools.lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (k - i) - 1
    return num // den


# ---------------------------------------------------------------------------
# counting


def _walk_cost(rep: IntRep, p: int = 7) -> int:
    order = rep.quiver.topological_order()
    cost = 1
    for v in order[:-1]:
        cost *= sum(gaussian_binomial(rep.dim[v], k, p) for k in range(rep.dim[v] + 1))
    return cost


def _count_box_raw(rep: IntRep, p: int) -> dict[DimVector, int]:
    """Counts of stable subspace tuples for every dimension vector at once."""
    quiver = rep.quiver
    order = quiver.topological_order()
    explicit = order[:-1]
    last = order[-1]
    pairs = quiver.arrow_indices()
    mats = [
        tuple(tuple(v % p for v in row) for row in m) for m in rep.matrices
    ]
    in_arrows: dict[int, list[tuple[int, int]]] = {v: [] for v in order}
    for a, (s, t) in enumerate(pairs):
        in_arrows[t].append((a, s))

    m = len(quiver.vertices)
    counts: dict[DimVector, int] = {}
    chosen: dict[int, tuple[tuple[int, ...], ...]] = {}
    dims: list[int] = [0] * m

    def incoming_span(v: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        vectors: list[tuple[int, ...]] = []
        for a, s in in_arrows[v]:
            vectors.extend(_apply(mats[a], chosen[s], p))
        if not vectors:
            return (), ()
        return _rref(vectors, p)

    def recurse(i: int) -> None:
        if i == len(explicit):
            w_rows, _ = incoming_span(last)
            w = len(w_rows)
            d_last = rep.dim[last]
            for k in range(w, d_last + 1):
                n_ext = gaussian_binomial(d_last - w, k - w, p)
                if not n_ext:
                    continue
                dims[last] = k
                key = tuple(dims)
                counts[key] = counts.get(key, 0) + n_ext
            return
        v = explicit[i]
        w_rows, w_pivots = incoming_span(v)
        w = len(w_rows)
        d_v = rep.dim[v]
        for k in range(w, d_v + 1):
            dims[v] = k
            for basis in _superspaces(w_rows, w_pivots, d_v, k, p):
                chosen[v] = basis
                recurse(i + 1)
        chosen.pop(v, None)

    recurse(0)
    return counts


@functools.lru_cache(maxsize=None)
def _count_box(rep: IntRep, p: int) -> dict[DimVector, int]:
    if p in rep.excluded_primes():
        raise ExcludedPrime(f"prime {p} is excluded for {rep.label or 'this module'}")
    dual = dual_rep(rep)
    if _walk_cost(dual) < _walk_cost(rep):
        raw = _count_box_raw(dual, p)
        total = rep.dim
        flipped: dict[DimVector, int] = {}
        for e, c in raw.items():
            comp = tuple(t - x for t, x in zip(total, e))
            flipped[comp] = c
        return flipped
    return _count_box_raw(rep, p)


def _check_e(rep: IntRep, e: Sequence[int]) -> DimVector:
    e = tuple(int(v) for v in e)
    if len(e) != len(rep.dim):
        raise DimOutOfRange(f"e has {len(e)} entries for {len(rep.dim)} vertices")
    if any(v < 0 or v > d for v, d in zip(e, rep.dim)):
        raise DimOutOfRange(f"e={e} is not between 0 and {rep.dim}")
    return e


def count_subreps(rep: IntRep, e: Sequence[int], p: int) -> int:
    """Exact number of subrepresentations of dimension vector e over F_p."""
    e = _check_e(rep, e)
    box = _count_box(rep, p)
    return box.get(e, 0)


# ---------------------------------------------------------------------------
# interpolation


def _lagrange_coefficients(points: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    """Exact interpolation; coefficients ascending by degree.

    Raises NonPolynomialCount if the interpolant is not integral.
    """
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        # basis polynomial prod_{j != i} (X - xj) / (xi - xj)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] -= c * xj
                new[k + 1] += c
            basis = new
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, c in enumerate(basis):
            coeffs[k] += c * scale
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise NonPolynomialCount(f"non-integer interpolant coefficient {c}")
        out.append(int(c))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out) if out else (0,)


def _eval_poly(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class CountProfile:
    """Per-prime counts, the interpolated counting polynomial (ascending
    coefficients), and the Euler characteristic it yields at 1."""

    rep: IntRep
    e: DimVector
    samples: tuple[tuple[int, int], ...]
    coefficients: tuple[int, ...]
    chi: int

    def __post_init__(self) -> None:
        for p, c in self.samples:
            if _eval_poly(self.coefficients, p) != c:
                raise NonPolynomialCount(
                    f"sample at p={p} disagrees with the interpolant"
                )
        if _eval_poly(self.coefficients, 1) != self.chi:
            raise NonPolynomialCount("chi must be the polynomial value at 1")


def _ambient_degree_bound(rep: IntRep, e: DimVector) -> int:
    return sum(ei * (di - ei) for ei, di in zip(e, rep.dim))


def profile(rep: IntRep, e: DimVector) -> CountProfile:
    """Sample, interpolate, and cross-check the counting polynomial for e."""
    return _profile_with(rep, _check_e(rep, e), default_primes())


@functools.lru_cache(maxsize=None)
def _profile_with(rep: IntRep, e: DimVector, base: tuple[int, ...]) -> CountProfile:
    bound = _ambient_degree_bound(rep, e)
    needed = bound + 3  # interpolation nodes plus two held-out checks
    primes = list(itertools.islice(admissible_primes(rep, base), needed))
    samples = tuple((p, count_subreps(rep, e, p)) for p in primes)
    coeffs = _lagrange_coefficients(samples[: bound + 1])
    for p, c in samples[bound + 1 :]:
        if _eval_poly(coeffs, p) != c:
            raise NonPolynomialCount(
                f"held-out prime {p} disagrees for e={e}: "
                f"count {c} vs interpolant {_eval_poly(coeffs, p)}"
            )
    return CountProfile(rep, e, samples, coeffs, _eval_poly(coeffs, 1))


def counting_polynomial(rep: IntRep, e: Sequence[int]) -> tuple[int, ...]:
    """Ascending coefficients of the verified counting polynomial."""
    return profile(rep, tuple(int(v) for v in e)).coefficients


def euler_char(rep: IntRep, e: Sequence[int]) -> int:
    """Counting polynomial evaluated at 1."""
    return profile(rep, tuple(int(v) for v in e)).chi


def box_profiles(rep: IntRep) -> dict[DimVector, CountProfile]:
    """Profiles for every 0 <= e <= dim, sharing the per-prime walks."""
    ranges = [range(d + 1) for d in rep.dim]
    return {e: profile(rep, e) for e in itertools.product(*ranges)}
