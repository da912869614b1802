"""Quivers, dimension vectors, integer-matrix representations, and the
catalog of module families used as concrete test subjects.

Representations carry plain integer matrices and are reduced mod p on
demand, so a single object serves every prime during point counting.
The Auslander-Reiten translate is not implemented as a functor; tube
families expose it combinatorially (an index shift on the catalog).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionMismatch, InvalidArgument, InvalidParams, QuiverMismatch

__all__ = [
    "DimVector",
    "Quiver",
    "IntRep",
    "ModuleFamily",
    "euler_form",
    "unit_vector",
    "catalog_module",
    "tau_translate",
    "quasi_factors",
    "direct_sum",
    "dual_rep",
    "zero_rep",
    "kronecker_quiver",
    "affine_a2_quiver",
    "quiver_by_name",
    "quiver_from_json",
    "module_from_json",
    "desk_affine_catalog",
    "desk_tube_catalog",
    "regular_rigid_catalog",
    "homogeneous",
    "preprojective",
    "preinjective",
    "a21_tube",
    "a21_homogeneous",
]

DimVector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Quiver:
    """A finite connected acyclic quiver without loops.

    ``vertices`` is an ordered tuple of vertex ids; position in the tuple
    fixes the variable index used by characters (vertex at position i-1
    pairs with x_i and y_i).
    """

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise InvalidArgument("quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidArgument("duplicate vertex ids")
        idx = {v: i for i, v in enumerate(self.vertices)}
        for s, t in self.arrows:
            if s not in idx or t not in idx:
                raise InvalidArgument(f"arrow ({s}, {t}) references unknown vertex")
            if s == t:
                raise InvalidArgument(f"loop at vertex {s}")
        self._check_acyclic(idx)
        self._check_connected(idx)

    def _check_acyclic(self, idx: dict[str, int]) -> None:
        m = len(self.vertices)
        indeg = [0] * m
        outs: list[list[int]] = [[] for _ in range(m)]
        for s, t in self.arrows:
            outs[idx[s]].append(idx[t])
            indeg[idx[t]] += 1
        queue = [i for i in range(m) if indeg[i] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for w in outs[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        if seen != m:
            raise InvalidArgument("quiver has a directed cycle")

    def _check_connected(self, idx: dict[str, int]) -> None:
        m = len(self.vertices)
        if m == 1:
            return
        adj: list[set[int]] = [set() for _ in range(m)]
        for s, t in self.arrows:
            adj[idx[s]].add(idx[t])
            adj[idx[t]].add(idx[s])
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != m:
            raise InvalidArgument("quiver is not connected")

    def index(self, vertex: str) -> int:
        return self.vertices.index(vertex)

    def arrow_indices(self) -> tuple[tuple[int, int], ...]:
        idx = {v: i for i, v in enumerate(self.vertices)}
        return tuple((idx[s], idx[t]) for s, t in self.arrows)

    def topological_order(self) -> tuple[int, ...]:
        m = len(self.vertices)
        pairs = self.arrow_indices()
        indeg = [0] * m
        outs: list[list[int]] = [[] for _ in range(m)]
        for s, t in pairs:
            outs[s].append(t)
            indeg[t] += 1
        order: list[int] = []
        avail = sorted(i for i in range(m) if indeg[i] == 0)
        while avail:
            v = avail.pop(0)
            order.append(v)
            for w in outs[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    avail.append(w)
            avail.sort()
        return tuple(order)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple((t, s) for s, t in self.arrows))

    def to_json_obj(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"src": s, "tgt": t} for s, t in self.arrows],
        }


def euler_form(quiver: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """<d, e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j."""
    m = len(quiver.vertices)
    if len(d) != m or len(e) != m:
        raise DimensionMismatch(
            f"dimension vectors must have {m} entries, got {len(d)} and {len(e)}"
        )
    val = sum(di * ei for di, ei in zip(d, e))
    for s, t in quiver.arrow_indices():
        val -= d[s] * e[t]
    return val


def unit_vector(quiver: Quiver, i: int) -> DimVector:
    """Dimension vector of the simple module at vertex position i (0-based)."""
    return tuple(1 if j == i else 0 for j in range(len(quiver.vertices)))


def _validate_dim(quiver: Quiver, dim: Sequence[int]) -> DimVector:
    if len(dim) != len(quiver.vertices):
        raise DimensionMismatch(
            f"dimension vector has {len(dim)} entries for {len(quiver.vertices)} vertices"
        )
    if any(d < 0 for d in dim):
        raise DimensionMismatch("dimension entries must be non-negative")
    return tuple(int(d) for d in dim)


@dataclass(frozen=True)
class IntRep:
    """A representation by integer matrices, one per arrow, of shape
    dim(target) x dim(source).

    ``spectrum`` records the integer parameter points baked into the
    matrices (Jordan eigenvalues); primes dividing a nonzero point or a
    nonzero difference of points are excluded from counting because the
    mod-p reduction there is a different module.
    """

    quiver: Quiver
    dim: DimVector
    matrices: tuple[IntMatrix, ...]
    spectrum: tuple[int, ...] = ()
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        dim = _validate_dim(self.quiver, self.dim)
        object.__setattr__(self, "dim", dim)
        pairs = self.quiver.arrow_indices()
        if len(self.matrices) != len(pairs):
            raise DimensionMismatch(
                f"{len(pairs)} arrows but {len(self.matrices)} matrices"
            )
        for a, ((s, t), mat) in enumerate(zip(pairs, self.matrices)):
            if len(mat) != dim[t] or any(len(row) != dim[s] for row in mat):
                raise DimensionMismatch(
                    f"matrix {a} must be {dim[t]}x{dim[s]}"
                )

    def excluded_primes(self) -> frozenset[int]:
        values = set()
        pts = self.spectrum
        values.update(abs(v) for v in pts if v)
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                diff = abs(pts[i] - pts[j])
                if diff:
                    values.add(diff)
        out: set[int] = set()
        for v in values:
            out.update(_prime_factors(v))
        return frozenset(out)

    def to_json_obj(self) -> dict:
        return {
            "quiver": self.quiver.to_json_obj(),
            "dim": {v: d for v, d in zip(self.quiver.vertices, self.dim)},
            "matrices": {str(i): [list(r) for r in m] for i, m in enumerate(self.matrices)},
            "spectrum": list(self.spectrum),
        }


def _prime_factors(n: int) -> set[int]:
    out: set[int] = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def _zero_matrix(rows: int, cols: int) -> IntMatrix:
    return tuple((0,) * cols for _ in range(rows))


def _identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _jordan(n: int, lam: int) -> IntMatrix:
    return tuple(
        tuple(lam if i == j else (1 if j == i + 1 else 0) for j in range(n))
        for i in range(n)
    )


def zero_rep(quiver: Quiver) -> IntRep:
    m = len(quiver.vertices)
    dim = (0,) * m
    mats = tuple(_zero_matrix(0, 0) for _ in quiver.arrows)
    return IntRep(quiver, dim, mats, label="0")


def direct_sum(a: IntRep, b: IntRep) -> IntRep:
    """Block-diagonal sum; dimension vectors add."""
    if a.quiver != b.quiver:
        raise QuiverMismatch("direct sum requires the same quiver")
    dim = tuple(da + db for da, db in zip(a.dim, b.dim))
    pairs = a.quiver.arrow_indices()
    mats = []
    for (s, t), ma, mb in zip(pairs, a.matrices, b.matrices):
        rows = []
        for r in ma:
            rows.append(tuple(r) + (0,) * b.dim[s])
        for r in mb:
            rows.append((0,) * a.dim[s] + tuple(r))
        mats.append(tuple(rows))
    label = f"{a.label or 'M'} + {b.label or 'N'}"
    return IntRep(a.quiver, dim, tuple(mats), a.spectrum + b.spectrum, label=label)


def dual_rep(rep: IntRep) -> IntRep:
    """Transpose-dual over the opposite quiver.

    Orthogonal complements give a bijection between sub-dimension e of the
    original and sub-dimension dim - e of the dual, so subrepresentation
    counts transfer; counting uses whichever side is cheaper.
    """
    opp = rep.quiver.opposite()
    transposed = []
    pairs = rep.quiver.arrow_indices()
    for (s, t), m in zip(pairs, rep.matrices):
        rows, cols = rep.dim[t], rep.dim[s]
        transposed.append(tuple(tuple(m[i][j] for i in range(rows)) for j in range(cols)))
    return IntRep(opp, rep.dim, tuple(transposed), rep.spectrum, label=f"dual({rep.label})")


# ---------------------------------------------------------------------------
# catalog


@functools.lru_cache(maxsize=None)
def kronecker_quiver() -> Quiver:
    return Quiver(("1", "2"), (("1", "2"), ("1", "2")))


@functools.lru_cache(maxsize=None)
def affine_a2_quiver() -> Quiver:
    return Quiver(("1", "2", "3"), (("1", "2"), ("2", "3"), ("1", "3")))


def quiver_by_name(name: str) -> Quiver:
    if name == "kronecker":
        return kronecker_quiver()
    if name in ("affineA2", "affine_a2", "a21"):
        return affine_a2_quiver()
    raise InvalidArgument(f"unknown quiver name: {name!r}")


KRONECKER_HOMOGENEOUS = "kronecker_homogeneous"
KRONECKER_PREPROJECTIVE = "kronecker_preprojective"
KRONECKER_PREINJECTIVE = "kronecker_preinjective"
AFFINE_A21_TUBE = "affineA21_tube"
AFFINE_A21_HOMOGENEOUS = "affineA21_homogeneous"

_FAMILIES = (
    KRONECKER_HOMOGENEOUS,
    KRONECKER_PREPROJECTIVE,
    KRONECKER_PREINJECTIVE,
    AFFINE_A21_TUBE,
    AFFINE_A21_HOMOGENEOUS,
)


@dataclass(frozen=True)
class ModuleFamily:
    """A catalog module family plus its parameters.

    Parameter usage: ``n`` is the quasi-length (or the preprojective /
    preinjective step k), ``point`` is an integer parameter of a
    homogeneous tube, ``index`` labels a quasi-simple on the rank-2 tube.
    """

    family: str
    n: int = 1
    point: int = 0
    index: int = 0

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise InvalidParams(f"unknown family {self.family!r}")
        if self.family in (KRONECKER_HOMOGENEOUS, AFFINE_A21_HOMOGENEOUS, AFFINE_A21_TUBE):
            if self.n < 1:
                raise InvalidParams("quasi-length must be >= 1")
        else:
            if self.n < 0:
                raise InvalidParams("preprojective/preinjective step must be >= 0")
        if self.family == AFFINE_A21_TUBE and self.index not in (1, 2):
            raise InvalidParams("tube index must be 1 or 2 on the rank-2 tube")

    @property
    def tube_rank(self) -> int | None:
        """Rank of the tube the family lives on; None off the tubes."""
        if self.family in (KRONECKER_HOMOGENEOUS, AFFINE_A21_HOMOGENEOUS):
            return 1
        if self.family == AFFINE_A21_TUBE:
            return 2
        return None

    def describe(self) -> str:
        if self.family == KRONECKER_HOMOGENEOUS:
            return f"kronecker_homogeneous(n={self.n}, point={self.point})"
        if self.family == AFFINE_A21_HOMOGENEOUS:
            return f"affineA21_homogeneous(n={self.n}, point={self.point})"
        if self.family == AFFINE_A21_TUBE:
            return f"affineA21_tube(index={self.index}, n={self.n})"
        return f"{self.family}(k={self.n})"


def homogeneous(n: int, point: int = 1) -> ModuleFamily:
    return ModuleFamily(KRONECKER_HOMOGENEOUS, n=n, point=point)


def preprojective(k: int) -> ModuleFamily:
    return ModuleFamily(KRONECKER_PREPROJECTIVE, n=k)


def preinjective(k: int) -> ModuleFamily:
    return ModuleFamily(KRONECKER_PREINJECTIVE, n=k)


def a21_tube(index: int, n: int) -> ModuleFamily:
    return ModuleFamily(AFFINE_A21_TUBE, n=n, index=index)


def a21_homogeneous(n: int, point: int = 1) -> ModuleFamily:
    return ModuleFamily(AFFINE_A21_HOMOGENEOUS, n=n, point=point)


def catalog_module(f: ModuleFamily) -> IntRep:
    """Explicit integer matrices for a catalog family member."""
    if f.family == KRONECKER_HOMOGENEOUS:
        n, lam = f.n, f.point
        return IntRep(
            kronecker_quiver(),
            (n, n),
            (_identity(n), _jordan(n, lam)),
            spectrum=(lam,),
            label=f.describe(),
        )
    if f.family == KRONECKER_PREPROJECTIVE:
        k = f.n
        drop_last = tuple(tuple(1 if j == i else 0 for j in range(k + 1)) for i in range(k))
        drop_first = tuple(tuple(1 if j == i + 1 else 0 for j in range(k + 1)) for i in range(k))
        return IntRep(kronecker_quiver(), (k + 1, k), (drop_last, drop_first), label=f.describe())
    if f.family == KRONECKER_PREINJECTIVE:
        k = f.n
        top = tuple(tuple(1 if j == i else 0 for j in range(k)) for i in range(k + 1))
        bottom = tuple(tuple(1 if j == i - 1 else 0 for j in range(k)) for i in range(k + 1))
        return IntRep(kronecker_quiver(), (k, k + 1), (top, bottom), label=f.describe())
    if f.family == AFFINE_A21_TUBE:
        return _a21_tube_rep(f)
    if f.family == AFFINE_A21_HOMOGENEOUS:
        n, lam = f.n, f.point
        return IntRep(
            affine_a2_quiver(),
            (n, n, n),
            (_identity(n), _identity(n), _jordan(n, lam)),
            spectrum=(lam,),
            label=f.describe(),
        )
    raise InvalidParams(f"unknown family {f.family!r}")


def _a21_tube_rep(f: ModuleFamily) -> IntRep:
    """Quasi-length-n module on the rank-2 exceptional tube of the quiver
    1->2, 2->3, 1->3.

    The quasi-simples are R_1 with dimension (1,0,1) (the arrow 1->3 acts
    as the identity) and R_2, the simple at vertex 2; tau swaps them.  The
    quasi-length-n module with quasi-socle R_i is a string module whose
    arrow matrices are shifted inclusions.
    """
    n = f.n
    s_count = (n + 1) // 2 if f.index == 1 else n // 2
    m_count = n - s_count
    dim = (s_count, m_count, s_count)
    if f.index == 1:
        # a: u_c -> v_{c-1} (u_0 -> 0), b: v_c -> w_c
        a = tuple(tuple(1 if c == r + 1 else 0 for c in range(s_count)) for r in range(m_count))
        b = tuple(tuple(1 if c == r else 0 for c in range(m_count)) for r in range(s_count))
    else:
        # a: u_c -> v_c, b: v_c -> w_{c-1} (v_0 -> 0)
        a = tuple(tuple(1 if c == r else 0 for c in range(s_count)) for r in range(m_count))
        b = tuple(tuple(1 if c == r + 1 else 0 for c in range(m_count)) for r in range(s_count))
    c = _identity(s_count)
    return IntRep(affine_a2_quiver(), dim, (a, b, c), label=f.describe())


def tau_translate(f: ModuleFamily) -> ModuleFamily:
    """The AR translate on tube families: an index shift, identity on
    homogeneous tubes.  Not defined for the transient families."""
    if f.family in (KRONECKER_HOMOGENEOUS, AFFINE_A21_HOMOGENEOUS):
        return f
    if f.family == AFFINE_A21_TUBE:
        return a21_tube(1 if f.index == 2 else 2, f.n)
    raise InvalidParams(f"{f.family} is not a tube family")


def quasi_factors(f: ModuleFamily) -> list[ModuleFamily]:
    """Quasi-composition factors, socle first, in tau-inverse order."""
    if f.family == KRONECKER_HOMOGENEOUS:
        return [homogeneous(1, f.point) for _ in range(f.n)]
    if f.family == AFFINE_A21_HOMOGENEOUS:
        return [a21_homogeneous(1, f.point) for _ in range(f.n)]
    if f.family == AFFINE_A21_TUBE:
        out = []
        idx = f.index
        for _ in range(f.n):
            out.append(a21_tube(idx, 1))
            idx = 1 if idx == 2 else 2
        return out
    raise InvalidParams(f"{f.family} is not a tube family")


def desk_affine_catalog() -> list[ModuleFamily]:
    """The finite affine module list exercised by the verification suite.

    Bounded so that exhaustive point counting stays within desk scale;
    every member has dimension entries <= 4.
    """
    out: list[ModuleFamily] = []
    out.extend(homogeneous(n, 1) for n in range(1, 4))
    out.extend(preprojective(k) for k in range(0, 4))
    out.extend(preinjective(k) for k in range(0, 4))
    out.extend(a21_tube(i, n) for i in (1, 2) for n in range(1, 5))
    out.extend(a21_homogeneous(n, 1) for n in (1, 2))
    return out


def desk_tube_catalog() -> list[ModuleFamily]:
    """Tube modules used for translate-based identity checks."""
    out: list[ModuleFamily] = []
    out.extend(homogeneous(n, 1) for n in range(1, 4))
    out.extend(a21_tube(i, n) for i in (1, 2) for n in range(1, 5))
    return out


def regular_rigid_catalog(quiver: Quiver) -> list[ModuleFamily]:
    """Regular rigid catalog modules of the given affine quiver (the
    quasi-simples on exceptional tubes; none exist on the Kronecker side)."""
    if quiver == kronecker_quiver():
        return []
    if quiver == affine_a2_quiver():
        return [a21_tube(1, 1), a21_tube(2, 1)]
    raise InvalidArgument("not a catalog affine quiver")


# ---------------------------------------------------------------------------
# JSON input


def quiver_from_json(obj: dict) -> Quiver:
    try:
        vertices = tuple(str(v) for v in obj["vertices"])
        arrows = tuple((str(a["src"]), str(a["tgt"])) for a in obj["arrows"])
    except (KeyError, TypeError) as exc:
        raise InvalidArgument(f"malformed quiver JSON: missing field {exc}") from exc
    return Quiver(vertices, arrows)


def module_from_json(obj: dict, quiver: Quiver | None = None) -> IntRep:
    """Accepts either {"family": ..., "params": {...}} or an explicit
    {"quiver": ..., "dim": {...}, "matrices": {"0": [[...]], ...}}."""
    if "family" in obj:
        params = obj.get("params", {})
        if not isinstance(params, dict):
            raise InvalidArgument("malformed module JSON: params must be an object")
        fam = str(obj["family"])
        kwargs = {}
        for key in ("n", "k", "point", "lam", "lambda", "index"):
            if key in params:
                kwargs[key] = int(params[key])
        n = kwargs.get("n", kwargs.get("k", 1))
        point = kwargs.get("point", kwargs.get("lam", kwargs.get("lambda", 0)))
        index = kwargs.get("index", 1 if fam == AFFINE_A21_TUBE else 0)
        return catalog_module(ModuleFamily(fam, n=n, point=point, index=index))
    if "quiver" in obj:
        quiver = quiver_from_json(obj["quiver"])
    if quiver is None:
        raise InvalidArgument("explicit module JSON needs a quiver")
    try:
        dim = tuple(int(obj["dim"][v]) for v in quiver.vertices)
        mats = []
        for i in range(len(quiver.arrows)):
            raw = obj["matrices"][str(i)]
            mats.append(tuple(tuple(int(x) for x in row) for row in raw))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidArgument(f"malformed module JSON: {exc}") from exc
    spectrum = tuple(int(v) for v in obj.get("spectrum", ()))
    return IntRep(quiver, dim, tuple(mats), spectrum, label=str(obj.get("label", "")))
