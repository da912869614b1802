"""Named verification checks behind the CLI ``verify`` verb.

Each check returns a list of CheckLine records, one per tested instance,
so the CLI can print one PASS/FAIL line each and scripts can diff the
output.  Default bounds match the package's acceptance envelope.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import bases, mutation
from .character import (
    char_table,
    char_via_chebyshev,
    cf_cluster_char,
    check_lemma_key,
    cluster_char,
)
from .chebyshev import (
    ChebWindow,
    cheb_second_kind,
    delta,
    gen_cheb,
    gen_cheb_values,
    s_from_f,
    s_from_f_value,
)
from .errors import IdentityFailed
from .laurent import Family, q, t, tid, u
from .quiver import (
    affine_a2_quiver,
    catalog_module,
    desk_affine_catalog,
    desk_tube_catalog,
    kronecker_quiver,
    preinjective,
    preprojective,
    quasi_factors,
    tau_translate,
)

__all__ = ["CheckLine", "REGISTRY", "run_check", "available_checks"]


@dataclass(frozen=True)
class CheckLine:
    label: str
    passed: bool
    detail: str = ""


def _line(label: str, ok: bool, detail: str = "") -> CheckLine:
    return CheckLine(label, bool(ok), detail)


def _tail_substitution(n: int, with_u: bool) -> dict:
    """t_i -> t_i (+ u_i) + q_i / t_{i-1} for i = 1..n, with a fresh
    variable t_0 below the window.

    Relative to the pinned determinant orientation (diagonal t_n, ..., t_1,
    recurrence stripping the top index) this is the direction that makes
    the substituted polynomial subtraction-free; attaching the tail to
    t_{i+1} instead leaves an uncancelled -q_n already at n = 2.
    """
    sigma = {}
    for i in range(1, n + 1):
        img = t(i) + q(i) * t(i - 1).inverse()
        if with_u:
            img = img + u(i)
        sigma[tid(i)] = img
    return sigma


def _periodic_substitution(lp: int, with_u: bool) -> dict:
    """Same, but cyclic: the index 0 wraps back to lp."""
    sigma = {}
    for i in range(1, lp + 1):
        prev = lp if i == 1 else i - 1
        img = t(i) + q(i) * t(prev).inverse()
        if with_u:
            img = img + u(i)
        sigma[tid(i)] = img
    return sigma


def lemma_dpsn(max_n: int = 8) -> list[CheckLine]:
    """d P_n / d t_i splits as the product of the two flanking windows."""
    out = []
    for n in range(1, max_n + 1):
        for i in range(1, n + 1):
            lhs = gen_cheb(ChebWindow(1, n)).partial_derivative(tid(i))
            rhs = gen_cheb(ChebWindow(1, i - 1)) * gen_cheb(ChebWindow(i + 1, n - i))
            out.append(_line(f"derivative split n={n} i={i}", lhs == rhs))
    return out


def lemma_cc(max_n: int = 6) -> list[CheckLine]:
    """P_n under t_i -> t_i + q_i/t_{i+1} is subtraction-free."""
    out = []
    for n in range(1, max_n + 1):
        val = gen_cheb(ChebWindow(1, n)).substitute(_tail_substitution(n, with_u=False))
        out.append(_line(f"tail substitution positive n={n}", val.is_subtraction_free()))
    return out


def lemma_pnpos(max_n: int = 5) -> list[CheckLine]:
    """P_n under t_i -> t_i + u_i + q_i/t_{i+1} is subtraction-free."""
    out = []
    for n in range(1, max_n + 1):
        val = gen_cheb(ChebWindow(1, n)).substitute(_tail_substitution(n, with_u=True))
        ok = val.is_subtraction_free() and val.min_family_exponent(Family.U) >= 0
        out.append(_line(f"tail substitution with u positive n={n}", ok))
    return out


def _lp_pairs(max_lp: int) -> list[tuple[int, int]]:
    return [(l, p) for l in range(1, max_lp + 1) for p in range(1, max_lp + 1) if l * p <= max_lp]


def delta_pos(max_lp: int = 6) -> list[CheckLine]:
    """Delta_{l,p} under the periodic substitution is subtraction-free."""
    out = []
    for l, p in _lp_pairs(max_lp):
        val = delta(l, p).substitute(_periodic_substitution(l * p, with_u=True))
        out.append(_line(f"periodic substitution positive l={l} p={p}", val.is_subtraction_free()))
    return out


def delta_claim(max_lp: int = 6) -> list[CheckLine]:
    """d Delta_{l,p} / d t_i equals P_{lp-1} in the cyclically shifted
    variables starting after i."""
    out = []
    for l, p in _lp_pairs(max_lp):
        lp = l * p
        for i in range(1, lp + 1):
            lhs = delta(l, p).partial_derivative(tid(i))
            order = list(range(i + 1, lp + 1)) + list(range(1, i))
            rhs = gen_cheb_values([q(j) for j in order], [t(j) for j in order])
            out.append(_line(f"delta derivative l={l} p={p} i={i}", lhs == rhs))
    return out


def s_from_f_check(max_n: int = 12) -> list[CheckLine]:
    """The first-kind decomposition reconstructs S_n with multipliers >= 0."""
    out = []
    for n in range(0, max_n + 1):
        ok = s_from_f_value(n) == cheb_second_kind(n)
        ok = ok and all(mult >= 0 for _, mult in s_from_f(n))
        out.append(_line(f"second kind from first kind n={n}", ok))
    return out


def lemma_key_check() -> list[CheckLine]:
    """Translate identity on every catalog tube module."""
    out = []
    for fam in desk_tube_catalog():
        rep = catalog_module(fam)
        tau = catalog_module(tau_translate(fam))
        try:
            check_lemma_key(rep, tau)
            out.append(_line(f"translate identity {fam.describe()}", True))
        except IdentityFailed as exc:
            out.append(_line(f"translate identity {fam.describe()}", False, str(exc)))
    return out


def char_cheb(max_n: int = 3) -> list[CheckLine]:
    """Characters of tube modules agree with their Chebyshev assembly."""
    out = []
    from .quiver import a21_tube, homogeneous

    for n in range(1, max_n + 1):
        fam = homogeneous(n, 1)
        direct = cluster_char(catalog_module(fam))
        parts = [
            (catalog_module(g).dim, cluster_char(catalog_module(g)))
            for g in quasi_factors(fam)
        ]
        assembled = char_via_chebyshev(parts, n)
        out.append(_line(f"chebyshev assembly kronecker n={n}", direct == assembled))
    for idx in (1, 2):
        for n in range(1, max_n + 1):
            fam = a21_tube(idx, n)
            direct = cluster_char(catalog_module(fam))
            parts = [
                (catalog_module(g).dim, cluster_char(catalog_module(g)))
                for g in quasi_factors(fam)
            ]
            assembled = char_via_chebyshev(parts, n)
            out.append(_line(f"chebyshev assembly tube index={idx} n={n}", direct == assembled))
    return out


def char_mutation() -> list[CheckLine]:
    """Mutation-produced variables match characters of rigid catalog modules."""
    out = []
    kq = kronecker_quiver()
    cf_vars = set(mutation.cluster_variables_up_to(kq, 3, principal=False))
    for mk, fam in (
        ("preprojective", preprojective),
        ("preinjective", preinjective),
    ):
        for k in range(0, 3):
            val = cf_cluster_char(catalog_module(fam(k)))
            out.append(_line(f"coefficient-free {mk}({k}) from mutation", val in cf_vars))
    pr_vars = set(mutation.cluster_variables_up_to(kq, 2, principal=True))
    for mk, fam in (
        ("preprojective", preprojective),
        ("preinjective", preinjective),
    ):
        for k in range(0, 2):
            val = cluster_char(catalog_module(fam(k)))
            out.append(_line(f"principal {mk}({k}) from mutation", val in pr_vars))
    return out


def basis_pos(max_n: int = 4) -> list[CheckLine]:
    """Every basis element over both catalog quivers is subtraction-free."""
    out = []
    for quiver, name in ((kronecker_quiver(), "kronecker"), (affine_a2_quiver(), "affineA2")):
        for kind in bases.KINDS:
            report = bases.verify_positivity(kind, max_n, quiver)
            bad = report.violations()
            out.append(
                _line(
                    f"basis {kind} over {name} (n <= {max_n}, {len(report.lines)} elements)",
                    report.all_positive,
                    "; ".join(v.description for v in bad),
                )
            )
    return out


def tame_positivity(max_entry: int = 4) -> list[CheckLine]:
    """Coefficient-free characters of the affine catalog are subtraction-free."""
    out = []
    for fam in desk_affine_catalog():
        rep = catalog_module(fam)
        if max(rep.dim) > max_entry:
            continue
        val = cf_cluster_char(rep)
        out.append(_line(f"positive character {fam.describe()}", val.is_subtraction_free()))
    return out


def graded_chi(max_entry: int = 3) -> list[CheckLine]:
    """y-graded coefficients of the character at x = 1 recover each chi."""
    out = []
    from . import grassmannian

    for fam in desk_affine_catalog():
        rep = catalog_module(fam)
        if max(rep.dim) > max_entry:
            continue
        table = char_table(rep)
        ok = True
        for e, _ in table.terms:
            coeff = table.total.graded_coefficient(e).specialize_ones(Family.X)
            if coeff.constant_value() != grassmannian.euler_char(rep, e):
                ok = False
                break
        out.append(_line(f"graded chi recovery {fam.describe()}", ok))
    return out


# name -> (check, default bound); a None default means the check takes no bound
REGISTRY: dict[str, tuple[Callable[..., list[CheckLine]], int | None]] = {
    "lemma-dpsn": (lemma_dpsn, 8),
    "lemma-cc": (lemma_cc, 6),
    "lemma-pnpos": (lemma_pnpos, 5),
    "delta-pos": (delta_pos, 6),
    "delta-claim": (delta_claim, 6),
    "s-from-f": (s_from_f_check, 12),
    "lemma-key": (lemma_key_check, None),
    "char-cheb": (char_cheb, 3),
    "char-mutation": (char_mutation, None),
    "basis-pos": (basis_pos, 4),
    "tame-pos": (tame_positivity, 4),
    "graded-chi": (graded_chi, 3),
}


def available_checks() -> list[str]:
    return list(REGISTRY)


def run_check(name: str, bound: int | None = None) -> list[CheckLine]:
    if name not in REGISTRY:
        raise KeyError(name)
    fn, default = REGISTRY[name]
    if default is None:
        return fn()
    return fn(bound if bound is not None else default)
