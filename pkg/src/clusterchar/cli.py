"""Command-line front end.

Every verb is deterministic: identical inputs produce byte-identical text,
and ``--json`` mirrors the text output in machine-readable form.  Exit
codes: 0 for success or identity-holds, 1 for a verified violation (for
example a requested substitution that is provably not subtraction-free),
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bases, grassmannian, mutation, verify
from .character import CharTermTable, char_table, cf_cluster_char, cluster_char
from .chebyshev import (
    ChebWindow,
    cheb_first_kind,
    cheb_second_kind,
    delta,
    gen_cheb,
    gen_cheb_det,
)
from .errors import ClusterCharError
from .laurent import Family, LaurentPoly, q, t, tid
from .quiver import (
    IntRep,
    module_from_json,
    quiver_by_name,
    quiver_from_json,
)

__all__ = ["main"]


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _load_json_arg(value: str) -> dict:
    """Accept an inline JSON object or a path to a JSON file."""
    text = value
    if not value.lstrip().startswith("{"):
        path = Path(value)
        if not path.exists():
            raise UsageError(f"no such file: {value}")
        text = path.read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}")
    if not isinstance(obj, dict):
        raise UsageError("top-level JSON value must be an object")
    return obj


def _resolve_quiver(args: argparse.Namespace):
    raw = getattr(args, "quiver", None)
    if raw is None:
        raise UsageError("--quiver is required")
    if raw.lstrip().startswith("{") or raw.endswith(".json"):
        return quiver_from_json(_load_json_arg(raw))
    return quiver_by_name(raw)


def _resolve_module(args: argparse.Namespace) -> IntRep:
    obj = _load_json_arg(args.module)
    quiver = None
    if getattr(args, "quiver", None):
        quiver = _resolve_quiver(args)
    return module_from_json(obj, quiver)


# ---------------------------------------------------------------------------
# verb handlers


def _cmd_gencheb(args: argparse.Namespace) -> int:
    w = ChebWindow(args.start, args.n)
    value = gen_cheb_det(w) if args.det else gen_cheb(w)
    _emit(args, value.to_text(), {"n": args.n, "start": args.start, "value": value.to_json_obj()})
    return 0


def _delta_substitution(lp: int, periodic: bool) -> dict:
    """Periodic: t_i -> t_i + q_i/t_{i-1} cyclically (subtraction-free).
    Nonperiodic: the open-ended form with a fresh last variable, the
    standard witness that positivity needs the cycle."""
    sigma = {}
    for i in range(1, lp + 1):
        other = (lp if i == 1 else i - 1) if periodic else i + 1
        sigma[tid(i)] = t(i) + q(i) * t(other).inverse()
    return sigma


def _cmd_delta(args: argparse.Namespace) -> int:
    value = delta(args.l, args.p)
    if args.substitute != "none":
        value = value.substitute(_delta_substitution(args.l * args.p, args.substitute == "periodic"))
    if args.coefficient_free:
        value = value.specialize_ones(Family.Q)
    positive = value.is_subtraction_free()
    payload = {
        "l": args.l,
        "p": args.p,
        "substitute": args.substitute,
        "coefficient_free": args.coefficient_free,
        "value": value.to_json_obj(),
        "subtraction_free": positive,
    }
    _emit(args, value.to_text(), payload)
    if args.substitute != "none" and not positive:
        return 1  # a verified non-positivity witness
    return 0


def _cmd_cheb(args: argparse.Namespace) -> int:
    value = cheb_first_kind(args.n) if args.kind == "F" else cheb_second_kind(args.n)
    _emit(args, value.to_text(), {"kind": args.kind, "n": args.n, "value": value.to_json_obj()})
    return 0


def _char_payload(table: CharTermTable, total: LaurentPoly) -> dict:
    return {
        "dim": list(table.rep.dim),
        "value": total.to_json_obj(),
        "terms": [
            {"e": list(e), "value": v.to_json_obj()}
            for e, v in table.terms
        ],
    }


def _cmd_char(args: argparse.Namespace) -> int:
    rep = _resolve_module(args)
    table = char_table(rep)
    total = cf_cluster_char(rep) if args.coefficient_free else cluster_char(rep)
    _emit(args, total.to_text(), _char_payload(table, total))
    return 0


def _cmd_grass(args: argparse.Namespace) -> int:
    rep = _resolve_module(args)
    try:
        e = tuple(int(v) for v in args.e.split(","))
    except ValueError:
        raise UsageError(f"bad dimension vector: {args.e!r}")
    prof = grassmannian.profile(rep, e)
    text = (
        f"e={list(e)} samples={[[p, c] for p, c in prof.samples]} "
        f"coefficients={list(prof.coefficients)} chi={prof.chi}"
    )
    payload = {
        "e": list(e),
        "samples": [[p, c] for p, c in prof.samples],
        "coefficients": list(prof.coefficients),
        "chi": prof.chi,
    }
    _emit(args, text, payload)
    return 0


def _parse_sequence(raw: str, quiver) -> list[int]:
    out = []
    for tok in raw.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok in quiver.vertices:
            out.append(quiver.index(tok))
        else:
            raise UsageError(f"unknown vertex {tok!r}")
    return out


def _cmd_mutate(args: argparse.Namespace) -> int:
    quiver = _resolve_quiver(args)
    seed = mutation.initial_seed(quiver, principal=args.principal)
    for k in _parse_sequence(args.sequence, quiver):
        seed = mutation.mutate(seed, k)
    lines = [f"x[{v}] = {poly.to_text()}" for v, poly in zip(quiver.vertices, seed.cluster)]
    payload = {
        "sequence": args.sequence,
        "principal": args.principal,
        "matrix": [list(r) for r in seed.exchange_matrix],
        "cluster": [p.to_json_obj() for p in seed.cluster],
    }
    _emit(args, "\n".join(lines), payload)
    return 0


def _cmd_variables(args: argparse.Namespace) -> int:
    quiver = _resolve_quiver(args)
    variables = mutation.cluster_variables_up_to(quiver, args.depth, principal=args.principal)
    payload = {
        "depth": args.depth,
        "principal": args.principal,
        "count": len(variables),
        "variables": [v.to_json_obj() for v in variables],
    }
    _emit(args, "\n".join(v.to_text() for v in variables), payload)
    return 0


def _cmd_basis(args: argparse.Namespace) -> int:
    quiver = _resolve_quiver(args)
    report = bases.verify_positivity(args.kind, args.max_n, quiver)
    lines = [
        f"{'PASS' if line.positive else 'FAIL'} {line.description}"
        + (f" [offending {line.witness}]" if line.witness else "")
        for line in report.lines
    ]
    payload = {
        "kind": args.kind,
        "max_n": args.max_n,
        "all_positive": report.all_positive,
        "elements": [
            {"description": l.description, "positive": l.positive, "witness": l.witness}
            for l in report.lines
        ],
    }
    _emit(args, "\n".join(lines), payload)
    return 0 if report.all_positive else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    names = verify.available_checks() if args.check == "all" else [args.check]
    all_ok = True
    results = []
    texts = []
    for name in names:
        try:
            lines = verify.run_check(name, args.n)
        except KeyError:
            raise UsageError(
                f"unknown check {args.check!r}; available: "
                + ", ".join(verify.available_checks()) + ", all"
            )
        for line in lines:
            ok = line.passed
            all_ok = all_ok and ok
            texts.append(
                f"{'PASS' if ok else 'FAIL'} [{name}] {line.label}"
                + (f" ({line.detail})" if line.detail and not ok else "")
            )
            results.append(
                {"check": name, "label": line.label, "passed": ok, "detail": line.detail}
            )
    payload = {"all_passed": all_ok, "results": results}
    _emit(args, "\n".join(texts), payload)
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clusterchar",
        description="Exact cluster characters, generalized Chebyshev polynomials, "
        "and quiver Grassmannian counting at desk scale.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, handler, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return p

    p = add("gencheb", _cmd_gencheb, "generalized Chebyshev polynomial over a window")
    p.add_argument("--n", type=int, required=True, help="window length")
    p.add_argument("--start", type=int, default=1, help="window start index (default 1)")
    p.add_argument("--det", action="store_true", help="use the determinant oracle")

    p = add("delta", _cmd_delta, "delta-polynomial, optionally substituted")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument(
        "--substitute",
        choices=("none", "periodic", "nonperiodic"),
        default="none",
        help="apply t_i -> t_i + q_i/t_{i+1}, wrapping the last index or not",
    )
    p.add_argument("--coefficient-free", action="store_true", help="set all q to 1")

    p = add("cheb", _cmd_cheb, "one-variable normalized Chebyshev polynomial")
    p.add_argument("--kind", choices=("F", "S"), required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("char", _cmd_char, "cluster character of a module")
    p.add_argument("--module", required=True, help="module JSON (inline or path)")
    p.add_argument("--quiver", help="quiver name or JSON, for explicit modules")
    p.add_argument("--coefficient-free", action="store_true")

    p = add("grass", _cmd_grass, "counting polynomial and Euler characteristic")
    p.add_argument("--module", required=True, help="module JSON (inline or path)")
    p.add_argument("--quiver", help="quiver name or JSON, for explicit modules")
    p.add_argument("--e", required=True, help="sub-dimension vector, e.g. 0,1")

    p = add("mutate", _cmd_mutate, "apply a mutation sequence to the initial seed")
    p.add_argument("--quiver", required=True, help="kronecker | affineA2 | JSON")
    p.add_argument("--sequence", required=True, help="comma-separated vertex ids")
    p.add_argument("--principal", action="store_true", help="track principal coefficients")

    p = add("variables", _cmd_variables, "cluster variables up to a mutation depth")
    p.add_argument("--quiver", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--principal", action="store_true")

    p = add("basis", _cmd_basis, "expand and check one basis stratum")
    p.add_argument("--kind", choices=bases.KINDS, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--quiver", required=True)

    p = add("verify", _cmd_verify, "run a named verification check")
    p.add_argument("check", help="check name or 'all'", nargs="?", default="all")
    p.add_argument("--n", type=int, default=None, help="override the check's size bound")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ClusterCharError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
