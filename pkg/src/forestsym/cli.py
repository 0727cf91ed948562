"""Command-line front end: ``forestsym compute ...`` and ``forestsym verify ...``.

Exit codes: 0 success, 1 a verification failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as V
from .coeffs import ZERO, is_nonneg_integer_coeffs
from .forests import X_of, X_vertical, forests_containing_tally, q_stirling, vertical_c_coefficients
from .graphs import (
    Decoration,
    graph_of,
    is_indifference,
    natural_peo_valid,
    parse_edges,
    parse_hessenberg,
)
from .oracles import csf_oracle, llt_oracle, orientation_sum
from .symfunc import basis_unit, convert, rho_to_h

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _table(rows) -> str:
    rows = [(str(a), str(b)) for a, b in rows]
    width = max((len(a) for a, _ in rows), default=0)
    return "\n".join(f"{a.ljust(width)}  {b}" for a, b in rows)


def _partition_label(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _render_terms(f, fmt: str, header: dict):
    """f is a SymFunc or MonomialSym; header carries the inputs echoed in JSON."""
    if fmt == "json":
        return _dump({**header, "result": f.to_json()})
    basis = f.to_json()["basis"]
    rows = [(f"{basis}{_partition_label(lam)}", c) for lam, c in f.items()]
    return _table(rows)


# ---------------------------------------------------------------------------
# argument parsing


def _hessenberg(text: str):
    try:
        return parse_hessenberg(text)
    except ValueError as exc:
        raise UsageError(f"invalid Hessenberg function {text!r}: {exc}") from None


def _decoration(m, text: str | None) -> frozenset:
    if not text:
        return frozenset()
    try:
        S = frozenset(int(t) for t in text.split(","))
        return Decoration(m, S).S
    except ValueError as exc:
        raise UsageError(f"invalid decoration {text!r}: {exc}") from None


def _graph(args, need_indifference: bool = False, need_peo: bool = False):
    if (args.m is None) == (args.graph is None):
        raise UsageError("give exactly one of --m or --graph")
    if args.m is not None:
        return graph_of(_hessenberg(args.m))
    try:
        g = parse_edges(args.graph, args.n)
    except ValueError as exc:
        raise UsageError(f"invalid edge list {args.graph!r}: {exc}") from None
    if need_indifference and not is_indifference(g):
        raise UsageError("graph is not an indifference graph in its natural order")
    if need_peo and not natural_peo_valid(g):
        raise UsageError("1, ..., n is not a perfect elimination ordering of the graph")
    return g


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forestsym", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="command", required=True)

    comp = top.add_parser("compute", help="compute a single object")
    csub = comp.add_subparsers(dest="what", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = csub.add_parser("X", help="forest expansion X_y(m) or X_y(m, S)")
    p.add_argument("--m", required=True, help="Hessenberg function, e.g. 2,4,4,4")
    p.add_argument("--y", choices=("rho", "qe"), default="rho")
    p.add_argument("--decoration", help="decoration S, e.g. 1,3")
    fmt(p)

    for name in ("csf", "llt"):
        p = csub.add_parser(name, help=f"brute-force {name} in the monomial basis")
        p.add_argument("--m")
        p.add_argument("--graph", help="edges:1-2,2-3")
        p.add_argument("--n", type=int, help="number of vertices for --graph")
        fmt(p)

    p = csub.add_parser("rho", help="rho_n in the h, e or p basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--basis", choices=("h", "e", "p"), default="h")
    fmt(p)

    p = csub.add_parser("stirling", help="q-Stirling numbers s_q(n, k), k = 0..n")
    p.add_argument("--n", type=int, required=True)
    fmt(p)

    p = csub.add_parser("orientation-sum", help="sum over orientations in the e basis")
    p.add_argument("--m")
    p.add_argument("--graph")
    p.add_argument("--n", type=int)
    fmt(p)

    p = csub.add_parser("decorated-forests", help="forests containing the decoration edges, tallied")
    p.add_argument("--m", required=True)
    p.add_argument("--decoration", required=True)
    fmt(p)

    ver = top.add_parser("verify", help="run an exhaustive check")
    ver.add_argument("check", choices=sorted(V.CHECKS))
    ver.add_argument("--max-n", type=int)
    ver.add_argument("--target", choices=(*V.MODULAR_TARGETS, "all"), default="all")
    ver.add_argument("--format", choices=("json", "text"), default="text")
    ver.add_argument("--seed", type=int, help="perturb one coefficient (fault injection)")
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--timing", action="store_true", help="include elapsed seconds in JSON")
    return parser


# ---------------------------------------------------------------------------
# compute


def _compute(args) -> str:
    fmt = args.format
    if args.what == "X":
        m = _hessenberg(args.m)
        S = _decoration(m, args.decoration)
        f = X_vertical(m, S, args.y) if S else X_of(m, args.y)
        return _render_terms(f, fmt, {"m": list(m.values), "S": sorted(S), "y": args.y})
    if args.what == "csf":
        g = _graph(args, need_peo=True)
        return _render_terms(csf_oracle(g), fmt, {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]})
    if args.what == "llt":
        g = _graph(args, need_indifference=True)
        return _render_terms(llt_oracle(g), fmt, {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]})
    if args.what == "orientation-sum":
        g = _graph(args)
        return _render_terms(orientation_sum(g), fmt, {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]})
    if args.what == "rho":
        if args.n < 1:
            raise UsageError("--n must be positive")
        h = rho_to_h(basis_unit("rho", (args.n,)))
        f = h if args.basis == "h" else convert(h, args.basis)
        return _render_terms(f, fmt, {"n": args.n})
    if args.what == "stirling":
        if args.n < 0:
            raise UsageError("--n must be non-negative")
        values = [q_stirling(args.n, k) for k in range(args.n + 1)]
        if fmt == "json":
            return _dump({"n": args.n, "s_q": [v.to_json() for v in values]})
        return _table((f"k={k}", v) for k, v in enumerate(values))
    if args.what == "decorated-forests":
        m = _hessenberg(args.m)
        S = _decoration(m, args.decoration)
        tally = forests_containing_tally(m, S)
        coeffs = vertical_c_coefficients(m, S)
        status = {lam: is_nonneg_integer_coeffs(c) for lam, c in coeffs.items()}
        if fmt == "json":
            return _dump(
                {
                    "m": list(m.values),
                    "S": sorted(S),
                    "forests": [
                        {"partition": list(lam), "count": cnt} for lam, cnt in sorted(tally.items(), reverse=True)
                    ],
                    "coefficients": [
                        {"partition": list(lam), "coeff": c.to_json(), "in_Nq": status[lam]}
                        for lam, c in sorted(coeffs.items(), reverse=True)
                    ],
                }
            )
        rows = []
        for lam in sorted(set(tally) | set(coeffs), reverse=True):
            c = coeffs.get(lam, ZERO)
            rows.append((_partition_label(lam), f"{tally.get(lam, 0)} forests; c = {c}"))
        return _table(rows)
    raise UsageError(f"unknown compute target {args.what}")


# ---------------------------------------------------------------------------
# verify


def _verify(args) -> tuple[str, bool]:
    max_n = args.max_n if args.max_n is not None else V.CHECKS[args.check]
    if max_n < 0:
        raise UsageError("--max-n must be non-negative")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    if args.seed is not None and args.check not in ("thm1", "thm2", "plethystic", "orientations"):
        raise UsageError(f"--seed is not supported by {args.check}")
    check, jobs, seed = args.check, args.jobs, args.seed
    if check == "modular":
        targets = V.MODULAR_TARGETS if args.target == "all" else (args.target,)
        reports = [V.verify_modular(max_n, t, jobs) for t in targets]
    elif check == "identities":
        reports = V.verify_identities(max_n, jobs)
    elif check in ("thm1", "thm2", "plethystic", "orientations"):
        fn = getattr(V, f"verify_{check}")
        reports = [fn(max_n, seed=seed, jobs=jobs)]
    elif check == "vertical":
        reports = [V.verify_vertical(max_n, jobs)]
    elif check == "remark":
        reports = [V.verify_remark_coeffs(max_n, jobs)]
    elif check == "stirling":
        reports = [V.verify_stirling(max_n)]
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown check {check}")
    ok = all(r.passed for r in reports)
    if args.format == "json":
        out = _dump({"passed": ok, "reports": [r.to_json(args.timing) for r in reports]})
    else:
        out = "\n".join(r.to_text() for r in reports)
    return out, ok


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "compute":
            print(_compute(args))
            return EXIT_OK
        out, ok = _verify(args)
        print(out)
        return EXIT_OK if ok else EXIT_FAIL
    except UsageError as exc:
        print(f"forestsym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
