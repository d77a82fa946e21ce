"""Command-line front end.

Exit codes: 0 success, 1 a non-degenerate check failed, 2 a resource limit
was reached (enumeration cap or time budget), 3 input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from .bondage import NoEdgesError, bondage_number, default_k_max, is_bondage_set
from .domination import (
    DEFAULT_CAP, domination_number, enumerate_gamma_sets, minimum_dominating_set,
    property_P_gamma_sets,
)
from .graph import GraphError, GridSpec, read_graph
from .oracle import predict_bondage_strong, witness_bondage_set_strong
from .verify import VerifyOptions, dumps_json, dumps_report, report_csv, report_table, sweep

EXIT_OK, EXIT_FAIL, EXIT_LIMIT, EXIT_INPUT = 0, 1, 2, 3
WORKERS_ENV = "GRIDBONDAGE_WORKERS"


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> List[int]:
    """``"5"`` -> [5]; ``"2..6"`` -> [2, ..., 6]; ``"4,7"`` -> [4, 7]."""
    out = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return out


def _default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            w = int(env)
        except ValueError:
            raise InputError(f"{WORKERS_ENV}={env!r} is not an integer") from None
        if w < 1:
            raise InputError(f"{WORKERS_ENV} must be >= 1")
        return w
    return os.cpu_count() or 1


def _add_graph_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--product", nargs=3, metavar=("KIND", "N", "M"),
                     help="product of paths: strong|direct|cartesian N M")
    src.add_argument("--file", help="graph file ('p edge' / 'e u v' format)")


def _add_search_opts(p):
    p.add_argument("--kmax", type=int, default=None, help="largest edge-subset size searched")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="γ-set enumeration cap")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--deterministic", action="store_true",
                   help="single-partition scan; reproducible witnesses")
    p.add_argument("--time-budget", type=float, default=None, help="seconds per bondage search")


def _add_output_opts(p, default_format="table"):
    p.add_argument("--format", choices=("json", "table", "csv"), default=default_format)
    p.add_argument("--output", default="-", help="output path, '-' for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gridbondage", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gamma", help="domination number")
    _add_graph_source(p)
    _add_output_opts(p)

    p = sub.add_parser("bondage", help="bondage number with a witness")
    _add_graph_source(p)
    _add_search_opts(p)
    _add_output_opts(p)

    p = sub.add_parser("gamma-sets", help="enumerate minimum dominating sets")
    _add_graph_source(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--property-p", action="store_true",
                   help="only sets with pairwise disjoint closed neighbourhoods")
    _add_output_opts(p)

    p = sub.add_parser("witness", help="constructive bondage set for P_n strong P_m")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    _add_output_opts(p)

    for name in ("verify", "sweep"):
        p = sub.add_parser(name, help="replay the theorems over a parameter range")
        p.add_argument("kind", choices=("strong", "direct", "path", "gadget"))
        p.add_argument("--n", type=parse_range, required=True)
        p.add_argument("--m", type=parse_range, default=None)
        _add_search_opts(p)
        p.add_argument("--case-budget", type=float, default=60.0,
                       help="seconds per case bondage search")
        p.add_argument("--sweep-budget", type=float, default=None)
        _add_output_opts(p)
    return parser


def _load_graph(args):
    if args.file:
        try:
            return read_graph(args.file), None
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    kind, n, m = args.product
    try:
        n, m = int(n), int(m)
    except ValueError:
        raise InputError(f"--product expects integer orders, got {n!r} {m!r}") from None
    spec = GridSpec(kind, n, m)
    return spec.build(), spec


def _render_vertex(v: int, spec) -> str:
    if spec is None:
        return str(v + 1)
    i, j = spec.coords(v)
    return f"({i},{j})"


def _vertex_json(v: int, spec):
    return list(spec.coords(v)) if spec is not None else v + 1


def _edge_json(e, spec):
    return [_vertex_json(e[0], spec), _vertex_json(e[1], spec)]


def _render_edge(e, spec) -> str:
    return f"{_render_vertex(e[0], spec)}-{_render_vertex(e[1], spec)}"


def _emit(args, text: str) -> None:
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


def _workers(args) -> int:
    w = args.workers if args.workers is not None else _default_workers()
    if w < 1:
        raise InputError("--workers must be >= 1")
    return 1 if args.deterministic else w


def _cmd_gamma(args) -> int:
    g, spec = _load_graph(args)
    gamma = domination_number(g)
    s = sorted(minimum_dominating_set(g))
    if args.format == "json":
        _emit(args, dumps_json({"gamma": gamma, "set": [_vertex_json(v, spec) for v in s]}))
    elif args.format == "csv":
        _emit(args, f"gamma\n{gamma}\n")
    else:
        _emit(args, f"{gamma}\n")
    return EXIT_OK


def _cmd_bondage(args) -> int:
    g, spec = _load_graph(args)
    k_max = args.kmax if args.kmax is not None else default_k_max(g)
    r = bondage_number(g, k_max=k_max, workers=_workers(args),
                       deterministic=args.deterministic or _workers(args) == 1,
                       time_budget=args.time_budget)
    witness = [_edge_json(e, spec) for e in r.witness] if r.witness else None
    if args.format == "json":
        _emit(args, dumps_json({
            "bondage": r.value, "exact": r.exact, "ruled_out": r.ruled_out, "k_max": k_max,
            "witness": witness, "evaluated_subsets": r.evaluated_subsets,
            "cache_hits": r.cache_hits, "solver_calls": r.solver_calls,
            "timed_out": r.timed_out}))
    elif args.format == "csv":
        _emit(args, f"bondage,exact,ruled_out\n{'' if r.value is None else r.value},"
                    f"{str(r.exact).lower()},{r.ruled_out}\n")
    else:
        lines = [str(r)]
        if r.witness:
            lines.append("witness: " + " ".join(_render_edge(e, spec) for e in r.witness))
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if r.exact else EXIT_LIMIT


def _cmd_gamma_sets(args) -> int:
    g, spec = _load_graph(args)
    if args.cap < 1:
        raise InputError("--cap must be >= 1")
    fam = property_P_gamma_sets(g, args.cap) if args.property_p else enumerate_gamma_sets(g, args.cap)
    sets = [[_vertex_json(v, spec) for v in sorted(s)] for s in fam.sets]
    if args.format == "json":
        _emit(args, dumps_json({"gamma": fam.gamma, "count": len(sets),
                                "truncated": fam.truncated, "sets": sets}))
    else:
        sep = "," if args.format == "csv" else " "
        lines = [sep.join(_render_vertex(v, spec) for v in sorted(s)) for s in fam.sets]
        if args.format == "table":
            lines.insert(0, f"gamma={fam.gamma} count={len(sets)} truncated={fam.truncated}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_LIMIT if fam.truncated else EXIT_OK


def _cmd_witness(args) -> int:
    spec = GridSpec("strong", args.n, args.m)
    w = witness_bondage_set_strong(args.n, args.m)
    pred = predict_bondage_strong(args.n, args.m)
    ok = None if w is None else is_bondage_set(spec.build(), w)
    if args.format == "json":
        _emit(args, dumps_json({"n": args.n, "m": args.m, "prediction": pred.to_dict(),
                                "witness": None if w is None else [spec.edge_coords(e) for e in w],
                                "raises_gamma": ok}))
    elif w is None:
        _emit(args, f"no construction for class of ({args.n},{args.m})\n")
    else:
        _emit(args, " ".join(_render_edge(e, spec) for e in w) + f"\nraises_gamma: {ok}\n")
    return EXIT_FAIL if ok is False else EXIT_OK


def _cmd_verify(args) -> int:
    if args.kind != "path" and args.m is None:
        raise InputError(f"{args.kind} needs --m")
    options = VerifyOptions(k_max=args.kmax, cap=args.cap, workers=_workers(args),
                            deterministic=args.deterministic or _workers(args) == 1,
                            time_budget=args.time_budget or args.case_budget,
                            sweep_budget=args.sweep_budget)
    report = sweep(args.n, args.m or [], args.kind, options)
    if args.format == "json":
        _emit(args, dumps_report(report))
    elif args.format == "csv":
        _emit(args, report_csv(report))
    else:
        _emit(args, report_table(report))
    if report.failed:
        return EXIT_FAIL
    return EXIT_LIMIT if report.incomplete else EXIT_OK


_COMMANDS = {"gamma": _cmd_gamma, "bondage": _cmd_bondage, "gamma-sets": _cmd_gamma_sets,
             "witness": _cmd_witness, "verify": _cmd_verify, "sweep": _cmd_verify}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (InputError, GraphError, NoEdgesError, ValueError) as exc:
        print(f"gridbondage: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
