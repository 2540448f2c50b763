"""Command-line entry point.

Exit status follows the sweep contract: 0 clean, 1 when a COUNTEREXAMPLE (or
internal ERROR) record was produced, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bounds import (
    caro_wei,
    lp_max_weight,
    parse_weights,
    sigma_bound,
    validate_weight_fn,
)
from .corpus import GRAPH_SUITES, INEQ_SUITES, IngestionError, run_suite
from .graphs import FAMILIES, encode_graph6, format_edge_list, generate, parse_graph6
from .independence import alpha_exact
from .records import fmt_rational


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} ({exc})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tlab",
        description="exact-arithmetic workbench for independence bounds and Turan stability",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a generator-family graph as graph6")
    p_gen.add_argument("family", choices=sorted(FAMILIES))
    p_gen.add_argument("params", nargs="*", type=int)
    p_gen.add_argument("--out", help="write here instead of stdout")
    p_gen.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")

    p_alpha = sub.add_parser("alpha", help="exact independence number of graph6 input")
    p_alpha.add_argument("graph", help="a graph6 line, or - to read lines from stdin")

    p_bounds = sub.add_parser("bounds", help="degree-sequence bounds and the LP optimum")
    p_bounds.add_argument("graph", help="a graph6 line, or - to read one from stdin")
    p_bounds.add_argument("--sigma", type=_rational, default=Fraction(1, 2))
    p_bounds.add_argument("--weights", help="file of per-vertex rationals to validate")

    p_verify = sub.add_parser("verify", help="run a verification sweep over a corpus")
    p_verify.add_argument("suite", choices=GRAPH_SUITES)
    src = p_verify.add_mutually_exclusive_group(required=True)
    src.add_argument("--enumerate", type=int, dest="enumerate_n", metavar="N",
                     help="all labeled graphs on N vertices (N <= 7)")
    src.add_argument("--in", dest="infile", metavar="FILE.g6",
                     help="graph6 corpus, one graph per line")
    p_verify.add_argument("--sigma", type=_rational, default=Fraction(1, 2))
    p_verify.add_argument("--r", type=int, default=2)
    p_verify.add_argument("--weights", help="weight file for the conjecture suite")
    p_verify.add_argument("--blowup-cap", type=int, default=14)
    p_verify.add_argument("--certificate-dir", default=".",
                          help="where conjecture COUNTEREXAMPLE certificates land")
    p_verify.add_argument("--jobs", type=int)
    p_verify.add_argument("--checkpoint")
    p_verify.add_argument("--out")

    p_ineq = sub.add_parser("ineq", help="run an inequality-grid certification")
    p_ineq.add_argument("suite", choices=INEQ_SUITES)
    p_ineq.add_argument("--delta-max", type=int)
    p_ineq.add_argument("--n-max", type=int)
    p_ineq.add_argument("--r-max", type=int)
    p_ineq.add_argument("--step", type=_rational)
    p_ineq.add_argument("--budget", type=int)
    p_ineq.add_argument("--out")
    return parser


def _read_graph_arg(arg: str) -> list[str]:
    if arg == "-":
        return [ln for ln in sys.stdin.read().splitlines() if ln.strip()]
    return [arg]


def cmd_gen(args) -> int:
    try:
        g = generate(args.family, *args.params)
    except (ValueError, TypeError) as exc:
        print(f"tlab: {exc}", file=sys.stderr)
        return 2
    if args.format == "graph6":
        try:
            text = encode_graph6(g) + "\n"
        except ValueError as exc:
            print(f"tlab: {exc} (try --format edgelist)", file=sys.stderr)
            return 2
    else:
        text = format_edge_list(g)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_alpha(args) -> int:
    for line in _read_graph_arg(args.graph):
        g = parse_graph6(line)
        res = alpha_exact(g)
        print(json.dumps({"graph": line, "alpha": res.alpha, "witness": list(res.witness)},
                         sort_keys=True, separators=(",", ":")))
    return 0


def cmd_bounds(args) -> int:
    line = _read_graph_arg(args.graph)[0]
    g = parse_graph6(line)
    lpb = lp_max_weight(g)
    out = {
        "graph": line,
        "caro_wei": fmt_rational(caro_wei(g)),
        "sigma": fmt_rational(args.sigma),
        "sigma_bound": fmt_rational(sigma_bound(g, args.sigma)),
        "lp": fmt_rational(lpb.value),
        "lp_weights": [fmt_rational(w) for w in lpb.weights],
        "alpha": alpha_exact(g).alpha,
    }
    if args.weights:
        with open(args.weights, "r", encoding="ascii") as fh:
            weights = parse_weights(fh.read())
        report = validate_weight_fn(g, weights)
        out["weights_ok"] = report.ok
    print(json.dumps(out, sort_keys=True, separators=(",", ":")))
    return 0


def cmd_verify(args) -> int:
    params: dict = {"sigma": args.sigma, "r": args.r, "blowup_cap": args.blowup_cap,
                    "certificate_dir": args.certificate_dir}
    if args.weights:
        with open(args.weights, "r", encoding="ascii") as fh:
            params["weights"] = [str(w) for w in parse_weights(fh.read())]
    source = ("enumerate", args.enumerate_n) if args.enumerate_n is not None else ("file", args.infile)
    return run_suite(args.suite, source, params, jobs=args.jobs,
                     out=args.out, checkpoint=args.checkpoint)


def cmd_ineq(args) -> int:
    params = {}
    for key in ("delta_max", "n_max", "r_max", "step", "budget"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    return run_suite(args.suite, None, params, out=args.out)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "alpha":
            return cmd_alpha(args)
        if args.command == "bounds":
            return cmd_bounds(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "ineq":
            return cmd_ineq(args)
    except IngestionError as exc:
        print(f"tlab: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"tlab: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
