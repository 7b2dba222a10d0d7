"""Command-line front end: ``lapgirth <verb> ...``.

Exit status is 0 on success or a matching sweep, 1 when a verification finds a violation
or mismatch, 2 on usage errors (bad arguments, malformed graph6, failed preconditions).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Optional, Sequence, TextIO

from . import __version__
from .families import FamilyError, FamilySpec, make
from .generate import DEFAULT_MAX_ORDER, HARD_MAX_ORDER
from .graph import Graph, GraphError, girth
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .interval import IntervalError, is_relative, parse_interval
from .lemmas import lemma_suite
from .spectra import charpoly, count_in_interval, eigenvalues_numeric
from .verify import (
    PreconditionError,
    Which,
    check_girth_bound,
    classify_girth3,
    exhaustive_equality_search,
    exhaustive_thr,
    y1_uniqueness_search,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt_float(x: float) -> str:
    return f"{x:.12g}" if abs(x) > 5e-13 else "0"


def _targets(args, stdin: TextIO) -> Iterator[tuple[str, Graph]]:
    if args.g6 is not None and args.family is not None:
        raise UsageError("give at most one of --g6 and --family")
    try:
        if args.g6 is not None:
            yield args.g6, parse_graph6(args.g6)
        elif args.family is not None:
            yield args.family, make(args.family)
        else:
            for line in stdin:
                text = line.strip()
                if text and not text.startswith(">>"):
                    yield text, parse_graph6(text)
    except Graph6Error as exc:
        raise UsageError(f"malformed graph6: {exc}") from exc
    except (FamilyError, GraphError) as exc:
        raise UsageError(str(exc)) from exc


def _emit(out: TextIO, args, record: dict, text: str) -> None:
    if args.json:
        out.write(json.dumps(record, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


# --- verbs -------------------------------------------------------------------


def cmd_spectrum(args, out, stdin) -> int:
    for label, g in _targets(args, stdin):
        values = [_fmt_float(float(x)) for x in eigenvalues_numeric(g)]
        _emit(out, args, {"target": label, "spectrum": [float(v) for v in values]}, " ".join(values))
    return EXIT_OK


def cmd_charpoly(args, out, stdin) -> int:
    for label, g in _targets(args, stdin):
        p = charpoly(g)
        _emit(out, args, {"target": label, "coefficients": list(p.coeffs)}, str(p))
    return EXIT_OK


def cmd_girth(args, out, stdin) -> int:
    for label, g in _targets(args, stdin):
        gi = girth(g)
        _emit(out, args, {"target": label, "girth": gi}, "inf" if gi is None else str(gi))
    return EXIT_OK


def cmd_count(args, out, stdin) -> int:
    for label, g in _targets(args, stdin):
        env = {"n": g.order}
        if is_relative(args.interval):
            gi = girth(g)
            if gi is not None:
                env["g"] = gi
            if args.k is not None:
                env["k"] = args.k
        try:
            interval = parse_interval(args.interval, env)
        except IntervalError as exc:
            raise UsageError(f"{label}: {exc}") from exc
        m = count_in_interval(charpoly(g), interval)
        _emit(out, args, {"target": label, "interval": str(interval), "count": m}, str(m))
    return EXIT_OK


def cmd_family(args, out, stdin) -> int:
    try:
        spec = FamilySpec.parse(args.spec)
        g = make(spec)
    except (FamilyError, GraphError) as exc:
        raise UsageError(str(exc)) from exc
    text = emit_graph6(g)
    if args.emit:
        out.write(text + "\n")
        return EXIT_OK
    gi = girth(g)
    record = {"family": str(spec), "order": g.order, "size": g.size, "girth": gi, "graph6": text}
    _emit(out, args, record, f"{spec}: order {g.order}, size {g.size}, girth {'inf' if gi is None else gi}, graph6 {text}")
    return EXIT_OK


def cmd_verify(args, out, stdin) -> int:
    status = EXIT_OK
    for label, g in _targets(args, stdin):
        try:
            if args.theorem == "gen":
                res = check_girth_bound(g, args.k)
                record = {
                    "target": label,
                    "k": args.k,
                    "girth": res.girth,
                    "interval": str(res.interval),
                    "count": res.count,
                    "bound": res.bound,
                    "holds": res.holds,
                    "equality": res.is_equality,
                }
                verdict = "equality" if res.is_equality else ("holds" if res.holds else "VIOLATED")
                text = f"{label}: m{res.interval} = {res.count}, bound n-g = {res.bound}: {verdict}"
                if not res.holds:
                    status = EXIT_FAIL
            else:
                mult = classify_girth3(g, Which.MULT_N)
                top = classify_girth3(g, Which.TOP_INTERVAL)
                record = {
                    "target": label,
                    "mult_n": {"value": mult.value, "label": mult.label, "witness": mult.witness},
                    "top_interval": {"value": top.value, "label": top.label, "witness": top.witness},
                }
                text = f"{label}: m(n) = {mult.value} [{mult.label}], m[n-1,n] = {top.value} [{top.label}]"
                n = g.order
                if mult.value > n - 3 and mult.label == "OTHER" or top.value > n - 3 and top.label == "OTHER":
                    status = EXIT_FAIL
        except PreconditionError as exc:
            raise UsageError(f"{label}: {exc}") from exc
        _emit(out, args, record, text)
    return status


def cmd_sweep(args, out, stdin) -> int:
    if args.max_order > HARD_MAX_ORDER:
        raise UsageError(f"--max-order is capped at {HARD_MAX_ORDER}")
    if args.n > args.max_order:
        raise UsageError(f"n={args.n} exceeds the enumeration bound {args.max_order} (raise --max-order)")
    try:
        if args.theorem == "gen":
            if args.k is None:
                raise UsageError("sweep gen needs --k")
            rep = exhaustive_equality_search(args.n, args.k, jobs=args.jobs, max_order=args.max_order)
        elif args.theorem == "thr":
            rep = exhaustive_thr(args.n, jobs=args.jobs, max_order=args.max_order, part=args.part, corrected=args.corrected)
        else:
            rep = y1_uniqueness_search(args.n, jobs=args.jobs, max_order=args.max_order)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        out.write(rep.to_json() + "\n")
    else:
        out.write(
            f"{rep.theorem_id} {json.dumps(rep.params, sort_keys=True)}: checked {rep.graphs_checked}, "
            f"violations {len(rep.violations)}, witnesses {len(rep.equality_witnesses)}, match {rep.match}\n"
        )
        for w in rep.equality_witnesses:
            out.write(f"  witness {w}\n")
        for v in rep.violations:
            out.write(f"  violation {v}\n")
        for note in rep.notes:
            out.write(f"  note: {note}\n")
    return EXIT_OK if rep.match else EXIT_FAIL


def cmd_lemmas(args, out, stdin) -> int:
    if args.nmax > args.max_order:
        raise UsageError(f"--nmax exceeds the enumeration bound {args.max_order}")
    rep = lemma_suite(args.nmax)
    if args.json:
        out.write(json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n")
    else:
        for name in sorted(rep.counterexamples):
            bad = rep.counterexamples[name]
            out.write(f"{name}: {rep.instances[name]} instances, {len(bad)} counterexamples\n")
            for b in bad[:10]:
                out.write(f"  {b}\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


# --- parser ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lapgirth", description="Laplacian eigenvalue distribution and girth toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def targeted(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--g6", help="graph in graph6 format")
        p.add_argument("--family", help='named family, e.g. "Y(9,3)"')
        p.add_argument("--json", action="store_true")
        return p

    targeted("spectrum", "numeric Laplacian eigenvalues, nonincreasing").set_defaults(func=cmd_spectrum)
    targeted("charpoly", "exact Laplacian characteristic polynomial").set_defaults(func=cmd_charpoly)
    targeted("girth", "length of a shortest cycle").set_defaults(func=cmd_girth)

    p = targeted("count", "number of Laplacian eigenvalues in an interval (exact)")
    p.add_argument("--interval", required=True, help='e.g. "[4,5]" or "[n-g-k+4,n]"')
    p.add_argument("--k", type=int, help="value of k in relative intervals")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("family", help="build a named graph")
    p.add_argument("spec", help='e.g. "K(2,3)", "H(7,1)", "Q1"')
    p.add_argument("--emit", action="store_true", help="print only the graph6 string")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = targeted("verify", "check one graph against the girth bound or the girth-3 classification")
    p.add_argument("theorem", choices=["gen", "thr"])
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="exhaustive check over all connected graphs of one order")
    p.add_argument("theorem", choices=["gen", "thr", "y1-unique"], help="y1-unique is exploratory")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--part", choices=["top_interval", "mult_n"], default="top_interval")
    p.add_argument("--corrected", action="store_true", help="mult_n: use K_{n-4} v C_4 in the equality list")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("lemmas", help="sweep the auxiliary spectral facts")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lemmas)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None, stdin: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out, stdin)
    except UsageError as exc:
        err.write(f"lapgirth: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
