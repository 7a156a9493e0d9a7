"""Command-line front end.

Exit codes: 0 success, 1 input or parse error, 2 no domination pair found,
3 homology disagrees with the computed type, 4 resource cutoff exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constructors import ComplexKind, build, reduce_doscremo, reduce_scremo
from .engine import Exhaustive, family_strategy, format_trace, homotopy_type
from .errors import CertificationError, InputError, ResourceError
from .graphs import Graph, IntervalSet, Multidigraph, invariants
from .homology import reduced_homology, verify
from .io import format_complex, format_graph, parse_complex, read_input

EXIT_OK, EXIT_INPUT, EXIT_UNCERTIFIED, EXIT_MISMATCH, EXIT_RESOURCE = range(5)

_EXTENSIONS = {".ug": Graph, ".dg": Multidigraph, ".iv": IntervalSet}


def _load(path, input_type):
    expected = _EXTENSIONS.get(Path(path).suffix)
    if expected is not None and expected is not input_type:
        raise InputError(
            f"{path}: extension says {expected.__name__}, command needs {input_type.__name__}"
        )
    try:
        return read_input(path, input_type)
    except OSError as exc:
        raise InputError(str(exc)) from None


def _cmd_build(args, out):
    kind = ComplexKind.parse(args.kind)
    cx = build(kind, _load(args.input, kind.input_type))
    out.write(format_complex(cx))
    return EXIT_OK


def _cmd_homotopy(args, out):
    kind = ComplexKind.parse(args.kind)
    source = _load(args.input, kind.input_type)
    cx = build(kind, source)
    strategy = family_strategy(kind, source) if args.strategy == "family" else Exhaustive()
    try:
        htype, trace = homotopy_type(cx, strategy)
    except CertificationError as exc:
        out.write("homotopy: uncertified\n")
        if args.trace and exc.trace is not None:
            out.write(format_trace(exc.trace) + "\n")
        return EXIT_UNCERTIFIED
    out.write(f"homotopy: {htype}\n")
    if args.trace:
        out.write(format_trace(trace) + "\n")
    if args.verify:
        ok = verify(cx, htype)
        out.write(f"verified: {'yes' if ok else 'no'}\n")
        if not ok:
            return EXIT_MISMATCH
    return EXIT_OK


def _cmd_homology(args, out):
    try:
        text = Path(args.facets).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None
    profile = reduced_homology(parse_complex(text))
    for k in sorted(profile.reduced_betti):
        out.write(f"betti[{k}]: {profile.reduced_betti[k]}\n")
    out.write(f"torsion: {'present' if profile.torsion else 'none'}\n")
    return EXIT_OK


def _cmd_invariants(args, out):
    inv = invariants(_load(args.input, Graph))
    out.write(
        f"gamma: {inv.gamma}\ni: {inv.i_dom}\nalpha0: {inv.alpha0}\n"
        f"beta1: {inv.beta1}\nkappa: {inv.kappa}\n"
    )
    return EXIT_OK


def _cmd_reduce(args, out):
    F = _load(args.input, Graph)
    log = []
    if args.rule == "scremo":
        reduced, r = reduce_scremo(F, log), None
    else:
        reduced, r = reduce_doscremo(F, log, reverse=args.reverse)
    for line in log:
        out.write(line + "\n")
    out.write(format_graph(reduced))
    if r is not None:
        out.write(f"r: {r}\n")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    kinds = ", ".join(k.value for k in ComplexKind)
    parser = argparse.ArgumentParser(
        prog="grapes",
        description="Homotopy types of complexes built from forests, by domination.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="print the facets of a complex")
    p.add_argument("--kind", required=True, help=f"one of: {kinds}")
    p.add_argument("--input", required=True)
    p.add_argument("--out", choices=["facets"], default="facets")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("homotopy", help="compute the homotopy type")
    p.add_argument("--kind", required=True, help=f"one of: {kinds}")
    p.add_argument("--input", required=True)
    p.add_argument("--strategy", choices=["family", "exhaustive"], default="family")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_homotopy)

    p = sub.add_parser("homology", help="reduced integral homology of a facet file")
    p.add_argument("--facets", required=True)
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("invariants", help="domination, cover and matching numbers")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("reduce", help="run a forest reduction and log each step")
    p.add_argument("--input", required=True)
    p.add_argument("--rule", choices=["scremo", "doscremo"], required=True)
    p.add_argument("--reverse", action="store_true", help="break ties by the greatest choice")
    p.set_defaults(func=_cmd_reduce)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ResourceError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_RESOURCE


def main():
    sys.exit(run())
