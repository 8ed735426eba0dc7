"""Command-line interface.

Exit codes: 0 success / holds / valid / confirmed, 1 fails / invalid /
infeasible, 2 unknown / unconfirmed, 3 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import io
from .errors import (
    GraphError,
    MembershipUndecided,
    NonPrincipalIntersection,
    ParseError,
    SplineError,
    UnsupportedRing,
)
from .graph import enumerate_paths, path_ideal, paths_intersection_ideal
from .ideals import Ideal, Verdict, ideal_contains
from .iso import transport_spline, verify_iso
from .rings import Ring
from .spline import (
    build_cycle_spline,
    build_path_spline,
    build_spline_crt,
    build_tree_spline,
    verify_spline,
)
from .udp import (
    DEFAULT_BUDGET,
    brute_force_udp,
    build_pasted_spline,
    check_pasting_equation,
    cut_decompositions,
    find_cut_decomposition,
    verify_non_udp_witness,
)

EXIT_OK, EXIT_FAIL, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3

_VERDICT_EXIT = {Verdict.YES: EXIT_OK, Verdict.NO: EXIT_FAIL, Verdict.UNKNOWN: EXIT_UNKNOWN}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_paths(args) -> int:
    G = io.load_graph(args.graph)
    for P in enumerate_paths(G, args.source, args.target_vertex):
        _out(" - ".join(P))
    return EXIT_OK


def cmd_path_ideal(args) -> int:
    G = io.load_graph(args.graph)
    if args.path:
        _out(str(path_ideal(G, args.path.split(","))))
        return EXIT_OK
    if not (args.source and args.target_vertex):
        raise UsageError("path-ideal needs --path or both --from and --to")
    for P in enumerate_paths(G, args.source, args.target_vertex):
        _out(f"{' - '.join(P)}: {path_ideal(G, P)}")
    return EXIT_OK


def cmd_intersect(args) -> int:
    G = io.load_graph(args.graph)
    _out(str(paths_intersection_ideal(G, args.source, args.target_vertex)))
    return EXIT_OK


def cmd_member(args) -> int:
    try:
        ring = Ring.parse(args.ring)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    I = Ideal(ring, [io.parse_element(ring, g) for g in args.generators])
    m = ideal_contains(I, io.parse_element(ring, args.element), args.degree_bound)
    _out(m.describe())
    return _VERDICT_EXIT[m.verdict]


def cmd_verify(args) -> int:
    rho = io.load_spline(args.spline)
    check = verify_spline(rho.graph, rho, args.degree_bound)
    lines = [check.status]
    lines += [f"  violated: {a}-{b}" for a, b in check.violations]
    lines += [f"  undecided: {a}-{b}" for a, b in check.undecided]
    _out("\n".join(lines))
    return _VERDICT_EXIT[check.verdict]


_BUILDERS = {
    "path": build_path_spline,
    "tree": build_tree_spline,
    "cycle": build_cycle_spline,
    "crt": build_spline_crt,
}


def cmd_build(args) -> int:
    G = io.load_graph(args.graph)
    x = io.parse_element(G.ring, args.element)
    u, w = args.source, args.target_vertex
    if args.method == "pasted":
        z = args.cut
        if z is None:
            decs = [d for d in cut_decompositions(G) if d.side_of(u) != d.side_of(w)]
            if not decs:
                raise UsageError("no cut vertex separates the pair; pass --cut")
            dec = decs[0]
        else:
            dec = find_cut_decomposition(G, z)
        rho = build_pasted_spline(G, dec, u, w, x)
    else:
        rho = _BUILDERS[args.method](G, u, w, x)
    if args.output:
        io.save(args.output, io.spline_to_json(rho))
    lines = [f"{v}: {rho[v]}" for v in G.vertices]
    lines.append(f"difference {u} - {w} = {rho.difference(u, w)}")
    _out("\n".join(lines))
    return EXIT_OK


def cmd_pasting_check(args) -> int:
    G = io.load_graph(args.graph)
    dec = find_cut_decomposition(G, args.cut)
    if args.source or args.target_vertex:
        if not (args.source and args.target_vertex):
            raise UsageError("give both --from and --to, or neither")
        pairs = [(args.source, args.target_vertex)]
    else:
        pairs = [(a, b) for a in dec.side1 if a != dec.cut for b in dec.side2 if b != dec.cut]
    checks = [check_pasting_equation(G, dec, a, b, args.degree_bound) for a, b in pairs]
    _out("\n".join(c.render() for c in checks))
    verdicts = {c.verdict for c in checks}
    if "fails" in verdicts:
        return EXIT_FAIL
    if "unknown" in verdicts:
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_udp_brute(args) -> int:
    G = io.load_graph(args.graph)
    report = brute_force_udp(G, budget=args.budget, jobs=args.jobs)
    _out(report.render())
    return EXIT_OK if report.verdict == "holds" else EXIT_FAIL


def cmd_witness_check(args) -> int:
    G = io.load_graph(args.graph)
    x = io.parse_element(G.ring, args.element)
    if args.source and args.target_vertex:
        report = verify_non_udp_witness(G, args.source, args.target_vertex, x, args.cut, args.degree_bound)
    elif args.source or args.target_vertex:
        raise UsageError("give both --from and --to, or neither")
    else:
        report = _search_witness_pair(G, x, args.cut, args.degree_bound)
    _out(report.render())
    return {"confirmed": EXIT_OK, "rejected": EXIT_FAIL}.get(report.outcome, EXIT_UNKNOWN)


def _search_witness_pair(G, x, cut, bound):
    """Try every pair separated by a cut vertex; first confirmed report wins."""
    decs = [find_cut_decomposition(G, cut)] if cut else cut_decompositions(G)
    first = None
    for dec in decs:
        for a in dec.side1:
            for b in dec.side2:
                if dec.cut in (a, b):
                    continue
                r = verify_non_udp_witness(G, a, b, x, dec.cut, bound)
                if r.outcome == "confirmed":
                    return r
                first = first or r
    if first is None:
        raise UsageError("the graph has no cut vertex; pass --from and --to")
    return first


def cmd_iso_verify(args) -> int:
    G, H = io.load_graph(args.source_graph), io.load_graph(args.target_graph)
    result = verify_iso(G, H, io.load_iso(args.iso), args.degree_bound)
    _out(result.status + (f": {result.reason}" if result.reason else ""))
    return _VERDICT_EXIT[result.verdict]


def cmd_transport(args) -> int:
    rho = io.load_spline(args.spline)
    H = io.load_graph(args.target_graph)
    gamma = transport_spline(rho, io.load_iso(args.iso), H)
    obj = io.spline_to_json(gamma)
    if args.output:
        io.save(args.output, obj)
    sys.stdout.write(io.dumps(obj))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gsplines", description="Generalized splines on edge-labeled graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, helptext, fn):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("graph", help="graph JSON file")
        sp.set_defaults(func=fn)
        return sp

    def pair(sp, required=True):
        sp.add_argument("--from", dest="source", required=required)
        sp.add_argument("--to", dest="target_vertex", required=required)

    def bound(sp):
        sp.add_argument("--degree-bound", type=int, default=None,
                        help="cofactor degree bound for Z[x] membership searches")

    sp = graph_cmd("paths", "list the simple paths between two vertices", cmd_paths)
    pair(sp)
    sp = graph_cmd("path-ideal", "sum of the labels along a path", cmd_path_ideal)
    sp.add_argument("--path", help="comma-separated vertex list")
    pair(sp, required=False)
    sp = graph_cmd("intersect", "intersection of all path ideals between two vertices", cmd_intersect)
    pair(sp)

    sp = sub.add_parser("member", help="ideal membership with a certificate")
    sp.add_argument("--ring", required=True, help='"Z", "Z/6" or "Z[x]"')
    sp.add_argument("--generators", nargs="+", required=True)
    sp.add_argument("--target", dest="element", required=True)
    bound(sp)
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("verify", help="check a spline file")
    sp.add_argument("spline")
    bound(sp)
    sp.set_defaults(func=cmd_verify)

    sp = graph_cmd("build", "construct a spline with a prescribed difference", cmd_build)
    sp.add_argument("--method", required=True, choices=["path", "tree", "cycle", "crt", "pasted"])
    pair(sp)
    sp.add_argument("--target", dest="element", required=True)
    sp.add_argument("--cut", help="cut vertex for --method pasted")
    sp.add_argument("--output", help="also write the spline file here")

    sp = graph_cmd("pasting-check", "test the pasting equation at a cut vertex", cmd_pasting_check)
    sp.add_argument("--cut", required=True)
    pair(sp, required=False)
    bound(sp)

    sp = graph_cmd("udp-brute", "decide the UDP over Z/mZ by exhaustive enumeration", cmd_udp_brute)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--jobs", type=int, default=1)

    sp = graph_cmd("witness-check", "confirm a UDP counterexample witness", cmd_witness_check)
    sp.add_argument("--target", dest="element", required=True)
    pair(sp, required=False)
    sp.add_argument("--cut")
    bound(sp)

    sp = sub.add_parser("iso-verify", help="check an isomorphism of edge-labeled graphs")
    sp.add_argument("source_graph")
    sp.add_argument("target_graph")
    sp.add_argument("iso")
    bound(sp)
    sp.set_defaults(func=cmd_iso_verify)

    sp = sub.add_parser("transport", help="move a spline along an isomorphism")
    sp.add_argument("spline")
    sp.add_argument("target_graph")
    sp.add_argument("iso")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_transport)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, GraphError, UnsupportedRing) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MembershipUndecided, NonPrincipalIntersection) as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except SplineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
