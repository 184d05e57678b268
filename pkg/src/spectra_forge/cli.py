"""Command-line front end: build graphs from descriptors, compute and
compare spectra, run the verification suite, and build even/odd pairs.

Exit codes: 0 success, 1 internal check failure, 2 parse error,
3 hypothesis violation.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import algebra, finring, graphs, spectra, theorems
from .algebra import FiniteGroup, GroupSubset, GroupError
from .finring import RingError
from .graphs import GraphError
from .spectra import SpectrumError

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_HYPOTHESIS = 3

KIND_ALIASES = {"diff": "difference", "difference": "difference", "sum": "sum"}
TKIND_ALIASES = {"e": "identity", "S": "S", "Se": "S_and_identity"}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _resolve_group(args) -> tuple[FiniteGroup, object]:
    if getattr(args, "ring", None):
        ring = finring.parse_ring(args.ring)
        return finring.additive_group(ring), ring
    if getattr(args, "group", None):
        return algebra.make_group(args.group), None
    raise CliError("one of --group or --ring is required", EXIT_PARSE_ERROR)


def _resolve_subset(group: FiniteGroup, ring, descriptor: str) -> GroupSubset:
    d = descriptor.strip()
    if d == "units":
        if ring is None:
            raise CliError("subset 'units' requires --ring", EXIT_PARSE_ERROR)
        return finring.units(ring)
    if d.startswith("pk:"):
        if ring is None:
            raise CliError("subset 'pk:k' requires --ring", EXIT_PARSE_ERROR)
        try:
            k = int(d[3:])
        except ValueError:
            raise CliError(f"bad power residue descriptor {d!r}", EXIT_PARSE_ERROR)
        return finring.power_residues(ring, k)
    if d.startswith("gcd:"):
        try:
            divisors = [int(x) for x in d[4:].split(",") if x.strip()]
        except ValueError:
            raise CliError(f"bad gcd descriptor {d!r}", EXIT_PARSE_ERROR)
        S = GroupSubset(group, ())
        for div in divisors:
            S = S.union(algebra.gcd_class(group, div))
        return S
    try:
        members = [int(x) for x in d.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"bad subset descriptor {d!r}", EXIT_PARSE_ERROR)
    return GroupSubset(group, tuple(members))


def _build_graph(args) -> tuple[graphs.Graph, FiniteGroup, GroupSubset, GroupSubset | None]:
    group, ring = _resolve_group(args)
    S = _resolve_subset(group, ring, args.set)
    kind = KIND_ALIASES[args.kind]
    if getattr(args, "tkind", None):
        T = theorems.t_subset(group, S, TKIND_ALIASES[args.tkind])
        return graphs.mirror_dicayley(group, S, T, kind), group, S, T
    return graphs.cayley(group, S, kind), group, S, None


def _graph_spectrum(graph: graphs.Graph, group: FiniteGroup, S, T, kind: str) -> spectra.Spectrum:
    if group.is_abelian:
        if T is None:
            return spectra.spectrum_exact_abelian(group, S, kind, validate=False)
        return theorems.mdcg_direct_spectrum(group, S, T, kind)
    if graph.undirected:
        return spectra.spectrum_dense_symmetric(graph)
    raise CliError(
        "no exact spectrum route for a directed non-abelian instance", EXIT_HYPOTHESIS
    )


def _emit(text: str, args) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    graph, _, _, _ = _build_graph(args)
    if args.format == "json":
        _emit(graph.to_json() + "\n", args)
    elif args.format == "dot":
        _emit(graph.to_dot(), args)
    else:
        lines = [f"vertices: {graph.n}"]
        lines.append(f"undirected: {graph.undirected}")
        lines.append(f"regular degree: {graph.regular_degree}")
        for u in range(graph.n):
            row = "".join(str(int(x)) for x in graph.adjacency[u])
            lines.append(f"{graph.vertex_labels[u]:>8} {row}")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    graph, group, S, T = _build_graph(args)
    kind = KIND_ALIASES[args.kind]
    spec = _graph_spectrum(graph, group, S, T, kind)
    if args.tol is not None:
        spec = spectra.Spectrum.from_pairs(spec.entries, args.tol)
    if args.format == "json":
        _emit(spectra.spectrum_to_json(spec) + "\n", args)
    elif args.format == "csv":
        _emit(spec.to_csv(), args)
    else:
        cls = spectra.classify(spec)
        _emit(
            f"spectrum: {spec}\n"
            f"integral: {cls.integral}  parity: {cls.parity}  "
            f"symmetric: {cls.symmetric}  almost_symmetric: {cls.almost_symmetric}\n",
            args,
        )
    return EXIT_OK


def cmd_compare(args) -> int:
    first = argparse.Namespace(
        group=args.group, ring=args.ring, set=args.set, kind=args.kind, tkind=args.tkind
    )
    second = argparse.Namespace(
        group=args.group2 or args.group, ring=args.ring2 or (args.ring if args.group2 is None else None),
        set=args.set2 or args.set, kind=args.kind2 or args.kind, tkind=args.tkind2 or args.tkind,
    )
    g1, gr1, s1, t1 = _build_graph(first)
    g2, gr2, s2, t2 = _build_graph(second)
    sp1 = _graph_spectrum(g1, gr1, s1, t1, KIND_ALIASES[first.kind])
    sp2 = _graph_spectrum(g2, gr2, s2, t2, KIND_ALIASES[second.kind])
    tol = args.tol if args.tol is not None else spectra.MERGE_TOL
    iso = spectra.isospectral(sp1, sp2, tol)
    _emit(
        f"first:  {sp1}\nsecond: {sp2}\nisospectral: {iso}\n",
        args,
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = theorems.run_suite(seed=args.seed, trials=args.trials)
    if args.suite != "all":
        wanted = [w.strip() for w in args.suite.split(",")]
        reports = [r for r in reports if any(r.claim_id.startswith(w) for w in wanted)]
    lines = [r.to_json() for r in reports]
    _emit("\n".join(lines) + "\n", args)
    bad = [r for r in reports if not r.ok]
    return EXIT_CHECK_FAILURE if bad else EXIT_OK


def cmd_pair(args) -> int:
    ring = finring.parse_ring(args.ring)
    result = theorems.build_even_odd_pair(ring)
    lines = [f"ring: {result.ring_label}"]
    lines.append(f"even pair spectrum (shared): {result.even_spectrum}")
    even_cls = spectra.classify(result.even_spectrum)
    lines.append(
        f"  parity={even_cls.parity} symmetric={even_cls.symmetric} "
        f"bipartite={even_cls.bipartite_criterion}"
    )
    lines.append(f"odd graph spectrum (difference): {result.odd_spectrum_difference}")
    lines.append(f"odd graph spectrum (sum):        {result.odd_spectrum_sum}")
    odd_cls = spectra.classify(result.odd_spectrum_difference)
    lines.append(
        f"  parity={odd_cls.parity} symmetric={odd_cls.symmetric} "
        f"bipartite={odd_cls.bipartite_criterion}"
    )
    lines.append(f"zero-case pair spectrum (shared): {result.zero_case_spectrum}")
    for r in result.reports:
        note = f" [{r.witness}]" if r.witness else ""
        lines.append(f"check {r.claim_id}: {r.outcome}{note}")
    _emit("\n".join(lines) + "\n", args)
    return EXIT_OK if result.certified else EXIT_CHECK_FAILURE


def cmd_report(args) -> int:
    graph, _, _, _ = _build_graph(args)
    rep = graphs.structure_report(graph)
    lines = [
        f"vertices: {graph.n}",
        f"directed: {rep.directed}",
        f"loop vertices: {list(rep.loop_vertices)}",
        f"regular degree: {rep.regular_degree}",
        f"bipartite: {rep.bipartite}",
        f"components: {len(rep.components)}",
        f"twin classes (nontrivial): {[list(c) for c in rep.twin_classes if len(c) > 1]}",
    ]
    _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def _add_selectors(p: argparse.ArgumentParser, suffix: str = "", required: bool = True):
    p.add_argument(f"--group{suffix}", help="group descriptor, e.g. cyclic:4")
    p.add_argument(f"--ring{suffix}", help="ring descriptor, e.g. zpk:2^2*gf:3")
    p.add_argument(f"--set{suffix}", required=required and not suffix,
                   help="subset: indices, units, pk:k or gcd:d1,d2")
    p.add_argument(f"--kind{suffix}", choices=sorted(KIND_ALIASES),
                   default="diff" if not suffix else None,
                   help="difference or sum rule")
    p.add_argument(f"--tkind{suffix}", choices=sorted(TKIND_ALIASES), default=None,
                   help="build the mirror graph with this di-connection set")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectra-forge",
        description="Cayley, Cayley sum and mirror di-Cayley graph spectra",
    )
    default_seed = int(os.environ.get("SPECTRA_FORGE_SEED", "7"))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a graph")
    _add_selectors(p)
    p.add_argument("--format", choices=("json", "dot", "table"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("spectrum", help="compute a spectrum")
    _add_selectors(p)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("compare", help="compare two spectra")
    _add_selectors(p)
    _add_selectors(p, suffix="2", required=False)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", default="all",
                   help="'all' or comma-separated claim id prefixes")
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pair", help="build the even/odd mirror pair of a ring")
    p.add_argument("--ring", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("report", help="structure report of a graph")
    _add_selectors(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE_ERROR if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (GroupError, RingError, GraphError) as exc:
        message = str(exc)
        code = EXIT_HYPOTHESIS if "hypothesis" in message else EXIT_PARSE_ERROR
        print(f"error: {message}", file=sys.stderr)
        return code
    except SpectrumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILURE


if __name__ == "__main__":
    sys.exit(main())
