"""Command line interface.

Subcommands mirror the library surface: spectrum, check, product,
family, search, switch, equiv.  Reports go to stdout as deterministic
JSON; generated graphs go to an output file in the native text format.

Exit codes: 0 success (or a true verdict), 1 a clean false verdict,
2 input error, 3 internal inconsistency (cross-checked results that must
agree came out differently).

The comparison tolerance resolves as: --tol flag, then the SKEWSPEC_TOL
environment variable, then 1e-8.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .errors import SkewspecError
from .families import BASE_NAMES, FamilySpec, generate_family
from .graph import Graph, OrientedGraph
from .io import parse_graph, render_report, serialize_graph
from .products import (
    oriented_product,
    product_matrix_identity,
    verify_product_spectrum,
)
from .search import find_max_energy_orientation
from .spectra import (
    adjacency_spectrum,
    skew_energy,
    skew_spectrum,
    spectrum_energy,
)
from .switching import (
    all_chordless_uniform,
    equivalent_to_elementary,
    matches_adjacency_spectrum,
    switch,
    switching_equivalent,
)

DEFAULT_TOL = 1e-8


def _resolve_tol(args) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("SKEWSPEC_TOL")
    if env is None or env == "":
        return DEFAULT_TOL
    try:
        return float(env)
    except ValueError:
        raise SkewspecError(f"SKEWSPEC_TOL={env!r} is not a number") from None


def _load(path: str) -> Graph | OrientedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _load_oriented(path: str, why: str) -> OrientedGraph:
    obj = _load(path)
    if not isinstance(obj, OrientedGraph):
        raise SkewspecError(f"{why} requires an oriented graph file ('og' header)")
    return obj


def _load_undirected(path: str, why: str) -> Graph:
    obj = _load(path)
    if isinstance(obj, OrientedGraph):
        raise SkewspecError(f"{why} requires an undirected graph file ('ug' header)")
    return obj


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _cmd_spectrum(args):
    obj = _load(args.file)
    oriented = isinstance(obj, OrientedGraph)
    kind = "adjacency" if args.adjacency else "skew" if args.skew else None
    if kind is None:
        kind = "skew" if oriented else "adjacency"
    if kind == "skew" and not oriented:
        raise SkewspecError("--skew needs an oriented graph file ('og' header)")
    g = obj.graph if oriented else obj
    doc: dict = {"command": "spectrum", "kind": kind, "n": g.n, "m": g.m}
    if kind == "adjacency":
        sp = adjacency_spectrum(g)
        doc["values"] = list(sp.values)
        doc["energy"] = spectrum_energy(sp)
    else:
        sp = skew_spectrum(obj)
        report = skew_energy(obj)
        doc["values"] = list(sp.values)
        doc["energy"] = report.energy
        doc["degree"] = report.degree
        doc["bound"] = report.bound
        doc["maximum"] = report.is_maximum
        doc["certificate"] = report.exact_certificate
    return doc, 0


def _cmd_check(args):
    og = _load_oriented(args.file, "check")
    tol = _resolve_tol(args)
    spectral = matches_adjacency_spectrum(og, tol)
    uniform = all_chordless_uniform(og)
    elementary = equivalent_to_elementary(og)
    consistent = spectral == uniform == bool(elementary)
    doc = {
        "command": "check",
        "n": og.n,
        "m": og.graph.m,
        "tol": tol,
        "spectral_match": spectral,
        "all_chordless_uniform": uniform,
        "equivalent_to_elementary": bool(elementary),
        "witness": list(elementary.w) if elementary else None,
        "violating_cycle": (
            None if elementary else list(elementary.violating_cycle.vertices)
        ),
        "consistent": consistent,
    }
    if not consistent:
        return doc, 3
    return doc, 0 if spectral else 1


def _cmd_product(args):
    ht = _load_oriented(args.file_h, "product")
    gs = _load_oriented(args.file_g, "product")
    product = oriented_product(ht, gs)
    _write(args.out, serialize_graph(product))
    doc = {"command": "product", "n": product.n, "m": product.graph.m}
    code = 0
    if args.verify:
        tol = _resolve_tol(args)
        identity = product_matrix_identity(ht, gs)
        match = verify_product_spectrum(ht, gs, tol)
        doc["tol"] = tol
        doc["matrix_identity"] = identity
        doc["spectrum_match"] = match
        if not (identity and match):
            code = 3
    return doc, code


def _cmd_family(args):
    try:
        spec = FamilySpec(args.base, args.r)
    except ValueError as exc:
        raise SkewspecError(str(exc)) from None
    result = generate_family(spec)
    og = result.orientation
    _write(args.out, serialize_graph(og))
    report = skew_energy(og)
    doc = {
        "command": "family",
        "base": spec.base,
        "r": spec.r,
        "order": og.n,
        "degree": og.graph.regular_degree(),
        "energy": report.energy,
        "bound": report.bound,
        "maximum": report.is_maximum,
        "certificate": report.exact_certificate,
    }
    consistent = (
        og.n == result.order
        and og.graph.regular_degree() == result.degree
        and report.is_maximum
    )
    return doc, 0 if consistent else 3


def _cmd_search(args):
    g = _load_undirected(args.file, "search")
    result = find_max_energy_orientation(g, budget=args.budget)
    doc = {
        "command": "search",
        "n": g.n,
        "m": g.m,
        "found": result.found,
        "states": result.states,
        "exhausted": result.exhausted,
        "arcs": (
            [list(a) for a in result.orientation.arcs()] if result.found else None
        ),
    }
    return doc, 0 if result.found else 1


def _parse_vertex_set(text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            out.append(int(tok))
        except ValueError:
            raise SkewspecError(f"--set entry {tok!r} is not an integer") from None
    return out


def _cmd_switch(args):
    og = _load_oriented(args.file, "switch")
    w = _parse_vertex_set(args.set)
    switched = switch(og, w)
    _write(args.out, serialize_graph(switched))
    doc = {
        "command": "switch",
        "n": og.n,
        "m": og.graph.m,
        "w": sorted(set(w)),
    }
    return doc, 0


def _cmd_equiv(args):
    a = _load_oriented(args.file_a, "equiv")
    b = _load_oriented(args.file_b, "equiv")
    result = switching_equivalent(a, b)
    doc = {
        "command": "equiv",
        "n": a.n,
        "m": a.graph.m,
        "equivalent": bool(result),
        "witness": list(result.w) if result else None,
        "violating_cycle": (
            None if result else list(result.violating_cycle.vertices)
        ),
    }
    return doc, 0 if result else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewspec",
        description="Skew spectra, switching equivalence, oriented products, "
        "and maximum skew energy families.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol",
        type=float,
        default=None,
        help="comparison tolerance (default: SKEWSPEC_TOL or 1e-8)",
    )
    common.add_argument(
        "--timing",
        action="store_true",
        help="append wall-clock seconds to the report",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "spectrum", parents=[common], help="eigenvalues and energy of a graph file"
    )
    p.add_argument("file")
    which = p.add_mutually_exclusive_group()
    which.add_argument(
        "--adjacency", action="store_true", help="adjacency spectrum (default for ug)"
    )
    which.add_argument(
        "--skew", action="store_true", help="skew spectrum (default for og)"
    )
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser(
        "check",
        parents=[common],
        help="cross-check the three equivalent orientation predicates",
    )
    p.add_argument("file")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser(
        "product", parents=[common], help="oriented Cartesian product of two files"
    )
    p.add_argument("file_h", help="left factor (oriented, bipartite)")
    p.add_argument("file_g", help="right factor (oriented)")
    p.add_argument("out", help="output graph file")
    p.add_argument(
        "--verify",
        action="store_true",
        help="check the Kronecker identity and the predicted spectrum",
    )
    p.set_defaults(handler=_cmd_product)

    p = sub.add_parser(
        "family", parents=[common], help="generate a maximum-energy family member"
    )
    p.add_argument("out", help="output graph file")
    p.add_argument("--base", required=True, choices=BASE_NAMES)
    p.add_argument("--r", required=True, type=int, help="iteration depth (>= 1)")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser(
        "search",
        parents=[common],
        help="search a regular graph for an orientation on the energy bound",
    )
    p.add_argument("file")
    p.add_argument(
        "--budget",
        type=int,
        default=10_000_000,
        help="cap on attempted bit assignments (default 10^7)",
    )
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser(
        "switch", parents=[common], help="switch an orientation by a vertex set"
    )
    p.add_argument("file")
    p.add_argument("out", help="output graph file")
    p.add_argument(
        "--set", default="", help="comma-separated vertices, e.g. '0,2,5' (default: none)"
    )
    p.set_defaults(handler=_cmd_switch)

    p = sub.add_parser(
        "equiv", parents=[common], help="decide switching equivalence of two files"
    )
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(handler=_cmd_equiv)

    return parser


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        doc, code = args.handler(args)
    except (SkewspecError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        doc["timing_seconds"] = time.perf_counter() - start
    sys.stdout.write(render_report(doc))
    return code


def main() -> None:
    sys.exit(run())
