"""Command-line front end.

    matcharr arrangement -i graph.txt [--numbering 2,1,3] [--format json]
    matcharr charpoly    -i graph.txt
    matcharr regions     -i graph.txt
    matcharr matching    -i graph.txt --weights 3,1,1
    matcharr probe       -i graph.txt --samples 200 --seed 7
    matcharr verify      [-i graph.txt] [--theorem T5_tree ...]

Exit status: 0 on success, 1 when a verification fails, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .arrangement import build_matching_arrangement, format_equation
from .errors import LimitExceeded
from .graph import Graph, GraphParseError, connected_components, parse_graph, resolve_numbering
from .lattice import MAX_HYPERPLANES, characteristic_polynomial, build_flat_lattice
from .matching import max_weight_matchings, probe_theorem2
from .paths import MAX_PATH_EDGES
from .polynomial import evaluate, format_factored
from . import verify as V

log = logging.getLogger("matcharr")

COMMANDS = ("arrangement", "charpoly", "regions", "matching", "probe", "verify")
LIMIT_NAMES = {"edges": MAX_PATH_EDGES, "hyperplanes": MAX_HYPERPLANES}


class UsageError(Exception):
    pass


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--{what}: expected comma-separated integers, got {text!r}") from None


def _parse_limits(text: str | None) -> dict[str, int]:
    limits = dict(LIMIT_NAMES)
    if not text:
        return limits
    for item in text.split(","):
        name, _, value = item.partition("=")
        name = name.strip()
        if name not in LIMIT_NAMES or not value.strip().isdigit():
            raise UsageError(f"--limits: expected name=int with name in {sorted(LIMIT_NAMES)}, got {item!r}")
        limits[name] = int(value)
        if limits[name] > LIMIT_NAMES[name]:
            log.warning("raised %s limit to %d; this may be slow", name, limits[name])
    return limits


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matcharr", description="Matching arrangements of graphs.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("-i", "--input", dest="input_path", help="graph file (header 'V E', then 'u v' lines)")
    p.add_argument("--numbering", help="comma list: number given to each edge, in file order")
    p.add_argument("--weights", help="comma list of integer weights, indexed by edge number")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--limits", help="guard overrides, e.g. edges=14,hyperplanes=60")
    p.add_argument("--theorem", action="append", choices=V.THEOREM_IDS,
                   help="restrict verify to these statements (repeatable)")
    return p


def _load_graph(path: str | None) -> Graph:
    if not path:
        raise UsageError("this command needs -i/--input")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def _emit(out, fmt, payload, text):
    if fmt == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _graph_reports(g: Graph, ids, samples, seed) -> list[V.TheoremReport]:
    """Checks that apply to a user-supplied graph."""
    reports = []
    ids = set(ids)
    if "T1_reconstruction" in ids:
        reports.append(V.verify_reconstruction(g))
    if "T2_regions" in ids:
        reports.append(V.verify_regions(g, samples, seed))
    if "T3_invariance" in ids:
        reports.append(V.verify_invariance(g, 20, seed))
    if "T4_product" in ids and len(connected_components(g)) > 1:
        reports.append(V.verify_components(g))
    if "T5_tree" in ids and g.edge_count == g.vertex_count - 1 and len(connected_components(g)) == 1:
        reports.append(V.verify_tree(g))
    if "chromatic_graphical" in ids and g.vertex_count <= 6 and g.edge_count <= 10:
        reports.append(V.verify_chromatic_graphical(g))
    return reports


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return _dispatch(args, out)
    except (UsageError, GraphParseError, LimitExceeded, ValueError) as exc:
        err.write(f"matcharr: error: {exc}\n")
        return 2


def _dispatch(args, out) -> int:
    limits = _parse_limits(args.limits)
    fmt = args.format

    if args.command == "verify":
        ids = args.theorem or V.THEOREM_IDS
        if args.input_path:
            g = _load_graph(args.input_path)
            reports = _graph_reports(g, ids, args.samples, args.seed)
        else:
            reports = V.default_suite(ids)
        ok = all(r.passed for r in reports)
        if fmt == "json":
            out.write(json.dumps([r.to_json() for r in reports]) + "\n")
        else:
            for r in reports:
                out.write(f"{'PASS' if r.passed else 'FAIL'} {r.theorem_id}: {r.instance_description}\n")
            out.write(f"{sum(r.passed for r in reports)}/{len(reports)} passed\n")
        return 0 if ok else 1

    g = _load_graph(args.input_path)
    numbering = None
    if args.numbering:
        numbering = resolve_numbering(g, _int_list(args.numbering, "numbering"))

    if args.command == "matching":
        if not args.weights:
            raise UsageError("matching needs --weights")
        weights = _int_list(args.weights, "weights")
        if len(weights) != g.edge_count:
            raise UsageError(f"--weights has {len(weights)} entries, graph has {g.edge_count} edges")
        arg = max_weight_matchings(g, weights, numbering, max_edges=limits["edges"])
        sets = sorted(sorted(e + 1 for e in m) for m in arg)
        _emit(out, fmt, {"argmax": sets},
              "\n".join("{" + ", ".join(f"e{e}" for e in m) + "}" for m in sets))
        return 0

    a = build_matching_arrangement(g, numbering, max_edges=limits["edges"])
    if args.command == "arrangement":
        _emit(out, fmt, a.to_json(),
              f"dimension {a.dimension}, {len(a)} hyperplanes\n"
              + "\n".join(format_equation(nv) for nv in a.normals))
        return 0
    if args.command == "probe":
        rep = probe_theorem2(g, numbering, args.samples, args.seed,
                             max_edges=limits["edges"], arrangement=a)
        _emit(out, fmt, rep.to_json(),
              "\n".join(f"{k}: {v}" for k, v in rep.to_json().items()))
        return 0 if rep.ok else 1

    lattice = build_flat_lattice(a, max_hyperplanes=limits["hyperplanes"])
    chi = characteristic_polynomial(a, lattice)
    if args.command == "charpoly":
        _emit(out, fmt, {"chi": list(chi.coefficients)}, format_factored(chi))
        return 0
    if args.command == "regions":
        regions = (-1) ** a.dimension * evaluate(chi, -1)
        _emit(out, fmt, {"regions": regions}, str(regions))
        return 0
    raise UsageError(f"unknown command {args.command}")


def main(argv=None) -> None:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(levelname)s: %(message)s")
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
