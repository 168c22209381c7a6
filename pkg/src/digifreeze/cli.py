"""Command line front end: info, construct, verify, minimize, render."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import __version__
from .construct import (
    DiskDecomposition,
    FreezingSetCandidate,
    HypothesisError,
    freezing_set_c1_union,
    freezing_set_c2_union,
    suggest_decomposition,
)
from .curves import CurveError, boundary, disk_from_curve, is_convex
from .digital_map import DigitalMap
from .formats import (
    ParseError,
    Scenario,
    dump_report,
    is_scenario_text,
    load_image,
    parse_adjacency,
    parse_scenario,
    point_json,
    write_atomic,
)
from .lattice import DigitalImage, LatticeError, is_connected
from .render import render_ascii, render_svg
from .verify import (
    Budget,
    Verdict,
    close_neighbors,
    is_freezing_set,
    minimize,
    required_points,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_FREEZING = 3
EXIT_BUDGET = 4
EXIT_HYPOTHESES = 5

VERDICT_EXIT = {
    Verdict.FREEZING: EXIT_OK,
    Verdict.NOT_FREEZING: EXIT_NOT_FREEZING,
    Verdict.BUDGET_EXHAUSTED: EXIT_BUDGET,
}


class CommandError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


class Source:
    """An image file or a scenario file, whichever was given."""

    def __init__(self, path: Path, adjacency: Optional[int]):
        text = path.read_text(encoding="utf-8")
        if is_scenario_text(text):
            self.scenario: Optional[Scenario] = parse_scenario(text, path)
            self.u = adjacency or self.scenario.adjacency
            self.image = self.scenario.image(self.u)
        else:
            self.scenario = None
            self.u = adjacency or 1
            self.image = load_image(path, self.u)

    @property
    def candidate(self):
        return self.scenario.candidate if self.scenario else None


def _budget(args, source: Source) -> Budget:
    sc = source.scenario
    nodes = args.budget_nodes or (sc.budget_nodes if sc else None)
    seconds = args.budget_seconds or (sc.budget_seconds if sc else None)
    default = Budget()
    return Budget(nodes or default.max_nodes, seconds or default.max_seconds)


def _report(command: str, args, source: Source, budget: Optional[Budget] = None) -> dict:
    return {
        "version": __version__,
        "command": command,
        "adjacency": f"c{source.u}",
        "verdict": None,
        "candidate": None,
        "forced_fixed": None,
        "witness": None,
        "close_neighbors": None,
        "stats": None,
        "budget": None if budget is None else {"nodes": budget.max_nodes, "seconds": budget.max_seconds},
        "details": {},
    }


def _points_json(points) -> list:
    return [point_json(p) for p in sorted(points)]


def _candidate_json(cand: FreezingSetCandidate) -> list:
    return [{"point": point_json(p), "tags": list(cand.provenance[p])} for p in cand.points]


def _given_candidate(points) -> FreezingSetCandidate:
    pts = tuple(sorted({tuple(p) for p in points}))
    return FreezingSetCandidate(pts, {p: ("given",) for p in pts})


def _map_json(f: Optional[DigitalMap]) -> Optional[list]:
    if f is None:
        return None
    return [[point_json(p), point_json(q)] for p, q in f.items()]


def _stats_json(stats, args) -> Optional[dict]:
    if args.no_stats:
        return None
    return {"nodes": stats.nodes, "propagation_passes": stats.propagation_passes,
            "seconds": round(stats.seconds, 6)}


def _close_json(X: DigitalImage) -> list:
    table = close_neighbors(X).table()
    return [{"point": point_json(p), "neighbors": _points_json(qs)} for p, qs in sorted(table.items())]


def _decomposition(source: Source) -> DiskDecomposition:
    X = source.image
    if X.dim != 2:
        raise CommandError("disk constructions need a planar image")
    if source.scenario and source.scenario.disks:
        disks = []
        for k, cycle in enumerate(source.scenario.disks, 1):
            try:
                disks.append(disk_from_curve(cycle))
            except CurveError as exc:
                raise CommandError(f"disk {k}: {exc}", EXIT_HYPOTHESES) from None
        return DiskDecomposition(X, tuple(disks))
    return suggest_decomposition(X)


def _construct(source: Source) -> tuple[FreezingSetCandidate, DiskDecomposition]:
    dec = _decomposition(source)
    problems = dec.problems()
    if problems:
        raise HypothesisError("disk decomposition rejected", problems)
    if source.u == 1:
        return freezing_set_c1_union(dec), dec
    if source.u == 2:
        return freezing_set_c2_union(dec), dec
    raise CommandError("constructions exist for c1 and c2 only")


def _candidate(source: Source) -> FreezingSetCandidate:
    if source.candidate is not None:
        return _given_candidate(source.candidate)
    return _construct(source)[0]


def cmd_info(args, source: Source) -> tuple[dict, int]:
    X = source.image
    rep = _report("info", args, source)
    details = rep["details"]
    details["points"] = len(X)
    details["dimension"] = X.dim
    details["connected"] = is_connected(X)
    if X.dim == 2:
        details["boundary_c1"] = _points_json(boundary(X, 1))
        details["boundary_c2"] = _points_json(boundary(X, 2))
        details["convex"] = is_convex(X)
    details["required_points"] = _points_json(required_points(X))
    rep["close_neighbors"] = _close_json(X)
    return rep, EXIT_OK


def cmd_construct(args, source: Source) -> tuple[dict, int]:
    rep = _report("construct", args, source)
    try:
        cand, dec = _construct(source)
    except HypothesisError as exc:
        rep["details"]["violations"] = exc.problems
        return rep, EXIT_HYPOTHESES
    rep["candidate"] = _candidate_json(cand)
    rep["details"]["disks"] = [[point_json(p) for p in d.curve.points] for d in dec.disks]
    rep["details"]["remainder"] = _points_json(dec.remainder)
    code = EXIT_OK
    if args.verify:
        budget = _budget(args, source)
        rep["budget"] = {"nodes": budget.max_nodes, "seconds": budget.max_seconds}
        code = _fill_verdict(rep, args, source.image, cand.points, budget)
    return rep, code


def _fill_verdict(rep: dict, args, X: DigitalImage, points, budget: Budget) -> int:
    report = is_freezing_set(X, points, budget)
    rep["verdict"] = report.verdict.value
    rep["forced_fixed"] = _points_json(report.forced_fixed)
    rep["witness"] = _map_json(report.witness)
    rep["stats"] = _stats_json(report.stats, args)
    return VERDICT_EXIT[report.verdict]


def cmd_verify(args, source: Source) -> tuple[dict, int]:
    budget = _budget(args, source)
    rep = _report("verify", args, source, budget)
    try:
        cand = _candidate(source)
    except HypothesisError as exc:
        rep["details"]["violations"] = exc.problems
        return rep, EXIT_HYPOTHESES
    rep["candidate"] = _candidate_json(cand)
    return rep, _fill_verdict(rep, args, source.image, cand.points, budget)


def cmd_minimize(args, source: Source) -> tuple[dict, int]:
    budget = _budget(args, source)
    rep = _report("minimize", args, source, budget)
    X = source.image
    try:
        cand = _candidate(source)
    except HypothesisError as exc:
        rep["details"]["violations"] = exc.problems
        return rep, EXIT_HYPOTHESES
    rep["candidate"] = _candidate_json(cand)
    code = _fill_verdict(rep, args, X, cand.points, budget)
    if code != EXIT_OK:
        return rep, code
    result = minimize(X, cand.points, budget)
    certificates = []
    for p in result.points:
        kind, *rest = result.evidence.get(p, ("none",))
        entry = {"point": point_json(p), "kind": kind}
        if kind == "close_neighbor":
            entry["neighbor"] = point_json(rest[0])
        elif kind == "witness":
            entry["moved"] = [[point_json(a), point_json(b)] for a, b in rest[0].moved()]
        certificates.append(entry)
    rep["details"] = {
        "minimal": _points_json(result.points),
        "removed": _points_json(result.removed),
        "certified": result.certified,
        "certificates": certificates,
    }
    return rep, EXIT_OK if result.certified else EXIT_BUDGET


def cmd_render(args, source: Source) -> tuple[dict, int]:
    X = source.image
    rep = _report("render", args, source)
    disks = ()
    marked = ()
    if source.scenario is not None:
        if source.scenario.disks:
            try:
                cand, dec = _construct(source)
            except HypothesisError as exc:
                rep["details"]["violations"] = exc.problems
                return rep, EXIT_HYPOTHESES
            disks = dec.disks
            marked = cand.points
        if source.candidate is not None:
            marked = [tuple(p) for p in source.candidate]
    letter = "a" if source.u == 1 else "b"
    if args.format == "ascii":
        text = render_ascii(X, marked, letter)
    else:
        text = render_svg(X, marked, letter, disks, scale=args.scale)
    try:
        write_atomic(args.out, text)
    except OSError as exc:
        raise CommandError(f"cannot write {args.out}: {exc}") from None
    rep["details"] = {"format": args.format, "out": str(args.out), "marked": _points_json(marked)}
    return rep, EXIT_OK


COMMANDS = {
    "info": cmd_info,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "minimize": cmd_minimize,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("source", type=Path, help="image file (point list or ASCII grid) or scenario file")
    common.add_argument("--adjacency", type=parse_adjacency, default=None, help="c1 or c2 (overrides the scenario)")
    common.add_argument("--budget-nodes", type=int, default=None)
    common.add_argument("--budget-seconds", type=float, default=None)
    common.add_argument("--no-stats", action="store_true", help="omit timing and counters (for golden files)")
    common.add_argument("--report", type=Path, default=None, help="write the JSON report here instead of stdout")

    parser = argparse.ArgumentParser(prog="digifreeze", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="image summary and close-neighbor table")
    p = sub.add_parser("construct", parents=[common], help="freezing set from a disk decomposition")
    p.add_argument("--verify", action="store_true", help="also run the verifier on the result")
    sub.add_parser("verify", parents=[common], help="decide whether the candidate set freezes the image")
    sub.add_parser("minimize", parents=[common], help="shrink a freezing set to a minimal one")
    p = sub.add_parser("render", parents=[common], help="draw the image as ASCII or SVG")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--scale", type=int, default=32, help="SVG pixels per lattice unit")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        source = Source(args.source, args.adjacency)
        rep, code = COMMANDS[args.command](args, source)
    except (ParseError, LatticeError, CommandError, HypothesisError, CurveError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, CommandError):
            return exc.code
        return EXIT_HYPOTHESES if isinstance(exc, HypothesisError) else EXIT_INPUT
    text = dump_report(rep)
    if args.report:
        write_atomic(args.report, text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
