"""Text formats: point lists, ASCII grids, scenario files and JSON reports."""

from __future__ import annotations

import json
import os
import re
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .lattice import DigitalImage, Point


class ParseError(ValueError):
    def __init__(self, message: str, path: Optional[Path] = None, line: Optional[int] = None):
        where = f"{path}:" if path else ""
        where += f"{line}: " if line else (" " if where else "")
        super().__init__(f"{where}{message}")
        self.line = line


def parse_point_list(text: str, path: Optional[Path] = None) -> list[Point]:
    points: list[Point] = []
    seen: dict[Point, int] = {}
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) not in (2, 3):
            raise ParseError(f"expected 2 or 3 integers, got {line!r}", path, number)
        try:
            p = tuple(int(f) for f in fields)
        except ValueError:
            raise ParseError(f"not an integer point: {line!r}", path, number) from None
        if p in seen:
            raise ParseError(f"duplicate point {p} (first on line {seen[p]})", path, number)
        if points and len(p) != len(points[0]):
            raise ParseError(f"point {p} has a different dimension from {points[0]}", path, number)
        seen[p] = number
        points.append(p)
    if not points:
        raise ParseError("no points found", path)
    return points


def parse_grid(text: str, path: Optional[Path] = None) -> list[Point]:
    """'#' marks a point, '.' an empty cell. The header ``origin: x y`` gives
    the coordinates of the bottom-left cell; rows run top to bottom."""
    lines = [(n, l.rstrip()) for n, l in enumerate(text.splitlines(), 1) if l.strip()]
    if not lines or not lines[0][1].startswith("origin:"):
        raise ParseError("grid must start with 'origin: x y'", path, lines[0][0] if lines else None)
    number, header = lines[0]
    try:
        ox, oy = (int(v) for v in header.split(":", 1)[1].split())
    except ValueError:
        raise ParseError(f"bad origin header {header!r}", path, number) from None
    rows = lines[1:]
    points = []
    for k, (number, row) in enumerate(rows):
        y = oy + len(rows) - 1 - k
        for x_off, ch in enumerate(row.strip()):
            if ch == "#":
                points.append((ox + x_off, y))
            elif ch != ".":
                raise ParseError(f"unexpected character {ch!r} in grid", path, number)
    if not points:
        raise ParseError("grid has no points", path)
    return points


def parse_image_text(text: str, path: Optional[Path] = None) -> list[Point]:
    first = next((l.strip() for l in text.splitlines() if l.strip()), "")
    if first.startswith("origin:"):
        return parse_grid(text, path)
    return parse_point_list(text, path)


def load_image(path: Path | str, u: int) -> DigitalImage:
    path = Path(path)
    return DigitalImage(parse_image_text(path.read_text(encoding="utf-8"), path), u)


def format_point_list(points) -> str:
    return "".join(" ".join(str(c) for c in p) + "\n" for p in sorted(points))


def parse_cycle(value: str, path: Optional[Path] = None, line: Optional[int] = None) -> list[Point]:
    out = []
    for chunk in value.split(","):
        fields = chunk.split()
        if not fields:
            continue
        try:
            out.append(tuple(int(f) for f in fields))
        except ValueError:
            raise ParseError(f"bad point {chunk.strip()!r}", path, line) from None
    return out


ADJACENCY_NAMES = {"c1": 1, "c2": 2, "c3": 3}


def parse_adjacency(value: str) -> int:
    try:
        return ADJACENCY_NAMES[value.strip().lower()]
    except KeyError:
        raise ParseError(f"unknown adjacency {value!r}; use c1, c2 or c3") from None


@dataclass
class Scenario:
    path: Optional[Path]
    adjacency: int
    image_path: Path
    disks: list[list[Point]] = field(default_factory=list)
    candidate: Optional[list[Point]] = None
    budget_nodes: Optional[int] = None
    budget_seconds: Optional[float] = None
    name: str = ""

    def image(self, u: Optional[int] = None) -> DigitalImage:
        return load_image(self.image_path, u or self.adjacency)


SCENARIO_KEYS = {"name", "adjacency", "image", "disk", "candidate", "budget_nodes", "budget_seconds"}


def parse_scenario(text: str, path: Optional[Path] = None) -> Scenario:
    base = path.parent if path else Path(".")
    values: dict = {"disk": []}
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"expected 'key: value', got {line!r}", path, number)
        key, value = (s.strip() for s in line.split(":", 1))
        if key not in SCENARIO_KEYS:
            raise ParseError(f"unknown key {key!r}", path, number)
        if key == "disk":
            values["disk"].append(parse_cycle(value, path, number))
        elif key in values:
            raise ParseError(f"key {key!r} given twice", path, number)
        elif key == "candidate":
            values[key] = parse_cycle(value, path, number)
        elif key == "adjacency":
            try:
                values[key] = parse_adjacency(value)
            except ParseError as exc:
                raise ParseError(str(exc), path, number) from None
        elif key in ("budget_nodes", "budget_seconds"):
            try:
                values[key] = int(value) if key == "budget_nodes" else float(value)
            except ValueError:
                raise ParseError(f"bad number for {key}: {value!r}", path, number) from None
        else:
            values[key] = value
    if "image" not in values:
        raise ParseError("scenario needs an 'image:' entry", path)
    image_path = (base / values["image"]).resolve()
    if not image_path.exists():
        raise ParseError(f"image file {values['image']!r} does not exist", path)
    return Scenario(
        path=path,
        adjacency=values.get("adjacency", 1),
        image_path=image_path,
        disks=values["disk"],
        candidate=values.get("candidate"),
        budget_nodes=values.get("budget_nodes"),
        budget_seconds=values.get("budget_seconds"),
        name=values.get("name", path.stem if path else ""),
    )


def is_scenario_text(text: str) -> bool:
    return any(l.split("#", 1)[0].strip().startswith("image:") for l in text.splitlines())


def point_json(p) -> list[int]:
    return [int(c) for c in p]


_SCALAR = r'(?:-?\d+|"[^"\\,\[\]]*")'
_SCALAR_LIST = re.compile(r"\[\s*(" + _SCALAR + r"(?:,\s*" + _SCALAR + r")*)\s*\]")


def dump_report(report: dict) -> str:
    """Indented JSON with lists of plain scalars (points, tags) kept on one line."""
    text = json.dumps(report, indent=2, ensure_ascii=False)
    text = _SCALAR_LIST.sub(lambda m: "[" + ", ".join(v.strip() for v in m.group(1).split(",")) + "]", text)
    return text + "\n"


def write_atomic(path: Path | str, data: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
