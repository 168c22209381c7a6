"""Freezing sets built from thick convex disks, for c1 and c2 in Z^2."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .curves import Disk, disk_from_points, is_convex, is_thick
from .lattice import DigitalImage, Point, box

# provenance tags
HV_ENDPOINT = "hv-endpoint"
SLANT_MEMBER = "slant-member"
HV_MEMBER = "hv-member"
SLANT_ENDPOINT = "slant-endpoint"
REMAINDER = "remainder"


class HypothesisError(ValueError):
    """A construction was asked for on input that does not meet its hypotheses."""

    def __init__(self, message: str, problems: Sequence[str] = ()):
        super().__init__(message if not problems else f"{message}: " + "; ".join(problems))
        self.problems = list(problems)


@dataclass(frozen=True)
class FreezingSetCandidate:
    points: tuple[Point, ...]
    provenance: dict

    def __contains__(self, p) -> bool:
        return tuple(p) in self.provenance


def _candidate(tagged: Iterable[tuple[Point, str]]) -> FreezingSetCandidate:
    prov: dict[Point, list[str]] = {}
    for p, tag in tagged:
        tags = prov.setdefault(p, [])
        if tag not in tags:
            tags.append(tag)
    pts = tuple(sorted(prov))
    return FreezingSetCandidate(pts, {p: tuple(sorted(prov[p])) for p in pts})


def disk_problems(D: Disk) -> list[str]:
    problems = []
    if not is_convex(D.points):
        problems.append("disk is not convex")
    for p, rule in is_thick(D).violations:
        problems.append(f"not thick at {p}: {rule}")
    return problems


def _require_thick_convex(D: Disk, label: str = "disk") -> None:
    problems = disk_problems(D)
    if problems:
        raise HypothesisError(f"{label} is not a thick convex disk", problems)


def _c1_tags(D: Disk, label: str = "") -> list[tuple[Point, str]]:
    tagged = []
    for seg in D.segments():
        if seg.slanted:
            tagged += [(p, SLANT_MEMBER + label) for p in seg.points]
        else:
            tagged += [(p, HV_ENDPOINT + label) for p in seg.endpoints]
    return tagged


def _c2_tags(D: Disk, label: str = "") -> list[tuple[Point, str]]:
    tagged = []
    for seg in D.segments():
        if seg.slanted:
            tagged += [(p, SLANT_ENDPOINT + label) for p in seg.endpoints]
        else:
            tagged += [(p, HV_MEMBER + label) for p in seg.points]
    return tagged


def freezing_set_c1_disk(D: Disk) -> FreezingSetCandidate:
    """Endpoints of maximal horizontal/vertical edges plus every point of the
    slanted edges; a minimal freezing set for (D, c1)."""
    _require_thick_convex(D)
    return _candidate(_c1_tags(D))


def freezing_set_c2_disk(D: Disk) -> FreezingSetCandidate:
    """Every point of the horizontal/vertical edges plus the endpoints of the
    slanted edges; a minimal freezing set for (D, c2)."""
    _require_thick_convex(D)
    return _candidate(_c2_tags(D))


@dataclass(frozen=True)
class DiskDecomposition:
    """Thick convex disks inside an ambient image. Disks may overlap."""

    ambient: DigitalImage
    disks: tuple[Disk, ...]

    @property
    def covered(self) -> frozenset[Point]:
        return frozenset().union(*(d.points for d in self.disks))

    @property
    def remainder(self) -> frozenset[Point]:
        return self.ambient.point_set - self.covered

    def problems(self) -> list[str]:
        out = []
        for i, D in enumerate(self.disks, 1):
            outside = sorted(D.points - self.ambient.point_set)
            if outside:
                out.append(f"disk {i} leaves the image at {outside[:3]}")
            out += [f"disk {i}: {msg}" for msg in disk_problems(D)]
        return out

    def validate(self) -> None:
        problems = self.problems()
        if problems:
            raise HypothesisError("invalid disk decomposition", problems)


def _union(dec: DiskDecomposition, tagger) -> FreezingSetCandidate:
    dec.validate()
    tagged = [(p, REMAINDER) for p in dec.remainder]
    for i, D in enumerate(dec.disks, 1):
        tagged += tagger(D, f"@{i}")
    return _candidate(tagged)


def freezing_set_c1_union(dec: DiskDecomposition) -> FreezingSetCandidate:
    """Remainder plus, per disk, hv-edge endpoints and slanted-edge points."""
    return _union(dec, _c1_tags)


def freezing_set_c2_union(dec: DiskDecomposition) -> FreezingSetCandidate:
    """Remainder plus, per disk, hv-edge points and slanted-edge endpoints."""
    return _union(dec, _c2_tags)


def _rectangles(pts: frozenset[Point]) -> list[tuple[int, int, int, int]]:
    """Inclusion-maximal axis-aligned rectangles inside ``pts`` with both sides
    spanning at least 3 points."""
    xs = sorted({p[0] for p in pts})
    ys = sorted({p[1] for p in pts})
    found = []
    for x0 in xs:
        for x1 in (x for x in xs if x >= x0 + 2):
            for y0 in ys:
                for y1 in (y for y in ys if y >= y0 + 2):
                    if all(p in pts for p in box((x0, x1), (y0, y1))):
                        found.append((x0, x1, y0, y1))
    maximal = [r for r in found if not any(
        s != r and s[0] <= r[0] and s[1] >= r[1] and s[2] <= r[2] and s[3] >= r[3] for s in found)]
    return sorted(maximal)


def suggest_decomposition(X: DigitalImage) -> DiskDecomposition:
    """Greedy cover of X by maximal rectangles of side length >= 2.

    Repeatedly takes the rectangle covering the most not-yet-covered points
    (ties: lexicographically first). Heuristic; never claimed optimal.
    """
    pts = X.point_set
    rects = _rectangles(pts)
    covered: set[Point] = set()
    chosen = []
    while True:
        best, gain = None, 0
        for r in rects:
            g = sum(1 for p in box((r[0], r[1]), (r[2], r[3])) if p not in covered)
            if g > gain:
                best, gain = r, g
        if best is None:
            break
        chosen.append(best)
        covered.update(box((best[0], best[1]), (best[2], best[3])))
    disks = tuple(disk_from_points(box((r[0], r[1]), (r[2], r[3]))) for r in chosen)
    dec = DiskDecomposition(X, disks)
    dec.validate()
    return dec
