"""Closed curves, digital Jordan splitting, disks, convexity and thickness in Z^2."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .lattice import (
    DigitalImage,
    LatticeError,
    Point,
    adjacent,
    components,
    lattice_neighbors,
)

# Unit steps indexed counterclockwise from east, 45 degrees apart.
DIRS: tuple[Point, ...] = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))
DIR_INDEX = {d: i for i, d in enumerate(DIRS)}

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
SLANT_UP = "slant+1"
SLANT_DOWN = "slant-1"
_KIND = {0: HORIZONTAL, 4: HORIZONTAL, 2: VERTICAL, 6: VERTICAL,
         1: SLANT_UP, 5: SLANT_UP, 3: SLANT_DOWN, 7: SLANT_DOWN}


class CurveError(ValueError):
    pass


class JordanError(CurveError):
    pass


class DiskError(CurveError):
    pass


def _points2(points: Iterable[Sequence[int]]) -> list[Point]:
    pts = [tuple(p) for p in points]
    if any(len(p) != 2 for p in pts):
        raise LatticeError("planar operation needs points of Z^2")
    return pts


def boundary(X: DigitalImage | Iterable[Sequence[int]], i: int) -> frozenset[Point]:
    """Bd_i(X): points of X with a c_i-neighbor in Z^2 outside X."""
    if i not in (1, 2):
        raise LatticeError(f"boundary is defined for c1 and c2, not c{i}")
    pts = set(_points2(X.points if isinstance(X, DigitalImage) else X))
    return frozenset(p for p in pts if any(q not in pts for q in lattice_neighbors(p, i)))


def is_slanted(kind: str) -> bool:
    return kind in (SLANT_UP, SLANT_DOWN)


@dataclass(frozen=True)
class ClosedCurve:
    """A cyclic sequence of distinct points; the closing repeat is implicit."""

    points: tuple[Point, ...]
    u: int
    simple: bool

    def __len__(self) -> int:
        return len(self.points)

    def steps(self) -> list[int]:
        """Direction index of each step s_i -> s_{i+1}, cyclically."""
        pts = self.points
        m = len(pts)
        return [DIR_INDEX[(pts[(i + 1) % m][0] - pts[i][0], pts[(i + 1) % m][1] - pts[i][1])]
                for i in range(m)]


def signed_area2(cycle: Sequence[Point]) -> int:
    """Twice the signed shoelace area; positive for counterclockwise order."""
    m = len(cycle)
    return sum(cycle[i][0] * cycle[(i + 1) % m][1] - cycle[(i + 1) % m][0] * cycle[i][1]
               for i in range(m))


def classify_curve(cycle: Sequence[Sequence[int]], u: int) -> ClosedCurve:
    """Validate a closed c_u-curve and decide whether it is simple.

    The cycle may repeat its first point at the end. A curve counts as simple
    only if adjacency occurs between cyclic neighbours alone and it has at
    least 8 points (c1) or 4 points (c2).
    """
    pts = _points2(cycle)
    if len(pts) > 1 and pts[0] == pts[-1]:
        pts = pts[:-1]
    m = len(pts)
    if m < 2:
        raise CurveError("a closed curve needs at least two points")
    if len(set(pts)) != m:
        raise CurveError("not a closed curve: a point repeats")
    for i in range(m):
        a, b = pts[i], pts[(i + 1) % m]
        if not adjacent(a, b, u):
            raise CurveError(f"not a closed curve: {a} and {b} are not c{u}-adjacent")
    simple = m >= (8 if u == 1 else 4)
    if simple:
        for i in range(m):
            for j in range(i + 2, m):
                if (i, j) != (0, m - 1) and adjacent(pts[i], pts[j], u):
                    simple = False
                    break
            if not simple:
                break
    return ClosedCurve(tuple(pts), u, simple)


def counterclockwise(curve: ClosedCurve) -> ClosedCurve:
    """Same curve traversed counterclockwise, starting at its least point."""
    pts = list(curve.points)
    if signed_area2(pts) < 0:
        pts.reverse()
    k = pts.index(min(pts))
    return ClosedCurve(tuple(pts[k:] + pts[:k]), curve.u, curve.simple)


def complement_components(curve_points: Iterable[Point], u: int) -> tuple[list[frozenset[Point]], list[frozenset[Point]]]:
    """Split Z^2 minus the points into c_u-components, as (finite, infinite).

    The plane is clipped to the bounding box grown by one; a component is
    infinite exactly when it reaches that frame.
    """
    pts = set(curve_points)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    free = [(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1) if (x, y) not in pts]
    finite, infinite = [], []
    for comp in components(free, u):
        on_frame = any(p[0] in (x0, x1) or p[1] in (y0, y1) for p in comp)
        (infinite if on_frame else finite).append(comp)
    return finite, infinite


@dataclass(frozen=True)
class JordanSplit:
    interior: frozenset[Point]
    exterior_certificate: bool


def jordan_split(curve: ClosedCurve) -> JordanSplit:
    """Finite complementary component of a simple closed curve, under the
    dual adjacency."""
    if not curve.simple:
        raise JordanError("Jordan splitting needs a simple closed curve of sufficient size")
    dual = 2 if curve.u == 1 else 1
    finite, infinite = complement_components(curve.points, dual)
    if len(finite) != 1 or len(infinite) != 1:
        raise JordanError(
            f"complement has {len(finite)} finite and {len(infinite)} infinite c{dual}-components"
        )
    return JordanSplit(finite[0], True)


@dataclass(frozen=True)
class Segment:
    points: tuple[Point, ...]
    orientation: str

    @property
    def endpoints(self) -> tuple[Point, Point]:
        return self.points[0], self.points[-1]

    @property
    def slanted(self) -> bool:
        return is_slanted(self.orientation)


def _corner_start(steps: list[int]) -> int:
    m = len(steps)
    for i in range(m):
        if steps[i] != steps[i - 1]:
            return i
    raise CurveError("closed curve without a corner")


def maximal_segments(curve: ClosedCurve) -> list[Segment]:
    """Maximal straight runs of the curve in cyclic order. Consecutive runs
    share their common endpoint."""
    steps = curve.steps()
    pts = curve.points
    m = len(pts)
    start = _corner_start(steps)
    segments = []
    run = [pts[start]]
    for k in range(m):
        i = (start + k) % m
        run.append(pts[(i + 1) % m])
        if steps[(i + 1) % m] != steps[i] or k == m - 1:
            segments.append(Segment(tuple(run), _KIND[steps[i]]))
            run = [pts[(i + 1) % m]]
    return segments


@dataclass(frozen=True)
class VertexAngle:
    vertex: Point
    degrees: int
    side_kinds: tuple[str, str]
    probes: dict = field(default_factory=dict, compare=False)


def vertex_angles(curve: ClosedCurve) -> list[VertexAngle]:
    """Interior angle at every junction of maximal segments.

    The curve is taken counterclockwise so the interior is on the left. The
    probe points are the lattice neighbours of the vertex strictly inside the
    angle: ``diagonal`` and/or ``axial``.
    """
    ccw = counterclockwise(curve)
    steps = ccw.steps()
    pts = ccw.points
    m = len(pts)
    out = []
    start = _corner_start(steps)
    for k in range(m):
        i = (start + k) % m
        d_in, d_out = steps[i - 1], steps[i]
        if d_in == d_out:
            continue
        span = ((d_in + 4) - d_out) % 8
        p = pts[i]
        probes = {}
        for j in range(1, span):
            d = (d_out + j) % 8
            q = (p[0] + DIRS[d][0], p[1] + DIRS[d][1])
            probes.setdefault("diagonal" if d % 2 else "axial", q)
        out.append(VertexAngle(p, 45 * span, (_KIND[d_in], _KIND[d_out]), probes))
    return out


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Sequence[int]]) -> list[Point]:
    """Hull vertices counterclockwise (Andrew's monotone chain), collinear
    points dropped."""
    pts = sorted(set(_points2(points)))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def lattice_points_in_hull(points: Iterable[Sequence[int]]) -> frozenset[Point]:
    pts = _points2(points)
    hull = convex_hull(pts)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    edges = list(zip(hull, hull[1:] + hull[:1])) if len(hull) > 1 else []
    return frozenset(
        (x, y)
        for x in range(min(xs), max(xs) + 1)
        for y in range(min(ys), max(ys) + 1)
        if all(_cross(a, b, (x, y)) >= 0 for a, b in edges)
    )


def is_convex(X: DigitalImage | Iterable[Sequence[int]]) -> bool:
    """X equals the set of lattice points of its real convex hull."""
    pts = frozenset(_points2(X.points if isinstance(X, DigitalImage) else X))
    return lattice_points_in_hull(pts) == pts


def trace_boundary(points: Iterable[Sequence[int]]) -> list[Point]:
    """Outer contour of a finite planar set by Moore-neighbour tracing,
    counterclockwise from the lowest-then-leftmost point.

    Thin parts make the contour pass some points twice; callers decide
    whether that is acceptable.
    """
    S = set(_points2(points))
    start = min(S, key=lambda p: (p[1], p[0]))
    cur, back = start, 6  # south of the lowest point is background
    contour = [start]
    first_move = None
    while True:
        for k in range(1, 9):
            d = (back + k) % 8
            nxt = (cur[0] + DIRS[d][0], cur[1] + DIRS[d][1])
            if nxt in S:
                break
        else:
            return contour
        bg = DIRS[(back + k - 1) % 8]
        bg_point = (cur[0] + bg[0], cur[1] + bg[1])
        if first_move is None:
            first_move = (cur, nxt)
        elif (cur, nxt) == first_move:
            return contour[:-1]
        contour.append(nxt)
        back = DIR_INDEX[(bg_point[0] - nxt[0], bg_point[1] - nxt[1])]
        cur = nxt


@dataclass(frozen=True)
class Disk:
    """A disk: a c2 closed curve together with its finite c1-complement.

    ``curve`` is counterclockwise. ``strict_jordan`` records whether the
    complement has exactly two c1-components; several pieces of interior can
    occur when a slanted strip pinches the inside.
    """

    points: frozenset[Point]
    curve: ClosedCurve
    interior: frozenset[Point]
    strict_jordan: bool

    @property
    def image(self) -> DigitalImage:
        return DigitalImage(self.points, 2)

    def segments(self) -> list[Segment]:
        return maximal_segments(self.curve)


def disk_from_curve(cycle: Sequence[Sequence[int]]) -> Disk:
    try:
        curve = counterclockwise(classify_curve(cycle, 2))
    except CurveError as exc:
        raise DiskError(f"bounding curve rejected: {exc}") from exc
    finite, infinite = complement_components(curve.points, 1)
    if not finite:
        raise DiskError("bounding curve encloses no interior")
    interior = frozenset().union(*finite)
    return Disk(frozenset(curve.points) | interior, curve, interior,
                len(finite) == 1 and len(infinite) == 1)


def disk_from_points(points: Iterable[Sequence[int]]) -> Disk:
    """Recover a disk from its point set by tracing its outer contour."""
    pts = frozenset(_points2(points))
    contour = trace_boundary(pts)
    try:
        disk = disk_from_curve(contour)
    except DiskError as exc:
        raise DiskError(f"traced contour is not a bounding curve: {exc}") from exc
    if disk.points != pts:
        extra = sorted(disk.points ^ pts)
        raise DiskError(f"contour does not bound exactly the given points; mismatch at {extra[:5]}")
    return disk


@dataclass(frozen=True)
class Thickness:
    thick: bool
    violations: tuple[tuple[Point, str], ...]

    def __bool__(self) -> bool:
        return self.thick


def is_thick(D: Disk) -> Thickness:
    """Check the three thickness clauses against the disk's bounding curve.

    Slanted segments need their interior-side diagonal neighbour in the disk
    at every non-endpoint; 90 and 135 degree vertices need the probe points
    inside the angle.
    """
    violations = []
    for seg in maximal_segments(D.curve):
        if not seg.slanted:
            continue
        a, b = seg.points[0], seg.points[1]
        k = DIR_INDEX[(b[0] - a[0], b[1] - a[1])]
        side = DIRS[(k + 2) % 8]
        for p in seg.points[1:-1]:
            c = (p[0] + side[0], p[1] + side[1])
            if c not in D.points:
                violations.append((p, f"slant: diagonal {c} on the interior side is missing"))
    for ang in vertex_angles(D.curve):
        p = ang.vertex
        if ang.degrees == 90:
            q = ang.probes["diagonal"] if not is_slanted(ang.side_kinds[0]) else ang.probes["axial"]
            if q not in D.interior:
                violations.append((p, f"90: {q} is not an interior point"))
        elif ang.degrees == 135:
            for role in ("diagonal", "axial"):
                b = ang.probes[role]
                if b not in D.points:
                    violations.append((p, f"135: {role} probe {b} is missing"))
        elif ang.degrees > 180:
            violations.append((p, f"unsupported angle {ang.degrees}"))
        # 45 degree vertices carry no condition
    return Thickness(not violations, tuple(violations))
