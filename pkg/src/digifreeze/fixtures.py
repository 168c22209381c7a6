"""Named images and disk decompositions used by tests, scenarios and docs."""

from __future__ import annotations

from .construct import DiskDecomposition
from .curves import Disk, disk_from_points, lattice_points_in_hull
from .lattice import DigitalImage, Point, box


def square(n: int = 2) -> list[Point]:
    return box((0, n), (0, n))


def diamond() -> list[Point]:
    return [(1, 0), (0, 1), (-1, 0), (0, -1)]


def diamond_disk() -> Disk:
    return disk_from_points(diamond() + [(0, 0)])


def unit_cube(u: int = 1) -> DigitalImage:
    return DigitalImage(box((0, 1), (0, 1), (0, 1)), u)


def notched_points() -> list[Point]:
    """[0,4]^2 with the three upper-left corner points removed."""
    return [p for p in box((0, 4), (0, 4)) if p not in {(0, 3), (0, 4), (1, 4)}]


def notched_disk() -> Disk:
    return disk_from_points(notched_points())


def union_rectangles(u: int = 1) -> DigitalImage:
    return DigitalImage(set(box((0, 2), (0, 2))) | set(box((2, 4), (0, 3))), u)


def union_rectangles_decomposition(alternate: bool = False) -> DiskDecomposition:
    first = box((0, 4), (0, 2)) if alternate else box((0, 2), (0, 2))
    return DiskDecomposition(
        union_rectangles(), (disk_from_points(first), disk_from_points(box((2, 4), (0, 3))))
    )


def rect_and_trapz(u: int = 1) -> DigitalImage:
    rows = box((0, 8), (0, 0)) + box((0, 3), (1, 2)) + box((6, 8), (1, 1)) + box((7, 8), (2, 2))
    return DigitalImage(set(rows), u)


def rect_and_trapz_decomposition() -> DiskDecomposition:
    X = rect_and_trapz()
    left = [p for p in X if p[0] <= 3]
    right = [p for p in X if p[0] >= 6]
    return DiskDecomposition(X, (disk_from_points(left), disk_from_points(right)))


MASK_HULLS: tuple[tuple[Point, ...], ...] = (
    ((-3, 0), (0, 3), (1, 2), (-2, -1)),
    ((1, 2), (3, 0), (2, -1), (0, 1)),
    ((2, -1), (0, -3), (-1, -2), (1, 0)),
    ((-1, -2), (-2, -1), (-1, 0), (0, -1)),
    ((5, 0), (7, 2), (8, 1), (6, -1)),
    ((7, 2), (8, 3), (9, 2), (9, 0)),
    ((9, 0), (9, -2), (8, -3), (7, -2)),
    ((7, -2), (6, -1), (7, 0), (8, -1)),
)


def mask_disks() -> tuple[Disk, ...]:
    return tuple(disk_from_points(lattice_points_in_hull(h)) for h in MASK_HULLS)


def mask(u: int = 2) -> DigitalImage:
    pts = {(4, 0)}
    for d in mask_disks():
        pts |= d.points
    return DigitalImage(pts, u)


def mask_decomposition() -> DiskDecomposition:
    return DiskDecomposition(mask(), mask_disks())
