"""Self-maps of a digital image: continuity, fixed points, witness maps."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .lattice import DigitalImage, LatticeError, Point, components, is_close_neighbor


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class DigitalMap:
    """A total function from ``domain`` to itself, stored densely.

    ``values[i]`` is the index (in ``domain.points``) of the image of
    ``domain.points[i]``.
    """

    domain: DigitalImage
    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.domain)
        if len(self.values) != n or any(not 0 <= v < n for v in self.values):
            raise MapError("map must send every point to a point of its domain")

    @classmethod
    def from_mapping(cls, domain: DigitalImage, mapping: Mapping[Sequence[int], Sequence[int]]) -> "DigitalMap":
        """Build from a point -> point mapping; unmapped points stay fixed."""
        idx = domain.index
        values = list(range(len(domain)))
        for src, dst in mapping.items():
            src, dst = tuple(src), tuple(dst)
            if src not in idx or dst not in idx:
                raise MapError(f"{src} -> {dst} leaves the domain")
            values[idx[src]] = idx[dst]
        return cls(domain, tuple(values))

    @classmethod
    def identity(cls, domain: DigitalImage) -> "DigitalMap":
        return cls(domain, tuple(range(len(domain))))

    @classmethod
    def constant(cls, domain: DigitalImage, q: Sequence[int]) -> "DigitalMap":
        q = tuple(q)
        if q not in domain:
            raise MapError(f"{q} is not in the domain")
        return cls(domain, (domain.index[q],) * len(domain))

    def __call__(self, p: Sequence[int]) -> Point:
        try:
            i = self.domain.index[tuple(p)]
        except KeyError:
            raise MapError(f"{tuple(p)} is not in the domain") from None
        return self.domain.points[self.values[i]]

    def items(self) -> list[tuple[Point, Point]]:
        pts = self.domain.points
        return [(pts[i], pts[v]) for i, v in enumerate(self.values)]

    def moved(self) -> list[tuple[Point, Point]]:
        return [(p, q) for p, q in self.items() if p != q]

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.values))


def is_continuous(f: DigitalMap) -> bool:
    """Adjacent points must go to equal or adjacent points."""
    nbrs = f.domain.neighbor_indices
    vals = f.values
    for i, row in enumerate(nbrs):
        fi = vals[i]
        allowed = nbrs[fi]
        for j in row:
            if j > i:
                fj = vals[j]
                if fj != fi and fj not in allowed:
                    return False
    return True


def preserves_connectedness(f: DigitalMap) -> bool:
    """Connectedness-preservation form of continuity, by enumerating every
    connected subset. Exponential; meant for images of a dozen points or so."""
    X = f.domain
    pts = X.points
    for r in range(2, len(pts) + 1):
        for subset in combinations(pts, r):
            if len(components(subset, X.u)) != 1:
                continue
            image = {f(p) for p in subset}
            if len(components(image, X.u)) != 1:
                return False
    return True


def fix(f: DigitalMap) -> frozenset[Point]:
    pts = f.domain.points
    return frozenset(pts[i] for i, v in enumerate(f.values) if i == v)


def close_neighbor_witness(X: DigitalImage, p: Sequence[int], q: Sequence[int]) -> DigitalMap:
    """The map sending p to its close neighbor q and fixing every other point.

    It is continuous and its fixed point set is X minus p, so p lies in every
    freezing set.
    """
    p, q = tuple(p), tuple(q)
    for r in (p, q):
        if r not in X:
            raise LatticeError(f"{r} is not a point of the image")
    if not is_close_neighbor(X, p, q):
        raise MapError(f"{q} is not a close c{X.u}-neighbor of {p}")
    return DigitalMap.from_mapping(X, {p: q})


def compose_check(f: DigitalMap, g: DigitalMap) -> DigitalMap:
    """g ∘ f. Neither map needs to be continuous."""
    if f.domain != g.domain:
        raise MapError("cannot compose maps on different images")
    return DigitalMap(f.domain, tuple(g.values[v] for v in f.values))
