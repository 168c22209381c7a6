"""Integer lattice points, c_u adjacency, neighborhoods, paths and components.

Points are plain tuples of ints. Tuples are immutable, hashable and order
lexicographically, which is exactly what deterministic output needs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Optional, Sequence

Point = tuple[int, ...]

MAX_DIM = 3


class LatticeError(ValueError):
    """Raised for malformed lattice input (dimension, adjacency, membership)."""


class DisconnectedError(LatticeError):
    """Raised when two points have no path between them (infinite distance)."""


def check_adjacency(u: int, n: int) -> None:
    if not 1 <= n <= MAX_DIM:
        raise LatticeError(f"dimension {n} outside 1..{MAX_DIM}")
    if not 1 <= u <= n:
        raise LatticeError(f"adjacency c{u} needs 1 <= u <= {n}")


def adjacent(a: Sequence[int], b: Sequence[int], u: int) -> bool:
    """True iff ``a`` and ``b`` are c_u-adjacent.

    >>> adjacent((0, 0), (1, 1), 1), adjacent((0, 0), (1, 1), 2)
    (False, True)
    """
    if len(a) != len(b):
        raise LatticeError(f"dimension mismatch: {a} vs {b}")
    check_adjacency(u, len(a))
    differing = 0
    for x, y in zip(a, b):
        d = abs(x - y)
        if d > 1:
            return False
        differing += d
    return 1 <= differing <= u


def adjacent_or_equal(a: Sequence[int], b: Sequence[int], u: int) -> bool:
    return tuple(a) == tuple(b) or adjacent(a, b, u)


@lru_cache(maxsize=None)
def offsets(n: int, u: int) -> tuple[Point, ...]:
    """Nonzero offsets d with |d_i| <= 1 and at most u nonzero entries, sorted."""
    check_adjacency(u, n)
    return tuple(
        d for d in product((-1, 0, 1), repeat=n) if 1 <= sum(map(abs, d)) <= u
    )


def add(p: Sequence[int], d: Sequence[int]) -> Point:
    return tuple(x + y for x, y in zip(p, d))


def lattice_neighbors(p: Point, u: int) -> tuple[Point, ...]:
    """All c_u-neighbors of ``p`` in the full lattice Z^n."""
    return tuple(add(p, d) for d in offsets(len(p), u))


def projection(p: Sequence[int], i: int) -> int:
    """The i-th coordinate of ``p``, 1-based."""
    if not 1 <= i <= len(p):
        raise LatticeError(f"projection index {i} outside 1..{len(p)}")
    return p[i - 1]


def chebyshev(a: Sequence[int], b: Sequence[int]) -> int:
    return max(abs(x - y) for x, y in zip(a, b))


def manhattan(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(abs(x - y) for x, y in zip(a, b))


@dataclass(frozen=True)
class ShortestPaths:
    length: int
    count: int  # saturates at 2, meaning "more than one"
    unique_path: Optional[tuple[Point, ...]]


@dataclass(frozen=True, init=False)
class DigitalImage:
    """A finite set of lattice points viewed under c_u adjacency.

    ``points`` is kept sorted; ``index`` gives each point's position in it,
    which is the canonical ordering used by dense map storage and the solver.
    """

    points: tuple[Point, ...]
    u: int

    def __init__(self, points: Iterable[Sequence[int]], u: int):
        pts = [tuple(int(c) for c in p) for p in points]
        if not pts:
            raise LatticeError("a digital image needs at least one point")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise LatticeError(f"mixed dimensions in image: {sorted(dims)}")
        check_adjacency(u, dims.pop())
        ordered = sorted(pts)
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise LatticeError(f"duplicate point {a}")
        object.__setattr__(self, "points", tuple(ordered))
        object.__setattr__(self, "u", u)

    @property
    def dim(self) -> int:
        return len(self.points[0])

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.point_set

    @cached_property
    def point_set(self) -> frozenset[Point]:
        return frozenset(self.points)

    @cached_property
    def index(self) -> dict[Point, int]:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def neighbor_indices(self) -> tuple[tuple[int, ...], ...]:
        idx = self.index
        return tuple(
            tuple(sorted(idx[q] for q in lattice_neighbors(p, self.u) if q in idx))
            for p in self.points
        )

    def with_adjacency(self, u: int) -> "DigitalImage":
        return DigitalImage(self.points, u)

    def neighbors(self, p: Sequence[int]) -> tuple[Point, ...]:
        p = tuple(p)
        if p not in self.index:
            raise LatticeError(f"{p} is not a point of the image")
        return tuple(self.points[j] for j in self.neighbor_indices[self.index[p]])

    @cached_property
    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs graph distances; -1 marks unreachable pairs."""
        return tuple(self._bfs(s)[0] for s in range(len(self.points)))

    def _bfs(self, source: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        n = len(self.points)
        dist = [-1] * n
        count = [0] * n
        dist[source] = 0
        count[source] = 1
        queue = deque([source])
        nbrs = self.neighbor_indices
        while queue:
            v = queue.popleft()
            for w in nbrs[v]:
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    count[w] = min(2, count[w] + count[v])
        return tuple(dist), tuple(count)


def neighborhood(X: DigitalImage, p: Sequence[int], closed: bool = False) -> frozenset[Point]:
    """N(X, κ, p), or N*(X, κ, p) when ``closed``."""
    nbrs = frozenset(X.neighbors(p))
    return nbrs | {tuple(p)} if closed else nbrs


def is_close_neighbor(X: DigitalImage, p: Sequence[int], q: Sequence[int], strict: bool = False) -> bool:
    """True iff q is a close neighbor of p: N(X,p) ⊆ N*(X,q), with q != p.

    ``strict`` demands proper containment instead.
    """
    p, q = tuple(p), tuple(q)
    if p == q:
        return False
    inner = neighborhood(X, p)
    outer = neighborhood(X, q, closed=True)
    return inner < outer if strict else inner <= outer


def components(S: Iterable[Sequence[int]], u: int) -> list[frozenset[Point]]:
    """Maximal c_u-connected pieces of ``S``, ordered by their least point."""
    remaining = {tuple(p) for p in S}
    parts = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        remaining.discard(start)
        part = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in lattice_neighbors(v, u):
                if w in remaining:
                    remaining.discard(w)
                    part.add(w)
                    queue.append(w)
        parts.append(frozenset(part))
    return parts


def is_connected(X: DigitalImage) -> bool:
    return len(components(X.points, X.u)) == 1


def shortest_paths(X: DigitalImage, a: Sequence[int], b: Sequence[int]) -> ShortestPaths:
    """Distance from a to b, number of shortest paths (capped at 2), and the
    path itself when it is unique."""
    a, b = tuple(a), tuple(b)
    for p in (a, b):
        if p not in X:
            raise LatticeError(f"{p} is not a point of the image")
    ia, ib = X.index[a], X.index[b]
    dist, count = X._bfs(ia)
    if dist[ib] == -1:
        raise DisconnectedError(f"no path from {a} to {b}")
    path = None
    if count[ib] == 1:
        path = [b]
        v = ib
        while v != ia:
            v = next(w for w in X.neighbor_indices[v] if dist[w] == dist[v] - 1)
            path.append(X.points[v])
        path = tuple(reversed(path))
    return ShortestPaths(dist[ib], count[ib], path)


def box(*ranges: tuple[int, int]) -> list[Point]:
    """Integer points of a product of closed intervals, e.g. box((0, 2), (0, 2))."""
    return [tuple(c) for c in product(*(range(lo, hi + 1) for lo, hi in ranges))]
