"""Deciding freezing sets by constraint propagation and backtracking search.

A candidate set A is freezing for (X, κ) when the identity is the only
continuous self-map fixing A pointwise. The solver looks for a continuous
f != id with A ⊆ Fix(f); finding one refutes A, exhausting the space proves it.

Domains are Python ints used as bitsets over the image's canonical point
order, so D(x) is the set of still-possible values of f(x).

Propagation rules:

* arc consistency on the continuity constraint (adjacent points go to equal
  or adjacent points);
* unique shortest paths between two fixed points are fixed;
* pulling: if every value left for q moves q strictly forward in coordinate
  i, an adjacent q' behind q must move forward too (and mirrored);
* non-expansion: continuous maps do not increase graph distance, so with a
  fixed, f(x) stays within distance d(a, x) of a.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

from .digital_map import DigitalMap, close_neighbor_witness, fix, is_continuous
from .lattice import DigitalImage, LatticeError, Point, is_close_neighbor

DEFAULT_MAX_NODES = 10_000_000
DEFAULT_MAX_SECONDS = 120.0
DEFAULT_DISTANCE_CAP = 32
ENUMERATION_CAP = 12


class Verdict(str, Enum):
    FREEZING = "freezing"
    NOT_FREEZING = "not_freezing"
    BUDGET_EXHAUSTED = "budget_exhausted"


class PropagationError(RuntimeError):
    """Some domain emptied while only the candidate set was pinned. The
    identity always survives, so this means a solver bug or bad input."""


class EnumerationCapError(ValueError):
    pass


@dataclass(frozen=True)
class Budget:
    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS


@dataclass(frozen=True)
class SolverOptions:
    pulling: bool = True
    nonexpansion: bool = True
    unique_paths: bool = True
    distance_cap: int = DEFAULT_DISTANCE_CAP


@dataclass
class Stats:
    nodes: int = 0
    propagation_passes: int = 0
    seconds: float = 0.0


@dataclass(frozen=True)
class CloseNeighborRelation:
    pairs: tuple[tuple[Point, Point], ...]

    def __contains__(self, pair) -> bool:
        return (tuple(pair[0]), tuple(pair[1])) in set(self.pairs)

    def of(self, p: Sequence[int]) -> tuple[Point, ...]:
        p = tuple(p)
        return tuple(q for a, q in self.pairs if a == p)

    def table(self) -> dict[Point, tuple[Point, ...]]:
        out: dict[Point, list[Point]] = {}
        for p, q in self.pairs:
            out.setdefault(p, []).append(q)
        return {p: tuple(qs) for p, qs in out.items()}


@dataclass(frozen=True)
class Propagation:
    domains: dict
    forced_fixed: frozenset


@dataclass
class FreezeReport:
    verdict: Verdict
    witness: Optional[DigitalMap]
    forced_fixed: frozenset
    stats: Stats = field(default_factory=Stats)

    @property
    def freezing(self) -> bool:
        return self.verdict is Verdict.FREEZING


def close_neighbors(X: DigitalImage, strict: bool = False) -> CloseNeighborRelation:
    """All ordered pairs (p, q), p != q, with q a close neighbor of p."""
    pairs = []
    for p in X.points:
        for q in X.points:
            if q != p and is_close_neighbor(X, p, q, strict=strict):
                pairs.append((p, q))
    return CloseNeighborRelation(tuple(pairs))


def required_points(X: DigitalImage, strict: bool = False) -> frozenset[Point]:
    """Points with a close neighbor; each belongs to every freezing set."""
    return frozenset(p for p, _ in close_neighbors(X, strict).pairs)


class _Exhausted(Exception):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Solver:
    """Per-image precomputation plus propagation over bitset domains."""

    def __init__(self, X: DigitalImage, options: SolverOptions, budget: Budget, stats: Stats):
        self.X = X
        self.opt = options
        self.budget = budget
        self.stats = stats
        self.deadline = time.monotonic() + budget.max_seconds
        n = len(X)
        self.n = n
        self.nbrs = X.neighbor_indices
        self.closed = [sum(1 << j for j in row) | (1 << i) for i, row in enumerate(self.nbrs)]
        self.full = (1 << n) - 1
        dist = X.distances
        self.dist = dist
        pts = X.points
        if options.pulling:
            dim = X.dim
            coords = [sorted({p[k] for p in pts}) for k in range(dim)]
            self.gt = [{c: sum(1 << j for j, p in enumerate(pts) if p[k] > c) for c in coords[k]}
                       for k in range(dim)]
            self.lt = [{c: sum(1 << j for j, p in enumerate(pts) if p[k] < c) for c in coords[k]}
                       for k in range(dim)]
        if options.nonexpansion:
            self.ball = []
            for a in range(n):
                rings: dict[int, int] = {}
                for j, d in enumerate(dist[a]):
                    if d >= 0:
                        rings[d] = rings.get(d, 0) | (1 << j)
                acc, balls = 0, []
                for r in range(max(rings) + 1):
                    acc |= rings.get(r, 0)
                    balls.append(acc)
                self.ball.append(balls)
        self._paths: dict[tuple[int, int], int] = {}

    # -- unique shortest paths -------------------------------------------------

    def unique_path_mask(self, a: int, b: int) -> int:
        key = (a, b) if a < b else (b, a)
        if key in self._paths:
            return self._paths[key]
        mask = 0
        d = self.dist[a][b]
        if 1 < d <= self.opt.distance_cap:
            # unique iff walking back from b never has a choice of predecessor
            da = self.dist[a]
            v, mask = b, (1 << b)
            while v != a:
                prev = [w for w in self.nbrs[v] if da[w] == da[v] - 1]
                if len(prev) != 1:
                    mask = 0
                    break
                v = prev[0]
                mask |= 1 << v
        self._paths[key] = mask
        return mask

    # -- propagation -------------------------------------------------------

    def tick(self) -> None:
        self.stats.nodes += 1
        if self.stats.nodes > self.budget.max_nodes or time.monotonic() > self.deadline:
            raise _Exhausted

    def propagate(self, dom: list[int], changed: Optional[Iterable[int]] = None) -> bool:
        """Shrink ``dom`` in place to a fixed point of the rules. Returns False
        when some domain empties."""
        n = self.n
        pending = set(range(n)) if changed is None else set(changed)
        while True:
            self.stats.propagation_passes += 1
            if not self._arc_consistency(dom, pending):
                return False
            pending = set()
            for rule in self._extra_rules():
                touched = rule(dom)
                if touched is None:
                    return False
                pending |= touched
            if not pending:
                return True

    def _extra_rules(self):
        if self.opt.unique_paths:
            yield self._rule_unique_paths
        if self.opt.pulling:
            yield self._rule_pulling
        if self.opt.nonexpansion:
            yield self._rule_nonexpansion

    def _arc_consistency(self, dom: list[int], changed: set[int]) -> bool:
        nbrs, closed = self.nbrs, self.closed
        queue = deque(sorted(changed))
        queued = set(changed)
        while queue:
            y = queue.popleft()
            queued.discard(y)
            support = 0
            for w in _bits(dom[y]):
                support |= closed[w]
            for x in nbrs[y]:
                new = dom[x] & support
                if new != dom[x]:
                    if not new:
                        return False
                    dom[x] = new
                    if x not in queued:
                        queued.add(x)
                        queue.append(x)
        return True

    def _pinned(self, dom: list[int]) -> list[int]:
        return [i for i in range(self.n) if dom[i] == 1 << i]

    def _rule_unique_paths(self, dom: list[int]) -> Optional[set[int]]:
        pinned = self._pinned(dom)
        forced = 0
        for k, a in enumerate(pinned):
            for b in pinned[k + 1:]:
                forced |= self.unique_path_mask(a, b)
        touched = set()
        for v in _bits(forced):
            if dom[v] != 1 << v:
                if not dom[v] >> v & 1:
                    return None
                dom[v] = 1 << v
                touched.add(v)
        return touched

    def _rule_pulling(self, dom: list[int]) -> Optional[set[int]]:
        pts = self.X.points
        touched = set()
        for q in range(self.n):
            dq = dom[q]
            pq = pts[q]
            for k in range(len(pq)):
                c = pq[k]
                ahead = not dq & ~self.gt[k][c]
                behind = not dq & ~self.lt[k][c]
                if not (ahead or behind):
                    continue
                for r in self.nbrs[q]:
                    pr = pts[r][k]
                    if ahead and pr < c:
                        new = dom[r] & self.gt[k][pr]
                    elif behind and pr > c:
                        new = dom[r] & self.lt[k][pr]
                    else:
                        continue
                    if new != dom[r]:
                        if not new:
                            return None
                        dom[r] = new
                        touched.add(r)
        return touched

    def _rule_nonexpansion(self, dom: list[int]) -> Optional[set[int]]:
        touched = set()
        for a in self._pinned(dom):
            balls, da = self.ball[a], self.dist[a]
            for x in range(self.n):
                d = da[x]
                if d < 0 or d >= len(balls) - 1:
                    continue
                new = dom[x] & balls[d]
                if new != dom[x]:
                    if not new:
                        return None
                    dom[x] = new
                    touched.add(x)
        return touched

    # -- search --------------------------------------------------------------

    def value_order(self, x: int, mask: int) -> list[int]:
        dx = self.dist[x]
        return sorted(_bits(mask), key=lambda v: (dx[v] if dx[v] >= 0 else self.n, v))

    def complete(self, dom: list[int]) -> Optional[list[int]]:
        """Any full assignment consistent with ``dom``; values nearest the
        identity first. Depth-first with an explicit stack."""
        stack = [self._branches(dom)]
        while stack:
            self.tick()
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
                continue
            if isinstance(step, list):
                return step
            stack.append(self._branches(step))
        return None

    def _branches(self, dom: list[int]):
        """Yield the solution if ``dom`` is fully assigned, otherwise the
        propagated children of its smallest open domain."""
        best, size = -1, None
        for i, m in enumerate(dom):
            if m & (m - 1):
                c = bin(m).count("1")
                if size is None or c < size:
                    best, size = i, c
        if best < 0:
            yield [m.bit_length() - 1 for m in dom]
            return
        for v in self.value_order(best, dom[best]):
            trial = list(dom)
            trial[best] = 1 << v
            if self.propagate(trial, [best]):
                yield tuple(trial)


def _initial_domains(X: DigitalImage, A: Iterable[Sequence[int]]) -> list[int]:
    n = len(X)
    dom = [(1 << n) - 1] * n
    for a in A:
        a = tuple(a)
        if a not in X:
            raise LatticeError(f"candidate point {a} is not in the image")
        i = X.index[a]
        dom[i] = 1 << i
    return dom


def propagate(X: DigitalImage, A: Iterable[Sequence[int]], options: SolverOptions = SolverOptions()) -> Propagation:
    """Domains after pinning A and running every propagation rule."""
    solver = _Solver(X, options, Budget(), Stats())
    dom = _initial_domains(X, A)
    if not solver.propagate(dom):
        raise PropagationError("a domain emptied although the identity fixes every point")
    pts = X.points
    domains = {pts[i]: frozenset(pts[j] for j in _bits(m)) for i, m in enumerate(dom)}
    forced = frozenset(pts[i] for i in range(len(X)) if dom[i] == 1 << i)
    return Propagation(domains, forced)


def is_freezing_set(
    X: DigitalImage,
    A: Iterable[Sequence[int]],
    budget: Budget = Budget(),
    options: SolverOptions = SolverOptions(),
) -> FreezeReport:
    """Search for a continuous non-identity self-map fixing A.

    A point outside A with a close neighbor refutes A at once. Otherwise
    points are visited smallest-domain first. For each, every non-identity
    value is tried with a full consistency search; if none extends to a
    continuous map, the point is fixed by all such maps and gets pinned.
    """
    stats = Stats()
    t0 = time.monotonic()
    solver = _Solver(X, options, budget, stats)
    dom = _initial_domains(X, A)
    if not solver.propagate(dom):
        raise PropagationError("a domain emptied although the identity fixes every point")
    n = len(X)
    forced = frozenset(X.points[i] for i in range(n) if dom[i] == 1 << i)

    def finish(verdict: Verdict, witness: Optional[DigitalMap] = None) -> FreezeReport:
        stats.seconds = time.monotonic() - t0
        return FreezeReport(verdict, witness, forced, stats)

    # A point outside A with a close neighbor gives a one-point witness.
    pinned = {tuple(a) for a in A}
    relation = close_neighbors(X)
    for p_, qs in sorted(relation.table().items()):
        if p_ not in pinned and qs:
            witness = close_neighbor_witness(X, p_, qs[0])
            _check_witness(witness, A)
            return finish(Verdict.NOT_FREEZING, witness)

    try:
        while True:
            open_points = [i for i in range(n) if dom[i] != 1 << i]
            if not open_points:
                return finish(Verdict.FREEZING)
            p = min(open_points, key=lambda i: (bin(dom[i]).count("1"), i))
            for q in solver.value_order(p, dom[p] & ~(1 << p)):
                solver.tick()
                trial = list(dom)
                trial[p] = 1 << q
                if solver.propagate(trial, [p]):
                    found = solver.complete(trial)
                    if found is not None:
                        witness = DigitalMap(X, tuple(found))
                        _check_witness(witness, A)
                        return finish(Verdict.NOT_FREEZING, witness)
            dom[p] = 1 << p
            if not solver.propagate(dom, [p]):
                raise PropagationError("pinning a point emptied a domain")
    except _Exhausted:
        return finish(Verdict.BUDGET_EXHAUSTED)


def _check_witness(f: DigitalMap, A: Iterable[Sequence[int]]) -> None:
    fixed = fix(f)
    if not is_continuous(f) or f.is_identity or any(tuple(a) not in fixed for a in A):
        raise AssertionError("solver produced an invalid witness")


@dataclass
class MinimalityReport:
    minimal: Optional[bool]  # None when some check ran out of budget
    evidence: dict
    inconclusive: tuple = ()


def is_minimal_freezing_set(
    X: DigitalImage,
    A: Iterable[Sequence[int]],
    budget: Budget = Budget(),
    options: SolverOptions = SolverOptions(),
) -> MinimalityReport:
    """For each p in A decide whether A minus p still freezes.

    Evidence per point is ``("close_neighbor", q, map)``, ``("witness", map)``
    or ``("freezing", report)``; a close neighbor short-circuits the search.
    """
    A = sorted({tuple(a) for a in A})
    relation = close_neighbors(X)
    evidence = {}
    inconclusive = []
    minimal: Optional[bool] = True
    for p in A:
        qs = relation.of(p)
        if qs:
            evidence[p] = ("close_neighbor", qs[0], close_neighbor_witness(X, p, qs[0]))
            continue
        rest = [a for a in A if a != p]
        report = is_freezing_set(X, rest, budget, options)
        if report.verdict is Verdict.NOT_FREEZING:
            evidence[p] = ("witness", report.witness)
        elif report.verdict is Verdict.FREEZING:
            evidence[p] = ("freezing", report)
            minimal = False
        else:
            evidence[p] = ("budget", report)
            inconclusive.append(p)
    if minimal and inconclusive:
        minimal = None
    return MinimalityReport(minimal, evidence, tuple(inconclusive))


@dataclass
class MinimizeResult:
    points: tuple[Point, ...]
    certified: bool
    removed: tuple[Point, ...]
    evidence: dict


def minimize(
    X: DigitalImage,
    A: Iterable[Sequence[int]],
    budget: Budget = Budget(),
    options: SolverOptions = SolverOptions(),
) -> MinimizeResult:
    """Greedy descent to an inclusion-minimal freezing subset of A.

    Points without a close neighbor are tried first, then lexicographic
    order. One pass suffices: if A minus p fails to freeze, so does every
    smaller set missing p.
    """
    current = sorted({tuple(a) for a in A})
    required = required_points(X)
    order = sorted(current, key=lambda p: (p in required, p))
    relation = close_neighbors(X)
    removed = []
    evidence = {}
    certified = True
    for p in order:
        qs = relation.of(p)
        if qs:
            evidence[p] = ("close_neighbor", qs[0])
            continue
        rest = [a for a in current if a != p]
        report = is_freezing_set(X, rest, budget, options)
        if report.verdict is Verdict.FREEZING:
            current = rest
            removed.append(p)
        elif report.verdict is Verdict.NOT_FREEZING:
            evidence[p] = ("witness", report.witness)
        else:
            evidence[p] = ("budget", None)
            certified = False
    return MinimizeResult(tuple(current), certified, tuple(removed), evidence)


def enumerate_continuous_maps(
    X: DigitalImage, fixing: Iterable[Sequence[int]] = (), cap: int = ENUMERATION_CAP
) -> Iterator[DigitalMap]:
    """Every continuous self-map of X fixing ``fixing``, by plain backtracking.

    Deliberately naive: assigns points in order and checks continuity only
    against already-assigned neighbours. Used as an oracle for the solver.
    """
    n = len(X)
    if n > cap:
        raise EnumerationCapError(f"{n} points exceeds the enumeration cap of {cap}")
    fixed = {X.index[tuple(a)] for a in fixing}
    nbrs = X.neighbor_indices
    values = [0] * n

    def ok(i: int, v: int) -> bool:
        for j in nbrs[i]:
            if j < i:
                w = values[j]
                if w != v and w not in nbrs[v]:
                    return False
        return True

    def rec(i: int) -> Iterator[DigitalMap]:
        if i == n:
            f = DigitalMap(X, tuple(values))
            assert is_continuous(f)
            yield f
            return
        for v in ([i] if i in fixed else range(n)):
            if ok(i, v):
                values[i] = v
                yield from rec(i + 1)

    yield from rec(0)


def brute_force_is_freezing(X: DigitalImage, A: Iterable[Sequence[int]], cap: int = ENUMERATION_CAP) -> bool:
    return not any(not f.is_identity for f in enumerate_continuous_maps(X, A, cap))
