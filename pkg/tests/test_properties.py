"""Property-based checks with hypothesis, against the enumeration oracle."""

import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from digifreeze.curves import classify_curve, jordan_split
from digifreeze.digital_map import close_neighbor_witness, fix, is_continuous, preserves_connectedness
from digifreeze.lattice import DigitalImage, adjacent, is_close_neighbor
from digifreeze.verify import (
    brute_force_is_freezing,
    close_neighbors,
    enumerate_continuous_maps,
    is_freezing_set,
    minimize,
    propagate,
)

import randomgen

seeds = st.integers(0, 2**32 - 1)
SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def images(draw, max_points=9):
    rng = random.Random(draw(seeds))
    return randomgen.random_image(rng, max_points)


@SETTINGS
@given(images(), seeds)
def test_solver_matches_enumeration(X, seed):
    A = randomgen.random_subset(random.Random(seed), X)
    report = is_freezing_set(X, A)
    assert report.freezing == brute_force_is_freezing(X, A)
    if report.witness is not None:
        f = report.witness
        assert is_continuous(f) and not f.is_identity and set(map(tuple, A)) <= fix(f)


@SETTINGS
@given(images(), seeds)
def test_propagation_keeps_every_map(X, seed):
    A = randomgen.random_subset(random.Random(seed), X)
    domains = propagate(X, A).domains
    for f in enumerate_continuous_maps(X, A):
        assert all(f(p) in domains[p] for p in X.points)


@SETTINGS
@given(images(max_points=8))
def test_close_neighbor_points_are_required(X):
    # the lemma behind minimality certificates, checked directly
    for p, q in close_neighbors(X).pairs:
        f = close_neighbor_witness(X, p, q)
        assert is_continuous(f)
        assert fix(f) == X.point_set - {p}
        assert not brute_force_is_freezing(X, [r for r in X.points if r != p])


@SETTINGS
@given(images(max_points=7), seeds)
def test_random_maps_are_continuous(X, seed):
    f = randomgen.random_continuous_map(random.Random(seed), X)
    assert is_continuous(f)
    if len(X) <= 6:
        assert preserves_connectedness(f)


@SETTINGS
@given(images(max_points=8))
def test_minimize_returns_minimal_freezing_set(X):
    result = minimize(X, X.points)
    assert result.certified
    assert brute_force_is_freezing(X, result.points)
    for p in result.points:
        assert not brute_force_is_freezing(X, [q for q in result.points if q != p])


@SETTINGS
@given(images(max_points=10))
def test_close_neighbor_symmetry_under_reflection(X):
    flip = lambda p: (-p[0],) + tuple(p[1:])  # noqa: E731
    Y = DigitalImage([flip(p) for p in X.points], X.u)
    for p in X.points:
        for q in X.points:
            assert is_close_neighbor(X, p, q) == is_close_neighbor(Y, flip(p), flip(q))


@SETTINGS
@given(st.sampled_from([1, 2]), seeds)
def test_jordan_on_random_curves(u, seed):
    cycle = randomgen.random_simple_curve(random.Random(seed), u)
    curve = classify_curve(cycle, u)
    split = jordan_split(curve)
    assert split.interior
    assert not split.interior & set(cycle)
    # leaving the interior by a dual step always lands on the curve
    dual = 2 if u == 1 else 1
    on_curve = set(cycle)
    for p in split.interior:
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                q = (p[0] + dx, p[1] + dy)
                if adjacent(p, q, dual) and q not in split.interior:
                    assert q in on_curve
