import pytest

from digifreeze.lattice import (
    DigitalImage,
    DisconnectedError,
    LatticeError,
    adjacent,
    box,
    components,
    is_close_neighbor,
    is_connected,
    lattice_neighbors,
    neighborhood,
    offsets,
    projection,
    shortest_paths,
)


@pytest.mark.parametrize(
    "n,u,count",
    [(1, 1, 2), (2, 1, 4), (2, 2, 8), (3, 1, 6), (3, 2, 18), (3, 3, 26)],
)
def test_neighbor_counts(n, u, count):
    # 3^n - 1 offsets in total, restricted by how many coordinates may change
    assert len(offsets(n, u)) == count


def test_adjacency_definition():
    assert adjacent((0, 0), (0, 1), 1)
    assert not adjacent((0, 0), (1, 1), 1)
    assert adjacent((0, 0), (1, 1), 2)
    assert not adjacent((0, 0), (0, 0), 2)
    assert not adjacent((0, 0), (2, 0), 2)
    assert adjacent((0, 0, 0), (1, 1, 1), 3)
    assert not adjacent((0, 0, 0), (1, 1, 1), 2)


def test_bad_adjacency_rejected():
    with pytest.raises(LatticeError):
        adjacent((0, 0), (1, 0), 3)
    with pytest.raises(LatticeError):
        adjacent((0, 0), (1, 0, 0), 1)
    with pytest.raises(LatticeError):
        DigitalImage([(0, 0)], 3)
    with pytest.raises(LatticeError):
        DigitalImage([(0, 0, 0, 0)], 1)


def test_duplicates_and_mixed_dimensions_rejected():
    with pytest.raises(LatticeError):
        DigitalImage([(0, 0), (0, 0)], 1)
    with pytest.raises(LatticeError):
        DigitalImage([(0, 0), (0, 0, 0)], 1)


def test_image_is_canonically_ordered():
    X = DigitalImage([(1, 0), (0, 1), (0, 0)], 1)
    assert X.points == ((0, 0), (0, 1), (1, 0))
    assert X.index[(1, 0)] == 2
    assert (0, 1) in X and (5, 5) not in X
    assert len(X) == 3


def test_projection_is_one_based():
    assert projection((4, 7), 1) == 4
    assert projection((4, 7), 2) == 7
    with pytest.raises(LatticeError):
        projection((4, 7), 0)


def test_neighborhoods_in_square():
    X = DigitalImage(box((0, 2), (0, 2)), 1)
    assert neighborhood(X, (0, 0)) == {(1, 0), (0, 1)}
    assert neighborhood(X, (1, 1), closed=True) == {(1, 1), (0, 1), (2, 1), (1, 0), (1, 2)}
    assert len(DigitalImage(box((0, 2), (0, 2)), 2).neighbors((1, 1))) == 8


def test_close_neighbor_corner_of_square():
    X = DigitalImage(box((0, 2), (0, 2)), 1)
    # N((0,0)) = {(1,0),(0,1)}, both adjacent to (1,1)
    assert is_close_neighbor(X, (0, 0), (1, 1))
    assert not is_close_neighbor(X, (1, 1), (0, 0))
    assert not is_close_neighbor(X, (0, 0), (0, 0))
    assert not is_close_neighbor(X, (1, 0), (1, 1))


def test_strict_containment_never_differs():
    # q lies in N*(q) but never in N(p) unless p is adjacent to q, in which
    # case p lies in N*(q) but not in N(p); either way containment is proper
    for u in (1, 2):
        X = DigitalImage(box((0, 3), (0, 2)) + [(4, 0), (5, 1)], u)
        for p in X.points:
            for q in X.points:
                assert is_close_neighbor(X, p, q) == is_close_neighbor(X, p, q, strict=True)


def test_components_and_connectivity():
    pts = [(0, 0), (1, 1), (5, 5)]
    assert len(components(pts, 1)) == 3
    assert components(pts, 2) == [frozenset({(0, 0), (1, 1)}), frozenset({(5, 5)})]
    assert not is_connected(DigitalImage(pts, 2))
    assert is_connected(DigitalImage(box((0, 3), (0, 1)), 1))


def test_lattice_neighbors_match_adjacency():
    for u in (1, 2):
        for q in lattice_neighbors((3, -2), u):
            assert adjacent((3, -2), q, u)


def test_shortest_paths_unique_and_not():
    X = DigitalImage(box((0, 4), (0, 0)) + [(0, 1), (1, 1)], 1)
    sp = shortest_paths(X, (2, 0), (4, 0))
    assert sp.length == 2 and sp.count == 1
    assert sp.unique_path == ((2, 0), (3, 0), (4, 0))
    sq = shortest_paths(X, (0, 0), (1, 1))
    assert sq.length == 2 and sq.count == 2 and sq.unique_path is None


def test_shortest_path_disconnected():
    X = DigitalImage([(0, 0), (3, 3)], 2)
    with pytest.raises(DisconnectedError):
        shortest_paths(X, (0, 0), (3, 3))


def test_distance_table():
    X = DigitalImage(box((0, 3), (0, 0)) + [(10, 10)], 1)
    d = X.distances
    assert d[X.index[(0, 0)]][X.index[(3, 0)]] == 3
    assert d[X.index[(0, 0)]][X.index[(10, 10)]] == -1
