from plabic import (
    BoundedAffinePermutation,
    DecoratedPermutation,
    affinize,
    bcfw_factorize,
    bridge_graph,
    cyclic_rotation,
    decorated_trip_permutation,
    is_reduced,
    length,
    trip_permutation,
)
from conftest import random_decorated_permutation


def compose_right_to_left(transpositions, b):
    """pi(x) = t_last(... t_first(x) ...)."""
    out = []
    for x in range(1, b + 1):
        y = x
        for i, j in transpositions:
            y = j if y == i else i if y == j else y
        out.append(y)
    return out


def test_factorization_of_worked_window():
    f = BoundedAffinePermutation((4, 6, 5, 7, 8, 9))
    seq = bcfw_factorize(f)
    assert len(seq.transpositions) == 8
    assert compose_right_to_left(seq.transpositions, 6) == [4, 6, 5, 1, 2, 3]
    assert seq.replay().window == f.window


def test_factorization_identity_empty():
    f = affinize(cyclic_rotation(0, 4))
    assert bcfw_factorize(f).transpositions == []
    f2 = affinize(cyclic_rotation(4, 4))
    assert bcfw_factorize(f2).transpositions == []


def test_factorization_rotation_count():
    f = affinize(cyclic_rotation(2, 5))
    seq = bcfw_factorize(f)
    assert length(f) == 0
    assert len(seq.transpositions) == 2 * 3
    assert compose_right_to_left(seq.transpositions, 5) == [3, 4, 5, 1, 2]


def test_each_swap_increases_length(rng):
    for _ in range(30):
        p = random_decorated_permutation(rng.randint(2, 7), rng)
        f = affinize(p)
        seq = bcfw_factorize(f)
        cur = f
        ell = length(cur)
        for t in seq.transpositions:
            cur = cur.swap(*t)
            assert length(cur) == ell + 1
            ell += 1
        a, b = f.a, f.b
        assert len(seq.transpositions) == a * (b - a) - length(f)


def test_bridge_graph_worked_example():
    g = bridge_graph(DecoratedPermutation.parse("4 6 5 1 2 3"))
    assert trip_permutation(g) == [4, 6, 5, 1, 2, 3]
    assert len(g.nonouter_faces()) == 9
    assert is_reduced(g).reduced


def test_bridge_graph_lollipops_only():
    g = bridge_graph(cyclic_rotation(0, 4))
    assert len(g.internal_vertices()) == 4
    faces = g.faces()
    assert sum(1 for f in faces if f.kind == "boundary") == 1
    assert sum(1 for f in faces if f.kind == "internal") == 0


def test_bridge_graph_rotation_max_faces():
    g = bridge_graph(cyclic_rotation(2, 5))
    assert is_reduced(g).reduced
    assert len(g.nonouter_faces()) == 2 * 3 + 1


def test_bridge_graph_random_properties(rng):
    for _ in range(120):
        b = rng.randint(1, 7)
        p = random_decorated_permutation(b, rng)
        g = bridge_graph(p)
        assert is_reduced(g).reduced
        assert decorated_trip_permutation(g) == p
        a = p.anti_excedances()
        ell = length(affinize(p))
        assert len(g.nonouter_faces()) == a * (b - a) - ell + 1
