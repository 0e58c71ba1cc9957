import pytest

from plabic import (
    NotReducedError,
    TooLarge,
    apply_move,
    bridge_graph,
    cyclic_rotation,
    enumerate_ws,
    face_labels,
    label_collection,
    legal_moves,
    lollipop_graph,
    necklace_from_perm,
    positroid,
    strongly_equivalent,
)
from plabic import DecoratedPermutation
from plabic import fixtures as F
from plabic.perms import is_ws_collection
from conftest import random_decorated_permutation


def _by_arc(g, labeling):
    arcs = {}
    internal = []
    for idx, f in enumerate(g.faces()):
        if f.kind == "boundary":
            for i in f.rim_arcs:
                arcs[i] = set(labeling[idx])
        elif f.kind == "internal":
            internal.append(set(labeling[idx]))
    return arcs, internal


def test_two_trees_source_and_target_labels():
    g = F.two_trees_b6()
    arcs_s, _ = _by_arc(g, face_labels(g, "source"))
    assert arcs_s == {
        1: {1, 3, 5}, 2: {1, 3, 5}, 3: {1, 3, 5},
        4: {1, 3, 4}, 5: {3, 4, 5}, 6: {3, 5, 6},
    }
    arcs_t, _ = _by_arc(g, face_labels(g, "target"))
    assert arcs_t == {
        1: {3, 4, 5}, 2: {3, 4, 5}, 3: {3, 4, 5},
        4: {3, 5, 6}, 5: {3, 4, 6}, 6: {1, 3, 4},
    }


def test_fan_target_collection():
    g = F.square_fan_b5()
    coll = {frozenset(s) for s in label_collection(g, "target")}
    expected = {
        frozenset(s)
        for s in ({1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 4}, {1, 4})
    }
    assert coll == expected
    arcs, internal = _by_arc(g, face_labels(g, "target"))
    assert arcs == {1: {2, 3}, 2: {3, 4}, 3: {4, 5}, 4: {1, 5}, 5: {1, 2}}
    assert sorted(internal, key=sorted) == [{1, 4}, {2, 4}]


def test_white_lollipop_only_face():
    g = lollipop_graph("w")
    for mode in ("source", "target"):
        labeling = face_labels(g, mode)
        assert list(labeling.values()) == [frozenset({1})]


def test_labels_require_reduced():
    with pytest.raises(NotReducedError):
        face_labels(F.fork_b1())


def test_label_cardinality_and_ws(rng):
    from plabic import weakly_separated

    for _ in range(40):
        b = rng.randint(1, 7)
        p = random_decorated_permutation(b, rng)
        g = bridge_graph(p)
        labeling = face_labels(g, "target")
        a = p.anti_excedances()
        assert all(len(s) == a for s in labeling.values())
        labels = list(labeling.values())
        for i in range(len(labels)):
            for j in range(i + 1, len(labels)):
                assert weakly_separated(labels[i], labels[j], b)


def test_boundary_faces_carry_the_necklace(rng):
    for _ in range(25):
        b = rng.randint(2, 7)
        p = random_decorated_permutation(b, rng)
        g = bridge_graph(p)
        nk = necklace_from_perm(p)
        arcs, _ = _by_arc(g, face_labels(g, "target"))
        for i, label in arcs.items():
            assert label == set(nk[i % b]), (str(p), i)


def test_strong_equivalence_m2_invariant():
    from plabic import MoveSpec

    g = F.square_fan_b5()
    h = apply_move(g, MoveSpec("InsertBivalentM2", edge=7, color="white"))
    assert strongly_equivalent(g, h)


def test_square_move_breaks_strong_equivalence():
    g = F.square_fan_b5()
    (m,) = [mv for mv in legal_moves(g) if mv.kind == "SquareM1"]
    h = apply_move(g, m)
    assert not strongly_equivalent(g, h)
    diff = label_collection(g, "target") ^ label_collection(h, "target")
    assert len(diff) == 2  # exactly one label flips


def test_different_permutations_not_strongly_equivalent():
    g1 = bridge_graph(DecoratedPermutation.parse("2 1 3_"))
    g2 = bridge_graph(DecoratedPermutation.parse("1_ 3 2"))
    assert not strongly_equivalent(g1, g2)


def test_full_identity_single_collection():
    colls = enumerate_ws(cyclic_rotation(3, 3))
    assert colls == {frozenset({frozenset({1, 2, 3})})}


def test_catalan_counts():
    for b, want in [(4, 2), (5, 5), (6, 14)]:
        assert len(enumerate_ws(cyclic_rotation(2, b))) == want


def test_collections_satisfy_sandwich():
    p = cyclic_rotation(2, 5)
    nk = necklace_from_perm(p)
    posd = positroid(nk)
    for coll in enumerate_ws(p):
        assert len(coll) == 2 * 3 + 1
        assert set(nk.sets) <= coll <= posd
        assert is_ws_collection(coll, 5)


def test_enumerate_respects_limit():
    with pytest.raises(TooLarge):
        enumerate_ws(cyclic_rotation(2, 6), limit=3)


def test_enumerate_threads_agree():
    p = cyclic_rotation(2, 5)
    assert enumerate_ws(p, threads=3) == enumerate_ws(p)


def test_enumerate_nontrivial_decorated():
    from plabic import affinize, length

    p = DecoratedPermutation.parse("3 4 5 1 2 6^")
    colls = enumerate_ws(p)
    nk = necklace_from_perm(p)
    posd = positroid(nk)
    for coll in colls:
        assert set(nk.sets) <= coll <= posd
    # all collections share the bridge-graph size
    a, b = p.anti_excedances(), p.b
    sizes = {len(c) for c in colls}
    assert sizes == {a * (b - a) - length(affinize(p)) + 1}


def test_adjacent_face_labels_swap_along_edge_label(rng):
    """Neighboring face labels differ by the pair of trips traversing the
    shared edge: their sources in source mode (the edge label), their
    targets in target mode.  An independent consistency check between the
    trip machinery and the left-of-trip flood fill."""
    from plabic import all_trips, edge_labels

    graphs = [F.square_fan_b5(), F.two_trees_b6(), F.normal_b5()]
    for _ in range(20):
        graphs.append(bridge_graph(random_decorated_permutation(rng.randint(2, 7), rng)))
    for g in graphs:
        sources = edge_labels(g)
        targets = {e: set() for e in g.edge_ids}
        for t in all_trips(g):
            if t.kind == "oneway":
                for d in t.darts:
                    targets[g.edge_id(d)].add(t.target)
        for mode, swap in (("source", sources), ("target", targets)):
            labeling = face_labels(g, mode)
            fmap = g.face_of_dart()
            for e in g.edge_ids:
                d0, d1 = g.darts_of_edge(e)
                f0, f1 = fmap[d0], fmap[d1]
                if f0 == f1:
                    continue
                diff = labeling[f0] ^ labeling[f1]
                assert diff == frozenset(swap[e]) or not diff, (mode, e)
