from plabic import (
    bridge_graph,
    classify,
    is_reduced,
    lollipop_graph,
    normalize,
    trip_permutation,
)
from plabic import fixtures as F
from conftest import random_decorated_permutation


def test_normalize_ladder_matches_expected():
    res = normalize(F.presplit_b5())
    assert res.ok
    assert res.normal == F.normalized_b5()
    assert res.lollipops_removed == []
    assert res.label_map == {i: i for i in range(1, 6)}


def test_normalize_idempotent_on_normal():
    g = F.normalized_b5()
    res = normalize(g)
    assert res.ok and res.normal == g
    g2 = F.normal_b5()
    res2 = normalize(g2)
    assert res2.ok and res2.normal == g2


def test_normalize_rejects_internal_leaf():
    res = normalize(F.bad_leaf_b2())
    assert not res.ok
    assert res.witness.kind == "internal_leaf"


def test_normalize_removes_lollipops_and_relabels():
    g = F.square_fan_b5_lollipop()
    res = normalize(g)
    assert res.ok
    assert res.lollipops_removed == [(6, "white")]
    assert res.normal.b == 5
    assert res.label_map == {i: i for i in range(1, 6)}
    assert classify(res.normal)["normal"]
    assert trip_permutation(res.normal) == [3, 4, 5, 1, 2]


def test_normalize_relabeling_of_interior_lollipop():
    g = lollipop_graph("bwb")
    res = normalize(g)
    assert res.ok
    assert res.normal.b == 0
    assert sorted(res.lollipops_removed) == [(1, "black"), (2, "white"), (3, "black")]


def test_normalize_rejects_loops():
    import json

    from plabic import PlabicGraph

    raw = {
        "b": 1,
        "vertices": [{"id": 0, "color": "black"}],
        "edges": [{"id": 0}, {"id": 1}],
        "rotation": {"0": [0, 1, 1], "-1": [0]},
    }
    g = PlabicGraph.from_json(json.dumps(raw))
    res = normalize(g)
    assert not res.ok and res.witness.kind == "loop"


def test_normalize_black_black_contraction_loop():
    # black-black digon: contracting one side makes the other a loop
    g = F.ALL_NAMED["black_digon_b2"]()
    res = normalize(g)
    assert not res.ok and res.witness.kind == "loop"


def test_normalize_output_is_normal(rng):
    for _ in range(40):
        g = bridge_graph(random_decorated_permutation(rng.randint(1, 7), rng))
        res = normalize(g)
        assert res.ok
        if res.normal.b:
            assert classify(res.normal)["normal"]


def test_normalize_trip_restriction(rng):
    for _ in range(40):
        g = bridge_graph(random_decorated_permutation(rng.randint(2, 7), rng))
        res = normalize(g)
        if not res.ok or not res.normal.b:
            continue
        pi = trip_permutation(g)
        inv = {old: new for old, new in res.label_map.items()}
        new_pi = trip_permutation(res.normal)
        for old, new in inv.items():
            target = pi[old - 1]
            assert target in inv  # surviving targets survive
            assert new_pi[new - 1] == inv[target]
        removed = {lab for lab, _ in res.lollipops_removed}
        assert all(pi[i - 1] == i for i in removed)


def test_is_reduced_fixture_verdicts():
    assert is_reduced(F.square_fan_b5()).reduced
    assert is_reduced(F.normal_b5()).reduced
    assert is_reduced(F.square_path_b6()).reduced
    assert not is_reduced(F.fork_b1()).reduced
    assert not is_reduced(F.bad_leaf_b2()).reduced
    for name in ("white_digon_b2", "mixed_digon_b2", "black_digon_b2"):
        assert not is_reduced(F.ALL_NAMED[name]()).reduced


def test_is_reduced_all_lollipops():
    assert is_reduced(lollipop_graph("wbwb")).reduced


def test_is_reduced_invariant_under_moves(rng):
    from plabic import apply_move, legal_moves

    g = F.ALL_NAMED["mixed_digon_b2"]()
    for _ in range(15):
        mv = rng.choice(legal_moves(g))
        g = apply_move(g, mv)
        assert not is_reduced(g).reduced
