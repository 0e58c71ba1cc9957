import pytest

from plabic import NotNormal, TripleView, legal_moves, normalize, trip_permutation
from plabic import fixtures as F
from conftest import random_decorated_permutation


def test_view_requires_normal():
    with pytest.raises(NotNormal):
        TripleView(F.square_fan_b5())


def test_strands_and_triple_points():
    g = F.normal_b5()
    tv = TripleView(g)
    assert tv.strand_permutation() == trip_permutation(g) == [3, 4, 5, 1, 2]
    whites = [v for v in g.internal_vertices() if g.color(v) == "white"]
    assert tv.triple_points == whites
    assert len([t for t in tv.strands if t.kind == "oneway"]) == g.b


def test_minimal_on_reduced_view():
    assert TripleView(F.normal_b5()).minimality().minimal
    assert TripleView(F.normalized_b5()).minimality().minimal


def test_monogon_on_digon_view():
    res = normalize(F.ALL_NAMED["mixed_digon_b2"]())
    assert res.ok
    mn = TripleView(res.normal).minimality()
    assert not mn.minimal
    assert mn.badgon in ("monogon", "closed_strand")


def test_swivel_preserves_strand_data():
    g = F.normal_b5()
    tv = TripleView(g)
    for m in legal_moves(g):
        if m.kind not in ("UrbanRenewal", "NormalFlip"):
            continue
        tv2 = tv.swivel(m)
        assert tv2.strand_permutation() == tv.strand_permutation()
        assert len(tv2.triple_points) == len(tv.triple_points)


def test_swivel_twice_roundtrips():
    g = F.normal_b5()
    tv = TripleView(g)
    sites = [m for m in legal_moves(g) if m.kind == "NormalFlip"]
    tv2 = tv.swivel(sites[0])
    back = [m for m in legal_moves(tv2.base) if m.kind == "NormalFlip"]
    assert any(tv2.swivel(m).base == g for m in back)


def test_bridge_views_minimal(rng):
    from plabic import bridge_graph

    for _ in range(25):
        p = random_decorated_permutation(rng.randint(2, 6), rng)
        res = normalize(bridge_graph(p))
        assert res.ok
        if res.normal.b:
            assert TripleView(res.normal).minimality().minimal


def test_tikz_overlay():
    text = TripleView(F.normal_b5()).to_tikz()
    assert "strand" in text and "tikzpicture" in text
