"""Normalization pipeline and the public reducedness decision.

``normalize`` turns an arbitrary plabic graph into a normal one (bipartite,
trivalent white vertices, boundary attached to black) that is
move-equivalent to the input up to lollipop bookkeeping, or else certifies
that the input is not reduced.  ``is_reduced`` runs the pipeline and then
looks for bad features.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import BLACK, WHITE, Builder, PlabicGraph, collapse_trees
from .trips import bad_features


@dataclass(frozen=True)
class Witness:
    kind: str  # "internal_leaf" | "loop" | a bad-feature kind
    vertices: tuple = ()
    edges: tuple = ()

    def to_json_obj(self):
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "edges": list(self.edges),
        }


@dataclass
class NormalizeResult:
    normal: PlabicGraph = None
    witness: Witness = None
    lollipops_removed: list = field(default_factory=list)  # (label, color)
    label_map: dict = field(default_factory=dict)  # old boundary label -> new

    @property
    def ok(self):
        return self.witness is None


def normalize(g: PlabicGraph) -> NormalizeResult:
    """Run the normalization stages.

    1. collapse collapsible trees;  2. remove bivalent vertices;
    3. remove lollipops (recorded; their boundary vertices are dropped and
    the remaining labels renumbered);  4. reject on a leftover internal
    leaf;  5. contract black-black edges, rejecting on loops;  6. split
    white vertices of degree >= 4 into left-comb trees;  7. insert a black
    bivalent vertex on every white-white and white-boundary edge.
    """
    g = collapse_trees(g)
    for e in g.edge_ids:  # loops certify non-reducedness immediately
        if g.is_loop(e):
            return NormalizeResult(witness=Witness("loop", edges=(e,)))
    bld = Builder(g)

    # stage 2: bivalent removal (repeat: removals may chain)
    changed = True
    while changed:
        changed = False
        for v in sorted(bld.colors):
            if v in bld.rot and bld.degree(v) == 2:
                d1, d2 = bld.rot[v]
                if bld.twin[d1] == d2:
                    return NormalizeResult(witness=Witness("loop", vertices=(v,)))
                if bld.other_end(d1) == bld.other_end(d2) == v:
                    continue  # pragma: no cover
                bld.remove_bivalent(v)
                changed = True
    # a bivalent removal can create a loop (hollow digon input)
    for d in list(bld.edge_darts()):
        if bld.dv[d] == bld.other_end(d):
            return NormalizeResult(witness=Witness("loop", edges=(bld.eid[d],)))

    # stage 3: remove lollipops, dropping their boundary vertices
    removed = []
    for v in sorted(bld.colors):
        if v in bld.rot and bld.degree(v) == 1:
            u = bld.other_end(bld.rot[v][0])
            if u < 0:
                removed.append((-u, bld.colors[v]))
                bld.delete_leaf_edge(v)
                bld.drop_isolated_boundary(-u)

    # stage 4: leftover internal leaves certify non-reducedness
    for v in sorted(bld.colors):
        if v in bld.rot and bld.degree(v) == 1:
            return NormalizeResult(witness=Witness("internal_leaf", vertices=(v,)))

    # stage 5: contract black-black edges
    changed = True
    while changed:
        changed = False
        for d in sorted(bld.dv):
            if d not in bld.dv:
                continue
            u, v = bld.dv[d], bld.other_end(d)
            if u < 0 or v < 0:
                continue
            if bld.colors[u] != BLACK or bld.colors[v] != BLACK:
                continue
            if u == v:
                return NormalizeResult(witness=Witness("loop", edges=(bld.eid[d],)))
            if u > v:
                d = bld.twin[d]
                u, v = v, u
            bld.contract(d)
            changed = True
    for d in list(bld.edge_darts()):
        if bld.dv[d] == bld.other_end(d):
            return NormalizeResult(witness=Witness("loop", edges=(bld.eid[d],)))

    # stage 6: split white vertices of degree >= 4 into left combs
    changed = True
    while changed:
        changed = False
        for v in sorted(bld.colors):
            if v in bld.rot and bld.colors[v] == WHITE and bld.degree(v) >= 4:
                bld.split(v, 0, 2)
                changed = True

    # stage 7: a black bivalent vertex on every edge with no black endpoint
    # (white-white, white-boundary, and boundary-boundary edges)
    for d in sorted(bld.edge_darts()):
        u, v = bld.dv[d], bld.other_end(d)
        black_u = u >= 0 and bld.colors[u] == BLACK
        black_v = v >= 0 and bld.colors[v] == BLACK
        if not black_u and not black_v:
            bld.insert_bivalent(d, BLACK)

    surviving = [i for i in range(1, g.b + 1) if i not in {lab for lab, _ in removed}]
    label_map = bld.relabel_boundary(surviving)
    return NormalizeResult(
        normal=bld.freeze(),
        lollipops_removed=removed,
        label_map=label_map,
    )


@dataclass
class ReducednessResult:
    reduced: bool
    witness: Witness = None


def is_reduced(g: PlabicGraph) -> ReducednessResult:
    """Whether the graph is reduced: normalize, then look for bad features."""
    if "is_reduced" in g._cache:
        return g._cache["is_reduced"]
    res = normalize(g)
    if not res.ok:
        out = ReducednessResult(False, res.witness)
    else:
        n = res.normal
        if n.b == 0:
            out = ReducednessResult(True)
        else:
            feats = bad_features(n)
            if feats:
                f = feats[0]
                out = ReducednessResult(False, Witness(f.kind, edges=f.edges))
            else:
                out = ReducednessResult(True)
    g._cache["is_reduced"] = out
    return out
