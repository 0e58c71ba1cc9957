"""Local moves on plabic graphs and bounded move-equivalence search.

Move kinds:

* ``SquareM1``      -- flip the colors around an alternating quadrilateral
                       face whose four (distinct) vertices are trivalent;
* ``InsertBivalentM2`` / ``RemoveBivalentM2`` -- insert/remove a degree-2
                       vertex in the middle of an edge;
* ``ContractM3`` / ``SplitM3`` -- contract a unicolored internal edge /
                       split a vertex along a contiguous rotation arc;
* ``FlipM4``        -- the flip for two trivalent same-colored neighbors,
                       realized as a contraction followed by the rotated
                       split;
* ``UrbanRenewal``  -- the bipartite square move that pushes the black
                       corners out (whites must be trivalent);
* ``NormalFlip``    -- the flip through a bivalent black vertex joining two
                       trivalent whites.

Faces are addressed by their index in ``graph.faces()``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IllegalMove
from .graph import BLACK, WHITE, Builder, PlabicGraph, other_color

KINDS = (
    "SquareM1",
    "InsertBivalentM2",
    "RemoveBivalentM2",
    "ContractM3",
    "SplitM3",
    "FlipM4",
    "UrbanRenewal",
    "NormalFlip",
)


@dataclass(frozen=True)
class MoveSpec:
    kind: str
    face: int = None
    vertex: int = None
    edge: int = None
    color: str = None
    start: int = None
    length: int = None
    condition_ok: bool = None  # informational flag on SquareM1 sites

    def to_json_obj(self):
        out = {"kind": self.kind}
        for k in ("face", "vertex", "edge", "color", "start", "length"):
            v = getattr(self, k)
            if v is not None:
                out[k] = v
        if self.condition_ok is not None:
            out["condition_ok"] = self.condition_ok
        return out

    @staticmethod
    def from_json_obj(obj):
        if obj.get("kind") not in KINDS:
            raise IllegalMove(f"unknown move kind {obj.get('kind')!r}")
        return MoveSpec(
            kind=obj["kind"],
            face=obj.get("face"),
            vertex=obj.get("vertex"),
            edge=obj.get("edge"),
            color=obj.get("color"),
            start=obj.get("start"),
            length=obj.get("length"),
            condition_ok=obj.get("condition_ok"),
        )


# ----------------------------------------------------------------------
# site inspection helpers


def _quad_face_vertices(g: PlabicGraph, face):
    """Vertices of a quadrilateral internal face, in walk order."""
    return [g.dart_vertex(d) for d in face.darts]


def _is_square_site(g: PlabicGraph, face) -> bool:
    if face.kind != "internal" or len(face.darts) != 4:
        return False
    vs = _quad_face_vertices(g, face)
    if len(set(vs)) != 4:
        return False
    cols = [g.color(v) for v in vs]
    if cols[0] == cols[1] or cols[1] != cols[3] or cols[0] != cols[2]:
        return False
    return all(g.degree(v) == 3 for v in vs)


def _square_condition_ok(g: PlabicGraph, face) -> bool:
    """Whether the four surrounding faces are consecutively distinct."""
    fmap = g.face_of_dart()
    around = [fmap[g.twin(d)] for d in face.darts]
    return all(around[k] != around[(k + 1) % 4] for k in range(4))


def _is_urban_site(g: PlabicGraph, face) -> bool:
    if face.kind != "internal" or len(face.darts) != 4:
        return False
    vs = _quad_face_vertices(g, face)
    if len(set(vs)) != 4:
        return False
    cols = [g.color(v) for v in vs]
    if cols[0] == cols[1] or cols[1] != cols[3] or cols[0] != cols[2]:
        return False
    square = set(vs)
    for v in vs:
        if g.color(v) != WHITE:
            continue
        if g.degree(v) != 3:
            return False
        side_edges = set()
        for d in face.darts:
            side_edges.add(d >> 1)
            side_edges.add(g.twin(d) >> 1)
        outside = [d for d in g.rotation(v) if (d >> 1) not in side_edges]
        if len(outside) != 1:
            return False
        x = g.dart_vertex(g.twin(outside[0]))
        if x < 0 or x in square or g.color(x) != BLACK:
            return False
    return True


def _is_normal_flip_site(g: PlabicGraph, v) -> bool:
    if v < 0 or g.degree(v) != 2 or g.color(v) != BLACK:
        return False
    n1, n2 = (g.dart_vertex(g.twin(d)) for d in g.rotation(v))
    if n1 == n2 or n1 < 0 or n2 < 0:
        return False
    return all(g.color(n) == WHITE and g.degree(n) == 3 for n in (n1, n2))


# ----------------------------------------------------------------------
# enumeration


def legal_moves(g: PlabicGraph, include_inserts: bool = True):
    """All applicable move sites.

    SplitM3 sites are enumerated for arcs of length 2..deg-2 (splits that
    keep both parts at degree >= 3); other arc lengths are still accepted by
    ``apply_move`` when given explicitly.  SquareM1 specs carry a
    ``condition_ok`` flag telling whether the four surrounding faces are
    consecutively distinct (square moves violating it are still legal, but
    they do not commute with quiver mutation).
    """
    out = []
    faces = g.faces()
    for idx, face in enumerate(faces):
        if _is_square_site(g, face):
            out.append(
                MoveSpec(
                    "SquareM1", face=idx, condition_ok=_square_condition_ok(g, face)
                )
            )
        if _is_urban_site(g, face):
            out.append(MoveSpec("UrbanRenewal", face=idx))
    for v in g.internal_vertices():
        deg = g.degree(v)
        if deg == 2:
            d1, d2 = g.rotation(v)
            if d1 != g.twin(d2):
                out.append(MoveSpec("RemoveBivalentM2", vertex=v))
        if deg >= 4:
            for start in range(deg):
                for length in range(2, deg - 1):
                    out.append(MoveSpec("SplitM3", vertex=v, start=start, length=length))
        if _is_normal_flip_site(g, v):
            out.append(MoveSpec("NormalFlip", vertex=v))
    for e in g.edge_ids:
        u, v = g.edge_endpoints(e)
        if include_inserts:
            out.append(MoveSpec("InsertBivalentM2", edge=e, color=BLACK))
            out.append(MoveSpec("InsertBivalentM2", edge=e, color=WHITE))
        if u >= 0 and v >= 0 and u != v and g.color(u) == g.color(v):
            out.append(MoveSpec("ContractM3", edge=e))
            if g.degree(u) == 3 and g.degree(v) == 3:
                out.append(MoveSpec("FlipM4", edge=e))
    return out


# ----------------------------------------------------------------------
# application


def apply_move(g: PlabicGraph, m: MoveSpec) -> PlabicGraph:
    """Rewrite the graph by one move; raises IllegalMove on bad sites."""
    return _apply(g, m)[0]


def _apply(g: PlabicGraph, m: MoveSpec):
    """Apply a move; returns (new graph, inverse MoveSpec)."""
    if m.kind == "SquareM1":
        return _apply_square(g, m)
    if m.kind == "RemoveBivalentM2":
        return _apply_remove_bivalent(g, m)
    if m.kind == "InsertBivalentM2":
        return _apply_insert_bivalent(g, m)
    if m.kind == "ContractM3":
        return _apply_contract(g, m)
    if m.kind == "SplitM3":
        return _apply_split(g, m)
    if m.kind == "FlipM4":
        return _apply_flip(g, m)
    if m.kind == "UrbanRenewal":
        return _apply_urban(g, m)
    if m.kind == "NormalFlip":
        return _apply_normal_flip(g, m)
    raise IllegalMove(f"unknown move kind {m.kind!r}")


def _face_at(g, idx):
    faces = g.faces()
    if idx is None or not 0 <= idx < len(faces):
        raise IllegalMove(f"no face with index {idx}")
    return faces[idx]


def _apply_square(g, m):
    face = _face_at(g, m.face)
    if not _is_square_site(g, face):
        raise IllegalMove(f"face {m.face} is not a square-move site")
    vs = _quad_face_vertices(g, face)
    colors = dict(g._colors)
    for v in vs:
        colors[v] = other_color(colors[v])
    out = PlabicGraph(g.b, colors, g._rot, g._edge_ids)
    return out, MoveSpec("SquareM1", face=m.face)


def _apply_remove_bivalent(g, m):
    v = m.vertex
    if v is None or v < 0 or v not in g._colors or g.degree(v) != 2:
        raise IllegalMove(f"vertex {v} is not an internal bivalent vertex")
    d1, d2 = g.rotation(v)
    if d1 == g.twin(d2):
        raise IllegalMove(f"vertex {v} carries only a loop")
    color = g.color(v)
    kept = min(g.edge_id(d1), g.edge_id(d2))
    bld = Builder(g)
    bld.remove_bivalent(v)
    return bld.freeze(), MoveSpec("InsertBivalentM2", edge=kept, color=color)


def _builder_dart_of_edge(bld: Builder, edge_id):
    cands = [d for d, e in bld.eid.items() if e == edge_id]
    if not cands:
        raise IllegalMove(f"no edge with id {edge_id}")
    cands.sort(key=lambda d: (bld.dv[d], bld.rot[bld.dv[d]].index(d)))
    return cands[0]


def _apply_insert_bivalent(g, m):
    if m.color not in (BLACK, WHITE):
        raise IllegalMove(f"insertion needs a color, got {m.color!r}")
    bld = Builder(g)
    d = _builder_dart_of_edge(bld, m.edge)
    w = bld.insert_bivalent(d, m.color)
    return bld.freeze(), MoveSpec("RemoveBivalentM2", vertex=w)


def _apply_contract(g, m):
    try:
        u, v = g.edge_endpoints(m.edge)
    except ValueError:
        raise IllegalMove(f"no edge with id {m.edge}")
    if u < 0 or v < 0 or u == v or g.color(u) != g.color(v):
        raise IllegalMove(f"edge {m.edge} is not a contractible unicolored edge")
    bld = Builder(g)
    d = _builder_dart_of_edge(bld, m.edge)
    if bld.dv[d] != min(u, v):
        d = bld.twin[d]
    survivor = bld.dv[d]
    j = bld.rot[survivor].index(d)
    fan = bld.degree(bld.other_end(d)) - 1
    bld.contract(d)
    return bld.freeze(), MoveSpec("SplitM3", vertex=survivor, start=j, length=fan)


def _apply_split(g, m):
    v = m.vertex
    if v is None or v < 0 or v not in g._colors:
        raise IllegalMove(f"vertex {v} is not internal")
    deg = g.degree(v)
    if m.start is None or m.length is None or not 0 <= m.length <= deg:
        raise IllegalMove(f"bad split arc (start={m.start}, length={m.length})")
    bld = Builder(g)
    w = bld.split(v, m.start % max(deg, 1), m.length)
    new_edge = max(bld.eid.values())
    return bld.freeze(), MoveSpec("ContractM3", edge=new_edge)


def _apply_flip(g, m):
    try:
        u, v = g.edge_endpoints(m.edge)
    except ValueError:
        raise IllegalMove(f"no edge with id {m.edge}")
    if (
        u < 0
        or v < 0
        or u == v
        or g.color(u) != g.color(v)
        or g.degree(u) != 3
        or g.degree(v) != 3
    ):
        raise IllegalMove(f"edge {m.edge} is not a flip site")
    bld = Builder(g)
    d = _builder_dart_of_edge(bld, m.edge)
    if bld.dv[d] != min(u, v):
        d = bld.twin[d]
    survivor = bld.dv[d]
    j = bld.rot[survivor].index(d)
    bld.contract(d)
    bld.split(survivor, (j + 1) % 4, 2)
    new_edge = max(bld.eid.values())
    return bld.freeze(), MoveSpec("FlipM4", edge=new_edge)


def _apply_urban(g, m):
    face = _face_at(g, m.face)
    if not _is_urban_site(g, face):
        raise IllegalMove(f"face {m.face} is not an urban renewal site")
    side_darts = set()
    for d in face.darts:
        side_darts.add(d)
        side_darts.add(g.twin(d))
    walk = list(face.darts)
    bld = Builder(g)
    # push out the black corners
    new_whites = []
    for k, d in enumerate(walk):
        bq = g.dart_vertex(g.twin(d))  # vertex the walk enters after dart d
        if g.color(bq) != BLACK:
            continue
        t_in = g.twin(d)
        d_out = walk[(k + 1) % 4]
        rot = bld.rot[bq]
        i = rot.index(t_in)
        assert rot[(i + 1) % len(rot)] == d_out
        # replace the adjacent pair (t_in, d_out) by a link to a new white
        w = bld.add_vertex(WHITE)
        ld0, ld1 = bld._new_dart_pair(bld.fresh_edge_id())
        rest = [rot[(i + 2 + s) % len(rot)] for s in range(len(rot) - 2)]
        bld.rot[bq] = rest + [ld1]
        bld.dv[ld1] = bq
        bld.rot[w] = [t_in, d_out, ld0]
        bld.dv[t_in] = w
        bld.dv[d_out] = w
        bld.dv[ld0] = w
        new_whites.append(w)
    # recolor the white corners black and absorb their outside neighbors
    merged = []
    for v in _quad_face_vertices(g, face):
        if g.color(v) != WHITE:
            continue
        bld.colors[v] = BLACK
        outside = [d for d in bld.rot[v] if d not in side_darts]
        (od,) = outside
        x = bld.other_end(od)
        if bld.colors.get(x) != BLACK:
            raise IllegalMove(
                "urban renewal needs the white corners' outside neighbors black"
            )
        bld.contract(od)
        merged.append(v)
    out = bld.freeze()
    new_square = set(new_whites) | set(merged)
    inv_face = None
    for idx, f in enumerate(out.faces()):
        if f.kind == "internal" and len(f.darts) == 4:
            if {out.dart_vertex(d) for d in f.darts} == new_square:
                inv_face = idx
                break
    return out, MoveSpec("UrbanRenewal", face=inv_face)


def _apply_normal_flip(g, m):
    v = m.vertex
    if not _is_normal_flip_site(g, v):
        raise IllegalMove(f"vertex {v} is not a normal-flip site")
    bld = Builder(g)
    d1, _d2 = bld.rot[v]
    dd = bld.twin[d1]  # survives the removal, becomes the white-white edge
    bld.remove_bivalent(v)
    if bld.dv[dd] != min(bld.dv[dd], bld.other_end(dd)):
        dd = bld.twin[dd]
    survivor = bld.dv[dd]
    j = bld.rot[survivor].index(dd)
    bld.contract(dd)
    bld.split(survivor, (j + 1) % 4, 2)
    link = bld.rot[survivor][-1]  # the split leaves its fresh dart last
    nb = bld.insert_bivalent(link, BLACK)
    return bld.freeze(), MoveSpec("NormalFlip", vertex=nb)


# ----------------------------------------------------------------------
# move equivalence


@dataclass
class EquivalenceResult:
    verdict: str  # "equivalent" | "not_equivalent" | "unknown"
    certificate: list = None
    reason: str = ""

    @property
    def equivalent(self):
        return self.verdict == "equivalent"


def _search_moves(g: PlabicGraph):
    """Moves explored by the bounded search (inserts kept: they are needed
    to undo contractions performed on the other side)."""
    return [
        m
        for m in legal_moves(g)
        if m.kind
        in ("SquareM1", "RemoveBivalentM2", "InsertBivalentM2", "ContractM3", "SplitM3")
    ]


def move_equivalent(
    g1: PlabicGraph, g2: PlabicGraph, budget: int = 6, want_certificate: bool = False
):
    """Decide move equivalence.

    Reduced graphs are decided instantly by comparing decorated trip
    permutations (no certificate, unless ``want_certificate`` forces the
    search).  Otherwise a breadth-first search over local moves runs up to
    ``budget`` steps and either returns a move certificate or gives up with
    "unknown".
    """
    from .normalize import is_reduced
    from .trips import decorated_trip_permutation, trip_permutation

    if trip_permutation(g1) != trip_permutation(g2):
        return EquivalenceResult(
            "not_equivalent", reason="trip permutations differ"
        )
    r1, r2 = is_reduced(g1), is_reduced(g2)
    if r1.reduced != r2.reduced:
        return EquivalenceResult(
            "not_equivalent", reason="exactly one side is reduced"
        )
    if r1.reduced and r2.reduced:
        if decorated_trip_permutation(g1) != decorated_trip_permutation(g2):
            return EquivalenceResult(
                "not_equivalent", reason="decorated trip permutations differ"
            )
        if not want_certificate:
            return EquivalenceResult(
                "equivalent",
                certificate=None,
                reason="both reduced with equal decorated trip permutations",
            )
    if g1 == g2:
        return EquivalenceResult("equivalent", certificate=[], reason="isomorphic")
    # breadth-first search on canonical forms; certificate moves reference
    # the concrete intermediate graphs obtained by replaying from g1
    target = g2.canonical_key()
    state_cap = 200_000
    seen = {g1.canonical_key()}
    frontier = [(g1, [])]
    for _ in range(budget):
        nxt = []
        for g, path in frontier:
            for mv in _search_moves(g):
                try:
                    h, _inv = _apply(g, mv)
                except IllegalMove:  # pragma: no cover
                    continue
                key = h.canonical_key()
                if key == target:
                    return EquivalenceResult(
                        "equivalent",
                        certificate=path + [mv],
                        reason="found by search",
                    )
                if key in seen:
                    continue
                seen.add(key)
                nxt.append((h, path + [mv]))
                if len(seen) > state_cap:
                    return EquivalenceResult(
                        "unknown", reason="state budget exhausted"
                    )
        frontier = nxt
        if not frontier:
            break
    return EquivalenceResult("unknown", reason=f"no certificate within budget {budget}")
