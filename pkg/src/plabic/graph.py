"""Plabic graphs as rotation systems in a disk.

A plabic graph is stored as a half-edge (dart) structure: every edge
contributes two darts that are twins of each other, and every vertex holds
the cyclic list of its incident darts in *clockwise* order as drawn.
Boundary vertices are uncolored, carry ids ``-1 .. -b`` (id ``-i`` is the
boundary vertex labeled ``i``), and are incident to exactly one edge.
Internal vertices have nonnegative ids and are black or white.

Graphs are immutable values; every operation returns a new graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import InvalidGraph

BLACK = "black"
WHITE = "white"


def other_color(c: str) -> str:
    return WHITE if c == BLACK else BLACK


@dataclass(frozen=True)
class Face:
    """One face of the rim-augmented graph.

    ``kind`` is "internal", "boundary" or "outer".  ``darts`` lists the graph
    darts of the boundary walk in order; ``rim_arcs`` lists the indices i of
    the rim arcs (joining boundary labels i and i+1) traversed by the walk.
    """

    kind: str
    darts: tuple
    rim_arcs: tuple


@dataclass
class ValidationReport:
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def add(self, msg: str) -> None:
        self.problems.append(msg)


class PlabicGraph:
    """Immutable plabic graph.

    Darts are integers ``2k`` and ``2k+1`` for edge index ``k``; the twin of
    dart ``d`` is ``d ^ 1``.  Edge index ``k`` carries the public edge id
    ``edge_ids[k]`` used by the JSON format.
    """

    __slots__ = ("b", "_colors", "_rot", "_dart_vertex", "_edge_ids", "_cache")

    def __init__(self, b, colors, rot, edge_ids):
        self.b = b
        self._colors = dict(colors)
        self._rot = {v: tuple(ds) for v, ds in rot.items()}
        self._edge_ids = tuple(edge_ids)
        dv = {}
        for v, ds in self._rot.items():
            for d in ds:
                dv[d] = v
        self._dart_vertex = dv
        self._cache = {}

    # ------------------------------------------------------------------
    # construction

    @staticmethod
    def from_rotation(b, colors, rotation):
        """Build a graph from rotation lists of *edge ids*.

        ``rotation`` maps every vertex id (boundary ids ``-1..-b`` included)
        to its clockwise list of incident edge ids; a loop's id appears twice
        in its vertex's list.
        """
        report = validate_raw(b, colors, rotation)
        if not report.ok:
            raise InvalidGraph(report.problems)
        return PlabicGraph._from_rotation_unchecked(b, colors, rotation)

    @staticmethod
    def _from_rotation_unchecked(b, colors, rotation):
        ids = sorted({e for ds in rotation.values() for e in ds})
        index_of = {e: k for k, e in enumerate(ids)}
        seen = {}
        rot = {}
        for v in sorted(rotation):
            darts = []
            for e in rotation[v]:
                k = index_of[e]
                side = seen.get(e, 0)
                seen[e] = side + 1
                darts.append(2 * k + side)
            rot[v] = tuple(darts)
        return PlabicGraph(b, colors, rot, ids)

    @staticmethod
    def from_json(text_or_obj):
        obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
        try:
            b = obj["b"]
            colors = {int(v["id"]): v["color"] for v in obj.get("vertices", [])}
            rotation = {int(v): list(es) for v, es in obj.get("rotation", {}).items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidGraph([f"malformed graph object: {exc}"])
        declared = [int(e["id"]) for e in obj.get("edges", [])]
        used = {e for ds in rotation.values() for e in ds}
        extra = sorted(set(declared) - used)
        if extra:
            raise InvalidGraph([f"declared edges never used in rotation: {extra}"])
        return PlabicGraph.from_rotation(b, colors, rotation)

    def to_json_obj(self):
        rotation = {}
        for v in sorted(self._rot):
            rotation[str(v)] = [self.edge_id(d) for d in self._rot[v]]
        return {
            "b": self.b,
            "vertices": [
                {"id": v, "color": self._colors[v]} for v in sorted(self._colors)
            ],
            "edges": [{"id": e} for e in sorted(self._edge_ids)],
            "rotation": rotation,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    # ------------------------------------------------------------------
    # basic accessors

    def twin(self, d: int) -> int:
        return d ^ 1

    def dart_vertex(self, d: int) -> int:
        return self._dart_vertex[d]

    def edge_id(self, d: int) -> int:
        return self._edge_ids[d >> 1]

    def darts_of_edge(self, edge_id: int):
        k = self._edge_ids.index(edge_id)
        return 2 * k, 2 * k + 1

    def edge_endpoints(self, edge_id: int):
        d0, d1 = self.darts_of_edge(edge_id)
        return self._dart_vertex[d0], self._dart_vertex[d1]

    @property
    def edge_ids(self):
        return self._edge_ids

    def internal_vertices(self):
        return sorted(self._colors)

    def boundary_vertices(self):
        return [-i for i in range(1, self.b + 1)]

    def color(self, v: int) -> str:
        return self._colors[v]

    def is_boundary(self, v: int) -> bool:
        return v < 0

    def rotation(self, v: int):
        return self._rot[v]

    def degree(self, v: int) -> int:
        return len(self._rot[v])

    def neighbors(self, v: int):
        return [self._dart_vertex[d ^ 1] for d in self._rot[v]]

    def num_darts(self) -> int:
        return 2 * len(self._edge_ids)

    def boundary_dart(self, label: int) -> int:
        """The unique dart based at the boundary vertex with this label."""
        return self._rot[-label][0]

    def rot_next(self, d: int) -> int:
        """Clockwise successor of dart d around its base vertex."""
        ds = self._rot[self._dart_vertex[d]]
        return ds[(ds.index(d) + 1) % len(ds)]

    def rot_prev(self, d: int) -> int:
        ds = self._rot[self._dart_vertex[d]]
        return ds[(ds.index(d) - 1) % len(ds)]

    def is_loop(self, edge_id: int) -> bool:
        u, v = self.edge_endpoints(edge_id)
        return u == v

    def is_lollipop(self, v: int) -> bool:
        """Internal degree-1 vertex hanging off a boundary vertex."""
        if v < 0 or len(self._rot[v]) != 1:
            return False
        return self._dart_vertex[self._rot[v][0] ^ 1] < 0

    # ------------------------------------------------------------------
    # faces

    def faces(self):
        """All faces of the rim-augmented graph, deterministic order.

        The face walk follows ``next(d) = clockwise successor of twin(d)``,
        which keeps the traced face on the left of every dart.  Rim darts are
        pairs ``("fwd", i)`` / ``("bwd", i)`` for the arc joining boundary
        labels i and i+1.
        """
        if "faces" in self._cache:
            return self._cache["faces"]
        b = self.b
        rim_fwd = [("fwd", i) for i in range(1, b + 1)]
        rim_bwd = [("bwd", i) for i in range(1, b + 1)]

        def aug_rotation(label):
            # clockwise at boundary vertex: arc to label+1, graph dart, arc from label-1
            prev_arc = ("bwd", label - 1 if label > 1 else b)
            entries = [("fwd", label)]
            entries.extend(self._rot[-label])
            entries.append(prev_arc)
            return entries

        def aug_twin(d):
            if isinstance(d, tuple):
                kind, i = d
                return ("bwd", i) if kind == "fwd" else ("fwd", i)
            return d ^ 1

        def base_vertex(d):
            if isinstance(d, tuple):
                kind, i = d
                # fwd arc i is based at label i, bwd arc i at label i+1
                return -(i if kind == "fwd" else (i % b) + 1)
            return self._dart_vertex[d]

        rotations = {}
        for label in range(1, b + 1):
            rotations[-label] = aug_rotation(label)
        for v in self._colors:
            rotations[v] = list(self._rot[v])

        def next_dart(d):
            t = aug_twin(d)
            ds = rotations[base_vertex(t)]
            return ds[(ds.index(t) + 1) % len(ds)]

        all_darts = list(range(self.num_darts())) + rim_bwd + rim_fwd
        seen = set()
        faces = []
        for start in all_darts:
            if start in seen:
                continue
            walk = []
            d = start
            while d not in seen:
                seen.add(d)
                walk.append(d)
                d = next_dart(d)
            graph_darts = tuple(x for x in walk if not isinstance(x, tuple))
            arcs = tuple(i for (k, i) in (x for x in walk if isinstance(x, tuple)))
            fwd = any(isinstance(x, tuple) and x[0] == "fwd" for x in walk)
            bwd = any(isinstance(x, tuple) and x[0] == "bwd" for x in walk)
            if fwd and not graph_darts and not bwd:
                kind = "outer"
            elif fwd or bwd:
                kind = "boundary"
            else:
                kind = "internal"
            faces.append(Face(kind, graph_darts, arcs))
        if b == 0:
            faces.append(Face("outer", (), ()))
        self._cache["faces"] = faces
        return faces

    def nonouter_faces(self):
        return [f for f in self.faces() if f.kind != "outer"]

    def face_of_dart(self):
        """Map each graph dart to the index (into faces()) of its face."""
        if "face_of_dart" in self._cache:
            return self._cache["face_of_dart"]
        m = {}
        for idx, f in enumerate(self.faces()):
            for d in f.darts:
                m[d] = idx
        self._cache["face_of_dart"] = m
        return m

    def euler_ok(self) -> bool:
        if self.b == 0:
            return not self._colors and not self._edge_ids
        v = len(self._colors) + self.b
        e = len(self._edge_ids) + self.b
        f = len(self.faces())
        return v - e + f == 2

    # ------------------------------------------------------------------
    # equality and canonical form

    def canonical_key(self):
        """Canonical serialization, invariant under internal relabeling.

        Internal vertices and edges are renumbered by a deterministic
        traversal anchored at the boundary labels, so two graphs have equal
        keys iff they are isomorphic by a boundary-label-preserving map that
        respects rotations.
        """
        if "ckey" in self._cache:
            return self._cache["ckey"]
        new_id = {}
        edge_new = {}
        out = [self.b]
        stack = []
        for label in range(1, self.b + 1):
            stack.append(self.boundary_dart(label))
        order = []  # (vertex, entry dart)
        seen_v = set()
        queue = list(stack)
        qi = 0
        while qi < len(queue):
            d = queue[qi]
            qi += 1
            k = d >> 1
            if k not in edge_new:
                edge_new[k] = len(edge_new)
            w = self._dart_vertex[d ^ 1]
            if w < 0 or w in seen_v:
                continue
            seen_v.add(w)
            new_id[w] = len(new_id)
            ds = self._rot[w]
            i = ds.index(d ^ 1)
            ordered = ds[i:] + ds[:i]
            order.append((w, ordered))
            for dd in ordered[1:]:
                queue.append(dd)
        for w, ordered in order:
            row = [self._colors[w]]
            for dd in ordered:
                k = dd >> 1
                if k not in edge_new:
                    edge_new[k] = len(edge_new)
                row.append(edge_new[k])
            out.append(tuple(row))
        # boundary attachments
        for label in range(1, self.b + 1):
            d = self.boundary_dart(label)
            out.append(("bdry", edge_new[d >> 1]))
        key = tuple(out)
        self._cache["ckey"] = key
        return key

    def __eq__(self, other):
        if not isinstance(other, PlabicGraph):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return (
            f"PlabicGraph(b={self.b}, vertices={len(self._colors)}, "
            f"edges={len(self._edge_ids)})"
        )

    # ------------------------------------------------------------------
    # exporters (display only)

    def to_dot(self) -> str:
        lines = ["graph plabic {"]
        for i in range(1, self.b + 1):
            lines.append(f'  b{i} [shape=none, label="{i}"];')
        for v in sorted(self._colors):
            fill = "black" if self._colors[v] == BLACK else "white"
            fc = "white" if fill == "black" else "black"
            lines.append(
                f'  v{v} [shape=circle, style=filled, fillcolor={fill}, '
                f'fontcolor={fc}, label="{v}"];'
            )

        def name(v):
            return f"b{-v}" if v < 0 else f"v{v}"

        for e in sorted(self._edge_ids):
            u, v = self.edge_endpoints(e)
            lines.append(f"  {name(u)} -- {name(v)} [label={e}];")
        lines.append("}")
        return "\n".join(lines)

    def to_tikz(self) -> str:
        import math

        pos = {}
        for i in range(1, self.b + 1):
            ang = math.pi / 2 - 2 * math.pi * (i - 1) / max(self.b, 1)
            pos[-i] = (3 * math.cos(ang), 3 * math.sin(ang))
        internal = sorted(self._colors)
        n = max(len(internal), 1)
        for j, v in enumerate(internal):
            ang = 2 * math.pi * j / n
            pos[v] = (1.5 * math.cos(ang), 1.5 * math.sin(ang))
        lines = ["\\begin{tikzpicture}", "  \\draw (0,0) circle (3);"]
        for v, (x, y) in pos.items():
            if v < 0:
                lines.append(
                    f"  \\node[label={-v}] (n{abs(v)}b) at ({x:.2f},{y:.2f}) {{}};"
                )
                lines.append(f"  \\fill ({x:.2f},{y:.2f}) circle (1.5pt);")
            else:
                style = "fill" if self._colors[v] == BLACK else "draw"
                lines.append(f"  \\{style} ({x:.2f},{y:.2f}) circle (2.5pt);")

        def coord(v):
            x, y = pos[v]
            return f"({x:.2f},{y:.2f})"

        for e in sorted(self._edge_ids):
            u, v = self.edge_endpoints(e)
            lines.append(f"  \\draw {coord(u)} -- {coord(v)};")
        lines.append("\\end{tikzpicture}")
        return "\n".join(lines)


# ----------------------------------------------------------------------
# validation


def validate_raw(b, colors, rotation) -> ValidationReport:
    """Check the invariants of the rotation-system encoding.

    Accepts raw data (as decoded from JSON); reports every violation found.
    """
    rep = ValidationReport()
    if not isinstance(b, int) or b < 0:
        rep.add(f"b must be a nonnegative integer, got {b!r}")
        return rep
    for v, c in colors.items():
        if v < 0:
            rep.add(f"internal vertex id {v} must be nonnegative")
        if c not in (BLACK, WHITE):
            rep.add(f"vertex {v} has invalid color {c!r}")
    expected = set(colors) | {-i for i in range(1, b + 1)}
    missing = expected - set(rotation)
    for v in sorted(missing):
        rep.add(f"vertex {v} has no rotation entry")
    for v in sorted(set(rotation) - expected):
        rep.add(f"rotation entry for undeclared vertex {v}")
    counts = {}
    for v, ds in rotation.items():
        for e in ds:
            counts[e] = counts.get(e, 0) + 1
    for e, c in sorted(counts.items()):
        if c == 1:
            rep.add(f"edge {e} has only one dart (twin involution violated)")
        elif c != 2:
            rep.add(f"edge {e} appears {c} times in rotations (expected 2)")
    for i in range(1, b + 1):
        ds = rotation.get(-i)
        if ds is not None and len(ds) != 1:
            rep.add(f"boundary vertex {i} has degree {len(ds)} (expected 1)")
    if not rep.ok:
        return rep
    # connectivity to the boundary
    adj = {v: [] for v in rotation}
    place = {}
    for v in sorted(rotation):
        for e in rotation[v]:
            if e in place:
                u = place[e]
                adj[u].append(v)
                adj[v].append(u)
            else:
                place[e] = v
    reached = set()
    stack = [-i for i in range(1, b + 1)]
    while stack:
        v = stack.pop()
        if v in reached:
            continue
        reached.add(v)
        stack.extend(adj[v])
    for v in sorted(colors):
        if v not in reached:
            rep.add(f"internal vertex {v} has no path to the boundary")
    if not rep.ok:
        return rep
    g = PlabicGraph._from_rotation_unchecked(b, colors, rotation)
    if not g.euler_ok():
        rep.add("rim-augmented Euler check V - E + F = 2 failed (graph not planar as drawn)")
    return rep


def validate(g) -> ValidationReport:
    """Validate a graph (or raw JSON-style dict)."""
    if isinstance(g, PlabicGraph):
        obj = g.to_json_obj()
    else:
        obj = g
    colors = {int(v["id"]): v["color"] for v in obj.get("vertices", [])}
    rotation = {int(v): list(es) for v, es in obj.get("rotation", {}).items()}
    return validate_raw(obj.get("b", -1), colors, rotation)


# ----------------------------------------------------------------------
# mutable builder used by moves / normalization / tree collapsing


class Builder:
    """Mutable half-edge structure for graph surgery.

    Darts here are opaque integers private to the builder; ``freeze``
    produces an immutable PlabicGraph.  All operations keep rotations
    planar-consistent (splices preserve the cyclic order).
    """

    def __init__(self, g: PlabicGraph = None):
        self.rot = {}
        self.twin = {}
        self.dv = {}
        self.colors = {}
        self.eid = {}  # dart -> public edge id (same for both darts)
        self.b = 0
        self._next_dart = 0
        if g is not None:
            self.b = g.b
            self.colors = dict(g._colors)
            for v, ds in g._rot.items():
                self.rot[v] = list(ds)
                for d in ds:
                    self.dv[d] = v
                    self.twin[d] = d ^ 1
                    self.eid[d] = g.edge_id(d)
            self._next_dart = g.num_darts()

    # -- fresh ids ------------------------------------------------------

    def fresh_vertex(self) -> int:
        return max(self.colors, default=-1) + 1

    def fresh_edge_id(self) -> int:
        return max(self.eid.values(), default=-1) + 1

    def _new_dart_pair(self, eid):
        d0, d1 = self._next_dart, self._next_dart + 1
        self._next_dart += 2
        self.twin[d0], self.twin[d1] = d1, d0
        self.eid[d0] = self.eid[d1] = eid
        return d0, d1

    # -- queries ---------------------------------------------------------

    def degree(self, v):
        return len(self.rot[v])

    def other_end(self, d):
        return self.dv[self.twin[d]]

    def edge_darts(self):
        seen = set()
        for d in self.dv:
            if d not in seen:
                seen.add(d)
                seen.add(self.twin[d])
                yield d

    # -- surgery ---------------------------------------------------------

    def add_vertex(self, color, vid=None):
        v = self.fresh_vertex() if vid is None else vid
        self.colors[v] = color
        self.rot[v] = []
        return v

    def add_edge(self, u, v, eid=None):
        """Append an edge at the end of both rotations; returns its darts."""
        if eid is None:
            eid = self.fresh_edge_id()
        d0, d1 = self._new_dart_pair(eid)
        self.rot[u].append(d0)
        self.dv[d0] = u
        self.rot[v].append(d1)
        self.dv[d1] = v
        return d0, d1

    def contract(self, d):
        """Contract the edge of dart d, merging vertex(twin(d)) into vertex(d).

        The absorbed vertex's fan replaces d in the survivor's rotation,
        preserving the clockwise order.  The edge must not be a loop.
        """
        t = self.twin[d]
        u, v = self.dv[d], self.dv[t]
        assert u != v, "cannot contract a loop"
        rv = self.rot[v]
        i = rv.index(t)
        fan = rv[i + 1 :] + rv[:i]
        ru = self.rot[u]
        j = ru.index(d)
        self.rot[u] = ru[:j] + fan + ru[j + 1 :]
        for dd in fan:
            self.dv[dd] = u
        del self.rot[v]
        del self.colors[v]
        self._drop_dart(d)
        self._drop_dart(t)
        return u

    def remove_bivalent(self, v):
        """Remove a degree-2 vertex, merging its two edges into one.

        The surviving edge keeps the smaller of the two public ids.  If both
        edges join v to the same vertex, the merged edge is a loop.
        """
        d1, d2 = self.rot[v]
        t1, t2 = self.twin[d1], self.twin[d2]
        keep = min(self.eid[d1], self.eid[d2])
        # t1 and t2 remain, now twins of each other
        self.twin[t1], self.twin[t2] = t2, t1
        self.eid[t1] = self.eid[t2] = keep
        del self.rot[v]
        del self.colors[v]
        for d in (d1, d2):
            del self.dv[d]
            del self.eid[d]
            del self.twin[d]

    def insert_bivalent(self, d, color):
        """Insert a new vertex of the given color in the middle of d's edge.

        The half toward ``vertex(d)`` keeps the public edge id; the other
        half gets a fresh id.  Returns the new vertex id.
        """
        t = self.twin[d]
        w = self.add_vertex(color)
        eid_new = self.fresh_edge_id()
        nd0, nd1 = self._new_dart_pair(eid_new)
        # d keeps its id and now pairs with nd0 at w; t pairs with nd1 at w
        self.twin[d] = nd0
        self.twin[nd0] = d
        self.eid[nd0] = self.eid[d]
        self.twin[t] = nd1
        self.twin[nd1] = t
        self.eid[nd1] = eid_new
        self.eid[t] = eid_new
        self.rot[w] = [nd0, nd1]
        self.dv[nd0] = w
        self.dv[nd1] = w
        return w

    def split(self, v, start, length, color=None):
        """Split off a contiguous rotation arc of v into a new vertex.

        The new vertex takes ``rotation(v)[start:start+length]`` (cyclically)
        and is joined to v by a fresh edge placed where the arc was.
        Returns the new vertex id.
        """
        ds = self.rot[v]
        m = len(ds)
        assert 0 <= length <= m
        arc = [ds[(start + i) % m] for i in range(length)] if m else []
        rest = [ds[(start + length + i) % m] for i in range(m - length)]
        w = self.add_vertex(color if color is not None else self.colors[v])
        d0, d1 = self._new_dart_pair(self.fresh_edge_id())
        self.rot[v] = rest + [d0]
        self.dv[d0] = v
        self.rot[w] = arc + [d1]
        self.dv[d1] = w
        for dd in arc:
            self.dv[dd] = w
        return w

    def delete_leaf_edge(self, v):
        """Delete a degree-1 internal vertex together with its edge."""
        (d,) = self.rot[v]
        t = self.twin[d]
        u = self.dv[t]
        self.rot[u].remove(t)
        del self.rot[v]
        del self.colors[v]
        self._drop_dart(d)
        self._drop_dart(t)
        return u

    def _drop_dart(self, d):
        del self.dv[d]
        del self.eid[d]
        del self.twin[d]

    def relabel_boundary(self, keep_labels):
        """Keep only the listed boundary labels, renumbering 1..b' in order."""
        keep = sorted(keep_labels)
        mapping = {}
        for new, old in enumerate(keep, start=1):
            mapping[old] = new
        new_rot = {}
        for v, ds in self.rot.items():
            if v < 0:
                old = -v
                if old not in mapping:
                    raise ValueError(f"boundary vertex {old} still has edges")
                new_rot[-mapping[old]] = ds
            else:
                new_rot[v] = ds
        self.rot = new_rot
        for d, v in list(self.dv.items()):
            if v < 0:
                self.dv[d] = -mapping[-v]
        self.b = len(keep)
        return mapping

    def drop_isolated_boundary(self, label):
        """Remove an edgeless boundary vertex (after its lollipop was deleted)."""
        assert not self.rot.get(-label)
        self.rot.pop(-label, None)

    def freeze(self) -> PlabicGraph:
        """Produce the immutable graph; public ids are preserved."""
        rotation = {}
        for v in sorted(self.rot):
            rotation[v] = [self.eid[d] for d in self.rot[v]]
        for i in range(1, self.b + 1):
            rotation.setdefault(-i, [])
        return PlabicGraph._from_rotation_unchecked(self.b, self.colors, rotation)


# ----------------------------------------------------------------------
# tree collapsing


def collapse_trees(g: PlabicGraph) -> PlabicGraph:
    """Collapse every collapsible pendant tree of the graph.

    A pendant tree hangs off the rest of the graph (or off a boundary
    vertex) and is collapsed by contracting unicolored edges and removing
    bivalent vertices; pieces that cannot be collapsed (e.g. a leaf of the
    opposite color stuck on a trivalent vertex) are left in place.
    Idempotent, and preserves the trip permutation.
    """
    # peel: internal vertices that lie on no cycle and hang off the core
    deg = {v: g.degree(v) for v in g.internal_vertices()}
    adj = {v: [u for u in g.neighbors(v)] for v in g.internal_vertices()}
    peeled = set()
    changed = True
    while changed:
        changed = False
        for v in sorted(deg):
            if v in peeled:
                continue
            live = sum(1 for u in adj[v] if u >= 0 and u not in peeled)
            bdry = sum(1 for u in adj[v] if u < 0)
            if live + bdry <= 1:
                peeled.add(v)
                changed = True
    if not peeled:
        return g

    bld = Builder(g)
    changed = True
    while changed:
        changed = False
        # bivalent removals within the pendant forest
        for v in sorted(bld.colors):
            if v not in peeled or v not in bld.rot:
                continue
            if bld.degree(v) == 2:
                d1, d2 = bld.rot[v]
                if bld.other_end(d1) == v or bld.other_end(d2) == v:
                    continue  # loop through v: not a tree situation
                bld.remove_bivalent(v)
                peeled.discard(v)
                changed = True
        # unicolored contractions with at least one pendant endpoint
        for d in sorted(bld.dv):
            if d not in bld.dv:
                continue
            u, v = bld.dv[d], bld.other_end(d)
            if u < 0 or v < 0 or u == v:
                continue
            if bld.colors[u] != bld.colors[v]:
                continue
            if v in peeled:
                bld.contract(d)  # absorb v into u
                peeled.discard(v)
                changed = True
            elif u in peeled:
                bld.contract(bld.twin[d])
                peeled.discard(u)
                changed = True
    return bld.freeze()


def classify(g: PlabicGraph) -> dict:
    """Structural classification: bipartite / trivalent / normal flags plus
    the lists of lollipops and internal leaves."""
    bipartite = True
    for e in g.edge_ids:
        u, v = g.edge_endpoints(e)
        if u >= 0 and v >= 0 and g.color(u) == g.color(v):
            bipartite = False
            break
    lollipops = [v for v in g.internal_vertices() if g.is_lollipop(v)]
    internal_leaves = [v for v in g.internal_vertices() if g.degree(v) == 1]
    trivalent = all(
        g.degree(v) == 3
        for v in g.internal_vertices()
        if not g.is_lollipop(v)
    )
    whites_trivalent = all(
        g.degree(v) == 3 for v in g.internal_vertices() if g.color(v) == WHITE
    )
    boundary_black = all(
        g.dart_vertex(g.twin(g.boundary_dart(i))) >= 0
        and g.color(g.dart_vertex(g.twin(g.boundary_dart(i)))) == BLACK
        for i in range(1, g.b + 1)
    )
    normal = bipartite and whites_trivalent and boundary_black
    return {
        "bipartite": bipartite,
        "trivalent": trivalent,
        "normal": normal,
        "lollipops": lollipops,
        "internal_leaves": internal_leaves,
    }


def lollipop_graph(decorations) -> PlabicGraph:
    """A graph of b lollipops; ``decorations`` is a string over {'w','b'}."""
    b = len(decorations)
    colors = {}
    rotation = {}
    for i, c in enumerate(decorations, start=1):
        colors[i - 1] = WHITE if c == "w" else BLACK
        rotation[i - 1] = [i - 1]
        rotation[-i] = [i - 1]
    return PlabicGraph.from_rotation(b, colors, rotation)
