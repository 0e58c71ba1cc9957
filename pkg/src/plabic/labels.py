"""Face labelings of reduced plabic graphs and weakly separated collections.

A face picks up the source label i (resp. target label i) when it lies to
the left of the trip starting (resp. ending) at boundary vertex i.  Trips
in a reduced graph cut the disk in two, so "left" is computed by seeding
the faces adjacent to the trip on its left and flooding across every edge
the trip does not use.  Fixed-point trips contribute to every face when
their lollipop is white and to none when it is black.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .bridges import bridge_graph
from .errors import NotReducedError, TooLarge
from .graph import PlabicGraph
from .normalize import is_reduced
from .perms import (
    DecoratedPermutation,
    affinize,
    length,
    necklace_from_perm,
    positroid,
    weakly_separated,
)
from .trips import all_trips, decorated_trip_permutation


def _left_faces(g: PlabicGraph, trip) -> set:
    """Indices of the non-outer faces on the left of a one-way trip."""
    fmap = g.face_of_dart()
    used_edges = {g.edge_id(d) for d in trip.darts}
    seeds = {fmap[d] for d in trip.darts}
    # flood across edges the trip does not traverse
    adjacency = {}
    for e in g.edge_ids:
        if e in used_edges:
            continue
        d0, d1 = g.darts_of_edge(e)
        f0, f1 = fmap[d0], fmap[d1]
        adjacency.setdefault(f0, set()).add(f1)
        adjacency.setdefault(f1, set()).add(f0)
    out = set()
    stack = list(seeds)
    while stack:
        f = stack.pop()
        if f in out:
            continue
        out.add(f)
        stack.extend(adjacency.get(f, ()))
    return out


def face_labels(g: PlabicGraph, mode: str = "target", check: bool = True) -> dict:
    """Map each non-outer face index to its label set.

    Requires a reduced graph (labels are only well-sized there); pass
    ``check=False`` to skip the reducedness test when the caller already
    guarantees it.
    """
    if mode not in ("source", "target"):
        raise ValueError(f"mode must be 'source' or 'target', got {mode!r}")
    if check:
        red = is_reduced(g)
        if not red.reduced:
            raise NotReducedError(red.witness)
    cache_key = ("face_labels", mode)
    if cache_key in g._cache:
        return g._cache[cache_key]
    decorated = decorated_trip_permutation(g)
    faces = g.faces()
    nonouter = [idx for idx, f in enumerate(faces) if f.kind != "outer"]
    labels = {idx: set() for idx in nonouter}
    for t in all_trips(g):
        if t.kind != "oneway":
            continue
        mark = t.source if mode == "source" else t.target
        if t.source == t.target:
            if decorated.decorations[t.source] == "over":
                for idx in nonouter:
                    labels[idx].add(mark)
            continue
        for idx in _left_faces(g, t):
            labels[idx].add(mark)
    labels = {idx: frozenset(s) for idx, s in labels.items()}
    g._cache[cache_key] = labels
    return labels


def label_collection(g: PlabicGraph, mode: str = "target", check: bool = True) -> frozenset:
    """The set of face labels (forgetting which face carries which)."""
    return frozenset(face_labels(g, mode, check=check).values())


def strongly_equivalent(g1: PlabicGraph, g2: PlabicGraph) -> bool:
    """Whether two reduced graphs have the same sets of target face labels."""
    return label_collection(g1, "target") == label_collection(g2, "target")


# ----------------------------------------------------------------------
# enumeration of maximal weakly separated collections


def _mutation_steps(collection):
    """All square-move transformations of a collection of a-subsets.

    A member S+{c1,c3} flips to S+{c2,c4} when the four "sides" S+{c1,c2},
    S+{c2,c3}, S+{c3,c4}, S+{c1,c4} are all present, for cyclically ordered
    c1 < c2 < c3 < c4.
    """
    by_core = {}
    for subset in collection:
        for pair in _pairs(subset):
            core = subset - pair
            by_core.setdefault(core, set()).add(pair)
    out = []
    for core, pairs in by_core.items():
        ground = sorted({x for p in pairs for x in p})
        for quad in _quads(ground):
            c1, c2, c3, c4 = quad
            sides = (
                frozenset({c1, c2}),
                frozenset({c2, c3}),
                frozenset({c3, c4}),
                frozenset({c1, c4}),
            )
            diag, anti = frozenset({c1, c3}), frozenset({c2, c4})
            if all(s in pairs for s in sides):
                if diag in pairs:
                    out.append((core | diag, core | anti))
                if anti in pairs:
                    out.append((core | anti, core | diag))
    return out


def _pairs(subset):
    xs = sorted(subset)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            yield frozenset((xs[i], xs[j]))


def _quads(ground):
    n = len(ground)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    yield (ground[i], ground[j], ground[k], ground[l])


def enumerate_ws(p: DecoratedPermutation, limit: int = None, threads: int = 1):
    """All maximal weakly separated collections attached to the permutation.

    Starts from the target labels of a bridge graph and closes under square
    moves; every collection returned contains the Grassmann necklace, lies
    inside the positroid, has size a(b-a) - length + 1 and is pairwise
    weakly separated.  Raises TooLarge when ``limit`` is exceeded.
    """
    b = p.b
    a = p.anti_excedances()
    nk = necklace_from_perm(p)
    posd = positroid(nk)
    size = a * (b - a) - length(affinize(p)) + 1
    seed = label_collection(bridge_graph(p), "target")
    _check_collection(seed, b, nk, posd, size)

    def expand(coll):
        found = []
        for old, new in _mutation_steps(coll):
            cand = frozenset((coll - {old}) | {new})
            if len(cand) != size:
                continue
            if new not in posd:
                continue
            if not all(new == s or weakly_separated(new, s, b) for s in cand):
                continue
            if not all(s in cand for s in nk.sets):
                continue
            found.append(cand)
        return found

    seen = {seed}
    frontier = [seed]
    while frontier:
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                batches = list(pool.map(expand, frontier))
        else:
            batches = [expand(c) for c in frontier]
        nxt = []
        for batch in batches:
            for cand in batch:
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
                    if limit is not None and len(seen) > limit:
                        raise TooLarge(
                            f"more than {limit} collections; raise the limit"
                        )
        frontier = nxt
    return seen


def _check_collection(coll, b, nk, posd, size):
    if len(coll) != size:
        raise AssertionError(
            f"seed collection has {len(coll)} labels, expected {size}"
        )
    for s in nk.sets:
        if s not in coll:
            raise AssertionError(f"necklace member {sorted(s)} missing from seed")
    for s in coll:
        if s not in posd:
            raise AssertionError(f"seed label {sorted(s)} outside the positroid")
