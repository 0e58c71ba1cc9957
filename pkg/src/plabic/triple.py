"""The triple-diagram view of a normal plabic graph.

A normal graph *is* its triple diagram: strands are the trips, triple
points are the white vertices, and the strand permutation is the trip
permutation.  Swivel moves act through urban renewal and the normal flip;
minimality is decided by the bad-feature scan, with witnesses translated
to strand language (roundtrip = closed strand, essential self-intersection
= monogon, bad double crossing = parallel digon)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IllegalMove, NotNormal
from .graph import WHITE, PlabicGraph, classify
from .moves import MoveSpec, apply_move
from .trips import all_trips, bad_features, trip_permutation

_BADGON_OF = {
    "roundtrip": "closed_strand",
    "essential_self_intersection": "monogon",
    "bad_double_crossing": "parallel_digon",
}


@dataclass(frozen=True)
class Minimality:
    minimal: bool
    badgon: str = None  # "closed_strand" | "monogon" | "parallel_digon"
    edges: tuple = ()


class TripleView:
    """Read-only strand view over a normal plabic graph."""

    def __init__(self, base: PlabicGraph):
        if not classify(base)["normal"]:
            raise NotNormal("triple view requires a normal plabic graph")
        self.base = base

    @property
    def strands(self):
        return all_trips(self.base)

    @property
    def triple_points(self):
        return [v for v in self.base.internal_vertices() if self.base.color(v) == WHITE]

    def strand_permutation(self):
        return trip_permutation(self.base)

    def swivel(self, site: MoveSpec) -> "TripleView":
        """Apply a swivel through the corresponding graph move."""
        if site.kind not in ("UrbanRenewal", "NormalFlip"):
            raise IllegalMove(f"{site.kind} is not a swivel site")
        return TripleView(apply_move(self.base, site))

    def minimality(self) -> Minimality:
        feats = bad_features(self.base)
        if not feats:
            return Minimality(True)
        f = feats[0]
        return Minimality(False, _BADGON_OF[f.kind], f.edges)

    def to_tikz(self) -> str:
        """Base graph with the strand trajectories overlaid."""
        lines = [self.base.to_tikz().replace("\\end{tikzpicture}", "")]
        lines.append("% strand overlay: one comment line per strand")
        for t in self.strands:
            route = "-".join(str(self.base.edge_id(d)) for d in t.darts)
            if t.kind == "oneway":
                lines.append(f"% strand {t.source}->{t.target}: edges {route}")
            else:
                lines.append(f"% closed strand: edges {route}")
        lines.append("\\end{tikzpicture}")
        return "\n".join(lines)
