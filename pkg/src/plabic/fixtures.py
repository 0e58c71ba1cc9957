"""Hand-encoded example graphs used by the test suite and the CLI docs.

Each graph is written down as clockwise rotation lists of edge ids; see
the JSON format in ``graph``.  Names describe the shape of the example.
"""

from __future__ import annotations

from .graph import BLACK, WHITE, PlabicGraph

W, B = WHITE, BLACK


def square_fan_b5() -> PlabicGraph:
    """b = 5: an alternating square with a fan of three vertices below.

    Trip permutation (3, 4, 5, 1, 2); its target face labels form a maximal
    weakly separated collection in C([5], 2).
    """
    colors = {0: W, 1: B, 2: W, 3: B, 4: W, 5: B, 6: W}
    rotation = {
        0: [0, 5, 8],
        1: [1, 6, 5],
        2: [6, 10, 7],
        3: [8, 7, 9],
        4: [9, 11, 4],
        5: [12, 3, 11],
        6: [2, 12, 10],
        -1: [0],
        -2: [1],
        -3: [2],
        -4: [3],
        -5: [4],
    }
    return PlabicGraph.from_rotation(5, colors, rotation)


def square_fan_b5_lollipop() -> PlabicGraph:
    """The square-fan graph with a sixth boundary vertex holding a white
    lollipop; decorated trip permutation (3, 4, 5, 1, 2, 6over)."""
    g = square_fan_b5()
    colors = {v: g.color(v) for v in g.internal_vertices()}
    colors[7] = W
    rotation = {v: [g.edge_id(d) for d in g.rotation(v)] for v in g._rot}
    rotation[7] = [13]
    rotation[-6] = [13]
    return PlabicGraph.from_rotation(6, colors, rotation)


def two_trees_b6() -> PlabicGraph:
    """b = 6: a white-black path joining four boundary vertices plus a black
    lollipop at 2 and a white lollipop at 3; decorated trip permutation
    (5, 2under, 3over, 6, 4, 1)."""
    colors = {0: W, 1: B, 2: B, 3: W}
    rotation = {
        0: [6, 5, 0],
        1: [3, 4, 6],
        2: [1],
        3: [2],
        -1: [0],
        -2: [1],
        -3: [2],
        -4: [3],
        -5: [4],
        -6: [5],
    }
    return PlabicGraph.from_rotation(6, colors, rotation)


def normal_b5() -> PlabicGraph:
    """The square-fan graph made normal by inserting bivalent black
    vertices; still has trip permutation (3, 4, 5, 1, 2)."""
    colors = {0: W, 1: B, 2: W, 3: B, 4: W, 5: B, 6: W, 7: B, 8: B, 9: B, 10: B}
    rotation = {
        0: [1, 2, 5],
        1: [3, 4, 2],
        2: [4, 7, 6],
        3: [5, 6, 9],
        4: [9, 12, 10],
        5: [13, 14, 12],
        6: [15, 13, 8],
        7: [0, 1],
        8: [7, 8],
        9: [10, 11],
        10: [15, 16],
        -1: [0],
        -2: [3],
        -3: [16],
        -4: [14],
        -5: [11],
    }
    return PlabicGraph.from_rotation(5, colors, rotation)


def square_path_b6() -> PlabicGraph:
    """b = 6: a different reduced graph with decorated trip permutation
    (3, 4, 5, 1, 2, 6over); move-equivalent to square_fan_b5_lollipop."""
    colors = {0: B, 1: W, 2: W, 3: W, 4: B, 5: B, 6: W, 7: W}
    rotation = {
        0: [1, 4, 0],
        1: [2, 3, 1],
        2: [3, 9, 7],
        3: [4, 6, 5],
        4: [7, 8, 6],
        5: [10, 11, 9],
        6: [8, 11, 12],
        7: [13],
        -1: [0],
        -2: [2],
        -3: [10],
        -4: [12],
        -5: [5],
        -6: [13],
    }
    return PlabicGraph.from_rotation(6, colors, rotation)


def adjacent_squares_b3() -> PlabicGraph:
    """Two alternating squares A (vertices 0..3) and B (vertices 5..8)
    joined through a middle black vertex, with a doubled edge to the east
    of A.  The square move is legal at both squares, but only A has its
    four surrounding faces consecutively distinct."""
    colors = {0: B, 1: W, 2: B, 3: W, 4: B, 5: W, 6: B, 7: W, 8: B}
    rotation = {
        0: [10, 13, 9],
        1: [11, 10, 8],
        2: [14, 12, 11],
        3: [12, 14, 13],
        4: [8, 9, 7],
        5: [7, 4, 3],
        6: [0, 3, 5],
        7: [5, 6, 2],
        8: [4, 1, 6],
        -1: [0],
        -2: [1],
        -3: [2],
    }
    return PlabicGraph.from_rotation(3, colors, rotation)


def collapsible_tree_b3() -> PlabicGraph:
    """A mixed-color pendant tree rooted at an internal black vertex with
    three boundary stubs; the whole tree collapses onto the root."""
    colors = {0: B, 1: W, 2: W, 3: B, 4: B, 5: W, 6: B, 7: B, 8: W}
    rotation = {
        0: [3, 0, 1, 2],
        1: [5, 6, 3, 4],
        2: [4],
        3: [5],
        4: [7, 9, 6],
        5: [8, 7],
        6: [8],
        7: [10, 9],
        8: [10],
        -1: [0],
        -2: [1],
        -3: [2],
    }
    return PlabicGraph.from_rotation(3, colors, rotation)


def collapsed_tree_b3() -> PlabicGraph:
    """What collapsible_tree_b3 collapses to: the bare root with its stubs."""
    colors = {0: B}
    rotation = {0: [0, 1, 2], -1: [0], -2: [1], -3: [2]}
    return PlabicGraph.from_rotation(3, colors, rotation)


def fork_b1() -> PlabicGraph:
    """b = 1: a white vertex with two black leaves; the trip fixes 1 but the
    component is not collapsible, so the graph is not reduced."""
    colors = {0: W, 1: B, 2: B}
    rotation = {0: [2, 0, 1], 1: [1], 2: [2], -1: [0]}
    return PlabicGraph.from_rotation(1, colors, rotation)


def hollow_digon(c1: str, c2: str) -> PlabicGraph:
    """b = 2: two vertices joined by a doubled edge, one stub on each side."""
    colors = {0: c1, 1: c2}
    rotation = {0: [1, 2, 0], 1: [3, 2, 1], -1: [0], -2: [3]}
    return PlabicGraph.from_rotation(2, colors, rotation)


def bad_leaf_b2() -> PlabicGraph:
    """b = 2: a trivalent white vertex carrying a black leaf; not reduced."""
    colors = {0: W, 1: B}
    rotation = {0: [0, 1, 2], 1: [2], -1: [0], -2: [1]}
    return PlabicGraph.from_rotation(2, colors, rotation)


def grid_fragment_b4() -> PlabicGraph:
    """A 12-vertex grid fragment with five internal faces, one of them an
    alternating square (the quadrilateral between vertices 6, 9, 10, 7)."""
    colors = {
        0: B, 1: W, 2: B, 3: W,
        4: W, 5: B, 6: B, 7: W,
        8: B, 9: W, 10: B, 11: W,
    }
    rotation = {
        0: [13, 6, 5],
        1: [15, 7, 6],
        2: [17, 8, 7],
        3: [19, 9, 8],
        4: [14, 10, 13],
        5: [11, 15, 10],
        6: [16, 12, 11],
        7: [18, 17, 12],
        8: [1, 14, 0],
        9: [2, 16, 1],
        10: [3, 18, 2],
        11: [4, 19, 3],
        -1: [0],
        -2: [4],
        -3: [9],
        -4: [5],
    }
    return PlabicGraph.from_rotation(4, colors, rotation)


def braid_middle_b6() -> PlabicGraph:
    """b = 6: the middle stage of a braid transformation on three wires;
    exactly one square-move site (the central quadrilateral)."""
    colors = {0: W, 1: W, 2: W, 3: B, 4: B, 5: B}
    rotation = {
        0: [7, 11, 10],
        1: [9, 6, 8],
        2: [6, 1, 0],
        3: [10, 8, 2],
        4: [3, 9, 11],
        5: [5, 7, 4],
        -1: [0],
        -2: [2],
        -3: [4],
        -4: [5],
        -5: [3],
        -6: [1],
    }
    return PlabicGraph.from_rotation(6, colors, rotation)


def presplit_b5() -> PlabicGraph:
    """b = 5: a two-row ladder whose normalization merges the top row."""
    colors = {0: W, 1: B, 2: W, 3: B, 4: W, 5: B}
    rotation = {
        0: [8, 5, 4],
        1: [6, 10, 5],
        2: [9, 7, 6],
        3: [1, 8, 0],
        4: [2, 1],
        5: [3, 9, 2],
        -1: [0],
        -2: [3],
        -3: [7],
        -4: [10],
        -5: [4],
    }
    return PlabicGraph.from_rotation(5, colors, rotation)


def normalized_b5() -> PlabicGraph:
    """The normal graph that presplit_b5 normalizes to."""
    colors = {0: B, 1: W, 2: B, 3: W, 4: B, 5: B}
    rotation = {
        0: [3, 2],
        1: [8, 4, 3],
        2: [5, 10, 4],
        3: [6, 5, 9],
        4: [7, 6],
        5: [1, 9, 8, 0],
        -1: [0],
        -2: [1],
        -3: [7],
        -4: [10],
        -5: [2],
    }
    return PlabicGraph.from_rotation(5, colors, rotation)


def urban_left_b7(bivalent: bool = False) -> PlabicGraph:
    """An alternating square with trivalent whites hanging off outside black
    vertices; the black corners keep 3 and 2 outside stubs (0 and 2 when
    ``bivalent``)."""
    colors = {0: W, 1: B, 2: W, 3: B, 4: B, 5: B}
    rotation = {
        0: [0, 3, 4],
        1: [1, 0, 8, 9, 10],
        2: [6, 2, 1],
        3: [2, 11, 12, 3],
        4: [4, 5],
        5: [7, 6],
        -1: [7],
        -2: [11],
        -3: [12],
        -4: [5],
        -5: [8],
        -6: [9],
        -7: [10],
    }
    if bivalent:
        rotation[3] = [2, 3]
        del rotation[-2], rotation[-3]
        rotation[-2] = rotation.pop(-4)
        rotation[-3] = rotation.pop(-5)
        rotation[-4] = rotation.pop(-6)
        rotation[-5] = rotation.pop(-7)
        return PlabicGraph.from_rotation(5, colors, rotation)
    return PlabicGraph.from_rotation(7, colors, rotation)


def urban_right_b7(bivalent: bool = False) -> PlabicGraph:
    """The image of urban_left_b7 under urban renewal: black corners pushed
    out, whites recolored black with their outside neighbors absorbed."""
    # 0: inner black SW, 1: outside black NW, 2: inner black NE,
    # 3: outside black SE, 4: new white NW, 5: new white SE
    colors = {0: B, 1: B, 2: B, 3: B, 4: W, 5: W}
    rotation = {
        0: [20, 21, 4],   # N to white NW, E to white SE, SW stub
        4: [22, 20, 30],  # E to inner NE, S to inner SW, NW link
        1: [30, 8, 9, 10],
        2: [7, 23, 22],   # NE stub, S to white SE, W to white NW
        5: [23, 31, 21],  # N to inner NE, SE link, W to inner SW
        3: [11, 12, 31],
        -1: [7],
        -2: [11],
        -3: [12],
        -4: [4],
        -5: [8],
        -6: [9],
        -7: [10],
    }
    if bivalent:
        rotation[3] = [31]
        del rotation[-2], rotation[-3]
        rotation[-2] = rotation.pop(-4)
        rotation[-3] = rotation.pop(-5)
        rotation[-4] = rotation.pop(-6)
        rotation[-5] = rotation.pop(-7)
        return PlabicGraph.from_rotation(5, colors, rotation)
    return PlabicGraph.from_rotation(7, colors, rotation)


def octagon_triangulation():
    """A triangulation of the octagon (as vertex triples)."""
    return 8, [(2, 3, 4), (4, 5, 6), (4, 6, 7), (2, 4, 7), (2, 7, 8), (1, 2, 8)]


ALL_NAMED = {
    "square_fan_b5": square_fan_b5,
    "square_fan_b5_lollipop": square_fan_b5_lollipop,
    "two_trees_b6": two_trees_b6,
    "normal_b5": normal_b5,
    "square_path_b6": square_path_b6,
    "adjacent_squares_b3": adjacent_squares_b3,
    "collapsible_tree_b3": collapsible_tree_b3,
    "collapsed_tree_b3": collapsed_tree_b3,
    "fork_b1": fork_b1,
    "white_digon_b2": lambda: hollow_digon(W, W),
    "mixed_digon_b2": lambda: hollow_digon(B, W),
    "black_digon_b2": lambda: hollow_digon(B, B),
    "bad_leaf_b2": bad_leaf_b2,
    "grid_fragment_b4": grid_fragment_b4,
    "braid_middle_b6": braid_middle_b6,
    "presplit_b5": presplit_b5,
    "normalized_b5": normalized_b5,
    "urban_left_b7": urban_left_b7,
    "urban_right_b7": urban_right_b7,
}
