"""Exception types shared across the package."""


class PlabicError(Exception):
    """Base class for all domain errors."""


class InvalidGraph(PlabicError):
    """Raised when an operation receives a graph that fails validation."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("invalid plabic graph: " + "; ".join(str(p) for p in problems))


class BadLabel(PlabicError):
    """Boundary label out of range."""


class IllegalMove(PlabicError):
    """A move spec whose preconditions fail on the target graph."""


class HasInternalLeaf(PlabicError):
    """Resonance test applied to a graph with a non-lollipop internal leaf."""


class NotNormal(PlabicError):
    """Operation requires a normal plabic graph."""


class NotReducedError(PlabicError):
    """Operation requires a reduced plabic graph."""

    def __init__(self, witness=None):
        self.witness = witness
        super().__init__(f"graph is not reduced (witness: {witness})")


class UndecoratableFixedPoint(PlabicError):
    """A trip fixed point whose component does not collapse to a lollipop."""

    def __init__(self, label):
        self.label = label
        super().__init__(f"fixed point {label} is not collapsible to a lollipop")


class MalformedWindow(PlabicError):
    """Window values violate the bounded affine permutation axioms."""


class MalformedPermutation(PlabicError):
    """Not a valid (decorated) permutation."""


class NotANecklace(PlabicError):
    """Cyclic sequence of subsets violates the necklace condition."""


class SizeMismatch(PlabicError):
    """Subsets of unequal cardinality where equal ones are required."""


class NotATriangulation(PlabicError):
    """Triangle list does not triangulate a convex polygon."""


class BadWord(PlabicError):
    """Malformed wiring-diagram word."""


class FrozenVertex(PlabicError):
    """Quiver mutation requested at a frozen vertex."""


class TooLarge(PlabicError):
    """Enumeration exceeded its budget."""
