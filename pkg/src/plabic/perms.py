"""Decorated permutations, bounded affine permutations, Grassmann necklaces,
positroids and weak separation."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    MalformedPermutation,
    MalformedWindow,
    NotANecklace,
    SizeMismatch,
)


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation of 1..b with each fixed point tagged 'over' or 'under'."""

    values: tuple
    decorations: dict = field(compare=True, hash=False, default_factory=dict)

    def __init__(self, values, decorations=None):
        values = tuple(values)
        decorations = dict(decorations or {})
        b = len(values)
        if sorted(values) != list(range(1, b + 1)):
            raise MalformedPermutation(f"not a permutation of 1..{b}: {values}")
        fixed = {i for i in range(1, b + 1) if values[i - 1] == i}
        if set(decorations) != fixed:
            raise MalformedPermutation(
                f"decorations {sorted(decorations)} must be keyed exactly by "
                f"the fixed points {sorted(fixed)}"
            )
        if any(d not in ("over", "under") for d in decorations.values()):
            raise MalformedPermutation("decorations must be 'over' or 'under'")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "decorations", decorations)

    @property
    def b(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def inverse(self) -> "DecoratedPermutation":
        inv = [0] * self.b
        for i, v in enumerate(self.values, start=1):
            inv[v - 1] = i
        return DecoratedPermutation(inv, dict(self.decorations))

    def is_fixed(self, i: int) -> bool:
        return self.values[i - 1] == i

    def anti_excedances(self) -> int:
        """Count positions with value below position (or an 'over' fixed point)."""
        n = 0
        for i in range(1, self.b + 1):
            v = self.values[i - 1]
            if v < i or (v == i and self.decorations[i] == "over"):
                n += 1
        return n

    def __hash__(self):
        return hash((self.values, tuple(sorted(self.decorations.items()))))

    # one-line notation: "3 4 5 1 2 6^" with ^ = over, _ = under
    @staticmethod
    def parse(text: str) -> "DecoratedPermutation":
        values = []
        decorations = {}
        for pos, tok in enumerate(text.split(), start=1):
            mark = None
            if tok.endswith("^"):
                mark, tok = "over", tok[:-1]
            elif tok.endswith("_"):
                mark, tok = "under", tok[:-1]
            try:
                v = int(tok)
            except ValueError:
                raise MalformedPermutation(f"bad token {tok!r}")
            values.append(v)
            if mark is not None:
                if v != pos:
                    raise MalformedPermutation(
                        f"decorated entry {tok} at position {pos} is not a fixed point"
                    )
                decorations[pos] = mark
        return DecoratedPermutation(values, decorations)

    def __str__(self):
        toks = []
        for i, v in enumerate(self.values, start=1):
            if v == i:
                toks.append(f"{v}^" if self.decorations[i] == "over" else f"{v}_")
            else:
                toks.append(str(v))
        return " ".join(toks)


def cyclic_rotation(a: int, b: int) -> DecoratedPermutation:
    """The permutation i -> i + a (mod b), with a in 0..b.

    For 0 < a < b this is the fixed-point-free rotation; a = 0 gives the
    all-under identity and a = b the all-over identity (a counts the
    anti-excedances in every case).
    """
    if not 0 <= a <= b:
        raise MalformedPermutation(f"need 0 <= a <= b, got a={a}, b={b}")
    if a == 0:
        return DecoratedPermutation(
            range(1, b + 1), {i: "under" for i in range(1, b + 1)}
        )
    if a == b:
        return DecoratedPermutation(
            range(1, b + 1), {i: "over" for i in range(1, b + 1)}
        )
    return DecoratedPermutation([(i + a - 1) % b + 1 for i in range(1, b + 1)])


# ----------------------------------------------------------------------
# bounded affine permutations


@dataclass(frozen=True)
class BoundedAffinePermutation:
    """Window values f(1)..f(b) of a b-periodic bijection with i <= f(i) <= i+b."""

    window: tuple

    def __init__(self, window):
        window = tuple(window)
        b = len(window)
        if b == 0:
            raise MalformedWindow("empty window")
        for i, v in enumerate(window, start=1):
            if not i <= v <= i + b:
                raise MalformedWindow(f"f({i}) = {v} outside [{i}, {i + b}]")
        if sorted(v % b for v in window) != sorted(range(b)):
            raise MalformedWindow(f"window {window} not a bijection mod {b}")
        if sum(window) % b != sum(range(1, b + 1)) % b:
            raise MalformedWindow(f"window {window} displacement not a multiple of b")
        object.__setattr__(self, "window", window)

    @property
    def b(self) -> int:
        return len(self.window)

    @property
    def a(self) -> int:
        b = self.b
        return (sum(self.window) - b * (b + 1) // 2) // b

    def __call__(self, i: int) -> int:
        b = self.b
        q, r = divmod(i - 1, b)
        return self.window[r] + q * b

    def is_fixed(self, i: int) -> bool:
        return self(i) % self.b == i % self.b

    def is_identity_mod_b(self) -> bool:
        return all(self.is_fixed(i) for i in range(1, self.b + 1))

    def swap(self, i: int, j: int) -> "BoundedAffinePermutation":
        """Swap the values in positions i and j (and all their b-shifts)."""
        b = self.b
        w = list(self.window)
        fi, fj = self(i), self(j)
        qi, ri = divmod(i - 1, b)
        qj, rj = divmod(j - 1, b)
        w[ri] = fj - qi * b
        w[rj] = fi - qj * b
        return BoundedAffinePermutation(w)


def length(f: BoundedAffinePermutation) -> int:
    """Number of inversion classes, counted over representatives
    (i, j) with 1 <= i <= b and i < j < i + b."""
    b = f.b
    n = 0
    for i in range(1, b + 1):
        for j in range(i + 1, i + b):
            if f(i) > f(j):
                n += 1
    return n


def affinize(p: DecoratedPermutation) -> BoundedAffinePermutation:
    """Lift a decorated permutation to its bounded affine window."""
    b = p.b
    w = []
    for i in range(1, b + 1):
        v = p(i)
        if v > i:
            w.append(v)
        elif v < i:
            w.append(v + b)
        elif p.decorations[i] == "under":
            w.append(i)
        else:
            w.append(i + b)
    return BoundedAffinePermutation(w)


def deaffinize(f: BoundedAffinePermutation) -> DecoratedPermutation:
    """Inverse of affinize."""
    b = f.b
    values = []
    decorations = {}
    for i in range(1, b + 1):
        v = f(i)
        if v == i:
            values.append(i)
            decorations[i] = "under"
        elif v == i + b:
            values.append(i)
            decorations[i] = "over"
        elif v <= b:
            values.append(v)
        else:
            values.append(v - b)
    return DecoratedPermutation(values, decorations)


def count_dab(a: int, b: int) -> int:
    """Number of decorated permutations on b letters with a anti-excedances.

    Alternating-sum closed form; the empty sum at a = 0 is read as 1
    (the all-under identity is the unique such permutation).
    """
    if not 0 <= a <= b:
        raise ValueError(f"need 0 <= a <= b, got {a}, {b}")
    if a == 0:
        return 1
    total = 0
    for i in range(a):
        term = (a - i) ** i * (a - i + 1) ** (b - i) - (a - i - 1) ** i * (a - i) ** (
            b - i
        )
        total += (-1) ** i * math.comb(b, i) * term
    return total


# ----------------------------------------------------------------------
# Grassmann necklaces and positroids


@dataclass(frozen=True)
class GrassmannNecklace:
    """Cyclic sequence I_1..I_b of a-subsets with I_{i+1} >= I_i minus {i}."""

    sets: tuple  # tuple of frozensets

    def __init__(self, sets):
        sets = tuple(frozenset(s) for s in sets)
        b = len(sets)
        sizes = {len(s) for s in sets}
        if len(sizes) != 1:
            raise NotANecklace(f"subsets of unequal sizes {sorted(sizes)}")
        for s in sets:
            if not all(1 <= x <= b for x in s):
                raise NotANecklace(f"subset {sorted(s)} not within 1..{b}")
        for i in range(1, b + 1):
            cur, nxt = sets[i - 1], sets[i % b]
            if not (cur - {i}) <= nxt:
                raise NotANecklace(
                    f"I_{i % b + 1} = {sorted(nxt)} does not contain "
                    f"I_{i} - {{{i}}} = {sorted(cur - {i})}"
                )
        object.__setattr__(self, "sets", sets)

    @property
    def b(self) -> int:
        return len(self.sets)

    @property
    def a(self) -> int:
        return len(self.sets[0])

    def __getitem__(self, i):
        return self.sets[i]


def shifted_key(ell: int, b: int):
    """Sort key for the linear order starting at ell: ell < ell+1 < ... < ell-1."""

    def key(x):
        return (x - ell) % b

    return key


def necklace_from_perm(p: DecoratedPermutation) -> GrassmannNecklace:
    """I_ell = the set of ell-anti-excedances of the permutation."""
    b = p.b
    inv = p.inverse()
    sets = []
    for ell in range(1, b + 1):
        key = shifted_key(ell, b)
        s = set()
        for i in range(1, b + 1):
            if p.is_fixed(i):
                if p.decorations[i] == "over":
                    s.add(i)
            elif key(inv(i)) > key(i):
                s.add(i)
        sets.append(s)
    return GrassmannNecklace(sets)


def perm_from_necklace(nk: GrassmannNecklace) -> DecoratedPermutation:
    """Inverse of necklace_from_perm."""
    b = nk.b
    values = []
    decorations = {}
    for i in range(1, b + 1):
        cur, nxt = nk[i - 1], nk[i % b]
        if cur == nxt:
            values.append(i)
            decorations[i] = "over" if i in cur else "under"
        else:
            added = nxt - (cur - {i})
            if len(added) != 1 or i not in cur:
                raise NotANecklace(f"cannot read a permutation value at position {i}")
            values.append(next(iter(added)))
    return DecoratedPermutation(values, decorations)


def gale_leq(ell: int, b: int, I, J) -> bool:
    """Componentwise comparison after sorting both sets in the ell-shifted order."""
    if len(I) != len(J):
        raise SizeMismatch(f"|{sorted(I)}| != |{sorted(J)}|")
    key = shifted_key(ell, b)
    si = sorted(I, key=key)
    sj = sorted(J, key=key)
    return all(key(x) <= key(y) for x, y in zip(si, sj))


def positroid(nk: GrassmannNecklace):
    """All a-subsets J with I_ell <= J in every shifted Gale order."""
    b, a = nk.b, nk.a
    out = set()
    for J in combinations(range(1, b + 1), a):
        if all(gale_leq(ell, b, nk[ell - 1], J) for ell in range(1, b + 1)):
            out.add(frozenset(J))
    return out


# ----------------------------------------------------------------------
# weak separation


def weakly_separated(I, J, b: int) -> bool:
    """Whether the symmetric-difference halves can be separated by a chord
    of the circle 1..b, i.e. the elements of I-J and J-I do not interleave."""
    I, J = set(I), set(J)
    if len(I) != len(J):
        raise SizeMismatch(f"|{sorted(I)}| != |{sorted(J)}|")
    a_only = I - J
    b_only = J - I
    if not a_only or not b_only:
        return True
    marks = []
    for x in range(1, b + 1):
        if x in a_only:
            marks.append("A")
        elif x in b_only:
            marks.append("B")
    blocks = 1
    for k in range(1, len(marks)):
        if marks[k] != marks[k - 1]:
            blocks += 1
    if marks[0] == marks[-1] and blocks > 1:
        blocks -= 1
    return blocks <= 2


def is_ws_collection(sets, b: int) -> bool:
    sets = list(sets)
    return all(
        weakly_separated(sets[i], sets[j], b)
        for i in range(len(sets))
        for j in range(i + 1, len(sets))
    )


def format_subset(s, b: int) -> str:
    xs = sorted(s)
    if b <= 9:
        return "".join(str(x) for x in xs)
    return ",".join(str(x) for x in xs)


def parse_subset(text: str):
    text = text.strip()
    if "," in text:
        return frozenset(int(t) for t in text.split(","))
    return frozenset(int(c) for c in text)
