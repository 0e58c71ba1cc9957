#!/usr/bin/env python3
"""Random local-move walks from bridge graphs, reporting which invariants
were exercised.  A cheap smoke experiment for the move calculus.

Usage: random_walk_stats.py [walks] [steps] [seed]
"""

import random
import sys
from collections import Counter

from plabic import (
    DecoratedPermutation,
    apply_move,
    bridge_graph,
    is_reduced,
    legal_moves,
    trip_permutation,
)


def random_perm(b, rng):
    vals = list(range(1, b + 1))
    rng.shuffle(vals)
    dec = {i: rng.choice(["over", "under"]) for i in range(1, b + 1) if vals[i - 1] == i}
    return DecoratedPermutation(vals, dec)


def main():
    walks = int(sys.argv[1]) if len(sys.argv) > 1 else 50
    steps = int(sys.argv[2]) if len(sys.argv) > 2 else 40
    rng = random.Random(int(sys.argv[3]) if len(sys.argv) > 3 else 0)
    kinds = Counter()
    for _ in range(walks):
        g = bridge_graph(random_perm(rng.randint(3, 7), rng))
        pi = trip_permutation(g)
        for _ in range(steps):
            mv = rng.choice(legal_moves(g))
            kinds[mv.kind] += 1
            g = apply_move(g, mv)
            assert trip_permutation(g) == pi
        assert is_reduced(g).reduced
    print(f"{walks} walks x {steps} steps, all invariants held")
    for kind, n in kinds.most_common():
        print(f"  {kind:20s} {n}")


if __name__ == "__main__":
    main()
