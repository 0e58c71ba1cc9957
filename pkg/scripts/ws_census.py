#!/usr/bin/env python3
"""Count maximal weakly separated collections for a range of permutations.

Usage: ws_census.py [max_b]

Prints, for every rotation permutation with 2 <= a <= b-2 and b up to
max_b (default 7), the number of collections together with the common
collection size a(b-a)+1.
"""

import sys
import time

from plabic import cyclic_rotation, enumerate_ws


def main():
    max_b = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    for b in range(4, max_b + 1):
        for a in range(2, b - 1):
            t0 = time.time()
            colls = enumerate_ws(cyclic_rotation(a, b))
            sizes = {len(c) for c in colls}
            dt = time.time() - t0
            print(
                f"a={a} b={b}: {len(colls):6d} collections, "
                f"size {sorted(sizes)} ({dt:.2f}s)"
            )


if __name__ == "__main__":
    main()
