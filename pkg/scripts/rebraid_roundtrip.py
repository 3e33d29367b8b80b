#!/usr/bin/env python3
"""Braid random closures and check the Gauss-data round trip.

Prints one row per sample: the word, its closure data size, the braided
word, and whether closure_gauss(braid(G)) is isomorphic to G.
"""

import argparse
import random

from doodlekit import braid, closure_gauss, format_word, isomorphic
from doodlekit.words import random_word


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-len", type=int, default=15)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    failures = 0
    for k in range(args.samples):
        n = rng.randint(1, args.max_n)
        w = random_word(rng, n, rng.randint(0, args.max_len))
        g = closure_gauss(w)
        b = braid(g)
        ok = isomorphic(closure_gauss(b), g) is not None
        failures += not ok
        print(
            f"[{k:3d}] n={n} len={len(w):2d} crossings={g.crossings:2d} "
            f"loops={g.free_loops}  ->  m={b.strands} len={len(b):2d}  "
            f"{'ok' if ok else 'MISMATCH'}   {format_word(w)!r} -> {format_word(b)!r}"
        )
    print(f"\n{args.samples - failures}/{args.samples} round trips closed")


if __name__ == "__main__":
    main()
