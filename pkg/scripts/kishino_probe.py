#!/usr/bin/env python3
"""Probe the flat Kishino fixture against the unknot.

Braids the fixture, then runs the budgeted move search against the empty
word on one strand.  The Kishino doodle is a nontrivial flat virtual
knot, so no certificate should ever appear; the component count cannot
separate it either, and the expected outcome is an honest Unknown.
"""

import argparse
import pathlib
import time

from doodlekit import (
    Budget,
    Equivalent,
    braid,
    closure_components,
    equivalent_closures,
    format_certificate,
    format_word,
    parse_gauss,
    parse_word,
)

FIXTURE = pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "kishino.gauss"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-states", type=int, default=100_000)
    args = ap.parse_args()

    g = parse_gauss(FIXTURE.read_text())
    w = braid(g)
    print(f"braided word: {format_word(w)!r} on {w.strands} strands")
    print(f"closure components: {closure_components(w)}")

    unknot = parse_word("", 1)
    t0 = time.time()
    verdict = equivalent_closures(w, unknot, Budget(args.max_states))
    dt = time.time() - t0
    if isinstance(verdict, Equivalent):
        print("unexpected equivalence certificate found:")
        print(format_certificate(w, unknot, verdict.trace))
    else:
        print(f"verdict: {verdict} ({dt:.1f}s)")


if __name__ == "__main__":
    main()
