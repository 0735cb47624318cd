"""Exhaustive check of the twin criterion against exact automorphism group
orders, broken down by the sizes of X and Y."""

import argparse
import time
from collections import Counter

from lexwreath.autgroup import automorphism_group
from lexwreath.graph import lex_product
from lexwreath.verdict import classical_condition, graphs_up_to


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-x", type=int, default=4)
    ap.add_argument("--max-y", type=int, default=3)
    args = ap.parse_args()

    start = time.perf_counter()
    ys = [(y, automorphism_group(y).order) for y in graphs_up_to(args.max_y)]
    pairs, wreath, bad = Counter(), Counter(), []
    for x in graphs_up_to(args.max_x):
        ax = automorphism_group(x).order
        for y, ay in ys:
            key = (x.vertex_count, y.vertex_count)
            actual = automorphism_group(lex_product(x, y)).order == ax ** y.vertex_count * ay
            pairs[key] += 1
            wreath[key] += actual
            if actual != classical_condition(x, y):
                bad.append((x, y))
    print(f"{'|X|':>3} {'|Y|':>3} {'pairs':>7} {'wreath':>7}")
    for key in sorted(pairs):
        print(f"{key[0]:>3} {key[1]:>3} {pairs[key]:>7} {wreath[key]:>7}")
    print(f"{sum(pairs.values())} pairs, {len(bad)} counterexamples, "
          f"{time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
