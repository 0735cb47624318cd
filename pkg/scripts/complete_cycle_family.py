"""Tabulate K_n ∘ C_3k: the spectral test fails, the twin criterion holds,
and |Aut| equals the wreath order (n!)^(3k) * 6k."""

import argparse
import math

from lexwreath.autgroup import automorphism_group, wreath_embedding_order
from lexwreath.graph import complete, cycle, lex_product
from lexwreath.spectral import spectral_condition
from lexwreath.verdict import classical_condition, quantum_verdict


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-k", type=int, default=3)
    args = ap.parse_args()

    print(f"{'graph':>10} {'verts':>5} {'spectral':>8} {'classical':>9} {'quantum':>8} "
          f"{'|Aut|':>14} {'expected':>14}")
    for n in range(2, args.max_n + 1):
        for k in range(2, args.max_k + 1):
            x, y = complete(n), cycle(3 * k)
            order = automorphism_group(lex_product(x, y)).order
            expected = math.factorial(n) ** (3 * k) * 6 * k
            assert order == expected == wreath_embedding_order(x, y)
            spec = spectral_condition(x, y)
            print(f"{f'K{n}∘C{3 * k}':>10} {n * 3 * k:>5} {str(spec.holds):>8} "
                  f"{str(classical_condition(x, y)):>9} {quantum_verdict(x, y).status.value:>8} "
                  f"{order:>14} {expected:>14}")


if __name__ == "__main__":
    main()
