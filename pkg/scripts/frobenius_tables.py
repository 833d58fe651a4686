#!/usr/bin/env python3
"""Print per-p summary tables for a few showcase generator sets.

Usage: python scripts/frobenius_tables.py [--pmax N]
"""

import argparse

from psemigroups import build, genus_p, sylvester_sum_p

SHOWCASE = [(4, 5, 6), (8, 4, 5, 6), (8, 12, 15, 18), (17, 18, 19)]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pmax", type=int, default=10)
    args = parser.parse_args()

    for gens in SHOWCASE:
        print(f"A = {set(gens)}")
        print(f"{'p':>4} {'frobenius':>10} {'multiplicity':>13} {'genus':>7} {'gap sum':>9}")
        for p in range(args.pmax + 1):
            sp = build(gens, p)
            print(
                f"{p:>4} {sp.frobenius:>10} {sp.multiplicity:>13}"
                f" {genus_p(gens, p):>7} {sylvester_sum_p(gens, p):>9}"
            )
        print()


if __name__ == "__main__":
    main()
