#!/usr/bin/env python3
"""Survey the coefficient extrema of the closed-form inverses over prime pairs.

The denominator-r inverse (case iii-b) carries a proven upper bound of
r - 1 on its numerator coefficients but no stated lower bound; this
script records the observed minima so the empirical envelope is visible.

Usage: python scripts/coefficient_survey.py [--max 31]
"""

import argparse

from cyclokit.cyclotomic import PrimePair, primes_upto
from cyclokit.inverses import verify_closed_forms


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=31, help="prime bound for the sweep")
    args = parser.parse_args()

    primes = primes_upto(args.max)
    print(f"{'p':>4} {'r':>4} {'case':>6} {'min':>8} {'max':>8} {'bound r-1':>10}")
    global_min = {}
    for p in primes:
        for r in primes:
            if p == r:
                continue
            for rep in verify_closed_forms(PrimePair.of(p, r)):
                if rep.case_id != "iii-b":
                    continue
                print(f"{p:>4} {r:>4} {rep.case_id:>6} {rep.observed_min:>8} {rep.observed_max:>8} {r - 1:>10}")
                key = r
                if key not in global_min or rep.observed_min < global_min[key][0]:
                    global_min[key] = (rep.observed_min, p)
    print("\nmost negative coefficient seen, per modulus prime r:")
    for r in sorted(global_min):
        mn, p = global_min[r]
        print(f"  r = {r:>3}: {mn:>6}  (at p = {p}), upper bound held at {r - 1}")


if __name__ == "__main__":
    main()
