#!/usr/bin/env python3
"""Regenerate the precomputed field-modulus cache.

Prints a ready-to-paste LEX_LEAST_IRREDUCIBLE dict covering GF(p^m) for
the requested primes and degrees.  The live search in fields.py produces
identical entries; this cache only saves its cost for large degrees.

Usage: python scripts/gen_modulus_table.py [--primes 2,3,5,7] [--max-degree 32]
"""

import argparse
import time

from cyclic_pairs.fields import lex_least_irreducible


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", default="2,3,5,7",
                    help="comma-separated primes (default 2,3,5,7)")
    ap.add_argument("--max-degree", type=int, default=32)
    args = ap.parse_args()
    primes = [int(s) for s in args.primes.split(",")]

    print("LEX_LEAST_IRREDUCIBLE: dict[tuple[int, int], tuple[int, ...]] = {")
    for p in primes:
        for m in range(1, args.max_degree + 1):
            start = time.time()
            coeffs = lex_least_irreducible(p, m)
            elapsed = time.time() - start
            note = f"  # {elapsed:.1f}s" if elapsed > 1 else ""
            print(f"    ({p}, {m}): {coeffs},{note}")
    print("}")


if __name__ == "__main__":
    main()
