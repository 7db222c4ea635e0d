"""Precomputed deterministic field moduli.

Entries are the lexicographically least monic irreducible polynomials
over GF(p) (coefficients ascending, constant term first), exactly what
the live search in fields.py produces; they are cached here because the
search gets slow for the large extension degrees needed by root-of-unity
computations.  Regenerate with scripts/gen_modulus_table.py.
"""

LEX_LEAST_IRREDUCIBLE: dict[tuple[int, int], tuple[int, ...]] = {}
