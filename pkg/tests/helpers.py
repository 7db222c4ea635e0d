"""Independent oracles shared by the test modules.

Everything here deliberately avoids the library's optimized paths: rank
by plain Gaussian elimination on Field ops, distance by naive message
enumeration, divisor existence by exhaustive lattice products.
"""

from itertools import product

from cyclic_pairs.fields import Field
from cyclic_pairs.poly import Polynomial


def rank_over_field(rows, f: Field) -> int:
    """Row rank by Gaussian elimination using only Field primitives."""
    mat = [list(r) for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = f.inv(mat[rank][col])
        mat[rank] = [f.mul(inv, v) for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                c = mat[r][col]
                mat[r] = [f.sub(a, f.mul(c, b)) for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def naive_min_distance(code) -> int | None:
    """Distance by multiplying out every message polynomial, no Gray code."""
    f, k, n = code.field, code.k, code.n
    if k == 0:
        return None
    best = n + 1
    for msg in product(range(f.q), repeat=k):
        if not any(msg):
            continue
        word = Polynomial(f, msg) * code.g
        w = sum(1 for c in word.coeffs if c != 0)
        best = min(best, w)
    return best


def brute_force_divisor_degrees(factorization) -> set[int]:
    """Degrees of all monic divisors of x^n - 1, by exhaustive products."""
    degrees = {0}
    for entry in factorization.factors:
        deg = entry.poly.degree
        degrees = {d + s * deg
                   for d in degrees for s in range(entry.multiplicity + 1)}
    return degrees


def random_divisor(rng, factorization, of: Polynomial | None = None) -> Polynomial:
    """A random monic divisor of x^n - 1 (or of the given divisor)."""
    f = factorization.field
    out = Polynomial.one(f)
    if of is None:
        for entry in factorization.factors:
            e = rng.randint(0, entry.multiplicity)
            if e:
                out = out * entry.poly ** e
        return out
    for entry in factorization.factors:
        cap = 0
        probe = of
        while True:
            quo, rem = divmod(probe, entry.poly)
            if not rem.is_zero():
                break
            probe = quo
            cap += 1
        e = rng.randint(0, cap)
        if e:
            out = out * entry.poly ** e
    return out
