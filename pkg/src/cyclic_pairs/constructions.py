"""Builders for intersection pairs with a prescribed dimension.

Three engines: the L(x) construction with its guaranteed range and gcd
exactness certificate, the repeated-root variant hitting ell*s for
0 <= s <= p^nu (with convenience presets for L), and Reed-Solomon MDS
pairs for lengths dividing q - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from cyclic_pairs.codes import DEFAULT_CAP, CyclicCode
from cyclic_pairs.factorization import _mult_order_exact, factor_xn1
from cyclic_pairs.fields import Field, FieldElement
from cyclic_pairs.pairs import PairReport, pair_analyze
from cyclic_pairs.poly import Polynomial, poly_gcd, xn_minus_1


class DivisibilityError(ValueError):
    """A divisibility link in a construction precondition fails."""


def _require_divides(a: Polynomial, b: Polynomial, link: str) -> None:
    if not a.divides(b):
        raise DivisibilityError(f"precondition violated: {link} ({a} does not divide {b})")


def _require_monic(p: Polynomial, name: str) -> None:
    if not p.is_monic():
        raise DivisibilityError(f"{name} must be monic, got {p}")


@dataclass(frozen=True)
class ConstructionResult:
    c1: CyclicCode
    c2: CyclicCode
    target_ell: int
    guaranteed_range: tuple[int, int]     # inclusive [lo, hi]
    exact: bool                           # gcd condition certifies lo = hi = target
    measured_ell: int
    report: PairReport
    alpha: FieldElement | None = None     # root of unity used by the MDS builder

    def __post_init__(self):
        lo, hi = self.guaranteed_range
        if not lo <= self.measured_ell <= hi:
            raise AssertionError(
                f"measured intersection {self.measured_ell} outside guaranteed [{lo}, {hi}]")
        if self.exact and self.measured_ell != self.target_ell:
            raise AssertionError(
                f"exactness certificate broken: measured {self.measured_ell}, "
                f"target {self.target_ell}")


def construct_L(n: int, field: Field, L: Polynomial, g1: Polynomial,
                g2: Polynomial) -> ConstructionResult:
    """Pair (g1, g2*(x^n-1)/(L*g1)) with intersection in [deg L, deg L + deg g1].

    Requires L | x^n - 1, g1 | (x^n - 1)/L and g2 | g1; the intersection
    dimension equals deg L exactly when gcd(g1, (x^n-1)/(L*g1)) = 1.
    """
    for p, name in ((L, "L"), (g1, "g1"), (g2, "g2")):
        _require_monic(p, name)
    xn1 = xn_minus_1(field, n)
    _require_divides(L, xn1, "L | x^n - 1")
    quotient = xn1 // L
    _require_divides(g1, quotient, "g1 | (x^n - 1)/L")
    _require_divides(g2, g1, "g2 | g1")
    cofactor = quotient // g1
    k_poly = g2 * cofactor
    ell = L.degree
    c1 = CyclicCode(n, field, g1)
    c2 = CyclicCode(n, field, k_poly)
    exact = poly_gcd(g1, cofactor).is_one()
    report = pair_analyze(c1, c2)
    return ConstructionResult(c1, c2, ell, (ell, ell + g1.degree), exact,
                              report.ell, report)


def construct_repeated(n_prime: int, field: Field, L: Polynomial, g1: Polynomial,
                       g2: Polynomial, s: int, nu: int) -> ConstructionResult:
    """Repeated-root pair with intersection dimension exactly deg(L) * s.

    Works at ambient length n = p^nu * n' with p not dividing n':
    c1 = <g1^(p^nu)>, c2 = <g2 * (x^n - 1)/(L^s * g1^(p^nu))> for any
    0 <= s <= p^nu; L | x^{n'} - 1, g1 | (x^{n'} - 1)/L, g2 | g1^(p^nu).
    """
    if nu < 0:
        raise ValueError(f"nu must be >= 0, got {nu}")
    if n_prime % field.p == 0:
        raise DivisibilityError(f"n' = {n_prime} must be coprime to p = {field.p}")
    pnu = field.p ** nu
    if not 0 <= s <= pnu:
        raise ValueError(f"s must satisfy 0 <= s <= p^nu = {pnu}, got {s}")
    for p, name in ((L, "L"), (g1, "g1"), (g2, "g2")):
        _require_monic(p, name)
    xnp1 = xn_minus_1(field, n_prime)
    _require_divides(L, xnp1, "L | x^{n'} - 1")
    _require_divides(g1, xnp1 // L, "g1 | (x^{n'} - 1)/L")
    g1_pnu = g1 ** pnu
    _require_divides(g2, g1_pnu, "g2 | g1^(p^nu)")
    n = pnu * n_prime
    xn1 = xn_minus_1(field, n)
    k_poly = g2 * (xn1 // (L ** s * g1_pnu))
    target = L.degree * s
    c1 = CyclicCode(n, field, g1_pnu)
    c2 = CyclicCode(n, field, k_poly)
    report = pair_analyze(c1, c2)
    return ConstructionResult(c1, c2, target, (target, target), True,
                              report.ell, report)


def construct_zero_intersection(n_prime: int, field: Field, g1: Polynomial,
                                g2: Polynomial, nu: int) -> ConstructionResult:
    """Preset L = 1: a 0-intersection pair."""
    return construct_repeated(n_prime, field, Polynomial.one(field), g1, g2, 1, nu)


def construct_s_intersection(n_prime: int, field: Field, g1: Polynomial,
                             g2: Polynomial, s: int, nu: int) -> ConstructionResult:
    """Preset L = x - 1: an s-intersection pair, 0 <= s <= p^nu."""
    L = Polynomial(field, (field.neg(1), 1))
    return construct_repeated(n_prime, field, L, g1, g2, s, nu)


def construct_even_2s(n_prime: int, field: Field, g1: Polynomial,
                      g2: Polynomial, s: int, nu: int) -> ConstructionResult:
    """Preset L = x^2 - 1 (n' even): a 2s-intersection pair."""
    if n_prime % 2 != 0:
        raise DivisibilityError(f"n' = {n_prime} must be even for L = x^2 - 1")
    L = Polynomial(field, (field.neg(1), 0, 1))
    return construct_repeated(n_prime, field, L, g1, g2, s, nu)


def construct_quadratic_2s(n_prime: int, field: Field, g1: Polynomial,
                           g2: Polynomial, s: int, nu: int) -> ConstructionResult:
    """Preset L = the first irreducible quadratic factor of x^{n'} - 1."""
    fac = factor_xn1(n_prime, field)
    for entry in fac.factors:
        if entry.poly.degree == 2:
            return construct_repeated(n_prime, field, entry.poly, g1, g2, s, nu)
    raise DivisibilityError(
        f"x^{n_prime} - 1 has no irreducible quadratic factor over {field!r}")


def _nth_root_of_unity(field: Field, n: int) -> int:
    """Deterministic element of multiplicative order n in the field itself."""
    if (field.q - 1) % n != 0:
        raise ValueError(f"n = {n} does not divide q - 1 = {field.q - 1}")
    if n == 1:
        return 1
    cofactor = (field.q - 1) // n
    for beta in range(1, field.q):
        gamma = field.pow(beta, cofactor)
        if _mult_order_exact(field, gamma, n):
            return gamma
    raise RuntimeError(f"no element of order {n} in {field!r}")


def construct_mds(field: Field, n: int, k1: int, k2: int, ell: int,
                  with_distances: bool = False,
                  cap: int = DEFAULT_CAP) -> ConstructionResult:
    """Reed-Solomon ell-intersection pair of [n,k1] and [n,k2] MDS codes.

    Roots of g1 are alpha^0..alpha^(n-k1-1) and roots of g2 are
    alpha^(k2-ell)..alpha^(n-ell-1) for a deterministic alpha of order
    n | q - 1; needs 0 <= ell <= k1 <= k2 <= n and k1 + k2 - ell <= n.
    """
    if not 0 <= ell <= k1 <= k2 <= n:
        raise ValueError(f"need 0 <= ell <= k1 <= k2 <= n, got {(ell, k1, k2, n)}")
    if k1 + k2 - ell > n:
        raise ValueError(f"need k1 + k2 - ell <= n, got {k1} + {k2} - {ell} > {n}")
    alpha = _nth_root_of_unity(field, n)

    def root_product(lo: int, hi: int) -> Polynomial:
        out = Polynomial.one(field)
        for i in range(lo, hi):
            root = field.pow(alpha, i)
            out = out * Polynomial(field, (field.neg(root), 1))
        return out

    g1 = root_product(0, n - k1)
    g2 = root_product(k2 - ell, n - ell)
    c1 = CyclicCode(n, field, g1)
    c2 = CyclicCode(n, field, g2)
    report = pair_analyze(c1, c2, with_distances=with_distances, cap=cap)
    return ConstructionResult(c1, c2, ell, (ell, ell), True, report.ell, report,
                              alpha=FieldElement(field, alpha))
