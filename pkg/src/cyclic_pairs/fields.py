"""Exact arithmetic in GF(p^m).

A field is identified by its characteristic ``p`` and extension degree
``m``; the modulus is always the lexicographically least monic
irreducible polynomial of degree ``m`` over GF(p), coefficients compared
ascending from the constant term, so field presentations are
reproducible across runs.  Elements are encoded as integers in
``[0, p^m)`` whose base-p digits are the coefficients (ascending) of the
representative polynomial.

Two internal arithmetic lanes are used with identical observable
behaviour: characteristic 2 works on the bit-packed integer encodings
directly, odd characteristic decodes to coefficient vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from cyclic_pairs._modulus_table import LEX_LEAST_IRREDUCIBLE

DEFAULT_ORDER_BOUND = 1 << 20

# add/mul lookup tables are only built for fields this small
_TABLE_LIMIT = 1 << 12


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# GF(2)[x] on bit-packed ints (bit i = coefficient of x^i)

def _gf2_mul(a: int, b: int) -> int:
    r = 0
    while b:
        lsb = b & -b
        r ^= a * lsb
        b ^= lsb
    return r


def _gf2_mod(a: int, f: int) -> int:
    df = f.bit_length() - 1
    while a.bit_length() - 1 >= df and a:
        a ^= f << (a.bit_length() - 1 - df)
    return a


def _gf2_divmod(a: int, f: int) -> tuple[int, int]:
    df = f.bit_length() - 1
    q = 0
    while a.bit_length() - 1 >= df and a:
        shift = a.bit_length() - 1 - df
        q |= 1 << shift
        a ^= f << shift
    return q, a


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _gf2_mod(a, b)
    return a


def _gf2_inv_mod(a: int, f: int) -> int:
    # extended Euclid in GF(2)[x]
    r0, r1 = f, a
    s0, s1 = 0, 1
    while r1:
        q, r = _gf2_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ _gf2_mul(q, s1)
    if r0 != 1:
        raise ZeroDivisionError("element is not invertible")
    return s0


def _gf2_powmod(a: int, e: int, f: int) -> int:
    r = 1
    a = _gf2_mod(a, f)
    while e:
        if e & 1:
            r = _gf2_mod(_gf2_mul(r, a), f)
        a = _gf2_mod(_gf2_mul(a, a), f)
        e >>= 1
    return r


# ---------------------------------------------------------------------------
# GF(p)[x] on int64 coefficient arrays, ascending degree, trimmed

def _ptrim(a: np.ndarray) -> np.ndarray:
    n = a.size
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _pmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return np.zeros(0, dtype=np.int64)
    return np.convolve(a, b) % p


def _pmod(a: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    # f must be monic
    r = _ptrim(a % p).copy()
    df = f.size - 1
    while r.size - 1 >= df:
        c = r[-1]
        if c:
            r[-df - 1:] = (r[-df - 1:] - c * f) % p
        r = _ptrim(r)
    return r


def _pdivmod(a: np.ndarray, f: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    r = _ptrim(a % p).copy()
    df = f.size - 1
    lead_inv = pow(int(f[-1]), -1, p)
    if r.size - 1 < df:
        return np.zeros(0, dtype=np.int64), r
    q = np.zeros(r.size - df, dtype=np.int64)
    while r.size - 1 >= df:
        c = (int(r[-1]) * lead_inv) % p
        shift = r.size - 1 - df
        q[shift] = c
        r[shift:] = (r[shift:] - c * f) % p
        r = _ptrim(r)
    return _ptrim(q), r


def _pgcd(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a, b = _ptrim(a % p), _ptrim(b % p)
    while b.size:
        a, b = b, _pdivmod(a, b, p)[1]
    if a.size:
        a = (a * pow(int(a[-1]), -1, p)) % p
    return a


def _ppowmod(a: np.ndarray, e: int, f: np.ndarray, p: int) -> np.ndarray:
    r = np.ones(1, dtype=np.int64)
    a = _pmod(a, f, p)
    while e:
        if e & 1:
            r = _pmod(_pmul(r, a, p), f, p)
        a = _pmod(_pmul(a, a, p), f, p)
        e >>= 1
    return r


def _p_inv_mod(a: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    r0, r1 = f.copy(), _ptrim(a % p)
    s0 = np.zeros(0, dtype=np.int64)
    s1 = np.ones(1, dtype=np.int64)
    while r1.size:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        qs = _pmul(q, s1, p)
        ln = max(s0.size, qs.size)
        ns = np.zeros(ln, dtype=np.int64)
        ns[: s0.size] += s0
        ns[: qs.size] -= qs
        s0, s1 = s1, _ptrim(ns % p)
    if r0.size != 1:
        raise ZeroDivisionError("element is not invertible")
    inv_lead = pow(int(r0[0]), -1, p)
    return (s0 * inv_lead) % p


# ---------------------------------------------------------------------------
# Irreducibility and deterministic modulus selection

def _prime_divisors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible_gf2(f: int, m: int) -> bool:
    # Rabin: x^(2^m) = x mod f, and gcd(x^(2^(m/r)) - x, f) = 1 for primes r | m
    if m == 1:
        return True
    checkpoints = {m // r for r in _prime_divisors(m)}
    t = 2  # the polynomial x
    for j in range(1, m + 1):
        t = _gf2_mod(_gf2_mul(t, t), f)
        if j in checkpoints:
            if _gf2_gcd(t ^ 2, f) != 1:
                return False
    return t == 2


def _is_irreducible_gfp(coeffs: np.ndarray, m: int, p: int) -> bool:
    if m == 1:
        return True
    f = coeffs
    checkpoints = {m // r for r in _prime_divisors(m)}
    x = np.array([0, 1], dtype=np.int64)
    t = x
    one = np.ones(1, dtype=np.int64)
    for j in range(1, m + 1):
        t = _ppowmod(t, p, f, p)
        if j in checkpoints:
            diff = t.copy()
            if diff.size < 2:
                diff = np.concatenate([diff, np.zeros(2 - diff.size, dtype=np.int64)])
            diff[1] = (diff[1] - 1) % p
            g = _pgcd(diff, f, p)
            if not (g.size == 1 and g[0] == 1):
                return False
    tv = _ptrim(t)
    return tv.size == 2 and tv[0] == 0 and tv[1] == 1


def is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over GF(p)."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1:
        raise ValueError("expected a monic polynomial of degree >= 1")
    if coeffs[0] == 0:
        return m == 1
    if p == 2:
        f = sum(c << i for i, c in enumerate(coeffs))
        return _is_irreducible_gf2(f, m)
    return _is_irreducible_gfp(np.array(coeffs, dtype=np.int64), m, p)


def _search_lex_least_irreducible(p: int, m: int) -> tuple[int, ...]:
    # candidates ordered lexicographically by (c0, c1, ..., c_{m-1});
    # c0 = 0 gives a polynomial divisible by x, skipped outright
    for c0 in range(1, p):
        for rest in product(range(p), repeat=m - 1):
            coeffs = (c0,) + rest + (1,)
            if is_irreducible(coeffs, p):
                return coeffs
    raise RuntimeError(f"no irreducible polynomial of degree {m} over GF({p})")


@lru_cache(maxsize=None)
def lex_least_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Deterministic field modulus: lex-least monic irreducible of degree m."""
    if m == 1:
        return (0, 1)  # the polynomial x
    cached = LEX_LEAST_IRREDUCIBLE.get((p, m))
    if cached is not None:
        return cached
    return _search_lex_least_irreducible(p, m)


# ---------------------------------------------------------------------------
# Field and elements

class Field:
    """The finite field GF(p^m) with canonical integer element encoding."""

    __slots__ = ("p", "m", "q", "modulus", "_mod_int", "_mod_vec",
                 "_add_table", "_mul_table")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus
        self._mod_int = sum(c << i for i, c in enumerate(modulus)) if p == 2 else None
        self._mod_vec = np.array(modulus, dtype=np.int64) if p != 2 else None
        self._add_table = None
        self._mul_table = None

    # -- encoding helpers ---------------------------------------------------

    def _check(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.q:
            raise ValueError(f"{v!r} is not a canonical element of {self}")
        return v

    def _digits(self, v: int) -> np.ndarray:
        out = np.zeros(self.m, dtype=np.int64)
        p = self.p
        for i in range(self.m):
            v, out[i] = divmod(v, p)
        return out

    def _undigits(self, vec: np.ndarray) -> int:
        v = 0
        for c in reversed(vec.tolist()):
            v = v * self.p + int(c)
        return v

    # -- arithmetic on integer encodings ------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._undigits((self._digits(a) + self._digits(b)) % self.p)

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self._undigits((self._digits(a) - self._digits(b)) % self.p)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._undigits((-self._digits(a)) % self.p)

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if self.p == 2:
            return _gf2_mod(_gf2_mul(a, b), self._mod_int)
        v = _pmod(_pmul(self._digits(a), self._digits(b), self.p),
                  self._mod_vec, self.p)
        return self._undigits(np.concatenate([v, np.zeros(self.m - v.size, dtype=np.int64)]))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self.m == 1:
            return pow(a, -1, self.p)
        if self.p == 2:
            return _gf2_inv_mod(a, self._mod_int)
        v = _p_inv_mod(_ptrim(self._digits(a)), self._mod_vec, self.p)
        out = np.zeros(self.m, dtype=np.int64)
        out[: v.size] = v
        return self._undigits(out)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r, base = 1, a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def frobenius(self, a: int) -> int:
        """The characteristic-power map a -> a^p."""
        return self.pow(a, self.p)

    # -- lookup tables for vectorized codeword enumeration -------------------

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(add, mul) q-by-q lookup tables; only for small fields."""
        if self.q > _TABLE_LIMIT:
            raise ValueError(f"lookup tables limited to order {_TABLE_LIMIT}")
        if self._add_table is None:
            q = self.q
            add = np.zeros((q, q), dtype=np.int64)
            mul = np.zeros((q, q), dtype=np.int64)
            for a in range(q):
                for b in range(a, q):
                    s = self.add(a, b)
                    m = self.mul(a, b)
                    add[a, b] = add[b, a] = s
                    mul[a, b] = mul[b, a] = m
            self._add_table = add
            self._mul_table = mul
        return self._add_table, self._mul_table

    # -- element interface ----------------------------------------------------

    def element(self, v: int) -> "FieldElement":
        return FieldElement(self, self._check(v))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        return (FieldElement(self, v) for v in range(self.q))

    def modulus_str(self) -> str:
        from cyclic_pairs.poly import format_coeffs
        return format_coeffs(self.modulus)

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __str__(self):
        return f"{self!r}, modulus={self.modulus_str()}"


@dataclass(frozen=True)
class FieldElement:
    """An element of a Field, carried as its canonical integer encoding."""

    field: Field
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatchError(
                    f"cannot mix elements of {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field._check(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.value, v))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return str(self.value)


@lru_cache(maxsize=None)
def _field_cached(p: int, m: int) -> Field:
    return Field(p, m, lex_least_irreducible(p, m))


def make_field(p: int, m: int = 1, *, order_bound: int | None = DEFAULT_ORDER_BOUND) -> Field:
    """GF(p^m) with the deterministic (lex-least irreducible) modulus.

    ``order_bound`` guards against accidentally huge requests; pass None
    to lift it (internal extension fields for root-of-unity work can
    legitimately exceed the default).
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p!r}")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m!r}")
    if order_bound is not None and p ** m > order_bound:
        raise ValueError(f"field order {p}^{m} exceeds the bound {order_bound}")
    return _field_cached(p, m)


def field_from_order(q: int, *, order_bound: int | None = DEFAULT_ORDER_BOUND) -> Field:
    """GF(q) for a prime power q."""
    if q < 2:
        raise ValueError(f"field order must be a prime power >= 2, got {q}")
    p = min(_prime_divisors(q))
    m = 0
    t = q
    while t % p == 0:
        t //= p
        m += 1
    if t != 1:
        raise ValueError(f"{q} is not a prime power")
    return make_field(p, m, order_bound=order_bound)
