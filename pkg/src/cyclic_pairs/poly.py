"""Univariate polynomials over a Field.

Coefficients are stored as canonical integer encodings, ascending by
degree, with no trailing zeros (the zero polynomial has an empty
coefficient tuple and degree ``None``).  gcd/lcm outputs are monic so
generator polynomials are canonical.
"""

from __future__ import annotations

import re

from cyclic_pairs.fields import Field, FieldElement, FieldMismatchError


class PolyParseError(ValueError):
    """Polynomial text that does not match the grammar."""

    def __init__(self, text: str, pos: int, why: str):
        super().__init__(f"cannot parse {text!r} at position {pos}: {why}")
        self.pos = pos


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        self.field = field
        self.coeffs = _trim([field._check(c) for c in coeffs])

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Polynomial":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: Field, c: int) -> "Polynomial":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: Field, degree: int, c: int = 1) -> "Polynomial":
        return cls(field, (0,) * degree + (c,))

    # -- basic structure ------------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial (no -1 sentinel)."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        if self.is_zero() or self.is_monic():
            return self
        inv = self.field.inv(self.coeffs[-1])
        return Polynomial(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def reciprocal(self) -> "Polynomial":
        """x^deg * p(1/x): the coefficient sequence reversed."""
        return Polynomial(self.field, tuple(reversed(self.coeffs)))

    def _same_field(self, other: "Polynomial") -> None:
        if other.field is not self.field:
            raise FieldMismatchError(
                f"polynomials over {self.field!r} and {other.field!r}")

    # -- ring arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Polynomial(f, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._same_field(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else 0
            b = other.coeffs[i] if i < len(other.coeffs) else 0
            out.append(f.sub(a, b))
        return Polynomial(f, out)

    def __neg__(self) -> "Polynomial":
        f = self.field
        return Polynomial(f, [f.neg(c) for c in self.coeffs])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._same_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(f)
        if f.q == 2:
            av = sum(c << i for i, c in enumerate(a))
            bv = sum(c << i for i, c in enumerate(b))
            r = 0
            while bv:
                lsb = bv & -bv
                r ^= av * lsb
                bv ^= lsb
            return Polynomial(f, [(r >> i) & 1 for i in range(len(a) + len(b) - 1)])
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = f.add(out[i + j], f.mul(ca, cb))
        return Polynomial(f, out)

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"polynomial exponent must be a non-negative integer, got {e!r}")
        r = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._same_field(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.field
        db = other.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < db:
            return Polynomial.zero(f), self
        quo = [0] * (len(rem) - db)
        inv_lead = f.inv(other.coeffs[-1])
        for shift in range(len(rem) - db - 1, -1, -1):
            c = f.mul(rem[shift + db], inv_lead)
            if c == 0:
                continue
            quo[shift] = c
            for j, cb in enumerate(other.coeffs):
                if cb:
                    rem[shift + j] = f.sub(rem[shift + j], f.mul(c, cb))
        return Polynomial(f, quo), Polynomial(f, rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        """True when self | other."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and other.field is self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    # -- evaluation -------------------------------------------------------------

    def __call__(self, pt: FieldElement, embed=None) -> FieldElement:
        return self.evaluate(pt, embed=embed)

    def evaluate(self, pt: FieldElement, embed=None) -> FieldElement:
        """Horner evaluation at ``pt``.

        ``pt`` may live in an extension field: pass ``embed`` mapping
        coefficient encodings into that field; prime-subfield
        coefficients embed canonically without it.
        """
        target = pt.field
        if target is self.field:
            lift = lambda c: c
        elif embed is not None:
            lift = embed
        elif self.field.m == 1 and target.p == self.field.p:
            lift = lambda c: c  # constants encode identically
        else:
            raise FieldMismatchError(
                f"no embedding of {self.field!r} into {target!r}")
        acc = 0
        for c in reversed(self.coeffs):
            acc = target.add(target.mul(acc, pt.value), lift(c))
        return FieldElement(target, acc)

    # -- text form ----------------------------------------------------------------

    def __str__(self):
        return format_coeffs(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self.field!r}, {list(self.coeffs)})"


def format_coeffs(coeffs) -> str:
    """Canonical descending text form, e.g. "x^4 + x^2 + x + 1"."""
    coeffs = _trim(list(coeffs))
    if not coeffs:
        return "0"
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append("x" if k == 1 else f"x^{k}")
        else:
            terms.append(f"{c}*x" if k == 1 else f"{c}*x^{k}")
    return " + ".join(terms)


_TERM_RE = re.compile(
    r"\s*(?:(?P<coeff>\d+)\s*\*?\s*)?(?:(?P<x>x)(?:\s*\^\s*(?P<exp>\d+))?)?\s*")


def parse_poly(text: str, field: Field) -> Polynomial:
    """Parse polynomial text or a compact ascending coefficient list.

    Accepted term forms: "x^k", "x", "c", "c*x^k" (also "c*x" and "cx^k");
    terms joined with "+" or "-".  Coefficients at or above the field
    order are rejected rather than reduced.  The "[c0,c1,...]" list form
    is ascending by degree.
    """
    s = text.strip()
    if not s:
        raise PolyParseError(text, 0, "empty input")
    if s.startswith("["):
        if not s.endswith("]"):
            raise PolyParseError(text, len(text) - 1, "unterminated coefficient list")
        body = s[1:-1].strip()
        items = [] if not body else [part.strip() for part in body.split(",")]
        coeffs = []
        for part in items:
            if not re.fullmatch(r"\d+", part):
                raise PolyParseError(text, text.find(part), f"bad coefficient {part!r}")
            c = int(part)
            if c >= field.q:
                raise PolyParseError(text, text.find(part),
                                     f"coefficient {c} >= field order {field.q}")
            coeffs.append(c)
        return Polynomial(field, coeffs)

    coeffs: dict[int, int] = {}
    pos = 0
    sign = 1
    expect_term = True
    n = len(s)
    while pos < n:
        if s[pos].isspace():
            pos += 1
            continue
        if not expect_term:
            if s[pos] == "+":
                sign, pos, expect_term = 1, pos + 1, True
                continue
            if s[pos] == "-":
                sign, pos, expect_term = -1, pos + 1, True
                continue
            raise PolyParseError(text, pos, f"expected '+' or '-', found {s[pos]!r}")
        m = _TERM_RE.match(s, pos)
        if not m or (m.group("coeff") is None and m.group("x") is None):
            raise PolyParseError(text, pos, "expected a term")
        c = 1 if m.group("coeff") is None else int(m.group("coeff"))
        if c >= field.q:
            raise PolyParseError(text, pos, f"coefficient {c} >= field order {field.q}")
        if m.group("x") is None:
            k = 0
        elif m.group("exp") is None:
            k = 1
        else:
            k = int(m.group("exp"))
        if sign == -1:
            c = field.neg(c)
        coeffs[k] = field.add(coeffs.get(k, 0), c)
        pos = m.end()
        expect_term = False
    if expect_term:
        raise PolyParseError(text, n, "dangling operator")
    if not coeffs:
        return Polynomial.zero(field)
    top = max(coeffs)
    return Polynomial(field, [coeffs.get(k, 0) for k in range(top + 1)])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    a._same_field(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic least common multiple; lcm with the zero polynomial is zero."""
    a._same_field(b)
    if a.is_zero() or b.is_zero():
        return Polynomial.zero(a.field)
    return ((a * b) // poly_gcd(a, b)).monic()


def xn_minus_1(field: Field, n: int) -> Polynomial:
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    coeffs = [0] * (n + 1)
    coeffs[0] = field.neg(1)
    coeffs[n] = 1
    return Polynomial(field, coeffs)
