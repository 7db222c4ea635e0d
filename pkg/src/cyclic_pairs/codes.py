"""Cyclic codes: construction, generator matrix, dual, exact distance.

Distance is exact full enumeration of all q^k codewords, guarded by a
codeword-count cap.  Binary codes enumerate bit-packed codewords along a
Gray-code walk (one row XOR per step); nonbinary codes run blocked
table-lookup enumeration with numpy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from cyclic_pairs.fields import Field, FieldMismatchError
from cyclic_pairs.poly import Polynomial, xn_minus_1

DEFAULT_CAP = 1 << 24
_BLOCK = 1 << 14


class EnumerationCapExceeded(RuntimeError):
    """q^k exceeds the codeword cap; use a smaller instance or raise it."""


@dataclass(frozen=True)
class DistanceReport:
    d: int | None                # None for the zero code (no nonzero codewords)
    codewords_scanned: int
    method: str = "full-enumeration"


class CyclicCode:
    """A cyclic code of length n over a field, given by its monic generator."""

    __slots__ = ("n", "field", "g", "k", "_distance")

    def __init__(self, n: int, field: Field, g: Polynomial):
        if g.field is not field:
            raise FieldMismatchError("generator polynomial is over a different field")
        if g.is_zero():
            raise ValueError("the zero polynomial generates no cyclic code")
        g = g.monic()
        rem = xn_minus_1(field, n) % g
        if not rem.is_zero():
            raise ValueError(
                f"{g} does not divide x^{n} - 1 over {field!r} (remainder {rem})")
        self.n = n
        self.field = field
        self.g = g
        self.k = n - g.degree
        self._distance = None

    def __eq__(self, other):
        return (isinstance(other, CyclicCode) and other.n == self.n
                and other.field is self.field and other.g == self.g)

    def __hash__(self):
        return hash((self.n, id(self.field), self.g.coeffs))

    def __repr__(self):
        return f"[{self.n},{self.k}]_{self.field.q} g={self.g}"

    def generator_matrix(self) -> list[tuple[int, ...]]:
        """k rows; row i holds the coefficients of x^i * g(x)."""
        gc = self.g.coeffs
        rows = []
        for i in range(self.k):
            row = [0] * self.n
            row[i:i + len(gc)] = gc
            rows.append(tuple(row))
        return rows

    def dual(self) -> "CyclicCode":
        """Generator = monic reciprocal of the check polynomial (x^n-1)/g."""
        h = xn_minus_1(self.field, self.n) // self.g
        return CyclicCode(self.n, self.field, h.reciprocal().monic())

    def contains(self, word: Polynomial) -> bool:
        """Membership: the word's polynomial is divisible by the generator."""
        return self.g.divides(word % xn_minus_1(self.field, self.n)
                              if word.degree is not None and word.degree >= self.n
                              else word)

    def min_distance(self, cap: int = DEFAULT_CAP) -> DistanceReport:
        # an exact distance, once computed, is valid whatever the cap
        if self._distance is None:
            self._distance = self._compute_distance(cap)
        return self._distance

    def _compute_distance(self, cap: int) -> DistanceReport:
        q, k, n = self.field.q, self.k, self.n
        if k == 0:
            return DistanceReport(None, 0)
        total = q ** k
        if total > cap:
            raise EnumerationCapExceeded(
                f"{q}^{k} = {total} codewords exceed the cap {cap}; "
                "use a smaller instance or raise the cap")
        if q == 2:
            return self._distance_binary()
        return self._distance_tables()

    def _distance_binary(self) -> DistanceReport:
        rows = [sum(c << j for j, c in enumerate(r)) for r in self.generator_matrix()]
        best = self.n + 1
        cur = 0
        count = (1 << self.k) - 1
        scanned = 0
        for s in range(1, count + 1):
            cur ^= rows[(s & -s).bit_length() - 1]
            scanned += 1
            w = cur.bit_count()
            if w < best:
                best = w
                if best == 1:
                    break
        return DistanceReport(best, scanned)

    def _distance_tables(self) -> DistanceReport:
        add, mul = self.field.tables()
        G = np.array(self.generator_matrix(), dtype=np.int64)
        q, k = self.field.q, self.k
        total = q ** k
        best = self.n + 1
        radix = q ** np.arange(k, dtype=object)
        scanned = 0
        for start in range(1, total, _BLOCK):
            stop = min(start + _BLOCK, total)
            idx = np.arange(start, stop, dtype=object)
            block = np.zeros((stop - start, self.n), dtype=np.int64)
            for i in range(k):
                digits = ((idx // radix[i]) % q).astype(np.int64)
                block = add[block, mul[digits[:, None], G[i][None, :]]]
            scanned += stop - start
            w = int((block != 0).sum(axis=1).min())
            if w < best:
                best = w
                if best == 1:
                    break
        return DistanceReport(best, scanned)


def make_code(n: int, field: Field, g: Polynomial) -> CyclicCode:
    return CyclicCode(n, field, g)
