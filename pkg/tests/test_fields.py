from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclic_pairs.fields import (FieldMismatchError, field_from_order,
                                 is_irreducible, lex_least_irreducible,
                                 make_field)

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9]


def test_prime_field_modulus_is_x():
    assert make_field(2).modulus == (0, 1)
    assert make_field(7).modulus == (0, 1)


def test_gf4_modulus_is_the_unique_irreducible_quadratic():
    # exhaustive scan over all monic quadratics over GF(2)
    irreducible = [(c0, c1, 1) for c0 in (0, 1) for c1 in (0, 1)
                   if is_irreducible((c0, c1, 1), 2)]
    assert irreducible == [(1, 1, 1)]
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_lex_least_moduli_are_irreducible_and_least():
    for p, m in [(2, 3), (2, 4), (2, 8), (3, 2), (3, 3), (5, 2)]:
        mod = lex_least_irreducible(p, m)
        assert len(mod) == m + 1 and mod[-1] == 1
        assert is_irreducible(mod, p)
        # nothing lexicographically smaller is irreducible
        for cand in product(*(range(p) for _ in range(m))):
            if cand >= tuple(mod[:-1]):
                break
            assert not is_irreducible(cand + (1,), p)


def test_elem_op_examples():
    gf2, gf4, gf7 = make_field(2), make_field(2, 2), make_field(7)
    assert gf2.add(1, 1) == 0
    assert gf4.mul(2, 2) == 3  # alpha * alpha = alpha + 1
    assert gf7.inv(3) == 5 and gf7.mul(3, 5) == 1


def test_frobenius_examples():
    assert make_field(2).frobenius(1) == 1
    assert make_field(2, 2).frobenius(2) == 3
    assert make_field(7).frobenius(3) == pow(3, 7, 7) == 3


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    f = field_from_order(q)
    elems = range(q)
    for a, b in product(elems, repeat=2):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.sub(a, b) == f.add(a, f.neg(b))
    for a, b, c in product(elems, repeat=3):
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    for a in elems:
        assert f.add(a, 0) == a and f.mul(a, 1) == a
        if a:
            assert f.mul(a, f.inv(a)) == 1
            assert f.pow(a, q - 1) == 1  # Lagrange


@settings(max_examples=200)
@given(st.integers(0, 2 ** 10 - 1), st.integers(0, 2 ** 10 - 1),
       st.integers(0, 2 ** 10 - 1))
def test_field_axioms_randomized_gf1024(a, b, c):
    f = make_field(2, 10)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    if a:
        assert f.mul(a, f.inv(a)) == 1
        assert f.pow(a, f.q - 1) == 1


@settings(max_examples=100)
@given(st.sampled_from(SMALL_ORDERS + [16, 25, 27]), st.data())
def test_frobenius_is_a_ring_homomorphism(q, data):
    f = field_from_order(q)
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(0, q - 1))
    assert f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b))
    assert f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b))


def test_frobenius_iterated_m_times_fixes_the_field():
    f = make_field(3, 2)
    for a in range(f.q):
        v = a
        for _ in range(f.m):
            v = f.frobenius(v)
        assert v == a


def test_pow_handles_negative_exponents():
    f = make_field(2, 3)
    for a in range(1, f.q):
        assert f.mul(f.pow(a, -1), a) == 1
        assert f.pow(a, -3) == f.inv(f.pow(a, 3))


def test_element_wrapper_arithmetic():
    f = make_field(2, 2)
    a, b = f.element(2), f.element(3)
    assert (a * b).value == f.mul(2, 3)
    assert (a + b).value == 1
    assert (a / a).value == 1
    assert int(a ** 4) == f.pow(2, 4)
    assert (-a).value == 2  # characteristic 2


def test_construction_errors():
    with pytest.raises(ValueError):
        make_field(4)  # not prime
    with pytest.raises(ValueError):
        make_field(2, 0)
    with pytest.raises(ValueError):
        make_field(2, 25)  # exceeds the default order bound
    make_field(2, 25, order_bound=None)  # lifted bound is fine
    with pytest.raises(ValueError):
        field_from_order(12)  # not a prime power


def test_division_by_zero_and_mixed_fields():
    f, g = make_field(2, 2), make_field(2, 3)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)
    with pytest.raises(ZeroDivisionError):
        f.div(1, 0)
    with pytest.raises(FieldMismatchError):
        f.element(1) + g.element(1)


def test_rendering():
    assert str(make_field(2, 2)) == "GF(2^2), modulus=x^2 + x + 1"
    assert str(make_field(7)) == "GF(7), modulus=x"
