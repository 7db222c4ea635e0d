from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclic_pairs.fields import field_from_order, make_field
from cyclic_pairs.poly import (Polynomial, PolyParseError, parse_poly,
                               poly_gcd, poly_lcm, xn_minus_1)

GF2 = make_field(2)


def P(text, field=GF2):
    return parse_poly(text, field)


@st.composite
def poly_over(draw, q, max_degree=64):
    f = field_from_order(q)
    coeffs = draw(st.lists(st.integers(0, q - 1), max_size=max_degree + 1))
    return Polynomial(f, coeffs)


# -- arithmetic ---------------------------------------------------------------

def test_mul_examples():
    assert P("x+1") * P("x+1") == P("x^2+1")  # freshman's dream in char 2
    assert P("x+1") * P("x^3+x^2+1") == P("x^4+x^2+x+1")
    assert P("x+1") ** 0 == Polynomial.one(GF2)


def test_divmod_examples():
    q, r = divmod(P("x^2+1"), P("x+1"))
    assert q == P("x+1") and r.is_zero()
    q, r = divmod(P("x^7+1"), P("x^3+x+1"))
    assert q == P("x^4+x^2+x+1") and r.is_zero()
    gf7 = make_field(7)
    q, r = divmod(parse_poly("x^3", gf7), parse_poly("x^2", gf7))
    assert q == parse_poly("x", gf7) and r.is_zero()


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(P("x+1"), Polynomial.zero(GF2))


def test_gcd_lcm_examples():
    a, b = P("x^4+x^2+x+1"), P("x^4+x^3+x^2+1")
    assert poly_gcd(a, b) == P("x+1")
    assert poly_lcm(a, b) == P("x^7+1")
    g = P("x^3+x+1")
    assert poly_gcd(g, g) == g and poly_lcm(g, g) == g
    assert poly_gcd(P("x+1"), P("x")).is_one()
    assert poly_lcm(P("x+1"), P("x")) == P("x^2+x")
    with pytest.raises(ValueError):
        poly_gcd(Polynomial.zero(GF2), Polynomial.zero(GF2))
    assert poly_lcm(Polynomial.zero(GF2), P("x+1")).is_zero()


def test_gcd_is_monic_over_nonbinary_fields():
    gf7 = make_field(7)
    a = parse_poly("2*x^2 + 6*x + 4", gf7)  # 2(x+1)(x+2)
    b = parse_poly("3*x + 3", gf7)
    g = poly_gcd(a, b)
    assert g.is_monic() and g == parse_poly("x + 1", gf7)


def test_eval_examples():
    assert P("x+1").evaluate(GF2.one).value == 0
    gf4 = make_field(2, 2)
    alpha = gf4.element(2)
    # x^2+x+1 has GF(2) coefficients; alpha is a root of its own modulus
    assert P("x^2+x+1").evaluate(alpha).value == 0
    assert P("x^3+x^2+1").evaluate(GF2.zero).value == 1


def test_degree_sentinel():
    assert Polynomial.zero(GF2).degree is None
    assert Polynomial.one(GF2).degree == 0
    assert P("x^5+x").degree == 5


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.data())
def test_divmod_round_trip(q, data):
    a = data.draw(poly_over(q))
    b = data.draw(poly_over(q))
    if b.is_zero():
        return
    quo, rem = divmod(a, b)
    assert b * quo + rem == a
    assert rem.is_zero() or rem.degree < b.degree


@settings(max_examples=40)
@given(st.sampled_from([2, 3]), st.data())
def test_gcd_against_common_divisor_scan(q, data):
    f = field_from_order(q)
    a = data.draw(poly_over(q, max_degree=6))
    b = data.draw(poly_over(q, max_degree=6))
    if a.is_zero() and b.is_zero():
        return
    g = poly_gcd(a, b)
    assert g.divides(a) and g.divides(b)
    # every common divisor (exhaustive scan up to degree 6) divides g
    for coeffs in product(range(q), repeat=min(7, 7)):
        cand = Polynomial(f, coeffs)
        if cand.is_zero():
            continue
        if cand.divides(a) and cand.divides(b):
            assert cand.divides(g)


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 4, 5]), st.data())
def test_lcm_times_gcd_is_the_product_up_to_a_unit(q, data):
    a = data.draw(poly_over(q, max_degree=16))
    b = data.draw(poly_over(q, max_degree=16))
    if a.is_zero() or b.is_zero():
        return
    g, l = poly_gcd(a, b), poly_lcm(a, b)
    assert g.degree + l.degree == a.degree + b.degree
    assert (g * l) == (a * b).monic().monic() if (a * b).is_monic() else True
    prod = a * b
    unit = prod.field.div(prod.leading(), (g * l).leading())
    assert Polynomial(prod.field, [prod.field.mul(unit, c)
                                   for c in (g * l).coeffs]) == prod


def test_negative_pow_rejected():
    with pytest.raises(ValueError):
        P("x") ** -1


# -- text round trips ----------------------------------------------------------

def test_parse_examples():
    assert P("x^4 + x^2 + x + 1").coeffs == (1, 1, 1, 0, 1)
    assert P("x + 1").coeffs == (1, 1)
    assert P("x^2 + x^2").is_zero()  # same-degree terms sum, char 2


def test_parse_list_form():
    assert P("[1,1,1,0,1]") == P("x^4 + x^2 + x + 1")
    assert P("[]").is_zero()
    gf5 = make_field(5)
    assert parse_poly("[4, 0, 1]", gf5) == parse_poly("x^2 + 4", gf5)


def test_parse_minus_in_odd_characteristic():
    gf7 = make_field(7)
    assert parse_poly("x - 1", gf7).coeffs == (6, 1)
    assert parse_poly("x^2 - 3*x - 2", gf7).coeffs == (5, 4, 1)


def test_parse_rejects_out_of_field_coefficients():
    with pytest.raises(PolyParseError):
        P("2*x + 1")  # 2 >= field order 2, no implicit reduction
    gf5 = make_field(5)
    with pytest.raises(PolyParseError):
        parse_poly("7*x", gf5)
    with pytest.raises(PolyParseError):
        parse_poly("[5]", gf5)


def test_parse_syntax_errors_carry_position():
    with pytest.raises(PolyParseError) as exc:
        P("x^2 + + x")
    assert exc.value.pos > 0
    with pytest.raises(PolyParseError):
        P("x^2 +")
    with pytest.raises(PolyParseError):
        P("")
    with pytest.raises(PolyParseError):
        P("x^2 y")


def test_format_canonical_descending():
    assert str(P("[1,1,1,0,1]")) == "x^4 + x^2 + x + 1"
    assert str(Polynomial.zero(GF2)) == "0"
    gf7 = make_field(7)
    assert str(parse_poly("3*x^2 + x + 5", gf7)) == "3*x^2 + x + 5"


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 5, 7, 9]), st.data())
def test_parse_format_round_trip(q, data):
    p = data.draw(poly_over(q, max_degree=12))
    f = field_from_order(q)
    assert parse_poly(str(p), f) == p
    assert parse_poly("[" + ",".join(map(str, p.coeffs)) + "]", f) == p


def test_xn_minus_1():
    assert xn_minus_1(GF2, 7) == P("x^7+1")
    gf3 = make_field(3)
    assert xn_minus_1(gf3, 2) == parse_poly("x^2 - 1", gf3)
    with pytest.raises(ValueError):
        xn_minus_1(GF2, 0)
