"""Integer polynomial arithmetic: exactness, normalization, root separation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cnskit.poly import (IntPoly, NEG_INFINITY, compose_x_power,
                         divides_xd_plus_c, has_simple_roots, poly_add,
                         poly_derivative, poly_divrem, poly_eval, poly_mul,
                         x_power_plus_c)

small_coeffs = st.lists(st.integers(-9, 9), min_size=1, max_size=6)


def poly(*coeffs):
    return IntPoly(tuple(coeffs))


def test_normalization_strips_trailing_zeros():
    assert poly(2, 2, 1, 0, 0).coeffs == (2, 2, 1)
    assert poly(0, 0).coeffs == (0,)
    assert poly(0).is_zero


def test_empty_coefficients_rejected():
    with pytest.raises(ValueError):
        IntPoly(())


def test_degree_and_leading():
    assert poly(2, 2, 1).degree == 2
    assert poly(5).degree == 0
    assert poly(0).degree == NEG_INFINITY
    assert poly(0).degree < 0
    assert poly(2, 2, 1).leading_coefficient == 1
    assert poly(2, 2, 1).constant_term == 2
    assert poly(2, 2, 1).is_monic
    assert not poly(3, 2).is_monic


def test_string_round_trip():
    p = IntPoly.from_string("2,2,1")
    assert p.coeffs == (2, 2, 1)
    assert p.to_string() == "2,2,1"
    assert IntPoly.from_string("-3, 0, 1").coeffs == (-3, 0, 1)
    with pytest.raises(ValueError):
        IntPoly.from_string("")
    with pytest.raises(ValueError):
        IntPoly.from_string("1,x")


def test_eval_horner():
    p = poly(2, 2, 1)
    assert poly_eval(p, 0) == 2
    assert poly_eval(p, -1) == 1
    assert poly_eval(p, 2) == 10


def test_product_difference_of_quadratics():
    # (X^2+2X+2)(X^2-2X+2) = X^4+4, and the analog with 4X/8 gives X^4+64
    assert poly_mul(poly(2, 2, 1), poly(2, -2, 1)).coeffs == (4, 0, 0, 0, 1)
    assert poly_mul(poly(8, 4, 1), poly(8, -4, 1)).coeffs == (64, 0, 0, 0, 1)


def test_divrem_exact_division():
    q, r = poly_divrem(x_power_plus_c(4, 4), poly(2, 2, 1))
    assert r.is_zero
    assert q.coeffs == (2, -2, 1)


def test_divrem_with_remainder():
    # X^3+X^2+1 over X^2+2X+2: quotient X-1, remainder the constant 3
    q, r = poly_divrem(poly(1, 0, 1, 1), poly(2, 2, 1))
    assert q.coeffs == (-1, 1)
    assert r.coeffs == (3,)
    recombined = poly_add(poly_mul(q, poly(2, 2, 1)), r)
    assert recombined.coeffs == (1, 0, 1, 1)


def test_divrem_requires_monic():
    with pytest.raises(ValueError):
        poly_divrem(poly(1, 1), poly(3, 2))


def test_divides_xd_plus_c():
    assert divides_xd_plus_c(poly(2, 2, 1), 4, 4)
    assert divides_xd_plus_c(poly(2, 2, 1), 12, 64)
    assert not divides_xd_plus_c(poly(2, 2, 1), 3, 4)
    assert divides_xd_plus_c(poly(8, 4, 1), 4, 64)
    assert not divides_xd_plus_c(poly(8, 4, 1), 8, 64)


def test_compose_x_power():
    p = poly(2, 2, 1)
    assert compose_x_power(p, 2).coeffs == (2, 0, 2, 0, 1)
    assert compose_x_power(p, 3).coeffs == (2, 0, 0, 2, 0, 0, 1)
    assert compose_x_power(p, 1) == p


def test_derivative():
    assert poly_derivative(poly(2, 2, 1)).coeffs == (2, 2)
    assert poly_derivative(poly(7)).is_zero


@pytest.mark.parametrize("coeffs,expected", [
    ((2, 2, 1), True),
    ((1, 2, 1), False),      # (X+1)^2
    ((4, 4, 1), False),      # (X+2)^2
    ((2, 0, 2, 0, 1), True),
    ((8, 4, 1), True),
    ((0, 0, 1), False),      # X^2
    ((0, 1), True),
    ((5,), True),            # constants have no roots at all
])
def test_has_simple_roots(coeffs, expected):
    assert has_simple_roots(IntPoly(coeffs)) is expected


@given(small_coeffs, small_coeffs)
def test_mul_commutes_and_matches_eval(a, b):
    pa, pb = IntPoly(tuple(a)), IntPoly(tuple(b))
    prod = poly_mul(pa, pb)
    assert prod == poly_mul(pb, pa)
    for x in (-2, -1, 0, 1, 3):
        assert poly_eval(prod, x) == poly_eval(pa, x) * poly_eval(pb, x)


@given(small_coeffs, small_coeffs)
def test_add_matches_eval(a, b):
    pa, pb = IntPoly(tuple(a)), IntPoly(tuple(b))
    total = poly_add(pa, pb)
    for x in (-2, 0, 2):
        assert poly_eval(total, x) == poly_eval(pa, x) + poly_eval(pb, x)


@given(small_coeffs, st.lists(st.integers(-9, 9), min_size=1, max_size=4))
@settings(max_examples=200)
def test_divrem_reconstructs(a, b_low):
    pa = IntPoly(tuple(a))
    pb = IntPoly(tuple(b_low) + (1,))  # force monic divisor
    q, r = poly_divrem(pa, pb)
    assert poly_add(poly_mul(q, pb), r) == pa
    assert r.is_zero or r.degree < pb.degree


@given(small_coeffs)
def test_square_never_has_simple_roots(a):
    pa = IntPoly(tuple(a))
    if pa.degree >= 1:
        assert not has_simple_roots(poly_mul(pa, pa))
