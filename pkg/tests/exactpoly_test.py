# coding utf-8
import numpy as np
import pytest

from sympy import Rational

from ladybug_axial.exactpoly import to_rational, RationalPoly, ParamPoly, \
    sylvester_matrix, resultant


def test_to_rational():
    """Test the to_rational function with floats, strings and booleans."""
    assert to_rational(7.6) == Rational(38, 5)
    assert to_rational('3/4') == Rational(3, 4)
    assert to_rational(2) == Rational(2)
    with pytest.raises(TypeError):
        to_rational(True)


def test_rational_poly_init():
    """Test the initialization of RationalPoly and its properties."""
    poly = RationalPoly([2, 0, '-1/2'])
    assert poly.degree == 2
    assert poly.variable == 't'
    assert poly.leading_coefficient == 2
    assert poly.coefficients == [2, 0, Rational(-1, 2)]
    assert not poly.is_zero
    assert poly.eval_at('1/2') == 0

    zero = RationalPoly([])
    assert zero.is_zero
    assert zero.degree == -1
    with pytest.raises(ValueError):
        zero.squarefree_part()
    with pytest.raises(ValueError):
        zero.sturm_count()


def test_rational_poly_dict():
    """Test the to/from dict methods of RationalPoly."""
    poly = RationalPoly.from_expr('t**3/3 - 2*t + 7')
    poly_dict = poly.to_dict()
    assert poly_dict['coefficients'] == ['1/3', '0', '-2', '7']
    new_poly = RationalPoly.from_dict(poly_dict)
    assert new_poly == poly
    assert hash(new_poly) == hash(poly)


def test_rational_poly_arithmetic():
    """Test the arithmetic operators of RationalPoly."""
    p = RationalPoly([1, -1])
    q = RationalPoly([1, 1])
    assert p * q == RationalPoly([1, 0, -1])
    assert p + q == RationalPoly([2, 0])
    assert p - q == RationalPoly([-2])
    assert -p == RationalPoly([-1, 1])
    assert 2 * p == RationalPoly([2, -2])
    quotient, remainder = divmod(p * q, p)
    assert quotient == q
    assert remainder.is_zero
    assert p.derivative() == RationalPoly([1])


def test_gcd_and_squarefree_part():
    """Test the monic gcd and the squarefree part of a polynomial."""
    p = RationalPoly([1, -3, 2])  # (t - 1)(t - 2)
    q = RationalPoly([2, 4, -6])  # 2(t - 1)(t + 3)
    assert p.gcd(q) == RationalPoly([1, -1])

    doubled = RationalPoly([1, -1, -1, 1])  # (t - 1)^2 (t + 1)
    assert doubled.squarefree_part() == RationalPoly([1, 0, -1])


def test_sturm_count():
    """Test the count of distinct real roots in open intervals."""
    doubled = RationalPoly([1, -1, -1, 1])
    assert doubled.sturm_count() == 2
    assert doubled.sturm_count(0, None) == 1
    assert doubled.sturm_count(1, 2) == 0

    cubic = RationalPoly([1, 0, -1, 0])  # t^3 - t
    assert cubic.sturm_count() == 3
    assert cubic.sturm_count(-1, 1) == 1
    assert cubic.sturm_count(float('-inf'), 0) == 1

    no_roots = RationalPoly([1, 0, 1])
    assert no_roots.sturm_count() == 0
    assert no_roots.isolate_roots() == []


def test_isolate_roots():
    """Test the isolation of the roots of t^2 - 2."""
    poly = RationalPoly([1, 0, -2])
    intervals = poly.isolate_roots(width=1e-6)
    assert len(intervals) == 2
    (lo_1, hi_1), (lo_2, hi_2) = intervals
    assert float(lo_1) <= -2 ** 0.5 <= float(hi_1)
    assert float(lo_2) <= 2 ** 0.5 <= float(hi_2)
    assert hi_2 - lo_2 <= Rational(1, 10 ** 6)
    assert poly.real_roots() == pytest.approx([-2 ** 0.5, 2 ** 0.5], abs=1e-9)
    assert len(poly.isolate_roots(lower=0)) == 1


def test_isolate_exact_roots():
    """Test that roots hit by a bisection point come back as degenerate intervals."""
    poly = RationalPoly([1, -1, 0])  # t (t - 1)
    assert poly.isolate_roots() == [(0, 0), (1, 1)]


def test_sign_at_root():
    """Test the exact sign of a polynomial at an isolated root."""
    poly = RationalPoly([1, 0, -2])
    negative, positive = poly.isolate_roots(width=Rational(1, 4))
    shifted = RationalPoly([1, -1])  # t - 1
    assert poly.sign_at_root(shifted, negative) == -1
    assert poly.sign_at_root(shifted, positive) == 1
    assert shifted.sign_on((Rational(2), Rational(3))) == 1
    assert shifted.sign_on((Rational(0), Rational(2))) is None


def test_refine_root():
    """Test that refining keeps the root inside a narrower interval."""
    poly = RationalPoly([1, 0, -2])
    interval = poly.isolate_roots(width=1, lower=0)[0]
    refined = poly.refine_root(interval)
    assert refined[1] - refined[0] == (interval[1] - interval[0]) / 2
    assert float(refined[0]) <= 2 ** 0.5 <= float(refined[1])


def test_param_poly():
    """Test the specialization of a polynomial with a parameter."""
    poly = ParamPoly('t**2 - a*t + a**2')
    assert poly.degree == 2
    assert poly.variable == 't'
    assert poly.parameter == 'a'
    assert poly.at(2) == RationalPoly([1, -2, 4])
    assert poly.at(7.6).eval_at(0) == Rational(38, 5) ** 2
    constant = poly.coefficient_polys()[2]
    assert constant == RationalPoly([1, 0, 0], 'a')


def test_sylvester_matrix():
    """Test that the rows of the first polynomial come first."""
    rows = sylvester_matrix(RationalPoly([1, 0, -2]), RationalPoly([1, 0]))
    assert rows == [[1, 0, -2], [1, 0, 0], [0, 1, 0]]


def test_resultant():
    """Test exact resultants with rational and parametric coefficients."""
    assert resultant(RationalPoly([1, -1]), RationalPoly([1, 1])).coefficients == [2]
    assert resultant(RationalPoly([1, 0, -2]), RationalPoly([1, 0])).coefficients \
        == [-2]
    res = resultant(ParamPoly('t**2 - a'), RationalPoly([1, 0]))
    assert res.variable == 'a'
    assert res.coefficients == [-1, 0]


def test_resultant_products():
    """Test that the resultant is multiplicative in its second argument."""
    rng = np.random.default_rng(13)

    def random_poly(degree):
        coeffs = [int(c) for c in rng.integers(-5, 6, size=degree + 1)]
        coeffs[0] = coeffs[0] or 1
        return RationalPoly(coeffs)

    for _ in range(30):
        p, q, r = (random_poly(int(d)) for d in rng.integers(1, 4, size=3))
        whole = resultant(p, q * r).coefficients[0]
        parts = resultant(p, q).coefficients[0] * resultant(p, r).coefficients[0]
        assert whole == parts
        sign = (-1) ** (p.degree * q.degree)
        assert resultant(q, p).coefficients[0] == sign * resultant(p, q).coefficients[0]
