# coding=utf-8
"""Exact univariate polynomials with rational coefficients.

The polynomials wrap sympy's Poly over QQ (or QQ[a] for coefficients that are
themselves polynomials in one parameter). Real roots are counted with Sturm
sequences and isolated by bisection on exact rational intervals. Resultants are
the fraction-free (Bareiss) determinant of the Sylvester matrix.
"""
from __future__ import division

import math
from fractions import Fraction

from sympy import Poly, QQ, Rational, Symbol, oo, sympify
from sympy.polys.matrices import DomainMatrix


def to_rational(value):
    """Convert a number or a 'p/q' string into an exact sympy Rational.

    Floats are read through their shortest decimal representation so that 7.6
    becomes 38/5 rather than the nearest binary fraction.
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError('Expected a number. Got a boolean.')
    if isinstance(value, float):
        assert math.isfinite(value), 'Expected a finite number. Got {}.'.format(value)
        return Rational(repr(value))
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    return Rational(value)


def _endpoint(value, default):
    """Turn an interval end into a Rational or a signed sympy infinity."""
    if value is None:
        return default
    if isinstance(value, float) and math.isinf(value):
        return oo if value > 0 else -oo
    if value == oo or value == -oo:
        return value
    return to_rational(value)


def _side_sign(poly, x, side):
    """Sign of poly immediately to the right (side > 0) or left (side < 0) of x."""
    if poly.is_zero:
        return 0
    if x == oo or x == -oo:
        sign = 1 if poly.LC() > 0 else -1
        if x == -oo and poly.degree() % 2 == 1:
            sign = -sign
        return sign
    order = 0
    while not poly.is_zero:
        value = poly.eval(x)
        if value != 0:
            sign = 1 if value > 0 else -1
            return sign if side > 0 or order % 2 == 0 else -sign
        poly = poly.diff()
        order += 1
    return 0


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)


def _open_count(sequence, lo, hi):
    """Distinct roots of sequence[0] in the open interval (lo, hi)."""
    if not lo < hi:
        return 0
    v_lo = _variations([_side_sign(p, lo, 1) for p in sequence])
    v_hi = _variations([_side_sign(p, hi, -1) for p in sequence])
    return v_lo - v_hi


class RationalPoly(object):
    """A univariate polynomial with exact rational coefficients.

    Args:
        coefficients: Coefficients from the highest degree to the constant term.
            Any value accepted by to_rational is allowed.
        variable: Name of the variable. (Default: 't').

    Properties:
        * variable
        * coefficients
        * degree
        * leading_coefficient
        * is_zero
    """
    __slots__ = ('_poly',)

    def __init__(self, coefficients, variable='t'):
        coeffs = [to_rational(c) for c in coefficients] or [Rational(0)]
        self._poly = Poly(coeffs, Symbol(variable), domain=QQ)

    @classmethod
    def from_expr(cls, expression, variable='t'):
        """Create a RationalPoly from a sympy expression (or string) in one variable."""
        poly = Poly(sympify(expression), Symbol(variable), domain=QQ)
        return cls._from_poly(poly)

    @classmethod
    def from_dict(cls, data):
        """Create a RationalPoly from a dictionary.

        .. code-block:: python

            {
            'type': 'RationalPoly',
            'variable': 't',
            'coefficients': ['4', '0', '-1/2']
            }
        """
        assert data['type'] == 'RationalPoly', \
            'Expected RationalPoly dictionary. Got {}.'.format(data['type'])
        variable = data['variable'] if 'variable' in data else 't'
        return cls([Rational(c) for c in data['coefficients']], variable)

    @classmethod
    def _from_poly(cls, poly):
        new = cls.__new__(cls)
        new._poly = poly
        return new

    @property
    def variable(self):
        """Name of the polynomial variable."""
        return str(self._poly.gen)

    @property
    def coefficients(self):
        """Exact coefficients from the highest degree down to the constant term."""
        return list(self._poly.all_coeffs())

    @property
    def degree(self):
        """Degree of the polynomial (-1 for the zero polynomial)."""
        return -1 if self._poly.is_zero else int(self._poly.degree())

    @property
    def leading_coefficient(self):
        return self._poly.LC()

    @property
    def is_zero(self):
        return self._poly.is_zero

    @property
    def sympy_poly(self):
        """The underlying sympy Poly."""
        return self._poly

    def as_expr(self):
        return self._poly.as_expr()

    def eval_at(self, value):
        """Evaluate exactly at a rational value."""
        return self._poly.eval(to_rational(value))

    def derivative(self):
        return self._from_poly(self._poly.diff())

    def gcd(self, other):
        """Monic greatest common divisor with another polynomial."""
        return self._from_poly(self._poly.gcd(self._coerce(other)))

    def squarefree_part(self):
        """Product of the distinct irreducible factors of this polynomial."""
        self._check_nonzero()
        return self._from_poly(self._poly.sqf_part())

    def sturm_sequence(self):
        """Sturm sequence of the squarefree part of this polynomial."""
        self._check_nonzero()
        base = self._poly.sqf_part()
        sequence = [base, base.diff()]
        while not sequence[-1].is_zero:
            sequence.append(-sequence[-2].rem(sequence[-1]))
        return [self._from_poly(p) for p in sequence[:-1]]

    def sturm_count(self, lower=None, upper=None):
        """Number of distinct real roots in the open interval (lower, upper).

        Args:
            lower: Lower end as a rational, -inf or None for -infinity.
            upper: Upper end as a rational, inf or None for +infinity.
        """
        sequence = [p._poly for p in self.sturm_sequence()]
        return _open_count(sequence, _endpoint(lower, -oo), _endpoint(upper, oo))

    def root_bound(self):
        """Cauchy bound: every real root lies strictly inside (-bound, bound)."""
        self._check_nonzero()
        coeffs = self.coefficients
        lead = abs(coeffs[0])
        return 1 + max([abs(c) / lead for c in coeffs[1:]] or [Rational(0)])

    def isolate_roots(self, width=1e-12, lower=None, upper=None):
        """Disjoint rational intervals each holding exactly one distinct real root.

        Intervals are found by Sturm-guided bisection and refined until they are no
        wider than width. A root hit exactly by a bisection point is returned as a
        degenerate interval (r, r).

        Args:
            width: Maximum width of the returned intervals. (Default: 1e-12).
            lower: Optional lower end of the search interval.
            upper: Optional upper end of the search interval.

        Returns:
            A sorted list of (low, high) tuples of sympy Rationals.
        """
        sequence = [p._poly for p in self.sturm_sequence()]
        base = sequence[0]
        if base.degree() < 1:
            return []
        bound = self.root_bound()
        lo = max(_endpoint(lower, -oo), -bound)
        hi = min(_endpoint(upper, oo), bound)
        target = to_rational(width)
        roots, stack = [], [(lo, hi)]
        while stack:
            a, b = stack.pop()
            count = _open_count(sequence, a, b)
            if count == 0:
                continue
            if count == 1 and b - a <= target:
                roots.append((a, b))
                continue
            mid = (a + b) / 2
            if base.eval(mid) == 0:
                roots.append((mid, mid))
            stack.append((a, mid))
            stack.append((mid, b))
        return sorted(roots)

    def refine_root(self, interval):
        """Halve an isolating interval, keeping the half that holds the root."""
        lo, hi = interval
        if lo == hi:
            return interval
        mid = (lo + hi) / 2
        if self._poly.eval(mid) == 0:
            return (mid, mid)
        if self.sturm_count(lo, mid) > 0:
            return (lo, mid)
        return (mid, hi)

    def sign_at_root(self, other, interval, max_halvings=200):
        """Exact sign of another polynomial at the root isolated by interval.

        Args:
            other: The RationalPoly to be signed.
            interval: An isolating interval of one root of this polynomial.
            max_halvings: Refinement limit after which a shared root is assumed.

        Returns:
            -1, 0 or 1. Zero means that other vanishes at the root (or cannot be
            separated from it within max_halvings refinements).
        """
        for _ in range(max_halvings):
            lo, hi = interval
            if lo == hi:
                value = other.eval_at(lo)
                return 0 if value == 0 else (1 if value > 0 else -1)
            sign = other.sign_on(interval)
            if sign is not None:
                return sign
            interval = self.refine_root(interval)
        return 0

    def real_roots(self, width=1e-12, lower=None, upper=None):
        """Floating point midpoints of the isolating intervals."""
        return [float((a + b) / 2)
                for a, b in self.isolate_roots(width, lower, upper)]

    def sign_on(self, interval):
        """Exact sign of this polynomial on an interval free of its roots.

        Returns None when the polynomial has a root inside the closed interval.
        """
        lo, hi = interval
        if self.is_zero:
            return 0
        for x in (lo, hi):
            if self._poly.eval(x) == 0:
                return None
        if lo != hi and self.sturm_count(lo, hi) != 0:
            return None
        return 1 if self._poly.eval(lo) > 0 else -1

    def to_dict(self):
        """RationalPoly dictionary representation with exact string coefficients."""
        return {
            'type': 'RationalPoly',
            'variable': self.variable,
            'coefficients': [str(c) for c in self.coefficients]
        }

    def _coerce(self, other):
        if isinstance(other, RationalPoly):
            return other._poly
        return Poly(to_rational(other), self._poly.gen, domain=QQ)

    def _check_nonzero(self):
        if self._poly.is_zero:
            raise ValueError('Operation undefined for the zero polynomial.')

    def __add__(self, other):
        return self._from_poly(self._poly + self._coerce(other))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        return self._from_poly(self._poly - self._coerce(other))

    def __mul__(self, other):
        return self._from_poly(self._poly * self._coerce(other))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __neg__(self):
        return self._from_poly(-self._poly)

    def __divmod__(self, other):
        quotient, remainder = self._poly.div(self._coerce(other))
        return self._from_poly(quotient), self._from_poly(remainder)

    def __eq__(self, other):
        return isinstance(other, RationalPoly) and \
            self.variable == other.variable and \
            self.coefficients == other.coefficients

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.variable, tuple(self.coefficients)))

    def __repr__(self):
        return 'RationalPoly({})'.format(self._poly.as_expr())


class ParamPoly(object):
    """A polynomial in a main variable with coefficients in QQ[parameter].

    Args:
        expression: A sympy expression (or string) polynomial in both symbols.
        variable: Name of the main variable. (Default: 't').
        parameter: Name of the parameter. (Default: 'a').

    Properties:
        * variable
        * parameter
        * degree
        * coefficients
    """
    __slots__ = ('_poly', '_param')

    def __init__(self, expression, variable='t', parameter='a'):
        self._param = Symbol(parameter)
        self._poly = Poly(sympify(expression), Symbol(variable),
                          domain=QQ[self._param])

    @property
    def variable(self):
        return str(self._poly.gen)

    @property
    def parameter(self):
        return str(self._param)

    @property
    def degree(self):
        return int(self._poly.degree())

    @property
    def coefficients(self):
        """Coefficients (sympy expressions in the parameter), highest degree first."""
        return list(self._poly.all_coeffs())

    def coefficient_polys(self):
        """Coefficients as RationalPoly objects in the parameter."""
        return [RationalPoly.from_expr(c, self.parameter) for c in self.coefficients]

    def as_expr(self):
        return self._poly.as_expr()

    def at(self, value):
        """Specialize the parameter to an exact rational value."""
        expr = self._poly.as_expr().subs(self._param, to_rational(value))
        return RationalPoly.from_expr(expr, self.variable)

    def __repr__(self):
        return 'ParamPoly({})'.format(self._poly.as_expr())


def _coefficient_list(poly):
    coeffs = [sympify(c) for c in poly.coefficients]
    assert len(coeffs) >= 2, 'Resultants need polynomials of degree at least 1.'
    return coeffs


def sylvester_matrix(p, q):
    """Sylvester matrix of two polynomials as a list of rows of sympy expressions.

    The deg(q) rows holding the coefficients of p come first, followed by the
    deg(p) rows of q. With this order the determinant equals
    lc(p)^deg(q) times the product of q over the roots of p.
    """
    pc, qc = _coefficient_list(p), _coefficient_list(q)
    m, n = len(pc) - 1, len(qc) - 1
    size = m + n
    zero = sympify(0)
    rows = []
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - n - 1 - i))
    return rows


def resultant(p, q, parameter='a'):
    """Exact resultant of p and q with respect to their main variable.

    Args:
        p: A RationalPoly or ParamPoly of degree at least 1.
        q: A RationalPoly or ParamPoly of degree at least 1 in the same variable.
        parameter: Name of the parameter of the result. (Default: 'a').

    Returns:
        A RationalPoly in the parameter (constant when p and q have rational
        coefficients).
    """
    rows = sylvester_matrix(p, q)
    size = len(rows)
    matrix = DomainMatrix.from_list_sympy(size, size, rows)
    determinant = matrix.domain.to_sympy(matrix.det())
    return RationalPoly.from_expr(determinant, parameter)
