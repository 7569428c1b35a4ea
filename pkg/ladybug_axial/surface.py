# coding=utf-8
"""Surface maps from the plane into R^4 and their 2-jets.

Built-in families are polynomial, so their partial derivatives are taken exactly
with sympy and compiled to numpy functions. Maps given as Python functions fall
back to central finite differences.
"""
from __future__ import division

import math
import re

import numpy as np
from sympy import Symbol, diff, lambdify, sympify
from sympy.parsing.sympy_parser import parse_expr, standard_transformations, \
    convert_xor, rationalize

from .errors import EvaluationError
from .exactpoly import to_rational

PARTIALS = ('value', 'd_u', 'd_v', 'd_uu', 'd_uv', 'd_vv')
U = Symbol('u')
V = Symbol('v')
_EXPRESSION_PATTERN = re.compile(r'^[0-9uv\s\.\+\-\*/\^\(\)]*$')


class SurfaceJet(object):
    """The value of a map into R^4 and its partial derivatives up to order 2.

    Args:
        point: The (u, v) base point.
        value: The map value as 4 numbers.
        d_u: First partial derivative in u.
        d_v: First partial derivative in v.
        d_uu: Second partial derivative in u.
        d_uv: Mixed second partial derivative.
        d_vv: Second partial derivative in v.

    Properties:
        * point
        * value
        * d_u
        * d_v
        * d_uu
        * d_uv
        * d_vv
    """
    __slots__ = ('_point', '_value', '_d_u', '_d_v', '_d_uu', '_d_uv', '_d_vv')

    def __init__(self, point, value, d_u, d_v, d_uu, d_uv, d_vv):
        self._point = (float(point[0]), float(point[1]))
        for name, vec in zip(PARTIALS, (value, d_u, d_v, d_uu, d_uv, d_vv)):
            arr = np.array(vec, dtype=float).reshape(-1)
            assert arr.shape == (4,), \
                'Jet entry "{}" must have 4 components. Got {}.'.format(name, arr.shape)
            if not np.all(np.isfinite(arr)):
                raise EvaluationError(name, self._point)
            arr.flags.writeable = False
            setattr(self, '_' + name, arr)

    @property
    def point(self):
        """The (u, v) base point of the jet."""
        return self._point

    @property
    def value(self):
        return self._value

    @property
    def d_u(self):
        return self._d_u

    @property
    def d_v(self):
        return self._d_v

    @property
    def d_uu(self):
        return self._d_uu

    @property
    def d_uv(self):
        return self._d_uv

    @property
    def d_vv(self):
        return self._d_vv

    @property
    def scale(self):
        """A positive size of the jet used to make tolerances relative."""
        return 1.0 + max(float(np.abs(getattr(self, '_' + p)).max()) for p in PARTIALS)

    def to_dict(self):
        base = {'type': 'SurfaceJet', 'point': list(self._point)}
        for name in PARTIALS:
            base[name] = [float(x) for x in getattr(self, '_' + name)]
        return base

    def __repr__(self):
        return 'SurfaceJet: (u, v) = {}'.format(self._point)


class SurfaceMap(object):
    """Base class of maps (u, v) -> R^4.

    Args:
        name: A name for the map.
        parameters: A dictionary of the parameters that define the map.

    Properties:
        * name
        * parameters
        * is_analytic
    """
    __slots__ = ('_name', '_parameters')

    def __init__(self, name, parameters=None):
        self._name = str(name)
        self._parameters = dict(parameters) if parameters is not None else {}

    @property
    def name(self):
        return self._name

    @property
    def parameters(self):
        """A copy of the dictionary of parameters of the map."""
        return dict(self._parameters)

    @property
    def is_analytic(self):
        """Boolean noting whether jets are exact rather than finite differences."""
        return False

    def evaluate(self, u, v):
        """Evaluate the map at a point and return a numpy array of 4 values."""
        raise NotImplementedError('evaluate is not implemented for {}.'.format(
            self.__class__.__name__))

    def jet(self, u, v):
        """Get the SurfaceJet of the map at (u, v)."""
        return self.finite_difference_jet(u, v)

    def finite_difference_jet(self, u, v, step=None):
        """Get a SurfaceJet by central finite differences.

        First derivatives use the step h = 1e-5 max(1, |u|, |v|). Second
        derivatives use the larger step 100 h so that the rounding error of the
        three-point formulas stays near 1e-10.

        Args:
            u: The u coordinate.
            v: The v coordinate.
            step: Optional first-derivative step to override the default.
        """
        _check_point(u, v)
        h = step if step is not None else 1e-5 * max(1.0, abs(u), abs(v))
        k = 100 * h
        f = self.evaluate
        f0 = np.asarray(f(u, v), dtype=float)
        d_u = (f(u + h, v) - f(u - h, v)) / (2 * h)
        d_v = (f(u, v + h) - f(u, v - h)) / (2 * h)
        d_uu = (f(u + k, v) - 2 * f0 + f(u - k, v)) / (k * k)
        d_vv = (f(u, v + k) - 2 * f0 + f(u, v - k)) / (k * k)
        d_uv = (f(u + k, v + k) - f(u + k, v - k) -
                f(u - k, v + k) + f(u - k, v - k)) / (4 * k * k)
        return SurfaceJet((u, v), f0, d_u, d_v, d_uu, d_uv, d_vv)

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'SurfaceMap: {} {}'.format(self._name, self._parameters)


class PolynomialSurface(SurfaceMap):
    """A map into R^4 whose components are polynomials in (u, v).

    Args:
        components: A list of 4 sympy expressions (or strings) in the symbols
            u and v.
        name: A name for the map. (Default: 'polynomial').
        parameters: A dictionary of the parameters that define the map.

    Properties:
        * name
        * parameters
        * components
        * is_analytic
    """
    __slots__ = ('_components', '_functions')

    def __init__(self, components, name='polynomial', parameters=None):
        SurfaceMap.__init__(self, name, parameters)
        exprs = tuple(sympify(c) for c in components)
        assert len(exprs) == 4, \
            'PolynomialSurface needs 4 components. Got {}.'.format(len(exprs))
        for expr in exprs:
            extra = expr.free_symbols - {U, V}
            assert not extra, 'Components may only use u and v. Got {}.'.format(extra)
            assert expr.is_polynomial(U, V), \
                'Components must be polynomials in u and v. Got {}.'.format(expr)
        self._components = exprs
        partials = (
            exprs,
            [diff(e, U) for e in exprs],
            [diff(e, V) for e in exprs],
            [diff(e, U, U) for e in exprs],
            [diff(e, U, V) for e in exprs],
            [diff(e, V, V) for e in exprs]
        )
        self._functions = tuple(lambdify((U, V), list(p), 'numpy') for p in partials)

    @property
    def components(self):
        """Tuple of the 4 sympy component expressions."""
        return self._components

    @property
    def is_analytic(self):
        return True

    def evaluate(self, u, v):
        return np.array(self._functions[0](u, v), dtype=float)

    def jet(self, u, v):
        _check_point(u, v)
        values = [np.array(fn(u, v), dtype=float) for fn in self._functions]
        return SurfaceJet((u, v), *values)


class FunctionSurface(SurfaceMap):
    """A map into R^4 given by a Python function of (u, v).

    Args:
        function: A function taking (u, v) and returning 4 numbers.
        name: A name for the map. (Default: 'function').
        parameters: A dictionary of the parameters that define the map.
    """
    __slots__ = ('_function',)

    def __init__(self, function, name='function', parameters=None):
        SurfaceMap.__init__(self, name, parameters)
        assert callable(function), \
            'FunctionSurface needs a callable. Got {}.'.format(type(function))
        self._function = function

    def evaluate(self, u, v):
        return np.array(self._function(u, v), dtype=float)


def _check_point(u, v):
    if not (math.isfinite(u) and math.isfinite(v)):
        raise EvaluationError('point', (u, v))


def alpha_a(a=0):
    """The family (u, uv, v^2, a v^3 / 6) with a Whitney critical point at 0."""
    a_ex = to_rational(a)
    return PolynomialSurface(
        (U, U * V, V ** 2, a_ex * V ** 3 / 6), 'alpha_a', {'a': float(a)})


def alpha_eps(a=0, eps=0):
    """The deformation (u, uv, v^2, eps v + a v^3 / 6) of alpha_a."""
    a_ex, e_ex = to_rational(a), to_rational(eps)
    return PolynomialSurface(
        (U, U * V, V ** 2, e_ex * V + a_ex * V ** 3 / 6), 'alpha_eps',
        {'a': float(a), 'eps': float(eps)})


def whitney():
    """The Whitney umbrella (u, uv, v^2, 0)."""
    return PolynomialSurface((U, U * V, V ** 2, 0), 'whitney')


SURFACE_FAMILIES = {
    'alpha_a': alpha_a,
    'alpha_eps': alpha_eps,
    'whitney': whitney
}


def surface_from_family(name, **parameters):
    """Get a built-in surface by family name.

    Args:
        name: One of 'alpha_a', 'alpha_eps' or 'whitney'.
        parameters: Keyword values for the family (a, eps). Keywords that the
            family does not use are ignored.
    """
    try:
        family = SURFACE_FAMILIES[name]
    except KeyError:
        raise ValueError('Unknown surface family "{}". Choose from {}.'.format(
            name, sorted(SURFACE_FAMILIES)))
    if name == 'alpha_a':
        return family(parameters.get('a', 0))
    if name == 'alpha_eps':
        return family(parameters.get('a', 0), parameters.get('eps', 0))
    return family()


def parse_polynomial(expression):
    """Safely parse a polynomial in u and v with rational coefficients.

    Only digits, u, v, whitespace, the decimal point, parentheses and the
    operators + - * / ^ are accepted. Decimals are read as exact rationals.
    """
    expression = str(expression)
    if not _EXPRESSION_PATTERN.match(expression):
        raise ValueError('Expression "{}" contains characters outside of the '
                         'polynomial subset.'.format(expression))
    transforms = standard_transformations + (convert_xor, rationalize)
    expr = parse_expr(expression, local_dict={'u': U, 'v': V},
                      transformations=transforms, evaluate=True)
    if not expr.is_polynomial(U, V):
        raise ValueError('Expression "{}" is not a polynomial in u and v.'.format(
            expression))
    return expr


def surface_from_expressions(expressions, name='user'):
    """Create a PolynomialSurface from 4 expression strings.

    Args:
        expressions: A list of 4 strings or a single string with the 4 components
            separated by commas (eg. "u, u*v, v^2, v^3/3").
        name: A name for the surface. (Default: 'user').
    """
    if isinstance(expressions, str):
        expressions = expressions.split(',')
    exprs = [parse_polynomial(e.strip()) for e in expressions]
    if len(exprs) != 4:
        raise ValueError('A surface needs 4 components. Got {}.'.format(len(exprs)))
    return PolynomialSurface(
        exprs, name, {'components': [str(e) for e in exprs]})


def evaluate_jet(surface, point):
    """Get the SurfaceJet of a surface map at a (u, v) point."""
    u, v = float(point[0]), float(point[1])
    return surface.jet(u, v)
