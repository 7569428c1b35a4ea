# coding=utf-8
"""Blow-ups of the axial equation of the family (u, uv, v^2, a v^3 / 6) at 0.

Two substitutions are used:

* directional: (u, t) -> (u, t u), which opens the origin along the t-axis.
* weighted: (theta, r) -> (r^2 sin(theta), r cos(theta)), which replaces the
  origin by the exceptional circle r = 0.

Both pull backs are exact. The polynomial (E^3-cleared) coefficients of the
family equation are substituted with sympy and only the coefficients that the
resolved field needs are expanded.

Pulled back through the weighted blow-up the equation reads
8 r^7 dr^3 [P dr + r Q d(theta)] + O(r^2) = 0, so the line field of the
non-trivial factor is the vector field X = P d/d(theta) - r Q d/dr.
"""
from __future__ import division

import logging
import math

import numpy as np
from sympy import Symbol, binomial, diff, div, expand, lambdify

from ladybug.rootfinding import bisect, secant

from .claims import A, BRACKET, C_, R_A, S_, T, T_A, singular_field_polynomials
from .errors import NonHyperbolicError
from .exactpoly import to_rational
from .family import A_SYM, EPS_SYM, family_expressions, family_form_expressions
from .quartic import binary_form_roots, transform_binary_form
from .surface import U, V

_logger = logging.getLogger(__name__)

R = Symbol('r')
BIFURCATION_VALUES = (math.sqrt(56), 8.0)
BIFURCATION_TOLERANCE = 1e-6
PORTRAIT_GUARD = 1e-3
HYPERBOLIC_TOLERANCE = 1e-9
GUARD_TOLERANCE = 1e-9
GUARD_SAMPLES = 64
ROOT_TOLERANCE = 1e-12
_CACHE = {}


def polynomial_coefficients():
    """Sympy expressions (A0, ..., A4) of the E^3-cleared family equation at eps = 0.

    A_k multiplies dv^k du^(4 - k) and is a polynomial in (u, v, a).
    """
    a0, a1 = (e.subs(EPS_SYM, 0) for e in family_expressions())
    E, F, G = (e.subs(EPS_SYM, 0) for e in family_form_expressions())
    return (
        expand(E ** 3 * a0),
        expand(E ** 3 * a1),
        expand(E * E * (-6 * G * a0 + 3 * F * a1)),
        expand(E * ((4 * F * F - E * G) * a1 - 8 * F * G * a0)),
        expand(G * (E * G - 4 * F * F) * a0 + F * (2 * F * F - E * G) * a1)
    )


def _polynomial_functions():
    if 'coefficients' not in _CACHE:
        _CACHE['coefficients'] = lambdify(
            (U, V, A_SYM), list(polynomial_coefficients()), 'numpy')
    return _CACHE['coefficients']


def _exact_quotient(expr, power):
    """expr / r^power, checking that the division leaves no remainder."""
    quotient, remainder = div(expr, R ** power, R)
    if remainder != 0:
        _logger.warning('The weighted pullback is not divisible by r^%d.', power)
    return expand(quotient)


def _weighted_expressions():
    """Sympy expressions of P(theta, r) and Q(theta, r) in (c, s, r, a)."""
    if 'weighted' in _CACHE:
        return _CACHE['weighted']
    c, s, r = C_, S_, R
    subs = {U: r * r * s, V: r * c}
    coeffs = [expand(A_k.subs(subs, simultaneous=True))
              for A_k in polynomial_coefficients()]
    # du = 2 r s dr + r^2 c dtheta and dv = c dr - r s dtheta
    dr4 = sum(coeffs[k] * c ** k * (2 * r * s) ** (4 - k) for k in range(5))
    dr3 = 0
    for k in range(5):
        if k > 0:
            dr3 += coeffs[k] * k * c ** (k - 1) * (-r * s) * (2 * r * s) ** (4 - k)
        if k < 4:
            dr3 += coeffs[k] * (4 - k) * c ** k * (2 * r * s) ** (3 - k) * r * r * c
    p_expr = _exact_quotient(expand(dr4), 7) / 8
    q_expr = _exact_quotient(expand(dr3), 8) / 8
    _CACHE['weighted'] = (expand(p_expr), expand(q_expr))
    return _CACHE['weighted']


def _theta_derivative(expr):
    return expand(-S_ * diff(expr, C_) + C_ * diff(expr, S_))


def _weighted_functions():
    if 'weighted_fn' in _CACHE:
        return _CACHE['weighted_fn']
    p_expr, q_expr = _weighted_expressions()
    args = (C_, S_, R, A)
    exprs = [p_expr, q_expr, _theta_derivative(p_expr), diff(p_expr, R),
             _theta_derivative(q_expr), diff(q_expr, R)]
    _CACHE['weighted_fn'] = [lambdify(args, e, 'math') for e in exprs]
    return _CACHE['weighted_fn']


def _printed_functions():
    if 'printed' not in _CACHE:
        p, q = singular_field_polynomials()
        _CACHE['printed'] = (lambdify((C_, S_, A), p, 'math'),
                             lambdify((C_, S_, A), q, 'math'))
    return _CACHE['printed']


def _closed_form_jacobian():
    if 'closed' not in _CACHE:
        _CACHE['closed'] = lambdify(
            (T, A), R_A.as_expr() * T_A.as_expr() / (1 + T * T) ** 10, 'math')
    return _CACHE['closed']


class DirectionalPullback(object):
    """The family equation pulled back through (u, t) -> (u, t u).

    With dv = t du + u dt the coefficient of dt^j du^(4 - j) is
    sum_k A_k(u, t u) C(k, j) t^(k - j) u^j. Near the t-axis the equation is
    -u^3 du^3 [8 dt + u t^3 (2 t^2 + 1)(a^2 + 16) du] + O(u^5).

    Args:
        a: The cubic coefficient of the family.

    Properties:
        * a
        * expressions
    """
    __slots__ = ('_a', '_functions')

    def __init__(self, a):
        self._a = float(a)
        if 'directional' not in _CACHE:
            t = Symbol('t')
            coeffs = [A_k.subs({V: t * U}, simultaneous=True)
                      for A_k in polynomial_coefficients()]
            exprs = []
            for j in range(5):
                exprs.append(expand(sum(coeffs[k] * binomial(k, j) * t ** (k - j) *
                                        U ** j for k in range(j, 5))))
            _CACHE['directional'] = (
                exprs, lambdify((U, t, A_SYM), exprs, 'numpy'))
        self._functions = _CACHE['directional'][1]

    @property
    def a(self):
        return self._a

    @property
    def expressions(self):
        """Sympy expressions of the five coefficients in (u, t, a)."""
        return list(_CACHE['directional'][0])

    def coefficients(self, u, t):
        """Coefficients c_j of dt^j du^(4 - j) at (u, t)."""
        return np.array(self._functions(u, t, self._a), dtype=float)

    def directions(self, u, t):
        """Sorted angles in [0, pi) of the real directions (du, dt) at (u, t)."""
        return binary_form_roots(self.coefficients(u, t))

    def leading_terms(self, t, u=1e-4):
        """Limits of c_1 / u^3 and c_0 / u^4 as u -> 0 at a fixed t.

        Both quotients differ from their limit by O(u), which the extrapolation
        2 f(u / 2) - f(u) removes.

        Returns:
            A tuple (dt_term, du_term), close to (-8, -(a^2 + 16) t^3 (2 t^2 + 1)).
        """
        assert u > 0, 'u must be positive. Got {}.'.format(u)

        def quotients(x):
            c = self.coefficients(x, t)
            return c[1] / x ** 3, c[0] / x ** 4
        near, far = quotients(u / 2), quotients(u)
        return tuple(2 * n - f for n, f in zip(near, far))

    def leading_ratio(self, t, u=1e-4):
        """8 (du^4 term) / (du^3 dt term), which tends to t^3 (2 t^2 + 1)(a^2 + 16)."""
        dt_term, du_term = self.leading_terms(t, u)
        return 8 * du_term / dt_term

    def __repr__(self):
        return 'DirectionalPullback: a = {}'.format(self._a)


class BlowupField(object):
    """The vector field X = P d/d(theta) - r Q d/dr on the weighted blow-up.

    On the exceptional circle P(theta, 0) = 2 c s [4 s^4 + (20 - a^2) c^4 s^2 +
    (a^2 - 56) c^8] with c = cos(theta) and s = sin(theta).

    Args:
        a: The cubic coefficient of the family.

    Properties:
        * a
        * expressions
    """
    __slots__ = ('_a', '_functions')

    def __init__(self, a):
        self._a = float(a)
        self._functions = _weighted_functions()

    @property
    def a(self):
        return self._a

    @property
    def expressions(self):
        """Sympy expressions (P, Q) in (c, s, r, a)."""
        return _weighted_expressions()

    def _call(self, index, theta, r):
        return self._functions[index](math.cos(theta), math.sin(theta), r, self._a)

    def P(self, theta, r=0.0):
        return self._call(0, theta, r)

    def Q(self, theta, r=0.0):
        return self._call(1, theta, r)

    def dP(self, theta, r=0.0):
        """Derivative of P in theta."""
        return self._call(2, theta, r)

    def vector(self, theta, r):
        """The components (d theta, dr) of X at (theta, r)."""
        return self.P(theta, r), -r * self.Q(theta, r)

    def jacobian(self, theta, r=0.0):
        """The 2x2 matrix DX, rows (theta, r) and columns (d/dtheta, d/dr)."""
        q = self.Q(theta, r)
        return np.array([
            [self._call(2, theta, r), self._call(3, theta, r)],
            [-r * self._call(4, theta, r), -q - r * self._call(5, theta, r)]
        ])

    def eigenvalues(self, theta, r=0.0):
        return np.linalg.eigvals(self.jacobian(theta, r))

    def printed_restriction(self, theta):
        """The closed forms (P(theta), Q(theta)) on the exceptional circle."""
        p_fn, q_fn = _printed_functions()
        c, s = math.cos(theta), math.sin(theta)
        return p_fn(c, s, self._a), q_fn(c, s, self._a)

    def pullback_coefficients(self, theta, r):
        """Numeric pullback of the family equation at (theta, r) with r > 0.

        The polynomial coefficients are evaluated at (r^2 sin, r cos) and the
        binary form is moved to (dr, dtheta) numerically.

        Returns:
            A tuple (P, Q) read from the dr^4 and dr^3 dtheta coefficients.
        """
        assert r > 0, 'r must be positive. Got {}.'.format(r)
        c, s = math.cos(theta), math.sin(theta)
        coeffs = _polynomial_functions()(r * r * s, r * c, self._a)
        matrix = [[2 * r * s, r * r * c], [c, -r * s]]
        moved = transform_binary_form(np.array(coeffs, dtype=float), matrix)
        return moved[0] / (8 * r ** 7), moved[1] / (8 * r ** 8)

    def consistency_residual(self, samples=GUARD_SAMPLES, r=1e-2):
        """Largest relative gaps between the exact field and its checks.

        Returns:
            A dictionary with 'printed', the gap between the exact restriction
            to r = 0 and the printed closed forms, and 'numeric', the gap between
            the exact field at r and the numeric pullback at r.
        """
        printed, numeric = [], []
        for k in range(samples):
            theta = 2 * math.pi * (k + 0.5) / samples
            exact0 = (self.P(theta), self.Q(theta))
            printed.append([abs(x - y) for x, y in
                            zip(exact0, self.printed_restriction(theta))] +
                           [abs(x) for x in exact0])
            exact_r = (self.P(theta, r), self.Q(theta, r))
            numeric.append([abs(x - y) for x, y in
                            zip(exact_r, self.pullback_coefficients(theta, r))] +
                           [abs(x) for x in exact_r])

        def relative(rows):
            rows = np.array(rows)
            scale = max(rows[:, 2].max(), rows[:, 3].max(), 1e-300)
            return float(max(rows[:, 0].max(), rows[:, 1].max()) / scale)
        return {'printed': relative(printed), 'numeric': relative(numeric)}

    def __repr__(self):
        return 'BlowupField: a = {}'.format(self._a)


def pushforward_directional(a):
    """Get the DirectionalPullback of the family at a."""
    return DirectionalPullback(a)


def pushforward_weighted(a, tolerance=GUARD_TOLERANCE):
    """Get the BlowupField of the family at a and run its consistency guard.

    A gap above tolerance between the exact pullback and the printed closed forms
    is logged as a warning. The field returned is always the exact pullback.
    """
    field = BlowupField(a)
    residual = field.consistency_residual()
    if residual['printed'] > tolerance:
        _logger.warning('The printed closed forms of P and Q differ from the '
                        'pullback by %.3g (relative) at a = %s.',
                        residual['printed'], a)
    if residual['numeric'] > 1e-6:
        _logger.warning('The numeric pullback differs from the exact one by %.3g '
                        '(relative) at a = %s.', residual['numeric'], a)
    return field


class ResolvedSingularity(object):
    """A singular point (theta, 0) of the field on the exceptional circle.

    Args:
        theta: The angle in [0, 2 pi).
        jacobian: Determinant of DX at the point.
        eigenvalues: The two eigenvalues of DX.
        closed_form_jacobian: r_a t_a / (1 + t^2)^10 at t = tan(theta) (the
            limit 64 when t is infinite). (Default: None).

    Properties:
        * theta
        * t
        * jacobian
        * eigenvalues
        * type
        * closed_form_jacobian
    """
    __slots__ = ('_theta', '_jacobian', '_eigenvalues', '_closed')

    def __init__(self, theta, jacobian, eigenvalues, closed_form_jacobian=None):
        self._theta = float(theta) % (2 * math.pi)
        self._jacobian = float(jacobian)
        self._eigenvalues = tuple(complex(e) for e in eigenvalues)
        self._closed = float(closed_form_jacobian) \
            if closed_form_jacobian is not None else None

    @property
    def theta(self):
        return self._theta

    @property
    def t(self):
        """tan(theta), or a signed infinity at +-pi/2."""
        c = math.cos(self._theta)
        if abs(c) < 1e-12:
            return math.inf if math.sin(self._theta) > 0 else -math.inf
        return math.tan(self._theta)

    @property
    def jacobian(self):
        return self._jacobian

    @property
    def eigenvalues(self):
        return self._eigenvalues

    @property
    def closed_form_jacobian(self):
        return self._closed

    @property
    def type(self):
        """'saddle' for a negative jacobian, otherwise 'node' or 'focus'."""
        if self._jacobian < 0:
            return 'saddle'
        if all(abs(e.imag) <= 1e-12 * (1 + abs(e.real)) for e in self._eigenvalues):
            return 'node'
        return 'focus'

    def to_dict(self):
        t = self.t
        return {
            'type': 'ResolvedSingularity',
            'theta': self._theta,
            't': t if math.isfinite(t) else ('inf' if t > 0 else '-inf'),
            'jacobian': self._jacobian,
            'singularity_type': self.type,
            'eigenvalues': [e.real for e in self._eigenvalues],
            'closed_form_jacobian': self._closed
        }

    def __repr__(self):
        return 'ResolvedSingularity: {} at theta = {:.6f}'.format(self.type, self._theta)


def _check_bifurcation(a, tolerance):
    for value in BIFURCATION_VALUES:
        if abs(abs(a) - value) < tolerance:
            raise NonHyperbolicError(
                'non-hyperbolic: parameter at bifurcation (|a| = {:.6g}). '
                'Got a = {}.'.format(value, a))


def classify_singularity(field, theta):
    """Classify the singular point (theta, 0) of a BlowupField.

    Raises NonHyperbolicError when |det DX| < 1e-9.
    """
    jac = field.jacobian(theta, 0.0)
    det = float(np.linalg.det(jac))
    if abs(det) < HYPERBOLIC_TOLERANCE:
        raise NonHyperbolicError(
            'non-hyperbolic singular point at theta = {:.6f} (det DX = {:.3g}).'
            .format(theta, det))
    c = math.cos(theta)
    if abs(c) < 1e-12:
        closed = 64.0
    else:
        closed = _closed_form_jacobian()(math.tan(theta), field.a)
        gap = abs(closed - det) / max(abs(det), 1e-300)
        if gap > 1e-8:
            _logger.warning('The jacobian at theta = %.6f differs from r_a t_a by %.3g '
                            '(relative).', theta, gap)
    return ResolvedSingularity(theta, det, np.linalg.eigvals(jac), closed)


def _bracket_roots_exact(a):
    intervals = BRACKET.at(to_rational(a)).isolate_roots(ROOT_TOLERANCE, lower=0)
    return [float((lo + hi) / 2) for lo, hi in intervals if hi > 0]


def _bracket_roots_numeric(field, samples=4096):
    """Angles in (0, pi/2) where the bracket of P changes sign, polished."""
    def bracket(theta):
        c, s = math.cos(theta), math.sin(theta)
        return field.P(theta) / (2 * c * s)

    step = (math.pi / 2) / samples
    roots = []
    previous = bracket(step / 2)
    for k in range(1, samples):
        lo, hi = step * (k - 0.5), step * (k + 0.5)
        current = bracket(hi)
        if previous * current < 0:
            root = secant(lo, hi, bracket, ROOT_TOLERANCE)
            if root is None or not lo <= root <= hi:
                root = bisect(lo, hi, bracket, ROOT_TOLERANCE, 0)
            roots.append(math.tan(root))
        previous = current
    return roots


def find_singularities(field, exact=True):
    """All singular points of a BlowupField on the exceptional circle.

    They are theta = 0, pi/2, pi, 3 pi/2 together with theta = atan(t) and
    atan(t) + pi for the nonzero real roots t of the bracket
    4 t^8 + 8 t^6 - (a^2 - 24) t^4 - (a^2 - 20) t^2 + a^2 - 56.

    Args:
        field: A BlowupField.
        exact: Set to False to locate the bracket roots by sign changes of P and
            secant/bisection polishing instead of Sturm isolation. (Default: True).

    Returns:
        A list of ResolvedSingularity sorted by theta.
    """
    _check_bifurcation(field.a, BIFURCATION_TOLERANCE)
    positive = _bracket_roots_exact(field.a) if exact else _bracket_roots_numeric(field)
    thetas = [0.0, math.pi / 2, math.pi, 3 * math.pi / 2]
    for t in positive:
        base = math.atan(t)
        thetas.extend((base, math.pi - base, math.pi + base, 2 * math.pi - base))
    unique = []
    for theta in sorted(thetas):
        if not unique or theta - unique[-1] > 1e-9:
            unique.append(theta)
    return [classify_singularity(field, theta) for theta in unique]


def saddle_germ(theta, r0=1e-2):
    """Unit (u, v) direction of the saddle separatrix leaving (theta, 0), at r0.

    On the circle the separatrix of a saddle is the radial line (dtheta, dr) =
    (0, 1), which the blow-down takes to (2 r0 sin(theta), cos(theta)).
    """
    vec = np.array([2 * r0 * math.sin(theta), math.cos(theta)])
    return vec / np.linalg.norm(vec)


class ResolutionPortrait(object):
    """The singular points around the exceptional circle and their germs.

    Args:
        a: The cubic coefficient of the family.
        singularities: ResolvedSingularity objects sorted by theta.

    Properties:
        * a
        * singularities
        * saddles
        * nodes
        * saddles_per_half
        * regime
    """
    __slots__ = ('_a', '_singularities')

    def __init__(self, a, singularities):
        self._a = float(a)
        self._singularities = tuple(sorted(singularities, key=lambda s: s.theta))

    @property
    def a(self):
        return self._a

    @property
    def singularities(self):
        return self._singularities

    @property
    def saddles(self):
        return [s for s in self._singularities if s.type == 'saddle']

    @property
    def nodes(self):
        return [s for s in self._singularities if s.type != 'saddle']

    @property
    def saddles_per_half(self):
        """Number of saddles with theta in (-pi/2, pi/2)."""
        return sum(1 for s in self.saddles if math.cos(s.theta) > 1e-12)

    @property
    def regime(self):
        """'inner' for |a| < sqrt(56), 'middle' below 8 and 'outer' above."""
        m = abs(self._a)
        if m < BIFURCATION_VALUES[0]:
            return 'inner'
        return 'middle' if m < BIFURCATION_VALUES[1] else 'outer'

    @property
    def sequence(self):
        """The types around the circle starting at theta = 0."""
        return [s.type for s in self._singularities]

    def germs(self, r0=1e-2):
        """(theta, (du, dv)) of the blown-down separatrix germ of every saddle."""
        return [(s.theta, tuple(saddle_germ(s.theta, r0))) for s in self.saddles]

    def to_dict(self):
        return {
            'type': 'ResolutionPortrait',
            'a': self._a,
            'regime': self.regime,
            'saddles_per_half': self.saddles_per_half,
            'sequence': self.sequence,
            'singularities': [s.to_dict() for s in self._singularities]
        }

    def __repr__(self):
        return 'ResolutionPortrait: a = {} ({} saddles, {} nodes)'.format(
            self._a, len(self.saddles), len(self.nodes))


def resolution_portrait(a, exact=True):
    """The resolution of the family at a: singular points and saddle germs.

    Raises NonHyperbolicError when |a| is within 1e-3 of sqrt(56) or 8.
    """
    _check_bifurcation(a, PORTRAIT_GUARD)
    field = pushforward_weighted(a)
    return ResolutionPortrait(a, find_singularities(field, exact))
