# coding=utf-8
"""Closed forms of the Whitney family (u, uv, v^2, eps v + a v^3 / 6).

The coefficients a0, a1 below are the family-normalized axial equation. They are
the extended coefficients multiplied by -1 / (2 E^2 |N1|^2), so their zeros and
jacobian sign agree with the extended equation while the overall sign flips.
"""
from __future__ import division

import logging
import math

import numpy as np
from sympy import Rational, diff, lambdify, symbols

from .errors import BoundaryError
from .forms import FirstForm, normal_frame
from .quartic import axial_quartic
from .surface import U, V, alpha_a, alpha_eps, surface_from_expressions, whitney
from .umbilic import AxialField, NormalFormField, SurfaceField, classify_point, \
    loop_rotations

_logger = logging.getLogger(__name__)

A_SYM, EPS_SYM = symbols('a eps')
REGIME_VALUES = (Rational(15, 2), 8)
GUARD_BAND = 1e-3
MAX_EPS = 0.25
TURNING_LIMIT = 2.0
TURNING_SAMPLES = 4000


def family_expressions():
    """Sympy expressions (a0, a1) of the normalized family equation."""
    u, v, a, e = U, V, A_SYM, EPS_SYM
    a0 = u * v * (8 + 24 * v**2 + a**2 * v**2 + 2 * a**2 * v**4 +
                  2 * a * e * (1 + 3 * v**2) + 4 * e**2)
    a1 = ((24 - 2 * a**2) * v**2 - 8) * u**2 + \
        Rational(1, 2) * v**4 * ((a**2 - 2 * a) * v**2 + 16 - 2 * a) * \
        ((a**2 + 2 * a) * v**2 + 16 + 2 * a) + \
        8 * e**4 + 16 * a * e**3 * v**2 + \
        (8 * u**2 - 8 * v**4 + 12 * a**2 * v**4 - 8 + 48 * v**2) * e**2 + \
        4 * a * v**2 * (2 + a**2 * v**4 + 2 * u**2 + 20 * v**2 + 2 * v**4) * e
    return a0, a1


def family_form_expressions():
    """Sympy expressions (E, F, G) of the first form of the family."""
    u, v, a, e = U, V, A_SYM, EPS_SYM
    return 1 + v**2, u * v, u**2 + 4 * v**2 + (e + a * v**2 / 2) ** 2


_A0, _A1 = family_expressions()
_ARGS = (U, V, A_SYM, EPS_SYM)
_BETA = lambdify(_ARGS, [_A0, _A1], 'numpy')
_JACOBIAN = lambdify(_ARGS, [[diff(_A0, U), diff(_A0, V)],
                             [diff(_A1, U), diff(_A1, V)]], 'numpy')
_FORMS = lambdify(_ARGS, list(family_form_expressions()), 'numpy')


class FamilyParams(object):
    """Parameters of the family.

    Args:
        a: The cubic coefficient. (Default: 0).
        eps: The deformation. (Default: 0).

    Properties:
        * a
        * eps
    """
    __slots__ = ('_a', '_eps')

    def __init__(self, a=0, eps=0):
        self._a = float(a)
        self._eps = float(eps)

    @property
    def a(self):
        return self._a

    @property
    def eps(self):
        return self._eps

    def surface(self):
        """The SurfaceMap of these parameters."""
        if self._eps == 0:
            return alpha_a(self._a)
        return alpha_eps(self._a, self._eps)

    def to_dict(self):
        return {'type': 'FamilyParams', 'a': self._a, 'eps': self._eps}

    def __eq__(self, other):
        return isinstance(other, FamilyParams) and \
            (self._a, self._eps) == (other._a, other._eps)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._a, self._eps))

    def __repr__(self):
        return 'FamilyParams: a = {}, eps = {}'.format(self._a, self._eps)


def _params(params):
    if isinstance(params, FamilyParams):
        return params
    if isinstance(params, dict):
        return FamilyParams(params.get('a', 0), params.get('eps', 0))
    return FamilyParams(*params)


class FamilyField(AxialField):
    """The axial field of the family from its closed forms.

    The jacobian is exact. beta is the normalized pair, a negative multiple of
    the extended equation, hence the orientation -1.

    Args:
        a: The cubic coefficient. (Default: 0).
        eps: The deformation. (Default: 0).
    """
    __slots__ = ('_params',)
    FORM = 'family'

    def __init__(self, a=0, eps=0):
        AxialField.__init__(self, 'alpha_eps' if eps else 'alpha_a', -1)
        self._params = FamilyParams(a, eps)

    @property
    def params(self):
        return self._params

    @property
    def a(self):
        return self._params.a

    @property
    def eps(self):
        return self._params.eps

    def beta(self, u, v):
        return np.array(_BETA(u, v, self._params.a, self._params.eps), dtype=float)

    def jacobian(self, u, v):
        return np.array(_JACOBIAN(u, v, self._params.a, self._params.eps),
                        dtype=float)

    def forms(self, u, v):
        return FirstForm(*_FORMS(u, v, self._params.a, self._params.eps))

    def __repr__(self):
        return 'FamilyField: a = {}, eps = {}'.format(self._params.a, self._params.eps)


def field_from_family(name, a=0, eps=0, b=0, expressions=None):
    """Get the AxialField of a named family.

    Args:
        name: One of alpha_a, alpha_eps, whitney, normal_form and user.
        a: The cubic coefficient (or the first normal-form coefficient).
        eps: The deformation of alpha_eps.
        b: The second normal-form coefficient.
        expressions: The 4 polynomial components of a user surface.
    """
    if name == 'alpha_a':
        return FamilyField(a, 0)
    if name == 'alpha_eps':
        return FamilyField(a, eps)
    if name == 'whitney':
        return SurfaceField(whitney())
    if name == 'normal_form':
        return NormalFormField(a, b)
    if name == 'user':
        assert expressions is not None, 'A user surface needs its expressions.'
        return SurfaceField(surface_from_expressions(expressions))
    raise ValueError('Unknown family "{}".'.format(name))


def family_axial_coeffs(params, u, v):
    """The normalized pair (a0, a1) of the family at (u, v)."""
    params = _params(params)
    a0, a1 = _BETA(u, v, params.a, params.eps)
    return float(a0), float(a1)


def normalization(params, u, v):
    """The factor -1 / (2 E^2 |N1|^2) taking the extended pair to the closed forms."""
    params = _params(params)
    jet = params.surface().jet(u, v)
    n1 = normal_frame(jet).N1
    e = 1 + v * v
    return -1 / (2 * e * e * float(np.dot(n1, n1)))


def cross_validate(params, points):
    """Largest relative gap between the closed forms and the generic pipeline.

    Args:
        params: FamilyParams (or a dictionary / pair of a and eps).
        points: A list of (u, v) regular points.
    """
    params = _params(params)
    surface = params.surface()
    worst = 0.0
    for u, v in points:
        raw = axial_quartic(surface, u, v).coefficients[:2]
        factor = normalization(params, u, v)
        closed = family_axial_coeffs(params, u, v)
        size = max(abs(closed[0]), abs(closed[1]))
        gap = max(abs(factor * r - c) for r, c in zip(raw, closed)) / size
        worst = max(worst, gap)
    return worst


def _quadratic_roots(c2, c1, c0):
    return sorted(r.real for r in np.roots([c2, c1, c0]) if abs(r.imag) < 1e-14)


def factor_coefficients(branch, a, eps):
    """Coefficients (z^2, z, 1) of the factor of a1(0, v) in z = v^2 for a branch.

    Branch 1: (a^2 + 2a) z^2 + (16 + 2a + 4 eps (a - 1)) z + 4 eps (eps - 1)
    Branch 2: (a^2 - 2a) z^2 + (16 - 2a + 4 eps (a + 1)) z + 4 eps (eps + 1)
    """
    if branch == 1:
        return a * a + 2 * a, 16 + 2 * a + 4 * eps * (a - 1), 4 * eps * (eps - 1)
    return a * a - 2 * a, 16 - 2 * a + 4 * eps * (a + 1), 4 * eps * (eps + 1)


class BifurcationCurves(object):
    """The two curves of the (v, eps) plane that carry axiumbilic points.

    eps1(v) = 1/2 + (1 - a) v^2 / 2 - sqrt(1 - (14 + 4a) v^2 + (1 - 4a) v^4) / 2
    eps2(v) = -1/2 - (1 + a) v^2 / 2 + sqrt(1 + (4a - 14) v^2 + (4a + 1) v^4) / 2

    Both pass through the origin with eps1 = (8 + a) v^2 / 2 + (12 + 8a + a^2) v^4
    and eps2 = (a - 8) v^2 / 2 - (12 + a^2 - 8a) v^4 up to order 5.

    Args:
        a: The cubic coefficient.

    Properties:
        * a
        * leading
        * contact
    """
    __slots__ = ('_a',)

    def __init__(self, a):
        self._a = float(a)

    @property
    def a(self):
        return self._a

    @property
    def leading(self):
        """The v^2 coefficients ((8 + a) / 2, (a - 8) / 2) of the two curves."""
        return (8 + self._a) / 2, (self._a - 8) / 2

    @property
    def contact(self):
        """'opposite' for a^2 < 64, 'same' for a^2 > 64 and None at |a| = 8."""
        l1, l2 = self.leading
        if l1 * l2 == 0:
            return None
        return 'opposite' if l1 * l2 < 0 else 'same'

    def eps1(self, v):
        """The first curve at v or None outside of its domain."""
        z, a = v * v, self._a
        inner = 1 - (14 + 4 * a) * z + (1 - 4 * a) * z * z
        if inner < 0:
            return None
        return 0.5 + 0.5 * (1 - a) * z - 0.5 * math.sqrt(inner)

    def eps2(self, v):
        """The second curve at v or None outside of its domain."""
        z, a = v * v, self._a
        inner = 1 + (4 * a - 14) * z + (4 * a + 1) * z * z
        if inner < 0:
            return None
        return -0.5 - 0.5 * (1 + a) * z + 0.5 * math.sqrt(inner)

    def series1(self, v):
        z, a = v * v, self._a
        return 0.5 * (8 + a) * z + (12 + 8 * a + a * a) * z * z

    def series2(self, v):
        z, a = v * v, self._a
        return 0.5 * (a - 8) * z - (12 + a * a - 8 * a) * z * z

    def turning_height(self, branch, limit=TURNING_LIMIT, samples=TURNING_SAMPLES):
        """Height where |eps_branch| stops growing on the arc joined to the origin.

        The arc ends at the first turning point of the curve or at the end of its
        domain. The turning point is refined by golden-section search.

        Returns:
            The height, or limit when the curve grows up to it.
        """
        curve = self.curve(branch)
        sign = 1 if self.leading[branch - 1] > 0 else -1
        step = limit / samples
        previous = 0.0
        for k in range(1, samples + 1):
            v = k * step
            eps = curve(v)
            if eps is None:
                return v
            if sign * eps <= previous:
                return self._refine_turning(curve, sign, max(v - 2 * step, 0), v)
            previous = sign * eps
        return limit

    @staticmethod
    def _refine_turning(curve, sign, low, high):
        ratio = (math.sqrt(5) - 1) / 2
        for _ in range(60):
            left = high - ratio * (high - low)
            right = low + ratio * (high - low)
            if sign * curve(left) < sign * curve(right):
                low = left
            else:
                high = right
        return (low + high) / 2

    def curve(self, branch):
        """The exact curve function of a branch (1 or 2)."""
        return self.eps1 if branch == 1 else self.eps2

    def residual(self, branch, v):
        """Value of the branch factor at (v, eps_branch(v))."""
        eps = self.curve(branch)(v)
        c2, c1, c0 = factor_coefficients(branch, self._a, eps)
        z = v * v
        return c2 * z * z + c1 * z + c0

    def to_dict(self):
        return {'type': 'BifurcationCurves', 'a': self._a,
                'leading': list(self.leading), 'contact': self.contact}

    def __repr__(self):
        return 'BifurcationCurves: a = {} ({} contact)'.format(self._a, self.contact)


def bifurcation_curves(a):
    """Get the BifurcationCurves of the family at a."""
    return BifurcationCurves(a)


def eps2_max(a):
    """Largest |eps| for which the turning branch carries points when |a| > 8.

    (|a| - 8)^2 / (16 (12 + a^2 - 8 |a|)). None for |a| <= 8.
    """
    m = abs(a)
    if m <= 8:
        return None
    return (m - 8) ** 2 / (16 * (12 + m * m - 8 * m))


def axiumbilic_heights(a, eps, local=True):
    """Heights v0 > 0 of the axiumbilic points (0, +-v0) on each branch.

    A branch carries local points only when eps has the sign of its v^2
    coefficient, and only on the arc of the curve between the origin and its
    first turning point.

    Args:
        a: The cubic coefficient.
        eps: The deformation.
        local: Set to False to also get the roots that are not on the part of
            the curve joined to the origin. (Default: True).

    Returns:
        A dictionary {1: [heights], 2: [heights]}.
    """
    curves = BifurcationCurves(a)
    heights = {}
    for branch in (1, 2):
        found = []
        for z in _quadratic_roots(*factor_coefficients(branch, a, eps)):
            if z <= 0:
                continue
            on_curve = curves.curve(branch)(math.sqrt(z))
            if on_curve is None or abs(on_curve - eps) > 1e-9 * (1 + abs(eps)):
                continue
            found.append(math.sqrt(z))
        if local:
            if eps * curves.leading[branch - 1] <= 0:
                found = []
            else:
                turning = curves.turning_height(branch)
                found = [v0 for v0 in found if v0 <= turning][:1]
        heights[branch] = found
    return heights


def _check_regime(a, eps):
    if eps == 0:
        raise BoundaryError('Boundary: count/type undefined at eps = 0.')
    if abs(eps) > MAX_EPS:
        raise BoundaryError('Boundary: |eps| must not exceed {}. Got {}.'.format(
            MAX_EPS, eps))
    for edge in REGIME_VALUES:
        if abs(abs(a) - float(edge)) < GUARD_BAND:
            raise BoundaryError(
                'Boundary: count/type undefined near |a| = {}. Got a = {}.'.format(
                    edge, a))


class FamilyCensus(object):
    """Axiumbilic points of the deformed family near the origin.

    Properties:
        * params
        * records
        * count
        * types
        * index_sum
    """
    __slots__ = ('_params', '_records')

    def __init__(self, params, records):
        self._params = params
        self._records = tuple(records)

    @property
    def params(self):
        return self._params

    @property
    def records(self):
        return self._records

    @property
    def count(self):
        return len(self._records)

    @property
    def types(self):
        """Sorted list of the types of the points."""
        return sorted(r.type for r in self._records)

    @property
    def index_sum(self):
        """Sum of the index contributions (None if a type is unresolved)."""
        indexes = [r.index for r in self._records]
        if any(i is None for i in indexes):
            return None
        return sum(indexes) + 0.0

    def to_dict(self):
        return {'type': 'FamilyCensus', 'a': self._params.a, 'eps': self._params.eps,
                'count': self.count, 'types': self.types,
                'index_sum': self.index_sum,
                'records': [r.to_dict() for r in self._records]}

    def __repr__(self):
        return 'FamilyCensus: {} points {}'.format(self.count, self.types)


def count_and_type(params):
    """Count and type the axiumbilic points of the deformed family near the origin.

    The points are (0, +-v0) for the roots v0 of the branch factors on the part
    of each curve joined to the origin. Each one is typed by classify_point.

    Raises BoundaryError for eps = 0, |eps| > 0.25 and a within 1e-3 of 15/2
    or 8 (in absolute value).
    """
    params = _params(params)
    _check_regime(params.a, params.eps)
    field = FamilyField(params.a, params.eps)
    records = []
    for branch, heights in sorted(axiumbilic_heights(params.a, params.eps).items()):
        for v0 in heights:
            for point in ((0.0, -v0), (0.0, v0)):
                records.append(classify_point(field, point, 'eps{}'.format(branch)))
    records.sort(key=lambda r: r.position)
    expected = expected_census(params.a, params.eps)
    for rec in records:
        rule = expected[int(rec.branch[-1])]
        if rec.type != rule:
            _logger.warning('Axiumbilic point at %s for a = %s, eps = %s is %s while '
                            'the sign rules give %s.', rec.position, params.a,
                            params.eps, rec.type, rule)
    return FamilyCensus(params, records)


def _topology_from_turns(turns):
    if all(abs(abs(t) - 1) < 0.1 for t in turns):
        return 'TwoCylinders'
    if all(abs(t) < 0.1 for t in turns):
        return 'FourDisks'
    return None


def lie_cartan_topology(a, radius=0.05, samples=720):
    """The shape of the Lie-Cartan surface over a punctured disk at the origin.

    Over the punctured disk the surface is a 4-sheeted cover of an annulus, so
    its components follow from the monodromy of the four direction branches
    around one circle, which gives the same count as labelling components on a
    grid. When each branch returns rotated by half a turn the sheets pair up into
    two cylinders and when each returns to itself they are four punctured disks.
    The loop is sampled at samples and at 2 samples and both must agree.

    Returns:
        'TwoCylinders' or 'FourDisks'.
    """
    if abs(abs(a) - 8) < GUARD_BAND:
        raise BoundaryError('Boundary: topology undefined near |a| = 8.')
    field = FamilyField(a, 0)
    results = []
    for count in (samples, 2 * samples):
        turns = [r / math.pi for r in loop_rotations(field, (0.0, 0.0), radius, count)]
        results.append((_topology_from_turns(turns), turns))
    (coarse, coarse_turns), (fine, fine_turns) = results
    if coarse is None or fine is None or coarse != fine:
        raise BoundaryError('Unstable branch rotations {} and {} for a = {}.'.format(
            coarse_turns, fine_turns, a))
    return fine


def expected_census(a, eps):
    """The type of each branch from the sign rules of the local census.

    Returns:
        A dictionary {branch: type} of the branches that carry points.
    """
    result = {}
    heights = axiumbilic_heights(a, eps)
    if heights[1]:
        result[1] = 'E3' if a > -7.5 else 'E4'
        if 8 + a < 0:
            result[1] = 'E5'
    if heights[2]:
        result[2] = 'E3' if a < 7.5 else 'E4'
        if a - 8 > 0:
            result[2] = 'E5'
    return result

