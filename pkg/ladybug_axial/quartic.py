# coding=utf-8
"""The quartic differential equation of axial lines and its directions.

The equation is the binary form a4 dv^4 + a3 dv^3 du + a2 dv^2 du^2 +
a1 dv du^3 + a0 du^4 = 0. Coefficients are stored as (a0, a1, a2, a3, a4) so
that a_k multiplies dv^k du^(4 - k).
"""
from __future__ import division

import logging
import math

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import CriticalPointError, SingularPointError
from .forms import FirstForm, first_form, normal_frame, second_form_scaled, \
    deviation as surface_deviation

_logger = logging.getLogger(__name__)

REAL_TOLERANCE = 1e-8
ZERO_COEFFICIENT = 1e-15
RELATION_TOLERANCE = 1e-10
FORMS = ('regular', 'extended', 'normal-form', 'family')


def complete_coefficients(a0, a1, forms):
    """Get (a0, a1, a2, a3, a4) from a0, a1 with the linear relations of the form.

    E a2 = -6 G a0 + 3 F a1
    E^2 a3 = (4 F^2 - E G) a1 - 8 F G a0
    E^3 a4 = G (E G - 4 F^2) a0 + F (2 F^2 - E G) a1
    """
    E, F, G = forms.E, forms.F, forms.G
    if E <= 0:
        raise CriticalPointError('The relations need E > 0. Got E = {}.'.format(E))
    a2 = (-6 * G * a0 + 3 * F * a1) / E
    a3 = ((4 * F * F - E * G) * a1 - 8 * F * G * a0) / (E * E)
    a4 = (G * (E * G - 4 * F * F) * a0 + F * (2 * F * F - E * G) * a1) / E ** 3
    return (a0, a1, a2, a3, a4)


class AxialQuartic(object):
    """The coefficients of the axial line equation at a point.

    Args:
        coefficients: The five coefficients (a0, a1, a2, a3, a4).
        forms: The FirstForm at the point (used for the linear relations and for
            splitting the directions into crossings).
        form: Text for how the coefficients were built. One of regular,
            extended, normal-form and family. (Default: 'regular').
        point: The (u, v) base point. (Default: None).

    Properties:
        * coefficients
        * forms
        * form
        * point
    """
    __slots__ = ('_coefficients', '_forms', '_form', '_point')

    def __init__(self, coefficients, forms, form='regular', point=None):
        coeffs = tuple(float(c) for c in coefficients)
        assert len(coeffs) == 5, \
            'AxialQuartic needs 5 coefficients. Got {}.'.format(len(coeffs))
        assert form in FORMS, 'form must be one of {}. Got {}.'.format(FORMS, form)
        self._coefficients = coeffs
        self._forms = forms
        self._form = form
        self._point = tuple(point) if point is not None else None

    @classmethod
    def from_leading(cls, a0, a1, forms, form='regular', point=None):
        """Create an AxialQuartic from a0 and a1 using the linear relations."""
        return cls(complete_coefficients(a0, a1, forms), forms, form, point)

    @property
    def coefficients(self):
        """Tuple of (a0, a1, a2, a3, a4)."""
        return self._coefficients

    @property
    def forms(self):
        return self._forms

    @property
    def form(self):
        return self._form

    @property
    def point(self):
        return self._point

    @property
    def scale(self):
        return max(abs(c) for c in self._coefficients)

    def is_zero(self, tolerance=0.0):
        """Boolean noting whether every coefficient is within tolerance of zero."""
        return self.scale <= tolerance

    def polynomial_form(self):
        """The coefficients multiplied by E^3, which are polynomial in the jet."""
        e3 = self._forms.E ** 3
        return tuple(e3 * c for c in self._coefficients)

    def scaled(self, factor):
        """A new AxialQuartic with every coefficient multiplied by factor."""
        return AxialQuartic([factor * c for c in self._coefficients], self._forms,
                            self._form, self._point)

    def evaluate(self, du, dv):
        """Value of the binary quartic at the direction (du, dv)."""
        return sum(c * dv ** k * du ** (4 - k)
                   for k, c in enumerate(self._coefficients))

    def relation_residual(self):
        """Largest relative residual of the three linear relations."""
        a0, a1, a2, a3, a4 = self._coefficients
        E, F, G = self._forms.E, self._forms.F, self._forms.G
        size = (1 + abs(E) + abs(F) + abs(G)) ** 3 * (1 + abs(a0) + abs(a1))
        res = (
            E * a2 - (-6 * G * a0 + 3 * F * a1),
            E * E * a3 - ((4 * F * F - E * G) * a1 - 8 * F * G * a0),
            E ** 3 * a4 - (G * (E * G - 4 * F * F) * a0 + F * (2 * F * F - E * G) * a1)
        )
        return max(abs(r) for r in res) / size

    def directions(self):
        """The real axial directions as a CrossingPair."""
        return solve_directions(self)

    def to_dict(self):
        return {
            'type': 'AxialQuartic',
            'form': self._form,
            'point': list(self._point) if self._point is not None else None,
            'coefficients': list(self._coefficients)
        }

    def __repr__(self):
        return 'AxialQuartic ({}): {}'.format(self._form, self._coefficients)


def binary_form_roots(coefficients, tolerance=REAL_TOLERANCE):
    """Real root directions of a binary form sum_k c_k dv^k du^(n - k).

    The form is dehomogenized on the larger of |c_n| and |c_0| and solved with
    numpy's companion-matrix roots. When both vanish the factor du dv is taken
    out exactly.

    Args:
        coefficients: The coefficients (c_0, ..., c_n).
        tolerance: Imaginary parts up to tolerance (1 + |Re|) are accepted.

    Returns:
        A sorted list of angles in [0, pi) of the directions (du, dv) with
        dv/du = tan(angle). Repeated roots are repeated.
    """
    c = np.array(coefficients, dtype=float)
    scale = float(np.abs(c).max()) if len(c) else 0.0
    if scale == 0:
        raise SingularPointError('Singular point: direction field undefined.')
    c[np.abs(c) <= ZERO_COEFFICIENT * scale] = 0.0
    angles = []
    while len(c) > 1 and c[0] == 0 and c[-1] == 0:
        angles.extend((0.0, math.pi / 2))
        c = c[1:-1]
    n = len(c) - 1
    if n >= 1:
        if abs(c[-1]) >= abs(c[0]):
            for root in np.roots(c[::-1]):
                if abs(root.imag) <= tolerance * (1 + abs(root.real)):
                    angles.append(math.atan(root.real) % math.pi)
        else:
            for root in np.roots(c):
                if abs(root.imag) <= tolerance * (1 + abs(root.real)):
                    angles.append(math.atan2(1.0, root.real) % math.pi)
    return sorted(angles)


def transform_binary_form(coefficients, matrix):
    """Coefficients of a binary form after the substitution (du, dv) = M (dx, dy).

    Args:
        coefficients: The coefficients c_k of dv^k du^(n - k).
        matrix: A 2x2 matrix M.

    Returns:
        The coefficients of dy^k dx^(n - k) as a numpy array.
    """
    n = len(coefficients) - 1
    m = np.asarray(matrix, dtype=float)
    du = np.array([m[0, 0], m[0, 1]])
    dv = np.array([m[1, 0], m[1, 1]])
    result = np.zeros(n + 1)
    for k, c in enumerate(coefficients):
        term = npoly.polymul(npoly.polypow(dv, k), npoly.polypow(du, n - k))
        result[:len(term)] += c * term
    return result


class CrossingPair(object):
    """The real axial directions at a point split into two crossings.

    Args:
        angles: Sorted chart angles in [0, pi) of the real directions.
        principal: Tuple of the two angles of maximal deviation (or None).
        mean: Tuple of the two angles of minimal deviation (or None).
        deviations: Tuple of (principal, mean) deviation values (or None).

    Properties:
        * angles
        * count
        * principal
        * mean
        * deviations
        * is_complete
    """
    __slots__ = ('_angles', '_principal', '_mean', '_deviations')

    def __init__(self, angles, principal=None, mean=None, deviations=None):
        self._angles = tuple(angles)
        self._principal = tuple(principal) if principal is not None else None
        self._mean = tuple(mean) if mean is not None else None
        self._deviations = tuple(deviations) if deviations is not None else None

    @property
    def angles(self):
        return self._angles

    @property
    def count(self):
        """Number of real directions."""
        return len(self._angles)

    @property
    def principal(self):
        """The principal axial crossing (maximal deviation)."""
        return self._principal

    @property
    def mean(self):
        """The mean axial crossing (minimal deviation)."""
        return self._mean

    @property
    def deviations(self):
        return self._deviations

    @property
    def is_complete(self):
        return self._principal is not None

    def branch(self, foliation):
        """The crossing of a foliation ('principal' or 'mean')."""
        assert foliation in ('principal', 'mean'), \
            'foliation must be principal or mean. Got {}.'.format(foliation)
        return self._principal if foliation == 'principal' else self._mean

    def to_dict(self):
        return {
            'type': 'CrossingPair',
            'angles': list(self._angles),
            'principal': list(self._principal) if self._principal else None,
            'mean': list(self._mean) if self._mean else None,
            'deviations': list(self._deviations) if self._deviations else None
        }

    def __repr__(self):
        return 'CrossingPair: {} directions'.format(self.count)


def pseudo_deviation(quartic, angle):
    """A function of the chart angle with the deviation's critical directions.

    In an orthonormal chart the deviation is a constant plus
    (a1 / 32) cos(4 phi) - (a0 / 8) sin(4 phi). The quartic is moved to an
    orthonormal basis of its first form before using this formula, so the value
    is defined up to an additive constant and a positive factor.
    """
    basis = np.column_stack(quartic.forms.orthonormal_basis())
    a = transform_binary_form(quartic.coefficients, basis)
    inv = np.linalg.solve(basis, [math.cos(angle), math.sin(angle)])
    phi = math.atan2(inv[1], inv[0])
    return a[1] / 32 * math.cos(4 * phi) - a[0] / 8 * math.sin(4 * phi)


def _orthogonal_partner(quartic, angle, others):
    """The direction among others closest to being orthogonal to angle."""
    forms = quartic.forms
    d0 = (math.cos(angle), math.sin(angle))

    def cosine(other):
        d1 = (math.cos(other), math.sin(other))
        inner = forms.E * d0[0] * d1[0] + forms.F * (d0[0] * d1[1] + d0[1] * d1[0]) + \
            forms.G * d0[1] * d1[1]
        return abs(inner) / math.sqrt(
            forms.length_squared(*d0) * forms.length_squared(*d1))
    return min(others, key=cosine)


def solve_directions(quartic, deviation=None):
    """Solve the quartic for its real directions and group them into crossings.

    Args:
        quartic: An AxialQuartic whose first form is regular.
        deviation: Optional function of a chart angle giving the deviation used to
            tell the principal crossing from the mean one. By default the
            pseudo_deviation of the quartic is used, which assumes the quartic is
            a positive multiple of the axial equation.

    Returns:
        A CrossingPair. Crossings are only filled when 4 real directions exist.
    """
    angles = binary_form_roots(quartic.coefficients)
    if len(angles) != 4:
        if len(angles) < 4:
            _logger.debug('Only %d real axial directions at %s.',
                          len(angles), quartic.point)
        return CrossingPair(angles)
    if quartic.forms.is_critical():
        return CrossingPair(angles)
    dev_fn = deviation if deviation is not None else \
        (lambda ang: pseudo_deviation(quartic, ang))
    first = angles[0]
    partner = _orthogonal_partner(quartic, first, angles[1:])
    pair_a = (first, partner)
    pair_b = tuple(a for a in angles if a not in pair_a)
    if len(pair_b) != 2:
        return CrossingPair(angles)
    dev_a = sum(dev_fn(a) for a in pair_a) / 2
    dev_b = sum(dev_fn(a) for a in pair_b) / 2
    if abs(dev_a - dev_b) <= 1e-12 * (abs(dev_a) + abs(dev_b)):
        _logger.warning('Equal deviations of both crossings at %s; the point is '
                        'close to an axiumbilic point.', quartic.point)
    if dev_a >= dev_b:
        return CrossingPair(angles, pair_a, pair_b, (dev_a, dev_b))
    return CrossingPair(angles, pair_b, pair_a, (dev_b, dev_a))


def auxiliary_invariants(forms, values):
    """The invariants (L, M, N) of one normal from (e, f, g).

    L = F g - G f, M = E g - G e, N = E f - F e.
    """
    e, f, g = values
    E, F, G = forms.E, forms.F, forms.G
    return (F * g - G * f, E * g - G * e, E * f - F * e)


def quartic_regular(forms, sff, point=None):
    """The axial quartic from the normalized second form at a regular point.

    a0 = 4 E (M1 N1 + M2 N2) - 8 F (N1^2 + N2^2)
    a1 = 4 E (M1^2 + M2^2) - 16 G (N1^2 + N2^2)

    The other coefficients follow from the linear relations.
    """
    if forms.is_critical() or not sff.is_normalized:
        raise CriticalPointError(
            'Critical point: use quartic_extended for the axial equation.')
    e1, f1, g1, e2, f2, g2 = sff.normalized
    _, m1, n1 = auxiliary_invariants(forms, (e1, f1, g1))
    _, m2, n2 = auxiliary_invariants(forms, (e2, f2, g2))
    a0 = 4 * forms.E * (m1 * n1 + m2 * n2) - 8 * forms.F * (n1 * n1 + n2 * n2)
    a1 = 4 * forms.E * (m1 * m1 + m2 * m2) - 16 * forms.G * (n1 * n1 + n2 * n2)
    return AxialQuartic.from_leading(a0, a1, forms, 'regular', point)


def quartic_regular_expanded(forms, sff):
    """The pair (a0, a1) from the long form written directly in e, f, g."""
    if forms.is_critical() or not sff.is_normalized:
        raise CriticalPointError('The long form needs a regular point.')
    e1, f1, g1, e2, f2, g2 = sff.normalized
    E, F, G = forms.E, forms.F, forms.G
    ee, ff, gg = e1 * e1 + e2 * e2, f1 * f1 + f2 * f2, g1 * g1 + g2 * g2
    ef, eg, fg = e1 * f1 + e2 * f2, e1 * g1 + e2 * g2, f1 * g1 + f2 * g2
    a1 = 4 * E ** 3 * gg + 4 * G * (E * G - 4 * F * F) * ee + 32 * E * F * G * ef - \
        16 * E * E * G * ff - 8 * E * E * G * eg
    a0 = 4 * F * (E * G - 2 * F * F) * ee - 4 * E * (E * G - 4 * F * F) * ef - \
        8 * E * E * F * ff - 4 * E * E * F * eg + 4 * E ** 3 * fg
    return a0, a1


def check_long_form(forms, sff, tolerance=1e-9):
    """Compare the long form with the simplified one and log any mismatch.

    Returns:
        The relative discrepancy between the two (a0, a1) pairs.
    """
    quartic = quartic_regular(forms, sff)
    a0, a1 = quartic_regular_expanded(forms, sff)
    b0, b1 = quartic.coefficients[:2]
    size = 1e-300 + max(abs(b0), abs(b1))
    gap = max(abs(a0 - b0), abs(a1 - b1)) / size
    if gap > tolerance:
        _logger.warning('The long and simplified axial equations differ by %g '
                        '(relative).', gap)
    return gap


def quartic_extended(forms, sff, frame, point=None):
    """The extended axial quartic, defined at Whitney critical points too.

    With the barred invariants built from the scaled coefficients and
    D = E G - F^2:

    a0 = 4 E [D N1 M1 + M2 N2] - 8 F [D N1^2 + N2^2]
    a1 = 4 E [D M1^2 + M2^2] - 16 G [D N1^2 + N2^2]

    At regular points this equals quartic_regular times |N2|^2.
    """
    e1, f1, g1, e2, f2, g2 = sff.scaled
    _, m1, n1 = auxiliary_invariants(forms, (e1, f1, g1))
    _, m2, n2 = auxiliary_invariants(forms, (e2, f2, g2))
    E, F, G, D = forms.E, forms.F, forms.G, forms.D
    a0 = 4 * E * (D * n1 * m1 + m2 * n2) - 8 * F * (D * n1 * n1 + n2 * n2)
    a1 = 4 * E * (D * m1 * m1 + m2 * m2) - 16 * G * (D * n1 * n1 + n2 * n2)
    return AxialQuartic.from_leading(a0, a1, forms, 'extended', point)


def axial_quartic(surface, u, v, extended=True):
    """The axial quartic of a surface map at (u, v).

    Args:
        surface: A SurfaceMap.
        u: The u coordinate.
        v: The v coordinate.
        extended: Set to False to use the regular form (raises at critical
            points). (Default: True).
    """
    jet = surface.jet(u, v)
    forms = first_form(jet)
    frame = normal_frame(jet)
    sff = second_form_scaled(jet, frame)
    if extended:
        return quartic_extended(forms, sff, frame, (u, v))
    return quartic_regular(forms, sff, (u, v))


def surface_directions(surface, u, v):
    """The CrossingPair of a surface map at a regular point (u, v).

    The crossings are split with the true deviation |k_n - H|^2.
    """
    jet = surface.jet(u, v)
    forms = first_form(jet)
    frame = normal_frame(jet)
    sff = second_form_scaled(jet, frame)
    quartic = quartic_regular(forms, sff, (u, v))
    return solve_directions(
        quartic, lambda ang: surface_deviation(jet, frame, forms, ang))


def normal_form_coefficients(a, b, x, y):
    """Coefficients (a0, ..., a4) of the normal form at (x, y).

    The equation is y (dy^4 - 6 dx^2 dy^2 + dx^4) +
    (a x + b y) dx dy (dx^2 - dy^2) = 0.
    """
    lin = a * x + b * y
    return (y, lin, -6 * y, -lin, y)


def normal_form_field(a, b):
    """The normal-form axial field as a function (x, y) -> AxialQuartic.

    The chart (x, y) is orthonormal.
    """
    forms = FirstForm(1, 0, 1)

    def field(x, y):
        return AxialQuartic(normal_form_coefficients(a, b, x, y), forms,
                            'normal-form', (x, y))
    return field


def principal_directions_r3(jet):
    """Principal directions of a surface whose image lies in a 3-space.

    The normal is taken in the span of the jet, orthogonal to d_u and d_v, and
    the principal directions are the eigenvectors of the shape operator. Used
    as an independent check of the principal crossing.

    Returns:
        A sorted list of the two chart angles in [0, pi).
    """
    span = np.array([jet.d_u, jet.d_v, jet.d_uu, jet.d_uv, jet.d_vv])
    _, sing, vt = np.linalg.svd(span)
    rank = int((sing > 1e-10 * sing[0]).sum())
    if rank != 3:
        raise ValueError('The jet does not span a 3-space (rank {}).'.format(rank))
    basis = vt[:3]
    tangent = np.array([jet.d_u, jet.d_v]).dot(basis.T)
    normal = np.cross(tangent[0], tangent[1])
    normal = normal / np.linalg.norm(normal)
    second = [np.dot(basis.T.dot(normal), d) for d in (jet.d_uu, jet.d_uv, jet.d_vv)]
    forms = first_form(jet)
    one = np.array([[forms.E, forms.F], [forms.F, forms.G]])
    two = np.array([[second[0], second[1]], [second[1], second[2]]])
    _, vectors = np.linalg.eig(np.linalg.solve(one, two))
    vectors = np.real(vectors)
    return sorted(math.atan2(vectors[1, k], vectors[0, k]) % math.pi for k in range(2))
