# coding=utf-8
"""Fundamental forms, the Whitney normal frame and the ellipse of curvature.

All functions take a SurfaceJet. The normal frame is built from the 4D triple
product, so it stays defined (and merely vanishes) at critical points that
satisfy the Whitney condition.
"""
from __future__ import division

import math

import numpy as np

from .errors import CriticalPointError

WHITNEY_TOLERANCE = 1e-9
REGULAR_TOLERANCE = 1e-12
CIRCLE_TOLERANCE = 1e-8


def _det3(m):
    return m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1]) - \
        m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0]) + \
        m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])


def wedge(a, b, c):
    """The 4D triple product a ^ b ^ c.

    It is the formal determinant whose first row holds the standard basis
    vectors, expanded along that row. The result is orthogonal to a, b and c.
    """
    m = np.array([a, b, c], dtype=float)
    return np.array([(-1) ** i * _det3(np.delete(m, i, axis=1)) for i in range(4)])


class FirstForm(object):
    """The first fundamental form E du^2 + 2F du dv + G dv^2.

    Args:
        E: Coefficient of du^2.
        F: Coefficient of du dv (halved).
        G: Coefficient of dv^2.

    Properties:
        * E
        * F
        * G
        * D
    """
    __slots__ = ('_E', '_F', '_G')

    def __init__(self, E, F, G):
        self._E = float(E)
        self._F = float(F)
        self._G = float(G)

    @property
    def E(self):
        return self._E

    @property
    def F(self):
        return self._F

    @property
    def G(self):
        return self._G

    @property
    def D(self):
        """The determinant EG - F^2 (zero at critical points)."""
        return self._E * self._G - self._F * self._F

    @property
    def scale(self):
        return 1.0 + abs(self._E) + abs(self._G)

    def is_critical(self, tolerance=REGULAR_TOLERANCE):
        """Boolean noting whether D vanishes relative to the size of the form."""
        return self.D <= tolerance * self.scale ** 2

    def length_squared(self, du, dv):
        return self._E * du * du + 2 * self._F * du * dv + self._G * dv * dv

    def orthonormal_basis(self):
        """Two (du, dv) vectors that are orthonormal for this form.

        The first is along the u axis. Raises CriticalPointError when D = 0.
        """
        if self.is_critical():
            raise CriticalPointError(
                'No orthonormal basis: the first form is degenerate (D = {}).'.format(
                    self.D))
        rt_e, rt_d = math.sqrt(self._E), math.sqrt(self.D)
        return np.array([1.0 / rt_e, 0.0]), np.array([-self._F / (rt_e * rt_d),
                                                      rt_e / rt_d])

    def to_dict(self):
        return {'type': 'FirstForm', 'E': self._E, 'F': self._F, 'G': self._G,
                'D': self.D}

    def __repr__(self):
        return 'FirstForm: E={} F={} G={}'.format(self._E, self._F, self._G)


class NormalFrame(object):
    """The frame W, N1, N2 of a map that satisfies the Whitney condition.

    Args:
        W: The vector d_u ^ d_uv ^ d_vv.
        N1: The vector d_u ^ d_v ^ W.
        N2: The vector d_u ^ d_v ^ N1.
        whitney_ok: Boolean noting whether W is nonzero within tolerance.
        orientation: Sign of det[d_u, d_v, N1, N2] (0 when degenerate).

    Properties:
        * W
        * N1
        * N2
        * whitney_ok
        * orientation
        * n1_norm
        * n2_norm
    """
    __slots__ = ('_W', '_N1', '_N2', '_whitney_ok', '_orientation')

    def __init__(self, W, N1, N2, whitney_ok, orientation):
        self._W = np.asarray(W, dtype=float)
        self._N1 = np.asarray(N1, dtype=float)
        self._N2 = np.asarray(N2, dtype=float)
        self._whitney_ok = bool(whitney_ok)
        self._orientation = int(orientation)

    @property
    def W(self):
        return self._W

    @property
    def N1(self):
        return self._N1

    @property
    def N2(self):
        return self._N2

    @property
    def whitney_ok(self):
        return self._whitney_ok

    @property
    def orientation(self):
        """Sign of det[d_u, d_v, N1, N2].

        With the triple product above this is -1 at regular points, so
        {d_u, d_v, N2, N1} is the positively oriented ordering.
        """
        return self._orientation

    @property
    def n1_norm(self):
        return float(np.linalg.norm(self._N1))

    @property
    def n2_norm(self):
        return float(np.linalg.norm(self._N2))

    def unit_normals(self):
        """The unit vectors N1/|N1| and N2/|N2|. Raises at critical points."""
        n1, n2 = self.n1_norm, self.n2_norm
        if n1 == 0 or n2 == 0:
            raise CriticalPointError('The normal frame vanishes at a critical point.')
        return self._N1 / n1, self._N2 / n2

    def to_dict(self):
        return {
            'type': 'NormalFrame',
            'W': [float(x) for x in self._W],
            'N1': [float(x) for x in self._N1],
            'N2': [float(x) for x in self._N2],
            'whitney_ok': self._whitney_ok,
            'orientation': self._orientation
        }

    def __repr__(self):
        return 'NormalFrame: |N1|={} |N2|={}'.format(self.n1_norm, self.n2_norm)


class ScaledSecondForm(object):
    """Second fundamental form coefficients against the unnormalized normals.

    The scaled coefficients are e_i_bar = <d_uu, Ni>, f_i_bar = <d_uv, Ni> and
    g_i_bar = <d_vv, Ni>. The normalized e_i, f_i, g_i are these divided by |Ni|
    and are None where |Ni| vanishes.

    Args:
        scaled: A tuple (e1, f1, g1, e2, f2, g2) of scaled coefficients.
        n1_norm: The length of N1.
        n2_norm: The length of N2.
        tolerance: Length under which a normal is treated as zero.

    Properties:
        * scaled
        * normalized
        * is_normalized
    """
    __slots__ = ('_scaled', '_normalized')

    def __init__(self, scaled, n1_norm, n2_norm, tolerance=REGULAR_TOLERANCE):
        self._scaled = tuple(float(x) for x in scaled)
        assert len(self._scaled) == 6, \
            'ScaledSecondForm needs 6 coefficients. Got {}.'.format(len(self._scaled))
        if n1_norm > tolerance and n2_norm > tolerance:
            e1, f1, g1, e2, f2, g2 = self._scaled
            self._normalized = (e1 / n1_norm, f1 / n1_norm, g1 / n1_norm,
                                e2 / n2_norm, f2 / n2_norm, g2 / n2_norm)
        else:
            self._normalized = None

    @property
    def scaled(self):
        """Tuple of (e1_bar, f1_bar, g1_bar, e2_bar, f2_bar, g2_bar)."""
        return self._scaled

    @property
    def normalized(self):
        """Tuple of (e1, f1, g1, e2, f2, g2) or None at critical points."""
        return self._normalized

    @property
    def is_normalized(self):
        return self._normalized is not None

    def to_dict(self):
        names = ('e1', 'f1', 'g1', 'e2', 'f2', 'g2')
        base = {'type': 'ScaledSecondForm',
                'scaled': dict(zip(names, self._scaled))}
        if self._normalized is not None:
            base['normalized'] = dict(zip(names, self._normalized))
        return base

    def __repr__(self):
        return 'ScaledSecondForm: {}'.format(self._scaled)


class EllipseOfCurvature(object):
    """The image of the normal curvature vector over the unit tangent circle.

    With the tangent direction at angle phi in an orthonormal basis of the first
    form, k_n(phi) = H + u1 cos(2 phi) + u2 sin(2 phi), where u1 and u2 are
    vectors in the normal plane.

    Args:
        center: The mean normal curvature vector H (4 values).
        h: The components (h1, h2) of H along the unit normals.
        matrix: The 2x2 matrix whose columns are u1 and u2 in the unit normal
            coordinates.
        unit_normals: The two unit normals spanning the normal plane.
        degeneracy_test: The value (e1 - g1) f2 - (e2 - g2) f1, nonzero for a
            standard ellipse or a circle.
        basis: The orthonormal (du, dv) basis of the first form.

    Properties:
        * center
        * h
        * semi_axes
        * axis_directions
        * kind
        * degeneracy_test
    """
    __slots__ = ('_center', '_h', '_matrix', '_normals', '_test', '_basis',
                 '_axes', '_directions', '_kind')

    def __init__(self, center, h, matrix, unit_normals, degeneracy_test, basis):
        self._center = np.asarray(center, dtype=float)
        self._h = tuple(float(x) for x in h)
        self._matrix = np.asarray(matrix, dtype=float)
        self._normals = tuple(np.asarray(n, dtype=float) for n in unit_normals)
        self._test = float(degeneracy_test)
        self._basis = basis
        left, sing, _ = np.linalg.svd(self._matrix)
        self._axes = (float(sing[0]), float(sing[1]))
        self._directions = tuple(
            left[0, k] * self._normals[0] + left[1, k] * self._normals[1]
            for k in range(2))
        self._kind = self._classify()

    def _classify(self):
        major, minor = self._axes
        size = 1.0 + float(np.abs(self._matrix).max()) + abs(self._h[0]) + \
            abs(self._h[1])
        if major <= REGULAR_TOLERANCE * size:
            return 'point'
        if abs(major - minor) <= CIRCLE_TOLERANCE * (major + minor + 1e-300):
            return 'circle'
        if minor <= CIRCLE_TOLERANCE * major:
            return 'segment'
        return 'ellipse'

    @property
    def center(self):
        """The mean normal curvature vector H."""
        return self._center

    @property
    def h(self):
        """The components (h1, h2) of H along N1/|N1| and N2/|N2|."""
        return self._h

    @property
    def semi_axes(self):
        """Tuple of (semi-major, semi-minor) lengths."""
        return self._axes

    @property
    def axis_directions(self):
        """Unit vectors in R^4 along the major and minor axes."""
        return self._directions

    @property
    def kind(self):
        """Text for the shape: ellipse, circle, segment or point."""
        return self._kind

    @property
    def is_circle(self):
        return self._kind in ('circle', 'point')

    @property
    def degeneracy_test(self):
        return self._test

    def normal_curvature(self, angle):
        """The normal curvature vector k_n at an angle of the orthonormal basis."""
        offset = self._matrix.dot([math.cos(2 * angle), math.sin(2 * angle)])
        return self._center + offset[0] * self._normals[0] + \
            offset[1] * self._normals[1]

    def chart_angle(self, angle):
        """Convert an angle of the orthonormal basis into a (u, v) chart angle."""
        vec = math.cos(angle) * self._basis[0] + math.sin(angle) * self._basis[1]
        return math.atan2(vec[1], vec[0]) % math.pi

    def to_dict(self):
        return {
            'type': 'EllipseOfCurvature',
            'center': [float(x) for x in self._center],
            'h': list(self._h),
            'semi_axes': list(self._axes),
            'axis_directions': [[float(x) for x in d] for d in self._directions],
            'kind': self._kind,
            'degeneracy_test': self._test
        }

    def __repr__(self):
        return 'EllipseOfCurvature: {} {}'.format(self._kind, self._axes)


def first_form(jet):
    """Get the FirstForm of a SurfaceJet."""
    return FirstForm(jet.d_u.dot(jet.d_u), jet.d_u.dot(jet.d_v), jet.d_v.dot(jet.d_v))


def normal_frame(jet):
    """Get the NormalFrame (W, N1, N2) of a SurfaceJet."""
    w = wedge(jet.d_u, jet.d_uv, jet.d_vv)
    n1 = wedge(jet.d_u, jet.d_v, w)
    n2 = wedge(jet.d_u, jet.d_v, n1)
    size = (1 + np.linalg.norm(jet.d_u)) * (1 + np.linalg.norm(jet.d_uv)) * \
        (1 + np.linalg.norm(jet.d_vv))
    whitney_ok = np.linalg.norm(w) > WHITNEY_TOLERANCE * size
    det = np.linalg.det(np.array([jet.d_u, jet.d_v, n1, n2]))
    det_scale = (1 + np.linalg.norm(jet.d_u)) ** 2 * (1 + np.linalg.norm(jet.d_v)) ** 2 \
        * (1 + np.linalg.norm(n1)) * (1 + np.linalg.norm(n2))
    orientation = 0 if abs(det) <= REGULAR_TOLERANCE * det_scale else \
        (1 if det > 0 else -1)
    return NormalFrame(w, n1, n2, whitney_ok, orientation)


def second_form_scaled(jet, frame):
    """Get the ScaledSecondForm of a SurfaceJet against its NormalFrame."""
    scaled = (jet.d_uu.dot(frame.N1), jet.d_uv.dot(frame.N1), jet.d_vv.dot(frame.N1),
              jet.d_uu.dot(frame.N2), jet.d_uv.dot(frame.N2), jet.d_vv.dot(frame.N2))
    tol = REGULAR_TOLERANCE * jet.scale ** 6
    return ScaledSecondForm(scaled, frame.n1_norm, frame.n2_norm, tol)


def ellipse_of_curvature(jet, frame, forms, sff=None):
    """Get the EllipseOfCurvature at a regular point.

    Args:
        jet: A SurfaceJet.
        frame: The NormalFrame of the jet.
        forms: The FirstForm of the jet.
        sff: Optional ScaledSecondForm (computed when None).
    """
    if forms.is_critical():
        raise CriticalPointError('Ellipse undefined at critical point {}.'.format(
            jet.point))
    sff = sff if sff is not None else second_form_scaled(jet, frame)
    if not sff.is_normalized:
        raise CriticalPointError('Ellipse undefined at critical point {}.'.format(
            jet.point))
    e1, f1, g1, e2, f2, g2 = sff.normalized
    E, F, G, D = forms.E, forms.F, forms.G, forms.D
    n1, n2 = frame.unit_normals()
    b1, b2 = forms.orthonormal_basis()
    basis = np.column_stack([b1, b2])
    h, columns = [], []
    for e, f, g in ((e1, f1, g1), (e2, f2, g2)):
        a = basis.T.dot(np.array([[e, f], [f, g]])).dot(basis)
        h.append((E * g - 2 * F * f + G * e) / (2 * D))
        columns.append(((a[0, 0] - a[1, 1]) / 2, a[0, 1]))
    matrix = np.array(columns)
    center = h[0] * n1 + h[1] * n2
    test = (e1 - g1) * f2 - (e2 - g2) * f1
    return EllipseOfCurvature(center, h, matrix, (n1, n2), test, (b1, b2))


def normal_curvature_vector(jet, frame, forms, direction, sff=None):
    """The normal curvature vector II(w)/I(w) for a (du, dv) direction w."""
    if forms.is_critical():
        raise CriticalPointError('Normal curvature undefined at critical point.')
    sff = sff if sff is not None else second_form_scaled(jet, frame)
    if not sff.is_normalized:
        raise CriticalPointError('Normal curvature undefined at critical point.')
    e1, f1, g1, e2, f2, g2 = sff.normalized
    du, dv = direction
    n1, n2 = frame.unit_normals()
    length = forms.length_squared(du, dv)
    k1 = (e1 * du * du + 2 * f1 * du * dv + g1 * dv * dv) / length
    k2 = (e2 * du * du + 2 * f2 * du * dv + g2 * dv * dv) / length
    return k1 * n1 + k2 * n2


def deviation(jet, frame, forms, direction, ellipse=None):
    """The squared distance |k_n - H|^2 for the chart direction at an angle.

    Args:
        jet: A SurfaceJet at a regular point.
        frame: The NormalFrame of the jet.
        forms: The FirstForm of the jet.
        direction: The angle (radians) of the direction (cos, sin) in the
            (u, v) chart.
        ellipse: Optional EllipseOfCurvature to reuse its center.

    Returns:
        A nonnegative number.
    """
    sff = second_form_scaled(jet, frame)
    ellipse = ellipse if ellipse is not None else \
        ellipse_of_curvature(jet, frame, forms, sff)
    k_n = normal_curvature_vector(
        jet, frame, forms, (math.cos(direction), math.sin(direction)), sff)
    diff = k_n - ellipse.center
    return float(diff.dot(diff))
