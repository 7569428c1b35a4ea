# coding=utf-8
"""Axiumbilic points: location, transversality, type and index.

An axial field is anything that gives the pair beta = (a0, a1) and the first form
at a point. The remaining coefficients of the quartic follow from the linear
relations, so both the location (beta = 0) and the linearization at an
axiumbilic point only need beta, its jacobian and the first form.
"""
from __future__ import division

import logging
import math

import numpy as np

from .errors import CriticalPointError, NonTransversalError, SingularPointError, \
    UndefinedIndexError
from .forms import FirstForm, first_form, normal_frame, second_form_scaled
from .quartic import AxialQuartic, binary_form_roots, complete_coefficients, \
    normal_form_coefficients, quartic_extended, solve_directions
from .surface import SurfaceMap

_logger = logging.getLogger(__name__)

TYPES = ('E3', 'E4', 'E5', 'unresolved')
FOLIATIONS = ('principal', 'mean')
NEWTON_ITERATIONS = 50
NEWTON_DAMPING = 0.5
MERGE_DISTANCE = 1e-7
DEFAULT_GRID = 64
CRITICAL_TOLERANCE = 1e-10
TRANSVERSAL_TOLERANCE = 1e-9
BORDERLINE_TOLERANCE = 1e-6
AMBIGUITY = 1e-3
INDEX_STEP = 0.25
SNAP_TOLERANCE = 0.05


class AxialField(object):
    """Base class of the axial line fields of a chart.

    Sub-classes implement beta and forms. The jacobian defaults to central
    finite differences of beta.

    Args:
        name: A name for the field.
        orientation: +1 or -1 so that orientation * beta is a positive multiple of
            the axial equation. Used when splitting directions into crossings.

    Properties:
        * name
        * orientation
    """
    __slots__ = ('_name', '_orientation')
    FORM = 'extended'

    def __init__(self, name, orientation=1):
        assert orientation in (1, -1), \
            'orientation must be 1 or -1. Got {}.'.format(orientation)
        self._name = name
        self._orientation = orientation

    @property
    def name(self):
        return self._name

    @property
    def orientation(self):
        return self._orientation

    def beta(self, u, v):
        """The pair (a0, a1) at (u, v) as a numpy array."""
        raise NotImplementedError('beta is not implemented for {}.'.format(
            self.__class__.__name__))

    def forms(self, u, v):
        """The FirstForm at (u, v)."""
        raise NotImplementedError('forms is not implemented for {}.'.format(
            self.__class__.__name__))

    def jacobian(self, u, v):
        """The 2x2 jacobian of beta, rows (a0, a1) and columns (u, v)."""
        h = 1e-6 * max(1.0, abs(u), abs(v))
        d_u = (self.beta(u + h, v) - self.beta(u - h, v)) / (2 * h)
        d_v = (self.beta(u, v + h) - self.beta(u, v - h)) / (2 * h)
        return np.column_stack((d_u, d_v))

    def quartic(self, u, v):
        """The oriented AxialQuartic at (u, v)."""
        a0, a1 = self._orientation * self.beta(u, v)
        return AxialQuartic.from_leading(a0, a1, self.forms(u, v), self.FORM, (u, v))

    def directions(self, u, v):
        """The CrossingPair at (u, v)."""
        return solve_directions(self.quartic(u, v))

    def roots(self, u, v):
        """Sorted chart angles in [0, pi) of the real axial directions."""
        a0, a1 = self.beta(u, v)
        return binary_form_roots(complete_coefficients(a0, a1, self.forms(u, v)))

    def is_critical(self, u, v, tolerance=CRITICAL_TOLERANCE):
        forms = self.forms(u, v)
        return forms.D <= tolerance * (1 + forms.E + forms.G) ** 2

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'AxialField: {}'.format(self._name)


class SurfaceField(AxialField):
    """The extended axial field of a SurfaceMap.

    Args:
        surface: A SurfaceMap.
    """
    __slots__ = ('_surface',)

    def __init__(self, surface):
        assert isinstance(surface, SurfaceMap), \
            'Expected SurfaceMap for SurfaceField. Got {}.'.format(type(surface))
        AxialField.__init__(self, surface.name, 1)
        self._surface = surface

    @property
    def surface(self):
        return self._surface

    def _parts(self, u, v):
        jet = self._surface.jet(u, v)
        frame = normal_frame(jet)
        forms = first_form(jet)
        return forms, quartic_extended(forms, second_form_scaled(jet, frame), frame,
                                       (u, v))

    def beta(self, u, v):
        return np.array(self._parts(u, v)[1].coefficients[:2])

    def forms(self, u, v):
        return first_form(self._surface.jet(u, v))

    def quartic(self, u, v):
        return self._parts(u, v)[1]


class NormalFormField(AxialField):
    """The normal-form field at a transversal axiumbilic point.

    The equation is y (dy^4 - 6 dx^2 dy^2 + dx^4) + (ax + by) dx dy (dx^2 - dy^2) = 0
    in an orthonormal chart (x, y).

    Args:
        a: The transversality coefficient (non-zero for a transversal point).
        b: The second coefficient.
    """
    __slots__ = ('_a', '_b')
    FORM = 'normal-form'

    def __init__(self, a, b=0):
        AxialField.__init__(self, 'normal_form', 1)
        self._a = float(a)
        self._b = float(b)

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    def beta(self, u, v):
        return np.array(normal_form_coefficients(self._a, self._b, u, v)[:2])

    def forms(self, u, v):
        return FirstForm(1, 0, 1)

    def jacobian(self, u, v):
        return np.array([[0.0, 1.0], [self._a, self._b]])


def field_for(target):
    """Get an AxialField from an AxialField or a SurfaceMap."""
    if isinstance(target, AxialField):
        return target
    if isinstance(target, SurfaceMap):
        return SurfaceField(target)
    raise ValueError('Expected AxialField or SurfaceMap. Got {}.'.format(type(target)))


class SeparatrixRay(object):
    """An invariant ray of the linearized field at an axiumbilic point.

    Args:
        angle: Chart angle of the ray in [0, 2 pi).
        foliation: 'principal' or 'mean' (None when it could not be decided).
        kind: 'separatrix', 'parabolic' or 'degenerate'.
        rate: The rate psi'(theta) - 1 of the tangent branch along the ray.
            Negative for a separatrix and positive for a parabolic sector.

    Properties:
        * angle
        * foliation
        * kind
        * rate
    """
    __slots__ = ('_angle', '_foliation', '_kind', '_rate')

    def __init__(self, angle, foliation, kind, rate):
        self._angle = float(angle) % (2 * math.pi)
        self._foliation = foliation
        self._kind = kind
        self._rate = float(rate)

    @property
    def angle(self):
        return self._angle

    @property
    def foliation(self):
        return self._foliation

    @property
    def kind(self):
        return self._kind

    @property
    def rate(self):
        return self._rate

    def to_dict(self):
        return {'type': 'SeparatrixRay', 'angle': self._angle,
                'foliation': self._foliation, 'kind': self._kind,
                'rate': self._rate}

    def __repr__(self):
        return 'SeparatrixRay: {:.6f} ({}, {})'.format(
            self._angle, self._foliation, self._kind)


class AxiumbilicRecord(object):
    """A located axiumbilic point.

    Args:
        position: The (u, v) point.
        det: The jacobian determinant of beta at the point. (Default: None).
        type: One of E3, E4, E5 and unresolved. (Default: 'unresolved').
        separatrices: A list of SeparatrixRay. (Default: None).
        branch: Label of the bifurcation curve carrying the point when known.
        residual: Size of beta at the point. (Default: 0).
        converged: Boolean for whether the Newton refinement converged.

    Properties:
        * position
        * det
        * type
        * separatrices
        * branch
        * residual
        * converged
        * index
    """
    __slots__ = ('_position', '_det', '_type', '_separatrices', '_branch',
                 '_residual', '_converged')

    def __init__(self, position, det=None, type='unresolved', separatrices=None,
                 branch=None, residual=0.0, converged=True):
        assert type in TYPES, 'type must be one of {}. Got {}.'.format(TYPES, type)
        self._position = (float(position[0]), float(position[1]))
        self._det = float(det) if det is not None else None
        self._type = type
        self._separatrices = tuple(separatrices) if separatrices else ()
        self._branch = branch
        self._residual = float(residual)
        self._converged = bool(converged)

    @property
    def position(self):
        return self._position

    @property
    def det(self):
        return self._det

    @property
    def type(self):
        return self._type

    @property
    def separatrices(self):
        return self._separatrices

    @property
    def branch(self):
        return self._branch

    @property
    def residual(self):
        return self._residual

    @property
    def converged(self):
        return self._converged

    @property
    def index(self):
        """Index contribution: 1/4 for E3 and E4, -1/4 for E5, None otherwise."""
        if self._type in ('E3', 'E4'):
            return INDEX_STEP
        if self._type == 'E5':
            return -INDEX_STEP
        return None

    def separatrix_count(self, foliation=None):
        """Number of separatrix rays, optionally of one foliation."""
        return sum(1 for ray in self._separatrices if ray.kind == 'separatrix'
                   and (foliation is None or ray.foliation == foliation))

    def parabolic_count(self, foliation=None):
        return sum(1 for ray in self._separatrices if ray.kind == 'parabolic'
                   and (foliation is None or ray.foliation == foliation))

    def duplicate(self, **kwargs):
        """Get a copy of the record with some of the fields replaced."""
        fields = {
            'position': self._position, 'det': self._det, 'type': self._type,
            'separatrices': self._separatrices, 'branch': self._branch,
            'residual': self._residual, 'converged': self._converged
        }
        fields.update(kwargs)
        return AxiumbilicRecord(**fields)

    def to_dict(self):
        return {
            'type': 'AxiumbilicRecord',
            'position': list(self._position),
            'det': self._det,
            'umbilic_type': self._type,
            'index': self.index,
            'branch': self._branch,
            'residual': self._residual,
            'converged': self._converged,
            'separatrices': [ray.to_dict() for ray in self._separatrices]
        }

    def __repr__(self):
        return 'AxiumbilicRecord: {} at ({:.6f}, {:.6f})'.format(
            self._type, *self._position)


class UmbilicDiscriminant(object):
    """The invariants of the normal form and the type they predict.

    I = 2a (a/24 + 1) + 4 + b^2/4
    J = -(2a/3) [(a/6 + 1)(1 - a/24) + b^2/16]
    Delta = (a + 1)^2 (I^3 - 27 J^2)

    Args:
        a: The transversality coefficient of the normal form.
        b: The second coefficient of the normal form.

    Properties:
        * a
        * b
        * I
        * J
        * delta
        * predicted_type
    """
    __slots__ = ('_a', '_b', '_i', '_j', '_delta')

    def __init__(self, a, b):
        self._a, self._b = float(a), float(b)
        a, b = self._a, self._b
        self._i = 2 * a * (a / 24 + 1) + 4 + b * b / 4
        self._j = -(2 * a / 3) * ((a / 6 + 1) * (1 - a / 24) + b * b / 16)
        self._delta = (a + 1) ** 2 * (self._i ** 3 - 27 * self._j ** 2)

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def I(self):
        return self._i

    @property
    def J(self):
        return self._j

    @property
    def delta(self):
        return self._delta

    @property
    def predicted_type(self):
        """E3 when Delta < 0, otherwise E4 for a < 0 and E5 for a > 0."""
        if self._delta < 0:
            return 'E3'
        if self._delta > 0:
            return 'E4' if self._a < 0 else 'E5'
        return 'unresolved'

    def to_dict(self):
        return {'type': 'UmbilicDiscriminant', 'a': self._a, 'b': self._b,
                'I': self._i, 'J': self._j, 'delta': self._delta,
                'predicted_type': self.predicted_type}

    def __repr__(self):
        return 'UmbilicDiscriminant: Delta = {:.6g} ({})'.format(
            self._delta, self.predicted_type)


def discriminant(a, b):
    """Get the UmbilicDiscriminant of the normal form with coefficients (a, b).

    Raises NonTransversalError when a = 0.
    """
    if a == 0:
        raise NonTransversalError('Non-transversal normal form: a = 0.')
    return UmbilicDiscriminant(a, b)


class AxiumbilicSearch(object):
    """The outcome of find_axiumbilics.

    Iterating the object gives the converged AxiumbilicRecords.

    Properties:
        * records
        * unconverged
        * critical_points
    """
    __slots__ = ('_records', '_unconverged', '_critical_points')

    def __init__(self, records, unconverged=None, critical_points=None):
        self._records = tuple(records)
        self._unconverged = tuple(unconverged or ())
        self._critical_points = tuple(critical_points or ())

    @property
    def records(self):
        return self._records

    @property
    def unconverged(self):
        return self._unconverged

    @property
    def critical_points(self):
        return self._critical_points

    def to_dict(self):
        return {
            'type': 'AxiumbilicSearch',
            'axiumbilics': [r.to_dict() for r in self._records],
            'unconverged': [r.to_dict() for r in self._unconverged],
            'critical_points': [list(p) for p in self._critical_points]
        }

    def __len__(self):
        return len(self._records)

    def __getitem__(self, key):
        return self._records[key]

    def __iter__(self):
        return iter(self._records)

    def __repr__(self):
        return 'AxiumbilicSearch: {} axiumbilic, {} critical'.format(
            len(self._records), len(self._critical_points))


def region_bounds(region):
    """(u_min, u_max, v_min, v_max) of a Region object or a 4-item sequence."""
    bounds = region.bounds if hasattr(region, 'bounds') else tuple(region)
    u_min, u_max, v_min, v_max = (float(b) for b in bounds)
    assert u_min < u_max and v_min < v_max, \
        'Region must not be empty. Got {}.'.format(bounds)
    return u_min, u_max, v_min, v_max


def _seeds(field, bounds, grid):
    """Centers of the grid cells on which both a0 and a1 change sign."""
    u_min, u_max, v_min, v_max = bounds
    us = np.linspace(u_min, u_max, grid + 1)
    vs = np.linspace(v_min, v_max, grid + 1)
    values = np.array([[field.beta(u, v) for v in vs] for u in us])
    seeds = []
    for i in range(grid):
        for j in range(grid):
            cell = values[i:i + 2, j:j + 2].reshape(4, 2)
            low, high = cell.min(axis=0), cell.max(axis=0)
            if np.all(low <= 0) and np.all(high >= 0):
                seeds.append(((us[i] + us[i + 1]) / 2, (vs[j] + vs[j + 1]) / 2))
    return seeds


def newton(field, seed, iterations=NEWTON_ITERATIONS, damping=NEWTON_DAMPING):
    """Refine a zero of beta with damped Newton steps.

    Returns:
        A tuple of (point, residual, converged).
    """
    x = np.array(seed, dtype=float)
    f = field.beta(*x)
    norm = float(np.linalg.norm(f))
    converged = False
    for _ in range(iterations):
        jac = field.jacobian(*x)
        step = np.linalg.lstsq(jac, -f, rcond=None)[0]
        scale = 1.0
        for _ in range(30):
            trial = x + scale * step
            f_trial = field.beta(*trial)
            if np.linalg.norm(f_trial) <= norm or scale < 1e-8:
                break
            scale *= damping
        x, f = trial, f_trial
        norm = float(np.linalg.norm(f))
        tolerance = 1e-10 * (1 + float(np.linalg.norm(jac)))
        if norm <= tolerance and \
                np.linalg.norm(scale * step) <= 1e-13 * (1 + np.linalg.norm(x)):
            converged = True
            break
    if not converged:
        jac = field.jacobian(*x)
        converged = norm <= 1e-10 * (1 + float(np.linalg.norm(jac)))
    return (float(x[0]), float(x[1])), norm, converged


def _merge(points, distance):
    merged = []
    for pt in points:
        if all(math.hypot(pt[0][0] - m[0][0], pt[0][1] - m[0][1]) > distance
               for m in merged):
            merged.append(pt)
    return merged


def find_axiumbilics(target, region, grid=DEFAULT_GRID, merge_distance=MERGE_DISTANCE,
                     iterations=NEWTON_ITERATIONS, classify_points=True):
    """Locate the axiumbilic points of a field in a rectangle.

    Seeds come from the grid cells on which both a0 and a1 change sign. Each seed
    is refined with damped Newton steps on beta. Points where the first form is
    degenerate are critical points and are reported apart.

    Args:
        target: An AxialField or a SurfaceMap.
        region: (u_min, u_max, v_min, v_max) or a Region.
        grid: Number of cells per side. Must be at least 16. (Default: 64).
        merge_distance: Points closer than this are the same point.
        iterations: Maximum number of Newton iterations. (Default: 50).
        classify_points: Set to False to skip the type and separatrices.

    Returns:
        An AxiumbilicSearch with records sorted by (u, v).
    """
    assert grid >= 16, 'grid must be at least 16. Got {}.'.format(grid)
    field = field_for(target)
    bounds = region_bounds(region)
    u_min, u_max, v_min, v_max = bounds
    slack = max(u_max - u_min, v_max - v_min) / grid
    found, lost, critical = [], [], []
    for seed in _seeds(field, bounds, grid):
        point, residual, converged = newton(field, seed, iterations)
        u, v = point
        if not (u_min - slack <= u <= u_max + slack and
                v_min - slack <= v <= v_max + slack):
            continue
        if field.is_critical(u, v):
            critical.append((point, residual))
        elif converged:
            found.append((point, residual))
        else:
            lost.append((point, residual))
    found = sorted(_merge(found, merge_distance), key=lambda pt: pt[0])
    critical = sorted(_merge(critical, max(merge_distance, 1e-4 * slack)),
                      key=lambda pt: pt[0])
    lost = _merge(lost, 1e-4 * slack)
    for point, residual in lost:
        _logger.warning('Newton refinement did not converge near (%.6g, %.6g) '
                        '(residual %.3g).', point[0], point[1], residual)
    records = []
    for point, residual in found:
        if classify_points:
            rec = classify_point(field, point)
            records.append(rec.duplicate(residual=residual))
        else:
            records.append(AxiumbilicRecord(point, residual=residual))
    unconverged = [AxiumbilicRecord(point, residual=residual, converged=False)
                   for point, residual in lost]
    return AxiumbilicSearch(records, unconverged, [pt for pt, _ in critical])


def transversality(record, target):
    """The jacobian determinant of beta at an axiumbilic point."""
    position = record.position if isinstance(record, AxiumbilicRecord) else record
    field = field_for(target)
    return float(np.linalg.det(field.jacobian(*position)))


def linearized_coefficients(field, point):
    """Gradients (alpha_k, beta_k) of the oriented coefficients a0..a4 at a point.

    At an axiumbilic point a0 = a1 = 0, so the gradients of a2, a3, a4 follow
    from those of a0 and a1 through the linear relations.
    """
    forms = field.forms(*point)
    if forms.is_critical():
        raise CriticalPointError('Cannot linearize the field at a critical point.')
    jac = field.orientation * field.jacobian(*point)
    alpha = np.array(complete_coefficients(jac[0, 0], jac[1, 0], forms))
    beta = np.array(complete_coefficients(jac[0, 1], jac[1, 1], forms))
    return alpha, beta


def invariant_line_form(alpha, beta):
    """Coefficients q_j of s^j c^(5 - j) whose roots are the invariant lines."""
    q = np.zeros(6)
    q[:5] += alpha
    q[1:] += beta
    return q


def _balance(q):
    """Scale factor sigma for dv = sigma dv' that evens out the extreme coefficients."""
    size = float(np.abs(q).max())
    nonzero = [j for j, c in enumerate(q) if abs(c) > 1e-12 * size]
    lo, hi = nonzero[0], nonzero[-1]
    if hi == lo:
        return 1.0
    return (abs(q[lo]) / abs(q[hi])) ** (1.0 / (hi - lo))


def invariant_lines(alpha, beta):
    """The invariant lines of the linearized field.

    Returns:
        A tuple of (angles, borderline). angles are sorted in [0, pi) and
        borderline is True when two roots are close to merging.
    """
    q = invariant_line_form(alpha, beta)
    if not np.any(q):
        raise SingularPointError('The linearized field vanishes identically.')
    sigma = _balance(q)
    scaled = q * sigma ** np.arange(6)
    scaled = scaled / np.abs(scaled).max()
    angles = sorted(math.atan2(sigma * math.sin(t), math.cos(t)) % math.pi
                    for t in binary_form_roots(scaled))
    borderline = False
    if abs(scaled[-1]) >= abs(scaled[0]):
        poly = np.trim_zeros(scaled[::-1], 'f')
    else:
        poly = np.trim_zeros(scaled, 'f')
    for root in np.roots(poly) if len(poly) > 1 else ():
        size = 1 + abs(root.real)
        if 1e-8 * size < abs(root.imag) < BORDERLINE_TOLERANCE * size:
            borderline = True
    if len(angles) > 1:
        for first, second in zip(angles, angles[1:] + [angles[0] + math.pi]):
            if second - first < BORDERLINE_TOLERANCE:
                borderline = True
    return angles, borderline


def _branch_rate(alpha, beta, theta):
    """psi'(theta) - 1 for the branch of directions tangent to the ray theta."""
    c, s = math.cos(theta), math.sin(theta)
    coeffs = alpha * c + beta * s
    d_theta = sum((-alpha[k] * s + beta[k] * c) * s ** k * c ** (4 - k)
                  for k in range(5))
    d_psi = 0.0
    for k in range(5):
        term = 0.0
        if k > 0:
            term += k * s ** (k - 1) * c ** (5 - k)
        if k < 4:
            term -= (4 - k) * s ** (k + 1) * c ** (3 - k)
        d_psi += coeffs[k] * term
    size = float(np.abs(alpha).max() + np.abs(beta).max())
    if abs(d_psi) <= 1e-12 * size:
        return None
    return -d_theta / d_psi - 1


def _ray_foliation(alpha, beta, forms, theta):
    """The crossing of the linearized field that holds the ray direction."""
    c, s = math.cos(theta), math.sin(theta)
    quartic = AxialQuartic(alpha * c + beta * s, forms, 'extended')
    try:
        pair = solve_directions(quartic)
    except SingularPointError:
        return None
    if not pair.is_complete:
        return None
    line = theta % math.pi

    def gap(pair_angles):
        return min(min(abs(a - line), math.pi - abs(a - line)) for a in pair_angles)
    return 'principal' if gap(pair.principal) <= gap(pair.mean) else 'mean'


def separatrix_directions(record, target):
    """The invariant rays of the linearized field at an axiumbilic point.

    Each invariant line gives two opposite rays. The ray belongs to the foliation
    whose crossing holds its direction and is a separatrix when the tangent
    branch turns away from the ray (rate < 0) or bounds a parabolic sector when
    it turns toward it (rate > 0).

    Returns:
        A list of SeparatrixRay sorted by angle. Empty when the point is not
        transversal.
    """
    position = record.position if isinstance(record, AxiumbilicRecord) else record
    field = field_for(target)
    det = transversality(position, field)
    jac = field.jacobian(*position)
    if abs(det) <= TRANSVERSAL_TOLERANCE * (float(np.linalg.norm(jac)) ** 2 + 1e-300):
        _logger.warning('Axiumbilic point at %s is not transversal; separatrices '
                        'unresolved.', position)
        return []
    alpha, beta = linearized_coefficients(field, position)
    forms = field.forms(*position)
    lines, _ = invariant_lines(alpha, beta)
    rays = []
    for line in lines:
        rate = _branch_rate(alpha, beta, line)
        kind = 'degenerate' if rate is None else \
            ('separatrix' if rate < 0 else 'parabolic')
        for theta in (line, line + math.pi):
            rays.append(SeparatrixRay(theta, _ray_foliation(alpha, beta, forms, theta),
                                      kind, rate if rate is not None else 0.0))
    return sorted(rays, key=lambda ray: ray.angle)


def classify(record, target):
    """The type of an axiumbilic point.

    det < 0 gives E5. With det > 0, three invariant lines give E3 and five give
    E4. Points that are not transversal or whose invariant lines are about to
    merge are unresolved.
    """
    position = record.position if isinstance(record, AxiumbilicRecord) else record
    field = field_for(target)
    jac = field.jacobian(*position)
    det = float(np.linalg.det(jac))
    if abs(det) <= TRANSVERSAL_TOLERANCE * (float(np.linalg.norm(jac)) ** 2 + 1e-300):
        _logger.warning('Unresolved type at %s: not transversal.', position)
        return 'unresolved'
    if det < 0:
        return 'E5'
    lines, borderline = invariant_lines(*linearized_coefficients(field, position))
    if borderline:
        _logger.warning('Unresolved type at %s: near type transition.', position)
        return 'unresolved'
    if len(lines) == 3:
        return 'E3'
    if len(lines) == 5:
        return 'E4'
    _logger.warning('Unresolved type at %s: %d invariant lines.', position, len(lines))
    return 'unresolved'


def classify_point(target, point, branch=None):
    """Build a complete AxiumbilicRecord at a zero of beta."""
    field = field_for(target)
    residual = float(np.linalg.norm(field.beta(*point)))
    det = transversality(point, field)
    umbilic_type = classify(point, field)
    rays = separatrix_directions(point, field) if umbilic_type != 'unresolved' else []
    return AxiumbilicRecord(point, det, umbilic_type, rays, branch, residual)


def normal_form_type(a, b):
    """Type of the origin of the normal form from the det and invariant-line rule."""
    return classify((0.0, 0.0), NormalFormField(a, b))


def _line_delta(angle, reference):
    """Signed change from reference to angle for lines (mod pi) in (-pi/2, pi/2]."""
    d = (angle - reference) % math.pi
    return d - math.pi if d > math.pi / 2 else d


class _Ambiguous(Exception):
    pass


def _track_loop(field, center, radius, samples, start):
    """Net rotation of the root branch starting at the root number start."""
    u0, v0 = center
    first = field.roots(u0 + radius, v0)
    if start >= len(first):
        raise UndefinedIndexError('Only {} real directions on the loop.'.format(
            len(first)))
    current = first[start]
    total = 0.0
    for k in range(1, samples + 1):
        phi = 2 * math.pi * k / samples
        roots = field.roots(u0 + radius * math.cos(phi), v0 + radius * math.sin(phi))
        deltas = sorted((_line_delta(r, current) for r in roots), key=abs)
        if not deltas:
            raise UndefinedIndexError('No real directions on the loop.')
        if len(deltas) > 1 and abs(deltas[1]) - abs(deltas[0]) < AMBIGUITY:
            raise _Ambiguous()
        total += deltas[0]
        current = (current + deltas[0]) % math.pi
    return total


def loop_rotations(target, center, radius, samples=720, refinements=3):
    """Net rotation of every root branch around a circle.

    The number of samples is doubled (up to refinements times) when two roots
    come within 1e-3 rad of the tracked direction.

    Returns:
        A list of rotations in radians, one per real direction at the start.
    """
    assert radius > 0, 'radius must be positive. Got {}.'.format(radius)
    assert samples >= 16, 'samples must be at least 16. Got {}.'.format(samples)
    field = field_for(target)
    count = len(field.roots(center[0] + radius, center[1]))
    for _ in range(refinements + 1):
        try:
            return [_track_loop(field, center, radius, samples, i) for i in range(count)]
        except _Ambiguous:
            samples *= 2
    raise UndefinedIndexError('Branch tracking stays ambiguous with {} samples.'.format(
        samples // 2))


def index(target, center, radius, samples=720):
    """Index of the axial configuration around a circle.

    One root branch is tracked around the circle and its rotation divided by
    2 pi is snapped to the nearest multiple of 1/4.

    Raises UndefinedIndexError when the rotation is not close to a quarter.
    """
    field = field_for(target)
    for _ in range(4):
        try:
            total = _track_loop(field, center, radius, samples, 0)
            break
        except _Ambiguous:
            samples *= 2
    else:
        raise UndefinedIndexError('Branch tracking stays ambiguous on this loop.')
    value = total / (2 * math.pi)
    snapped = round(value / INDEX_STEP) * INDEX_STEP
    if abs(value - snapped) >= SNAP_TOLERANCE:
        raise UndefinedIndexError(
            'Index undefined on this loop (rotation {:.4f} turns).'.format(value))
    return snapped + 0.0
