# coding=utf-8
"""Axial lines as streamlines and the combinatorial portraits they form.

Axial lines are lines, not vectors, so a streamline keeps a heading and at every
evaluation picks the direction of its branch nearest (mod pi) to that heading.
Integration is fixed-step RK4 on the unit-speed direction.
"""
from __future__ import division

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from ladybug_geometry.geometry2d import LineSegment2D, Point2D, Polyline2D

from .blowup import resolution_portrait, saddle_germ
from .errors import CriticalPointError, SingularPointError
from .family import FamilyField
from .umbilic import AMBIGUITY, find_axiumbilics, field_for, index, region_bounds

_logger = logging.getLogger(__name__)

SELECTORS = ('principal', 'mean', 'root')
REASONS = ('boundary', 'singularity', 'axiumbilic', 'step-limit', 'near-singular')
EXCLUSION_RADIUS = 5e-3
SEPARATRIX_OFFSET = 1e-4
STEP_FRACTION = 1e-3
GERM_RADIUS = 2e-3
GERM_ORDER = 1.5
GERM_HALVINGS = 2
GAP_FLOOR = 1e-13


class Streamline(object):
    """An integrated axial line.

    Args:
        points: A list of (u, v) points in the order they were traced.
        branch: A label for the line (eg. 'principal' or 'separatrix').
        field: The selector used to trace it. One of principal, mean and root.
        reason: Why the integration stopped. One of boundary, singularity,
            axiumbilic, step-limit and near-singular.
        origin: Optional (u, v) point the line was launched from (the
            axiumbilic point of a separatrix). (Default: None).

    Properties:
        * points
        * branch
        * field
        * reason
        * origin
        * geometry
        * length
    """
    __slots__ = ('_points', '_branch', '_field', '_reason', '_origin')

    def __init__(self, points, branch, field, reason, origin=None):
        assert field in SELECTORS, \
            'field must be one of {}. Got {}.'.format(SELECTORS, field)
        assert reason in REASONS, \
            'reason must be one of {}. Got {}.'.format(REASONS, reason)
        self._points = tuple((float(p[0]), float(p[1])) for p in points)
        self._branch = str(branch)
        self._field = field
        self._reason = reason
        self._origin = (float(origin[0]), float(origin[1])) \
            if origin is not None else None

    @property
    def points(self):
        return self._points

    @property
    def branch(self):
        return self._branch

    @property
    def field(self):
        return self._field

    @property
    def reason(self):
        return self._reason

    @property
    def origin(self):
        return self._origin

    @property
    def geometry(self):
        """A Polyline2D (or LineSegment2D for two points) of the line.

        None when there are fewer than two points.
        """
        pts = [Point2D(*p) for p in self._points]
        if len(pts) < 2:
            return None
        return Polyline2D(pts) if len(pts) > 2 else \
            LineSegment2D.from_end_points(pts[0], pts[1])

    @property
    def length(self):
        geo = self.geometry
        return geo.length if geo is not None else 0.0

    def reversed(self):
        """The same line traversed backwards."""
        return Streamline(self._points[::-1], self._branch, self._field,
                          self._reason, self._origin)

    def to_dict(self):
        return {
            'type': 'Streamline',
            'points': [list(p) for p in self._points],
            'branch': self._branch,
            'field': self._field,
            'reason': self._reason,
            'origin': list(self._origin) if self._origin is not None else None
        }

    @classmethod
    def from_dict(cls, data):
        assert data['type'] == 'Streamline', \
            'Expected Streamline dictionary. Got {}.'.format(data['type'])
        return cls(data['points'], data['branch'], data['field'], data['reason'],
                   data.get('origin'))

    def __len__(self):
        return len(self._points)

    def __repr__(self):
        return 'Streamline: {} {} points ({})'.format(
            self._field, len(self._points), self._reason)


class _NearSingular(Exception):
    pass


def _line_delta(angle, reference):
    d = (angle - reference) % math.pi
    return d - math.pi if d > math.pi / 2 else d


def _lines(field, selector, u, v):
    if selector == 'root':
        return field.roots(u, v)
    pair = field.directions(u, v)
    if not pair.is_complete:
        raise _NearSingular()
    return list(pair.branch(selector))


def _direction(field, selector, point, heading):
    """Unit vector of the branch line nearest to the heading vector."""
    lines = _lines(field, selector, point[0], point[1])
    ref = math.atan2(heading[1], heading[0])
    deltas = sorted((_line_delta(a, ref) for a in lines), key=abs)
    if not deltas:
        raise _NearSingular()
    if len(deltas) > 1 and abs(deltas[1]) - abs(deltas[0]) < AMBIGUITY:
        raise _NearSingular()
    angle = ref + deltas[0]
    return np.array([math.cos(angle), math.sin(angle)])


def _stop_reason(field, point, bounds, exclusions, radius):
    u, v = point
    if bounds is not None:
        u_min, u_max, v_min, v_max = bounds
        if not (u_min <= u <= u_max and v_min <= v <= v_max):
            return 'boundary'
    for center, kind in exclusions:
        if math.hypot(u - center[0], v - center[1]) < radius:
            return kind
    if field.is_critical(u, v):
        return 'singularity'
    return None


def integrate(target, selector, seed, step, max_len, heading=None, region=None,
              exclusions=None, exclusion_radius=EXCLUSION_RADIUS, branch=None):
    """Trace an axial line from a seed with fixed-step RK4.

    Args:
        target: An AxialField or a SurfaceMap.
        selector: 'principal', 'mean' or 'root' (any real direction).
        seed: The (u, v) start point.
        step: The step length in the chart.
        max_len: The longest length to trace.
        heading: Optional start angle in radians. The line of the branch nearest
            to it is followed in the direction of the heading. By default the
            first line of the branch is followed.
        region: Optional (u_min, u_max, v_min, v_max) outside of which tracing
            stops.
        exclusions: Optional list of ((u, v), kind) pairs with kind 'axiumbilic'
            or 'singularity'. Tracing stops inside a disk around each one.
        exclusion_radius: Radius of the disks around the exclusions.
        branch: Label for the Streamline. (Default: the selector).

    Returns:
        A Streamline.
    """
    assert selector in SELECTORS, \
        'selector must be one of {}. Got {}.'.format(SELECTORS, selector)
    assert step > 0, 'step must be positive. Got {}.'.format(step)
    field = field_for(target)
    bounds = region_bounds(region) if region is not None else None
    exclusions = list(exclusions or ())
    label = branch if branch is not None else selector
    point = np.array(seed, dtype=float)
    points = [tuple(point)]

    def finish(reason):
        return Streamline(points, label, selector, reason, seed)

    try:
        if heading is None:
            start = _lines(field, selector, *point)
            if not start:
                return finish('near-singular')
            heading = start[0]
        current = _direction(field, selector, point,
                             (math.cos(heading), math.sin(heading)))
    except _NearSingular:
        return finish('near-singular')
    except (SingularPointError, CriticalPointError):
        return finish('singularity')

    for _ in range(int(max_len / step)):
        try:
            k1 = _direction(field, selector, point, current)
            k2 = _direction(field, selector, point + step / 2 * k1, k1)
            k3 = _direction(field, selector, point + step / 2 * k2, k2)
            k4 = _direction(field, selector, point + step * k3, k3)
        except _NearSingular:
            return finish('near-singular')
        except (SingularPointError, CriticalPointError):
            return finish('singularity')
        trial = point + step / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        reason = _stop_reason(field, trial, bounds, exclusions, exclusion_radius)
        if reason is not None:
            return finish(reason)
        point, current = trial, k4
        points.append(tuple(point))
    return finish('step-limit')


def trace_separatrices(target, records, step, max_len, region=None, exclusions=None,
                       offset=SEPARATRIX_OFFSET, exclusion_radius=EXCLUSION_RADIUS):
    """Launch one streamline along every separatrix ray of the records.

    Each line starts offset away from its axiumbilic point along the ray and
    follows the foliation of the ray. Unresolved records are skipped.

    Returns:
        A list of Streamlines with branch 'separatrix', in the order of the
        records and of their rays.
    """
    field = field_for(target)
    exclusions = list(exclusions or ())
    lines = []
    for rec in records:
        if rec.type == 'unresolved':
            _logger.warning('Skipping the separatrices of the unresolved point at %s.',
                            rec.position)
            continue
        others = [(c, k) for c, k in exclusions
                  if math.hypot(c[0] - rec.position[0], c[1] - rec.position[1]) >
                  2 * offset]
        for ray in rec.separatrices:
            if ray.kind != 'separatrix':
                continue
            seed = (rec.position[0] + offset * math.cos(ray.angle),
                    rec.position[1] + offset * math.sin(ray.angle))
            selector = ray.foliation if ray.foliation in SELECTORS else 'root'
            line = integrate(field, selector, seed, step, max_len, ray.angle, region,
                             others, exclusion_radius, 'separatrix')
            lines.append(Streamline((rec.position,) + line.points, 'separatrix',
                                    selector, line.reason, rec.position))
    return lines


class PortraitSignature(object):
    """Combinatorial summary of the axial configuration at a singular point.

    Args:
        kind: 'whitney' for the critical point of the family or the type of an
            axiumbilic point (E3, E4 or E5).
        separatrices: Number of separatrices (per foliation for axiumbilic
            points, arcs reaching the point for the critical point).
        parabolic: Number of parabolic sectors (nodes on the exceptional circle
            for the critical point).
        index: The index of the configuration around the point.
        sequence: Optional tuple of the singular types around the exceptional
            circle. (Default: ()).

    Properties:
        * kind
        * separatrices
        * parabolic
        * index
        * sequence
        * is_consistent
    """
    __slots__ = ('_kind', '_separatrices', '_parabolic', '_index', '_sequence')
    EXPECTED = {'E3': (3, 0), 'E4': (4, 1), 'E5': (5, 0)}

    def __init__(self, kind, separatrices, parabolic, index, sequence=()):
        assert separatrices >= 0 and parabolic >= 0, \
            'Sector counts must not be negative. Got {}.'.format(
                (separatrices, parabolic))
        self._kind = kind
        self._separatrices = int(separatrices)
        self._parabolic = int(parabolic)
        self._index = index
        self._sequence = tuple(sequence)

    @property
    def kind(self):
        return self._kind

    @property
    def separatrices(self):
        return self._separatrices

    @property
    def parabolic(self):
        return self._parabolic

    @property
    def index(self):
        return self._index

    @property
    def sequence(self):
        return self._sequence

    @property
    def is_consistent(self):
        """Whether the counts agree with the type of an axiumbilic point."""
        if self._kind not in self.EXPECTED:
            return True
        return (self._separatrices, self._parabolic) == self.EXPECTED[self._kind]

    def _key(self):
        return (self._kind, self._separatrices, self._parabolic, self._index,
                self._sequence)

    def __eq__(self, other):
        return isinstance(other, PortraitSignature) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())

    def to_dict(self):
        return {
            'type': 'PortraitSignature',
            'kind': self._kind,
            'separatrices': self._separatrices,
            'parabolic': self._parabolic,
            'index': self._index,
            'sequence': list(self._sequence)
        }

    def __repr__(self):
        return 'PortraitSignature: {} ({} separatrices, {} parabolic, index {})'.format(
            self._kind, self._separatrices, self._parabolic, self._index)


def record_signature(record, foliation='principal'):
    """The PortraitSignature of one foliation at an axiumbilic point."""
    return PortraitSignature(record.type, record.separatrix_count(foliation),
                             record.parabolic_count(foliation), record.index)


def signature(a, radius=0.1, samples=720):
    """The PortraitSignature of the family (u, uv, v^2, a v^3 / 6) at its critical point.

    Separatrices are the saddles of the resolved field, each one the germ of an
    arc reaching the critical point, and parabolic sectors are its nodes.
    """
    portrait = resolution_portrait(a)
    value = index(FamilyField(a, 0), (0.0, 0.0), radius, samples)
    return PortraitSignature('whitney', len(portrait.saddles), len(portrait.nodes),
                             value, portrait.sequence)


def germ_gap(field, theta, r):
    """Angle between the blown-down germ of theta and the nearest field line at r.

    The germ is the radial line leaving (theta, 0), pushed to the point
    (r^2 sin(theta), r cos(theta)).
    """
    point = (r * r * math.sin(theta), r * math.cos(theta))
    du, dv = saddle_germ(theta, r)
    germ = math.atan2(dv, du) % math.pi
    return min((abs(_line_delta(line, germ)) for line in field.roots(*point)),
               default=math.pi / 2)


def germ_order(field, theta, r0=GERM_RADIUS, halvings=GERM_HALVINGS):
    """Smallest observed order of the germ gap as r is halved from r0.

    On a saddle separatrix the gap shrinks like r^2. Off the separatrices the
    field lines leave the radial line at a finite rate and the gap shrinks like r.

    Returns:
        A tuple (order, gaps). order is inf when the gap vanishes.
    """
    gaps = [germ_gap(field, theta, r0 / 2 ** k) for k in range(halvings + 1)]
    order = float('inf')
    for big, small in zip(gaps, gaps[1:]):
        if small < GAP_FLOOR:
            continue
        order = min(order, math.log(max(big, GAP_FLOOR) / small, 2))
    return order, gaps


def blow_down_check(a, r0=GERM_RADIUS, min_order=GERM_ORDER):
    """Check that the blown-down saddle germs are tangent to axial lines at 0.

    Each saddle germ is pushed through the weighted blow-up for a few radii and
    compared with the nearest real direction of the field. The check passes when
    every gap shrinks at least like r^min_order, which a wrong angle does not.

    Returns:
        A dictionary with 'passed', 'min_order' and one entry per germ.
    """
    portrait = resolution_portrait(a)
    field = FamilyField(a, 0)
    germs = []
    for sing in portrait.saddles:
        order, gaps = germ_order(field, sing.theta, r0)
        germs.append({'theta': sing.theta, 'gaps': gaps,
                      'order': None if math.isinf(order) else order})
    orders = [g['order'] for g in germs if g['order'] is not None]
    lowest = min(orders) if orders else None
    passed = lowest is None or lowest >= min_order
    return {'passed': passed, 'min_order': lowest, 'germs': germs}


class Portrait(object):
    """Streamlines, axiumbilic points and critical points of a window.

    Args:
        region: The (u_min, u_max, v_min, v_max) window.
        streamlines: A list of Streamlines.
        records: A list of AxiumbilicRecords.
        critical_points: A list of (u, v) critical points.

    Properties:
        * region
        * streamlines
        * records
        * critical_points
    """
    __slots__ = ('_region', '_streamlines', '_records', '_critical_points')

    def __init__(self, region, streamlines, records=(), critical_points=()):
        self._region = region_bounds(region)
        self._streamlines = tuple(streamlines)
        self._records = tuple(records)
        self._critical_points = tuple(tuple(p) for p in critical_points)

    @property
    def region(self):
        return self._region

    @property
    def streamlines(self):
        return self._streamlines

    @property
    def records(self):
        return self._records

    @property
    def critical_points(self):
        return self._critical_points

    def to_dict(self):
        return {
            'type': 'Portrait',
            'region': list(self._region),
            'streamlines': [s.to_dict() for s in self._streamlines],
            'axiumbilics': [r.to_dict() for r in self._records],
            'critical_points': [list(p) for p in self._critical_points]
        }

    def __repr__(self):
        return 'Portrait: {} streamlines, {} axiumbilic'.format(
            len(self._streamlines), len(self._records))


def portrait(target, region, seeds=3, step=None, max_len=None, grid=32,
             exclusion_radius=EXCLUSION_RADIUS, threads=1, seed_points=None):
    """Trace the axial configuration of a window.

    Axiumbilic points are located first. Both foliations are then traced in
    both senses from a seeds x seeds grid of start points and every separatrix
    is traced from its axiumbilic point.

    Args:
        target: An AxialField or a SurfaceMap.
        region: The (u_min, u_max, v_min, v_max) window or a Region.
        seeds: Number of seed points per side. (Default: 3).
        step: The RK4 step. (Default: 1e-3 of the window width).
        max_len: The longest length of a line. (Default: the window width).
        grid: Number of cells per side of the axiumbilic search. (Default: 32).
        exclusion_radius: Radius of the disks around singular points.
        threads: Number of worker threads for the streamlines. (Default: 1).
        seed_points: Optional list of extra (u, v) start points traced after
            the grid seeds.

    Returns:
        A Portrait with streamlines in a fixed order.
    """
    assert seeds >= 1, 'seeds must be at least 1. Got {}.'.format(seeds)
    assert threads >= 1, 'threads must be at least 1. Got {}.'.format(threads)
    field = field_for(target)
    bounds = region_bounds(region)
    u_min, u_max, v_min, v_max = bounds
    width = max(u_max - u_min, v_max - v_min)
    step = step if step is not None else STEP_FRACTION * width
    max_len = max_len if max_len is not None else width
    search = find_axiumbilics(field, bounds, grid)
    exclusions = [(r.position, 'axiumbilic') for r in search] + \
        [(p, 'singularity') for p in search.critical_points]

    starts = [(u_min + (i + 0.5) * (u_max - u_min) / seeds,
               v_min + (j + 0.5) * (v_max - v_min) / seeds)
              for i in range(seeds) for j in range(seeds)]
    starts.extend((float(p[0]), float(p[1])) for p in seed_points or ())
    jobs = []
    for seed in starts:
        if any(math.hypot(seed[0] - c[0], seed[1] - c[1]) < exclusion_radius
               for c, _ in exclusions):
            continue
        try:
            pair = field.directions(*seed)
        except (SingularPointError, CriticalPointError):
            continue
        if not pair.is_complete:
            continue
        for selector in ('principal', 'mean'):
            angle = pair.branch(selector)[0]
            for heading in (angle, angle + math.pi):
                jobs.append((selector, seed, heading))

    def run(job):
        selector, seed, heading = job
        return integrate(field, selector, seed, step, max_len, heading, bounds,
                         exclusions, exclusion_radius)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            lines = list(executor.map(run, jobs))
    else:
        lines = [run(job) for job in jobs]
    lines.extend(trace_separatrices(field, search.records, step, max_len, bounds,
                                    exclusions, exclusion_radius=exclusion_radius))
    return Portrait(bounds, lines, search.records, search.critical_points)
