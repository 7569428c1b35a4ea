# coding=utf-8
"""The rectangle of the (u, v) chart in which a run works."""
from __future__ import division

from ._base import AxialParameter, parse_parameter_string


class Region(AxialParameter):
    """A rectangle of the (u, v) chart.

    Args:
        u_min: Lower bound of u. (Default: -0.5).
        u_max: Upper bound of u. (Default: 0.5).
        v_min: Lower bound of v. (Default: -0.5).
        v_max: Upper bound of v. (Default: 0.5).

    Properties:
        * u_min
        * u_max
        * v_min
        * v_max
        * bounds
        * width
        * height
    """
    _kind = 'Region'
    __slots__ = ('_u_min', '_u_max', '_v_min', '_v_max')

    def __init__(self, u_min=None, u_max=None, v_min=None, v_max=None):
        """Initialize Region."""
        self._u_min = float(u_min) if u_min is not None else -0.5
        self._u_max = float(u_max) if u_max is not None else 0.5
        self._v_min = float(v_min) if v_min is not None else -0.5
        self._v_max = float(v_max) if v_max is not None else 0.5
        self._check()

    @classmethod
    def from_bounds(cls, bounds):
        """Create a Region from a (u_min, u_max, v_min, v_max) sequence."""
        bounds = tuple(bounds)
        assert len(bounds) == 4, \
            'Region bounds must have 4 values. Got {}.'.format(len(bounds))
        return cls(*bounds)

    @classmethod
    def from_dict(cls, data):
        """Create a Region object from a dictionary.

        Args:
            data: A Region dictionary in following the format below.

        .. code-block:: python

            {
            'type': 'Region',
            'u_min': -0.2,
            'u_max': 0.2,
            'v_min': -0.2,
            'v_max': 0.2
            }
        """
        assert data['type'] == 'Region', \
            'Expected Region dictionary. Got {}.'.format(data['type'])
        return cls(data.get('u_min'), data.get('u_max'), data.get('v_min'),
                   data.get('v_max'))

    @classmethod
    def from_string(cls, region_string):
        """Create a Region object from a Region string."""
        par_dict = parse_parameter_string(region_string)
        return cls(*(par_dict.get(key) for key in ('u-min', 'u-max', 'v-min', 'v-max')))

    def _check(self):
        assert self._u_min < self._u_max and self._v_min < self._v_max, \
            'Region must not be empty. Got {}.'.format(self.bounds)

    @property
    def u_min(self):
        """Lower bound of u. The default is -0.5."""
        return self._u_min

    @property
    def u_max(self):
        """Upper bound of u. The default is 0.5."""
        return self._u_max

    @property
    def v_min(self):
        """Lower bound of v. The default is -0.5."""
        return self._v_min

    @property
    def v_max(self):
        """Upper bound of v. The default is 0.5."""
        return self._v_max

    @property
    def bounds(self):
        """A tuple of (u_min, u_max, v_min, v_max)."""
        return (self._u_min, self._u_max, self._v_min, self._v_max)

    @property
    def width(self):
        return self._u_max - self._u_min

    @property
    def height(self):
        return self._v_max - self._v_min

    def contains(self, point):
        """Whether a (u, v) point is inside the closed rectangle."""
        return self._u_min <= point[0] <= self._u_max and \
            self._v_min <= point[1] <= self._v_max

    def to_dict(self):
        """Region dictionary representation."""
        return {
            'type': 'Region',
            'u_min': self._u_min,
            'u_max': self._u_max,
            'v_min': self._v_min,
            'v_max': self._v_max
        }

    def __copy__(self):
        return Region(*self.bounds)

    def __eq__(self, other):
        return isinstance(other, Region) and self.bounds == other.bounds

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.bounds)

    def __repr__(self):
        """Region representation."""
        return '--u-min {} --u-max {} --v-min {} --v-max {}'.format(*self.bounds)
