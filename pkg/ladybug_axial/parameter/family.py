# coding=utf-8
"""Parameters selecting the surface family or the axial field of a run."""
from __future__ import division

from ._base import AxialParameter, parse_parameter_string
from ..family import field_from_family, axiumbilic_heights
from ..surface import surface_from_expressions, surface_from_family

FAMILIES = ('alpha_a', 'alpha_eps', 'whitney', 'normal_form', 'user')


class FamilyParameter(AxialParameter):
    """Parameters of the surface family.

    Args:
        family: Text for the family. Choose from the following.

            * alpha_a
            * alpha_eps
            * whitney
            * normal_form
            * user

            Default is alpha_a.
        a: The cubic coefficient of alpha_a and alpha_eps or the first
            coefficient of the normal form. (Default: 0).
        eps: The deformation of alpha_eps. (Default: 0).
        b: The second coefficient of the normal form. (Default: 0).
        expressions: Text for the 4 polynomial components of a user surface
            separated by commas (eg. "u, u*v, v^2, v^3/3"). Required when the
            family is user. (Default: None).

    Properties:
        * family
        * a
        * eps
        * b
        * expressions
    """
    _kind = 'Family'
    __slots__ = ('_family', '_a', '_eps', '_b', '_expressions')

    def __init__(self, family=None, a=None, eps=None, b=None, expressions=None):
        """Initialize Family Parameters."""
        self.family = family if family is not None else 'alpha_a'
        self.a = a if a is not None else 0
        self.eps = eps if eps is not None else 0
        self.b = b if b is not None else 0
        self.expressions = expressions

    @classmethod
    def from_dict(cls, data):
        """Create a FamilyParameter object from a dictionary.

        Args:
            data: A FamilyParameter dictionary in following the format below.

        .. code-block:: python

            {
            'type': 'FamilyParameter',
            'family': 'alpha_eps',
            'a': 0,
            'eps': 0.1,
            'b': 0,
            'expressions': None
            }
        """
        assert data['type'] == 'FamilyParameter', \
            'Expected FamilyParameter dictionary. Got {}.'.format(data['type'])
        return cls(data.get('family'), data.get('a'), data.get('eps'), data.get('b'),
                   data.get('expressions'))

    @classmethod
    def from_string(cls, family_parameter_string):
        """Create a FamilyParameter object from a FamilyParameter string."""
        par_dict = parse_parameter_string(family_parameter_string)
        a = float(par_dict['a']) if 'a' in par_dict else None
        eps = float(par_dict['eps']) if 'eps' in par_dict else None
        b = float(par_dict['b']) if 'b' in par_dict else None
        return cls(par_dict.get('family'), a, eps, b, par_dict.get('expressions'))

    @property
    def family(self):
        """Text for the family. The default is alpha_a."""
        return self._family

    @family.setter
    def family(self, value):
        assert value in FAMILIES, \
            'family must be one of {}. Got {}.'.format(FAMILIES, value)
        self._family = value

    @property
    def a(self):
        """The cubic (or first normal-form) coefficient. The default is 0."""
        return self._a

    @a.setter
    def a(self, value):
        self._a = float(value)

    @property
    def eps(self):
        """The deformation of alpha_eps. The default is 0."""
        return self._eps

    @eps.setter
    def eps(self, value):
        self._eps = float(value)

    @property
    def b(self):
        """The second normal-form coefficient. The default is 0."""
        return self._b

    @b.setter
    def b(self, value):
        self._b = float(value)

    @property
    def expressions(self):
        """Text for the components of a user surface or None."""
        return self._expressions

    @expressions.setter
    def expressions(self, value):
        if value is not None and not isinstance(value, str):
            value = ','.join(str(v) for v in value)
        if value is not None:
            value = ''.join(value.split())
            surface_from_expressions(value)
        self._expressions = value

    def field(self):
        """Get the AxialField of these parameters."""
        return field_from_family(self._family, self._a, self._eps, self._b,
                                 self._expressions)

    def surface(self):
        """Get the SurfaceMap of these parameters.

        Raises ValueError for the normal form, which is a field with no surface.
        """
        if self._family == 'normal_form':
            raise ValueError('The normal form has no surface map.')
        if self._family == 'user':
            return surface_from_expressions(self._expressions)
        return surface_from_family(self._family, a=self._a, eps=self._eps)

    def default_region(self):
        """A (u_min, u_max, v_min, v_max) window suited to the family.

        The deformed family gets a square three times as high as its highest
        axiumbilic point near the origin.
        """
        if self._family == 'alpha_eps' and self._eps != 0:
            heights = [h for hs in axiumbilic_heights(self._a, self._eps).values()
                       for h in hs]
            half = max([0.05] + [1.5 * h for h in heights])
        elif self._family in ('alpha_a', 'whitney'):
            half = 0.2
        else:
            half = 1.0
        return (-half, half, -half, half)

    def known_critical_points(self):
        """Critical points known from the definition of the family."""
        if self._family in ('alpha_a', 'whitney') or \
                (self._family == 'alpha_eps' and self._eps == 0):
            return [(0.0, 0.0)]
        return []

    def to_dict(self):
        """FamilyParameter dictionary representation."""
        return {
            'type': 'FamilyParameter',
            'family': self._family,
            'a': self._a,
            'eps': self._eps,
            'b': self._b,
            'expressions': self._expressions
        }

    def __copy__(self):
        return FamilyParameter(self._family, self._a, self._eps, self._b,
                               self._expressions)

    def __eq__(self, other):
        return isinstance(other, FamilyParameter) and \
            self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._family, self._a, self._eps, self._b, self._expressions))

    def __repr__(self):
        """Family parameters representation."""
        base = '--family {} --a {} --eps {} --b {}'.format(
            self._family, self._a, self._eps, self._b)
        if self._expressions is not None:
            base += ' --expressions {}'.format(self._expressions)
        return base
