# coding=utf-8
"""Sizes and tolerances of the numerical solvers."""
from __future__ import division

from ._base import AxialParameter, parse_parameter_string
from ..umbilic import DEFAULT_GRID, NEWTON_ITERATIONS, MERGE_DISTANCE
from ..portrait import EXCLUSION_RADIUS


class SolverParameter(AxialParameter):
    """Parameters of the axiumbilic search, the index loops and the streamlines.

    Args:
        grid: Number of cells per side of the axiumbilic search. Must be at
            least 16. (Default: 64).
        iterations: Maximum number of Newton iterations. (Default: 50).
        merge_distance: Distance under which two located points are the same
            point. (Default: 1e-7).
        samples: Number of samples on an index loop. Must be at least 16.
            (Default: 720).
        exclusion_radius: Radius of the disks around singular points where
            streamlines stop. (Default: 5e-3).
        step: The RK4 step of the streamlines. None to use 1e-3 of the
            window width. (Default: None).
        threads: Number of worker threads. (Default: 1).
        index_radius: Radius of the index loops. (Default: 0.1).
        seed_grid: Number of streamline seeds per side of a portrait.
            (Default: 3).

    Properties:
        * grid
        * iterations
        * merge_distance
        * samples
        * exclusion_radius
        * step
        * threads
        * index_radius
        * seed_grid
    """
    _kind = 'Solver'
    __slots__ = ('_grid', '_iterations', '_merge_distance', '_samples',
                 '_exclusion_radius', '_step', '_threads', '_index_radius',
                 '_seed_grid')
    KEYS = ('grid', 'iterations', 'merge_distance', 'samples', 'exclusion_radius',
            'step', 'threads', 'index_radius', 'seed_grid')

    def __init__(self, grid=None, iterations=None, merge_distance=None, samples=None,
                 exclusion_radius=None, step=None, threads=None, index_radius=None,
                 seed_grid=None):
        """Initialize Solver Parameters."""
        self.grid = grid if grid is not None else DEFAULT_GRID
        self.iterations = iterations if iterations is not None else NEWTON_ITERATIONS
        self.merge_distance = merge_distance if merge_distance is not None \
            else MERGE_DISTANCE
        self.samples = samples if samples is not None else 720
        self.exclusion_radius = exclusion_radius if exclusion_radius is not None \
            else EXCLUSION_RADIUS
        self.step = step
        self.threads = threads if threads is not None else 1
        self.index_radius = index_radius if index_radius is not None else 0.1
        self.seed_grid = seed_grid if seed_grid is not None else 3

    @classmethod
    def from_dict(cls, data):
        """Create a SolverParameter object from a dictionary.

        Args:
            data: A SolverParameter dictionary in following the format below.

        .. code-block:: python

            {
            'type': 'SolverParameter',
            'grid': 64,
            'iterations': 50,
            'merge_distance': 1e-7,
            'samples': 720,
            'exclusion_radius': 0.005,
            'step': None,
            'threads': 1,
            'index_radius': 0.1,
            'seed_grid': 3
            }
        """
        assert data['type'] == 'SolverParameter', \
            'Expected SolverParameter dictionary. Got {}.'.format(data['type'])
        return cls(*(data.get(key) for key in cls.KEYS))

    @classmethod
    def from_string(cls, solver_parameter_string):
        """Create a SolverParameter object from a SolverParameter string."""
        par_dict = parse_parameter_string(solver_parameter_string)
        values = []
        for key in cls.KEYS:
            text = par_dict.get(key.replace('_', '-'))
            values.append(None if text is None or text == 'None' else float(text))
        return cls(*values)

    @property
    def grid(self):
        """Number of cells per side of the axiumbilic search. The default is 64."""
        return self._grid

    @grid.setter
    def grid(self, value):
        value = int(value)
        assert value >= 16, 'grid must be at least 16. Got {}.'.format(value)
        self._grid = value

    @property
    def iterations(self):
        """Maximum number of Newton iterations. The default is 50."""
        return self._iterations

    @iterations.setter
    def iterations(self, value):
        value = int(value)
        assert value >= 1, 'iterations must be at least 1. Got {}.'.format(value)
        self._iterations = value

    @property
    def merge_distance(self):
        """Distance under which two points are merged. The default is 1e-7."""
        return self._merge_distance

    @merge_distance.setter
    def merge_distance(self, value):
        value = float(value)
        assert value > 0, 'merge_distance must be positive. Got {}.'.format(value)
        self._merge_distance = value

    @property
    def samples(self):
        """Number of samples on an index loop. The default is 720."""
        return self._samples

    @samples.setter
    def samples(self, value):
        value = int(value)
        assert value >= 16, 'samples must be at least 16. Got {}.'.format(value)
        self._samples = value

    @property
    def exclusion_radius(self):
        """Radius of the disks around singular points. The default is 5e-3."""
        return self._exclusion_radius

    @exclusion_radius.setter
    def exclusion_radius(self, value):
        value = float(value)
        assert value > 0, 'exclusion_radius must be positive. Got {}.'.format(value)
        self._exclusion_radius = value

    @property
    def step(self):
        """The RK4 step or None for 1e-3 of the window width."""
        return self._step

    @step.setter
    def step(self, value):
        if value is not None:
            value = float(value)
            assert value > 0, 'step must be positive. Got {}.'.format(value)
        self._step = value

    @property
    def threads(self):
        """Number of worker threads. The default is 1."""
        return self._threads

    @threads.setter
    def threads(self, value):
        value = int(value)
        assert value >= 1, 'threads must be at least 1. Got {}.'.format(value)
        self._threads = value

    @property
    def index_radius(self):
        """Radius of the index loops. The default is 0.1."""
        return self._index_radius

    @index_radius.setter
    def index_radius(self, value):
        value = float(value)
        assert value > 0, 'index_radius must be positive. Got {}.'.format(value)
        self._index_radius = value

    @property
    def seed_grid(self):
        """Number of streamline seeds per side of a portrait. The default is 3."""
        return self._seed_grid

    @seed_grid.setter
    def seed_grid(self, value):
        value = int(value)
        assert value >= 1, 'seed_grid must be at least 1. Got {}.'.format(value)
        self._seed_grid = value

    def to_dict(self):
        """SolverParameter dictionary representation."""
        base = {'type': 'SolverParameter'}
        for key in self.KEYS:
            base[key] = getattr(self, key)
        return base

    def __copy__(self):
        return SolverParameter(*(getattr(self, key) for key in self.KEYS))

    def __eq__(self, other):
        return isinstance(other, SolverParameter) and \
            self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(tuple(getattr(self, key) for key in self.KEYS))

    def __repr__(self):
        """Solver parameters representation."""
        return ' '.join('--{} {}'.format(key.replace('_', '-'), getattr(self, key))
                        for key in self.KEYS)
