# coding=utf-8
"""The complete configuration of a command run."""
from __future__ import division

import io
import json
import re

from ._base import AxialParameter
from .family import FamilyParameter
from .region import Region
from .solver import SolverParameter

COMMANDS = ('analyze', 'portrait', 'scan', 'verify', 'forms')
OUTPUT_KEYS = ('out', 'csv', 'svg')
_COMMENT = re.compile(r"(^|\s)#.*$")
SCAN_KEYS = ('a_start', 'a_stop', 'a_step', 'eps_values')
FAMILY_KEYS = ('family', 'a', 'eps', 'b', 'expressions')
REGION_KEYS = ('u_min', 'u_max', 'v_min', 'v_max')
DEFAULT_SCAN = {'a_start': -10.0, 'a_stop': 10.0, 'a_step': 0.5,
                'eps_values': [-0.05, 0.05]}


def _parse_value(text):
    """Read the value of a key = value line."""
    text = text.strip()
    if not text:
        return None
    if text.startswith('['):
        return json.loads(text)
    if text[0] in '"\'' and text[-1] == text[0]:
        return text[1:-1]
    lower = text.lower()
    if lower in ('none', 'null'):
        return None
    if lower in ('true', 'false'):
        return lower == 'true'
    try:
        return float(text) if any(c in text for c in '.eE') else int(text)
    except ValueError:
        return text


def parse_config_text(text):
    """Get the dictionary of a TOML-style configuration text.

    Each line is a key = value pair. Text after # is a comment and [section]
    headers are ignored, so all keys share one namespace.
    """
    values = {}
    for number, raw in enumerate(io.StringIO(text), 1):
        line = _COMMENT.sub('', raw).strip()
        if not line or \
                (line.startswith('[') and line.endswith(']') and '=' not in line):
            continue
        assert '=' in line, \
            'Config line {} is not a key = value pair. Got {}.'.format(number, line)
        key, value = line.split('=', 1)
        key = key.strip().replace('-', '_')
        values[key] = _parse_value(value)
    return values


class RunConfig(AxialParameter):
    """Everything a command needs to run.

    Args:
        command: Text for the command. One of analyze, portrait, scan, verify
            and forms. (Default: analyze).
        family: A FamilyParameter. (Default: alpha_a with a = 0).
        region: A Region or None to use the default window of the family.
        solver: A SolverParameter. (Default: SolverParameter()).
        outputs: A dictionary of output paths with any of the keys out, csv and
            svg. (Default: {}).
        seeds: A list of extra (u, v) streamline seeds. (Default: []).
        scan: A dictionary with a_start, a_stop, a_step and eps_values for the
            scan command. Missing keys get the scan defaults.

    Properties:
        * command
        * family
        * region
        * solver
        * outputs
        * seeds
        * scan
        * bounds
    """
    _kind = 'Run'
    __slots__ = ('_command', '_family', '_region', '_solver', '_outputs', '_seeds',
                 '_scan')

    def __init__(self, command=None, family=None, region=None, solver=None,
                 outputs=None, seeds=None, scan=None):
        """Initialize RunConfig."""
        self.command = command if command is not None else 'analyze'
        self.family = family if family is not None else FamilyParameter()
        self.region = region
        self.solver = solver if solver is not None else SolverParameter()
        self.outputs = outputs
        self.seeds = seeds
        self.scan = scan

    @classmethod
    def from_values(cls, values, base=None):
        """Create a RunConfig from a flat dictionary of key values.

        Args:
            values: A dictionary using the keys of a configuration file. Keys
                with a None value are skipped.
            base: An optional RunConfig whose values are overridden by the
                values. (Default: None).
        """
        config = base.duplicate() if base is not None else cls()
        values = {k: v for k, v in values.items() if v is not None}
        unknown = set(values) - set(('command', 'region', 'seeds') + FAMILY_KEYS +
                                    REGION_KEYS + SolverParameter.KEYS +
                                    OUTPUT_KEYS + SCAN_KEYS)
        assert not unknown, 'Unknown configuration keys. Got {}.'.format(
            sorted(unknown))
        if 'command' in values:
            config.command = values['command']

        family = config.family.to_dict()
        family.update({k: values[k] for k in FAMILY_KEYS if k in values})
        config.family = FamilyParameter.from_dict(family)
        assert config.family.family != 'user' or config.family.expressions, \
            'A user surface needs its expressions. Got {}.'.format(
                config.family.expressions)

        if 'region' in values:
            config.region = Region.from_bounds(values['region'])
        if any(k in values for k in REGION_KEYS):
            region = (config.region or Region.from_bounds(
                config.family.default_region())).to_dict()
            region.update({k: values[k] for k in REGION_KEYS if k in values})
            config.region = Region.from_dict(region)

        solver = config.solver.to_dict()
        solver.update({k: values[k] for k in SolverParameter.KEYS if k in values})
        config.solver = SolverParameter.from_dict(solver)

        outputs = dict(config.outputs)
        outputs.update({k: values[k] for k in OUTPUT_KEYS if k in values})
        config.outputs = outputs
        if 'seeds' in values:
            config.seeds = values['seeds']
        scan = dict(config.scan)
        scan.update({k: values[k] for k in SCAN_KEYS if k in values})
        config.scan = scan
        return config

    @classmethod
    def from_file(cls, file_path, base=None):
        """Create a RunConfig from a TOML-style key = value file.

        .. code-block:: text

            # the figures of the deformed family
            command = "analyze"
            [family]
            family = "alpha_eps"
            a = 0
            eps = 0.1
            [region]
            region = [-0.2, 0.2, -0.2, 0.2]
            [solver]
            grid = 64
        """
        with io.open(file_path, encoding='utf-8') as inf:
            text = inf.read()
        return cls.from_values(parse_config_text(text), base)

    @classmethod
    def from_dict(cls, data):
        """Create a RunConfig object from a dictionary.

        Args:
            data: A RunConfig dictionary in following the format below.

        .. code-block:: python

            {
            'type': 'RunConfig',
            'command': 'portrait',
            'family': {},  # a FamilyParameter dictionary
            'region': {},  # a Region dictionary or None
            'solver': {},  # a SolverParameter dictionary
            'outputs': {'svg': 'portrait.svg'},
            'seeds': [[0.1, 0.05]],
            'scan': {'a_start': -10, 'a_stop': 10, 'a_step': 0.5,
                     'eps_values': [-0.05, 0.05]}
            }
        """
        assert data['type'] == 'RunConfig', \
            'Expected RunConfig dictionary. Got {}.'.format(data['type'])
        family = FamilyParameter.from_dict(data['family']) \
            if data.get('family') else None
        region = Region.from_dict(data['region']) if data.get('region') else None
        solver = SolverParameter.from_dict(data['solver']) \
            if data.get('solver') else None
        return cls(data.get('command'), family, region, solver, data.get('outputs'),
                   data.get('seeds'), data.get('scan'))

    @property
    def command(self):
        """Text for the command. The default is analyze."""
        return self._command

    @command.setter
    def command(self, value):
        assert value in COMMANDS, \
            'command must be one of {}. Got {}.'.format(COMMANDS, value)
        self._command = value

    @property
    def family(self):
        """The FamilyParameter of the run."""
        return self._family

    @family.setter
    def family(self, value):
        assert isinstance(value, FamilyParameter), \
            'Expected FamilyParameter for family. Got {}.'.format(type(value))
        self._family = value

    @property
    def region(self):
        """The Region of the run or None for the default window of the family."""
        return self._region

    @region.setter
    def region(self, value):
        if value is not None and not isinstance(value, Region):
            value = Region.from_bounds(value)
        self._region = value

    @property
    def solver(self):
        """The SolverParameter of the run."""
        return self._solver

    @solver.setter
    def solver(self, value):
        assert isinstance(value, SolverParameter), \
            'Expected SolverParameter for solver. Got {}.'.format(type(value))
        self._solver = value

    @property
    def outputs(self):
        """A dictionary of output paths."""
        return self._outputs

    @outputs.setter
    def outputs(self, value):
        value = dict(value) if value else {}
        for key in value:
            assert key in OUTPUT_KEYS, \
                'Output keys must be among {}. Got {}.'.format(OUTPUT_KEYS, key)
        self._outputs = value

    @property
    def seeds(self):
        """A list of (u, v) extra streamline seeds."""
        return self._seeds

    @seeds.setter
    def seeds(self, value):
        points = []
        for point in value or ():
            assert len(point) == 2, \
                'Each seed must be a (u, v) pair. Got {}.'.format(point)
            points.append((float(point[0]), float(point[1])))
        self._seeds = points

    @property
    def scan(self):
        """A dictionary with the a range and the eps values of a scan."""
        return self._scan

    @scan.setter
    def scan(self, value):
        scan = dict(DEFAULT_SCAN)
        scan.update(value or {})
        assert scan['a_step'] > 0, \
            'a_step must be positive. Got {}.'.format(scan['a_step'])
        assert scan['a_start'] <= scan['a_stop'], \
            'a_start must not exceed a_stop. Got {}.'.format(
                (scan['a_start'], scan['a_stop']))
        eps_values = scan['eps_values']
        if not isinstance(eps_values, (list, tuple)):
            eps_values = [eps_values]
        scan['eps_values'] = [float(e) for e in eps_values]
        assert scan['eps_values'], 'eps_values must not be empty.'
        self._scan = scan

    @property
    def bounds(self):
        """The (u_min, u_max, v_min, v_max) window of the run."""
        if self._region is not None:
            return self._region.bounds
        return self._family.default_region()

    def scan_values(self):
        """The a values of the scan from a_start to a_stop (inclusive)."""
        start, stop, step = (self._scan[k] for k in ('a_start', 'a_stop', 'a_step'))
        count = int(round((stop - start) / step)) + 1
        values = [round(start + i * step, 10) for i in range(count)]
        return [a for a in values if a <= stop + 1e-9]

    def to_dict(self):
        """RunConfig dictionary representation."""
        return {
            'type': 'RunConfig',
            'command': self._command,
            'family': self._family.to_dict(),
            'region': self._region.to_dict() if self._region is not None else None,
            'solver': self._solver.to_dict(),
            'outputs': dict(self._outputs),
            'seeds': [list(p) for p in self._seeds],
            'scan': dict(self._scan)
        }

    def __copy__(self):
        return RunConfig(self._command, self._family.duplicate(),
                         self._region.duplicate() if self._region else None,
                         self._solver.duplicate(), self._outputs, self._seeds,
                         self._scan)

    def __repr__(self):
        """Run configuration representation."""
        return 'RunConfig: {} {}'.format(self._command, self._family)
