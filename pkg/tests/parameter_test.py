# coding utf-8
import pytest

from ladybug_axial.family import FamilyField
from ladybug_axial.umbilic import NormalFormField, SurfaceField
from ladybug_axial.parameter.family import FamilyParameter
from ladybug_axial.parameter.region import Region
from ladybug_axial.parameter.solver import SolverParameter
from ladybug_axial.parameter.run import RunConfig, parse_config_text

CONFIG = '''
# figures of the deformed family
command = "portrait"
[family]
family = "alpha_eps"
a = 0
eps = 0.1  # one pair of E3 points
[region]
region = [-0.2, 0.2, -0.2, 0.2]
[solver]
grid = 48
seed-grid = 2
[output]
svg = "alpha_eps.svg"
'''


def test_family_parameter():
    """Test FamilyParameter."""
    par = FamilyParameter('alpha_eps', 0, 0.1)
    assert par.family == 'alpha_eps'
    assert par.a == 0
    assert par.eps == 0.1
    assert par.b == 0
    assert par.expressions is None
    assert isinstance(par.field(), FamilyField)
    assert par.surface().name == 'alpha_eps'
    assert par.known_critical_points() == []
    assert FamilyParameter().family == 'alpha_a'
    assert FamilyParameter().known_critical_points() == [(0.0, 0.0)]
    assert isinstance(FamilyParameter('normal_form', 0.1).field(), NormalFormField)
    user = FamilyParameter('user', expressions=['u', 'u*v', 'v^2', 'v^3 / 3'])
    assert user.expressions == 'u,u*v,v^2,v^3/3'
    assert isinstance(user.field(), SurfaceField)


def test_family_parameter_invalid():
    """Test FamilyParameter for invalid inputs."""
    with pytest.raises(AssertionError):
        FamilyParameter('torus')
    with pytest.raises(ValueError):
        FamilyParameter(eps='small')
    with pytest.raises(ValueError):
        FamilyParameter('user', expressions='u, v, exp(u), 0')
    with pytest.raises(ValueError):
        FamilyParameter('normal_form').surface()


def test_family_parameter_default_region():
    """Test the default windows of the families."""
    assert FamilyParameter('alpha_a', 9).default_region() == (-0.2, 0.2, -0.2, 0.2)
    assert FamilyParameter('normal_form').default_region() == (-1, 1, -1, 1)
    u_min, u_max, v_min, v_max = FamilyParameter('alpha_eps', 0, 0.1).default_region()
    assert v_max == pytest.approx(1.5 * 0.1519109, rel=1e-6)
    assert (u_min, u_max, v_min) == (-v_max, v_max, -v_max)


def test_family_parameter_to_from_dict():
    """Test FamilyParameter to_dict and from_dict."""
    par = FamilyParameter('alpha_eps', 9, 0.001)
    par_dict = par.to_dict()
    new_par = FamilyParameter.from_dict(par_dict)
    assert new_par.to_dict() == par_dict
    assert new_par == par
    assert new_par != FamilyParameter('alpha_eps', 9, -0.001)


def test_family_parameter_to_from_str():
    """Test FamilyParameter to and from a string."""
    par = FamilyParameter('alpha_eps', 9, 0.001)
    new_par = FamilyParameter.from_string(str(par))
    assert new_par.family == 'alpha_eps'
    assert new_par.a == 9
    assert new_par.eps == 0.001
    assert new_par.duplicate() == new_par


def test_region():
    """Test Region."""
    region = Region(-0.2, 0.2, -0.1, 0.3)
    assert region.bounds == (-0.2, 0.2, -0.1, 0.3)
    assert region.width == pytest.approx(0.4)
    assert region.height == pytest.approx(0.4)
    assert region.contains((0, 0))
    assert not region.contains((0.3, 0))
    assert Region().bounds == (-0.5, 0.5, -0.5, 0.5)
    assert Region.from_bounds([-1, 1, -2, 2]) == Region(-1, 1, -2, 2)
    assert Region.from_string(str(region)) == region
    assert Region.from_dict(region.to_dict()) == region
    with pytest.raises(AssertionError):
        Region(0.1, 0.1, -0.1, 0.1)
    with pytest.raises(AssertionError):
        Region.from_bounds((0, 1, 0))


def test_solver_parameter():
    """Test SolverParameter."""
    solver = SolverParameter()
    assert solver.grid == 64
    assert solver.samples == 720
    assert solver.step is None
    assert solver.threads == 1
    assert solver.seed_grid == 3
    solver = SolverParameter(grid=32, step=0.01, threads=4)
    assert SolverParameter.from_dict(solver.to_dict()) == solver
    new_solver = SolverParameter.from_string(str(solver))
    assert new_solver.grid == 32
    assert new_solver.step == 0.01
    assert new_solver.threads == 4


def test_solver_parameter_invalid():
    """Test SolverParameter for invalid inputs."""
    with pytest.raises(AssertionError):
        SolverParameter(grid=8)
    with pytest.raises(AssertionError):
        SolverParameter(samples=4)
    with pytest.raises(AssertionError):
        SolverParameter(step=0)
    with pytest.raises(AssertionError):
        SolverParameter(threads=0)


def test_parse_config_text():
    """Test reading a TOML-style configuration text."""
    values = parse_config_text(CONFIG)
    assert values['command'] == 'portrait'
    assert values['family'] == 'alpha_eps'
    assert values['a'] == 0
    assert values['eps'] == 0.1
    assert values['region'] == [-0.2, 0.2, -0.2, 0.2]
    assert values['seed_grid'] == 2
    assert values['svg'] == 'alpha_eps.svg'
    with pytest.raises(AssertionError):
        parse_config_text('grid 64')


def test_run_config_from_file(tmp_path):
    """Test loading a RunConfig from a file."""
    path = tmp_path / 'figure.toml'
    path.write_text(CONFIG)
    config = RunConfig.from_file(str(path))
    assert config.command == 'portrait'
    assert config.family == FamilyParameter('alpha_eps', 0, 0.1)
    assert config.bounds == (-0.2, 0.2, -0.2, 0.2)
    assert config.solver.grid == 48
    assert config.solver.seed_grid == 2
    assert config.outputs == {'svg': 'alpha_eps.svg'}

    override = RunConfig.from_values({'eps': 0.05, 'grid': None}, config)
    assert override.family.eps == 0.05
    assert override.solver.grid == 48
    assert config.family.eps == 0.1


def test_run_config_values():
    """Test the defaults and the validation of a RunConfig."""
    config = RunConfig()
    assert config.command == 'analyze'
    assert config.region is None
    assert config.bounds == (-0.2, 0.2, -0.2, 0.2)
    assert config.scan_values()[0] == -10
    assert config.scan_values()[-1] == 10
    config = RunConfig.from_values({'a_start': 7.5, 'a_stop': 8, 'a_step': 0.5,
                                    'u_max': 0.1})
    assert config.scan_values() == [7.5, 8.0]
    assert config.bounds == (-0.2, 0.1, -0.2, 0.2)
    assert RunConfig.from_dict(config.to_dict()).to_dict() == config.to_dict()
    with pytest.raises(AssertionError):
        RunConfig.from_values({'colour': 'red'})
    with pytest.raises(AssertionError):
        RunConfig.from_values({'family': 'user'})
    with pytest.raises(AssertionError):
        RunConfig(command='plot')
    with pytest.raises(AssertionError):
        RunConfig(seeds=[(0, 0, 1)])
    with pytest.raises(AssertionError):
        RunConfig(scan={'a_step': 0})
