# coding utf-8
import numpy as np
import pytest

from ladybug_axial.errors import EvaluationError
from ladybug_axial.surface import PolynomialSurface, FunctionSurface, SurfaceJet, \
    alpha_a, alpha_eps, whitney, surface_from_family, surface_from_expressions, \
    parse_polynomial, evaluate_jet


def test_alpha_a_jet():
    """Test the exact jet of the alpha_a family."""
    surface = alpha_a(2)
    assert surface.name == 'alpha_a'
    assert surface.parameters == {'a': 2.0}
    assert surface.is_analytic

    jet = surface.jet(0, 0)
    assert list(jet.d_u) == [1, 0, 0, 0]
    assert list(jet.d_v) == [0, 0, 0, 0]
    assert list(jet.d_uv) == [0, 1, 0, 0]
    assert list(jet.d_vv) == [0, 0, 2, 0]

    jet = evaluate_jet(surface, (1, 1))
    assert jet.point == (1.0, 1.0)
    assert list(jet.value) == pytest.approx([1, 1, 1, 1 / 3])
    assert list(jet.d_v) == pytest.approx([0, 1, 2, 1])
    assert list(jet.d_vv) == pytest.approx([0, 0, 2, 2])


def test_alpha_eps_and_whitney():
    """Test the deformed family and the Whitney umbrella."""
    jet = alpha_eps(0, 0.1).jet(0, 0)
    assert list(jet.d_v) == pytest.approx([0, 0, 0, 0.1])
    jet = whitney().jet(0.5, 0.5)
    assert list(jet.value) == pytest.approx([0.5, 0.25, 0.25, 0])


def test_surface_from_family():
    """Test getting the built-in surfaces by name."""
    surface = surface_from_family('alpha_eps', a=9, eps=-0.001)
    assert surface.parameters == {'a': 9.0, 'eps': -0.001}
    assert surface_from_family('whitney', a=3).name == 'whitney'
    with pytest.raises(ValueError):
        surface_from_family('torus')


def test_parse_polynomial():
    """Test the safe polynomial parser."""
    expr = parse_polynomial('v^3/3 + 0.5*u')
    assert float(expr.subs({'u': 2, 'v': 3})) == pytest.approx(10)
    with pytest.raises(ValueError):
        parse_polynomial('sin(u)')
    with pytest.raises(ValueError):
        parse_polynomial('__import__("os")')
    with pytest.raises(ValueError):
        parse_polynomial('u/v')


def test_surface_from_expressions():
    """Test a user surface from a string of components."""
    surface = surface_from_expressions('u, u*v, v^2, v^3/3')
    assert isinstance(surface, PolynomialSurface)
    assert surface.name == 'user'
    assert list(surface.evaluate(1, 2)) == pytest.approx([1, 2, 4, 8 / 3])
    with pytest.raises(ValueError):
        surface_from_expressions('u, u*v, v^2')


def test_function_surface():
    """Test the finite difference jet of a surface given by a function."""
    surface = FunctionSurface(lambda u, v: (u, u * v, v * v, v ** 3 / 3))
    assert not surface.is_analytic
    jet = surface.jet(0.5, 0.25)
    exact = surface_from_expressions('u, u*v, v^2, v^3/3').jet(0.5, 0.25)
    for name in ('d_u', 'd_v', 'd_uu', 'd_uv', 'd_vv'):
        assert list(getattr(jet, name)) == \
            pytest.approx(list(getattr(exact, name)), abs=1e-6)


def test_jet_evaluation_errors():
    """Test that non-finite jets and points raise EvaluationError."""
    with pytest.raises(EvaluationError) as excinfo:
        SurfaceJet((0, 0), [0] * 4, [1, 0, 0, float('nan')], [0] * 4, [0] * 4,
                   [0] * 4, [0] * 4)
    assert excinfo.value.partial == 'd_u'
    with pytest.raises(EvaluationError):
        alpha_a(0).jet(float('inf'), 0)
    with pytest.raises(AssertionError):
        SurfaceJet((0, 0), [0] * 3, [0] * 4, [0] * 4, [0] * 4, [0] * 4, [0] * 4)


def test_finite_difference_jets_of_families():
    """Test finite difference jets against the exact jets at random points."""
    rng = np.random.default_rng(3)
    surfaces = (alpha_a(2), alpha_a(9), alpha_eps(2, 0.1), whitney(),
                surface_from_expressions('u, u*v, v^2, v^3/3 + u*v^2'))
    for surface in surfaces:
        for u, v in rng.uniform(-1, 1, size=(100, 2)):
            exact = surface.jet(u, v)
            approx = surface.finite_difference_jet(u, v, 1e-5)
            for name in ('d_u', 'd_v', 'd_uu', 'd_uv', 'd_vv'):
                gap = np.abs(getattr(approx, name) - getattr(exact, name)).max()
                assert gap / exact.scale < 1e-6
