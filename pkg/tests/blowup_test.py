# coding utf-8
import math

import pytest

from ladybug_axial.errors import NonHyperbolicError
from ladybug_axial.blowup import BlowupField, DirectionalPullback, \
    classify_singularity, find_singularities, resolution_portrait, saddle_germ, \
    pushforward_weighted


def test_blowup_field_on_circle():
    """Test the resolved field on the exceptional circle."""
    for a in (0, 7.6, 9):
        field = BlowupField(a)
        assert field.Q(0) == pytest.approx(a * a - 64)
        theta = 0.7
        c, s = math.cos(theta), math.sin(theta)
        expected = 2 * c * s * (4 * s ** 4 + (20 - a * a) * c ** 4 * s ** 2 +
                                (a * a - 56) * c ** 8)
        assert field.P(theta) == pytest.approx(expected)
        assert field.vector(theta, 0) == (field.P(theta), 0)


def test_consistency_residual():
    """Test that the exact field matches the numeric pullback."""
    field = BlowupField(9)
    residual = field.consistency_residual()
    assert set(residual) == {'printed', 'numeric'}
    assert residual['numeric'] < 1e-6
    assert pushforward_weighted(2).a == 2
    with pytest.raises(AssertionError):
        field.pullback_coefficients(0.3, 0)


def test_classify_singularity():
    """Test the singular points at theta = 0 and theta = pi/2."""
    field = BlowupField(9)
    top = classify_singularity(field, math.pi / 2)
    assert top.jacobian == pytest.approx(64)
    assert top.t == math.inf
    assert top.type == 'node'
    origin = classify_singularity(field, 0)
    assert origin.jacobian == pytest.approx(-850)
    assert origin.type == 'saddle'
    assert origin.closed_form_jacobian == pytest.approx(origin.jacobian, rel=1e-8)
    assert origin.to_dict()['singularity_type'] == 'saddle'
    with pytest.raises(NonHyperbolicError):
        classify_singularity(BlowupField(8), 0)


def test_find_singularities():
    """Test the number of singular points around the exceptional circle."""
    for a, count in ((0, 8), (7.6, 12), (9, 12)):
        field = BlowupField(a)
        exact = find_singularities(field)
        assert len(exact) == count
        numeric = find_singularities(field, exact=False)
        assert [s.theta for s in numeric] == \
            pytest.approx([s.theta for s in exact], abs=1e-6)
    thetas = [s.theta for s in exact]
    assert thetas == sorted(thetas)


def test_resolution_portrait():
    """Test the saddle and node counts of the three regimes."""
    expected = {0: (6, 2, 3, 'inner'), 7.6: (8, 4, 4, 'middle'),
                9: (10, 2, 5, 'outer')}
    for a, (saddles, nodes, half, regime) in expected.items():
        portrait = resolution_portrait(a)
        assert len(portrait.saddles) == saddles
        assert len(portrait.nodes) == nodes
        assert portrait.saddles_per_half == half
        assert portrait.regime == regime
        assert len(portrait.germs()) == saddles
        assert len(portrait.sequence) == saddles + nodes
        assert portrait.to_dict()['regime'] == regime


def test_resolution_portrait_bifurcation():
    """Test that the bifurcation values raise NonHyperbolicError."""
    with pytest.raises(NonHyperbolicError):
        resolution_portrait(math.sqrt(56))
    with pytest.raises(NonHyperbolicError):
        resolution_portrait(8.0005)
    with pytest.raises(NonHyperbolicError):
        resolution_portrait(-8)


def test_saddle_germ():
    """Test the blown-down directions of the saddle separatrices."""
    assert list(saddle_germ(0)) == pytest.approx([0, 1])
    du, dv = saddle_germ(math.pi / 2, 0.01)
    assert (du, dv) == pytest.approx((1, 0), abs=1e-12)
    du, dv = saddle_germ(0.5, 0.01)
    assert du * du + dv * dv == pytest.approx(1)


def test_directional_pullback():
    """Test the leading terms of the directional blow-up."""
    pullback = DirectionalPullback(0)
    assert pullback.a == 0
    assert pullback.leading_terms(1.0)[0] == pytest.approx(-8, rel=1e-3)
    assert pullback.leading_ratio(1.0) == pytest.approx(48, rel=1e-3)
    assert DirectionalPullback(2).leading_ratio(0.5) == \
        pytest.approx(0.125 * 1.5 * 20, rel=1e-3)
    assert len(pullback.expressions) == 5
    with pytest.raises(AssertionError):
        pullback.leading_terms(1.0, u=0)
