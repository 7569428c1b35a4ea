# coding utf-8
import math

import numpy as np
import pytest

from ladybug_axial.errors import BoundaryError
from ladybug_axial.quartic import axial_quartic
from ladybug_axial.umbilic import AxialField, SurfaceField, NormalFormField
from ladybug_axial.family import FamilyParams, FamilyField, field_from_family, \
    family_axial_coeffs, normalization, cross_validate, BifurcationCurves, \
    eps2_max, axiumbilic_heights, count_and_type, expected_census, \
    lie_cartan_topology, factor_coefficients

POINTS = [(0.1, 0.2), (0.3, -0.1), (-0.2, 0.25), (0.05, -0.3)]


def test_family_params():
    """Test the FamilyParams object."""
    params = FamilyParams(9, 0.001)
    assert params.a == 9.0
    assert params.eps == 0.001
    assert params == FamilyParams(9.0, 0.001)
    assert params != FamilyParams(9, -0.001)
    assert hash(params) == hash(FamilyParams(9.0, 0.001))
    assert params.surface().name == 'alpha_eps'
    assert FamilyParams(9).surface().name == 'alpha_a'
    assert params.to_dict() == {'type': 'FamilyParams', 'a': 9.0, 'eps': 0.001}


def test_family_axial_coeffs():
    """Test the closed forms of the family equation."""
    assert family_axial_coeffs((0, 0), 1, 1) == pytest.approx((32, 144))
    for u in (0.1, 0.5, -2):
        a0, a1 = family_axial_coeffs(FamilyParams(7.6, 0), u, 0)
        assert a0 == 0
        assert a1 == pytest.approx(-8 * u * u)
    assert family_axial_coeffs({'a': 0, 'eps': 0.1}, 0, 0)[1] == \
        pytest.approx(8e-4 - 0.08)


def test_family_field():
    """Test the FamilyField and its exact jacobian."""
    field = FamilyField(9, 0.001)
    assert field.orientation == -1
    assert field.name == 'alpha_eps'
    assert FamilyField(9).name == 'alpha_a'
    assert field.params == FamilyParams(9, 0.001)
    exact = field.jacobian(0.1, 0.2)
    numeric = AxialField.jacobian(field, 0.1, 0.2)
    assert exact.ravel().tolist() == pytest.approx(
        numeric.ravel().tolist(), rel=1e-6, abs=1e-8)
    forms = field.forms(0.5, 1)
    assert (forms.E, forms.F) == pytest.approx((2, 0.5))


def test_field_from_family():
    """Test getting the axial field of each family."""
    assert isinstance(field_from_family('alpha_a', a=2), FamilyField)
    assert isinstance(field_from_family('whitney'), SurfaceField)
    assert isinstance(field_from_family('normal_form', a=0.1, b=1), NormalFormField)
    user = field_from_family('user', expressions='u, u*v, v^2, v^3/3')
    assert isinstance(user, SurfaceField)
    with pytest.raises(AssertionError):
        field_from_family('user')
    with pytest.raises(ValueError):
        field_from_family('torus')


def test_cross_validate():
    """Test that the closed forms match the generic pipeline."""
    assert normalization(FamilyParams(2, 0), 0.1, 0.2) < 0
    for a in (0, 2, 7.6, 9):
        assert cross_validate(FamilyParams(a, 0), POINTS) < 1e-9


def test_bifurcation_curves():
    """Test the curves that carry the axiumbilic points."""
    curves = BifurcationCurves(0)
    assert curves.leading == (4, -4)
    assert curves.contact == 'opposite'
    assert BifurcationCurves(9).contact == 'same'
    assert BifurcationCurves(9).leading == (8.5, 0.5)
    assert BifurcationCurves(8).contact is None
    for branch in (1, 2):
        for v in (0.01, 0.05, 0.1):
            assert curves.residual(branch, v) == pytest.approx(0, abs=1e-12)
    assert curves.eps1(0.01) == pytest.approx(curves.series1(0.01), abs=1e-9)
    assert curves.eps2(0.01) == pytest.approx(curves.series2(0.01), abs=1e-9)
    assert curves.to_dict()['contact'] == 'opposite'


def test_factor_coefficients():
    """Test the branch factors of a1 on the v axis."""
    assert factor_coefficients(1, 0, 0.1) == pytest.approx((0, 15.6, -0.36))
    assert factor_coefficients(2, 0, 0.1) == pytest.approx((0, 16.4, 0.44))


def test_eps2_max():
    """Test the largest eps of the turning branch."""
    assert eps2_max(9) == pytest.approx(1 / 336)
    assert eps2_max(-9) == pytest.approx(1 / 336)
    assert eps2_max(8) is None
    assert eps2_max(0) is None


def test_axiumbilic_heights():
    """Test the heights of the axiumbilic points on the v axis."""
    heights = axiumbilic_heights(0, 0.1)
    assert heights[1] == pytest.approx([0.1519109], rel=1e-6)
    assert heights[2] == []
    assert expected_census(0, 0.1) == {1: 'E3'}


def test_turning_height():
    """Test the end of the arc of each curve joined to the origin."""
    curves = BifurcationCurves(9)
    turning = curves.turning_height(2)
    assert 0.11 < turning < 0.13
    assert eps2_max(9) < curves.eps2(turning) < 0.0036
    assert curves.eps2(turning) >= curves.eps2(turning - 1e-3)
    assert curves.eps2(turning) >= curves.eps2(turning + 1e-3)
    # the first curve grows up to the end of its domain
    end = BifurcationCurves(0).turning_height(1)
    assert end == pytest.approx(0.2679, abs=1e-3)


def test_axiumbilic_heights_local_arc():
    """Test that far roots and roots of the wrong sign are not local points."""
    assert axiumbilic_heights(9, -0.001, local=False)[2] == \
        pytest.approx([0.18502367], rel=1e-6)
    assert axiumbilic_heights(9, -0.001) == {1: [], 2: []}
    assert axiumbilic_heights(-9, 0.001) == {1: [], 2: []}
    heights = axiumbilic_heights(9, 0.001)
    assert len(heights[1]) == 1 and len(heights[2]) == 1
    assert heights[2][0] < BifurcationCurves(9).turning_height(2)
    assert count_and_type((7, 0.001)).count == 2
    assert count_and_type((-7, -0.001)).count == 2
    assert count_and_type((-9, 0.001)).count == 0
    assert count_and_type((-9, -0.001)).count == 4


def test_count_and_type():
    """Test the local census of the deformed family."""
    census = count_and_type(FamilyParams(0, 0.1))
    assert census.count == 2
    assert census.types == ['E3', 'E3']
    assert census.index_sum == 0.5
    positions = [r.position for r in census.records]
    assert positions[0] == pytest.approx((0, -0.1519109), rel=1e-6)
    assert positions[1] == pytest.approx((0, 0.1519109), rel=1e-6)
    assert all(r.branch == 'eps1' for r in census.records)

    census = count_and_type((9, 0.001))
    assert census.count == 4
    assert census.types == ['E3', 'E3', 'E5', 'E5']
    assert census.index_sum == 0

    assert count_and_type((9, -0.001)).count == 0
    census = count_and_type((7.8, -0.001))
    assert census.types == ['E4', 'E4']
    assert census.to_dict()['count'] == 2


def test_count_and_type_det():
    """Test the transversality of the points for a small deformation."""
    census = count_and_type(FamilyParams(0, 0.01))
    z = 0.01 * 0.99 / 3.99
    for record in census.records:
        assert record.det == pytest.approx(4096 * z * z, rel=0.1)


def test_count_and_type_boundary():
    """Test that the regime boundaries raise BoundaryError."""
    for params in ((0, 0), (0, 0.3), (8.0, 0.01), (7.5005, 0.01), (-8, 0.01)):
        with pytest.raises(BoundaryError):
            count_and_type(params)


def test_lie_cartan_topology():
    """Test the topology of the Lie-Cartan surface."""
    assert lie_cartan_topology(0) == 'TwoCylinders'
    assert lie_cartan_topology(9) == 'FourDisks'
    with pytest.raises(BoundaryError):
        lie_cartan_topology(8.0005)


def test_lie_cartan_topology_refinement(monkeypatch):
    """Test that the topology must agree at both loop resolutions."""
    import ladybug_axial.family as family

    def rotations(field, center, radius, samples):
        turn = math.pi if samples == 720 else 0.0
        return [turn] * 4

    monkeypatch.setattr(family, 'loop_rotations', rotations)
    with pytest.raises(BoundaryError):
        lie_cartan_topology(0)
    monkeypatch.setattr(family, 'loop_rotations',
                        lambda field, center, radius, samples: [math.pi] * 4)
    assert lie_cartan_topology(0) == 'TwoCylinders'


def test_cross_validate_random_points():
    """Test the closed forms against the generic pipeline at random points."""
    rng = np.random.default_rng(5)
    points = [tuple(p) for p in rng.uniform(0, 0.5, size=(1000, 2))]
    for a in (0, 2, 7, 9):
        params = FamilyParams(a, 0)
        assert cross_validate(params, points) < 1e-9
        field, surface = FamilyField(a, 0), params.surface()
        for u, v in points[:100]:
            assert normalization(params, u, v) < 0
            closed = field.roots(u, v)
            generic = axial_quartic(surface, u, v).directions().angles
            assert list(closed) == pytest.approx(list(generic), abs=1e-8)
