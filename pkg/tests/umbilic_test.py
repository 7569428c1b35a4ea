# coding utf-8
import pytest

from ladybug_axial.errors import NonTransversalError
from ladybug_axial.surface import alpha_a
from ladybug_axial.umbilic import AxialField, SurfaceField, NormalFormField, \
    SeparatrixRay, AxiumbilicRecord, field_for, discriminant, normal_form_type, \
    find_axiumbilics, region_bounds, transversality, classify_point, \
    loop_rotations, index, INDEX_STEP


def test_surface_field():
    """Test the axial field of a surface map."""
    field = field_for(alpha_a(2))
    assert isinstance(field, SurfaceField)
    assert field.name == 'alpha_a'
    assert field.orientation == 1
    assert field_for(field) is field
    assert field.is_critical(0, 0)
    assert not field.is_critical(1, 1)
    assert list(field.beta(0, 0)) == [0, 0]
    with pytest.raises(ValueError):
        field_for(3)
    with pytest.raises(AssertionError):
        AxialField('bad', orientation=2)


def test_normal_form_field():
    """Test the axial field of the normal form."""
    field = NormalFormField(0.1, 0.5)
    assert (field.a, field.b) == (0.1, 0.5)
    assert list(field.beta(2, 3)) == pytest.approx([3, 1.7])
    assert field.jacobian(0, 0).tolist() == [[0, 1], [0.1, 0.5]]
    assert transversality((0, 0), field) == pytest.approx(-0.1)
    assert field.directions(0, 1).count == 4


def test_discriminant():
    """Test the invariants of the normal form."""
    disc = discriminant(0.1, 0)
    assert disc.I == pytest.approx(4.2008333, rel=1e-6)
    assert disc.J == pytest.approx(-0.0674954, rel=1e-5)
    assert disc.delta == pytest.approx(89.55, rel=1e-3)
    assert disc.predicted_type == 'E5'
    assert discriminant(-1, 0).delta == 0
    assert discriminant(-1, 0).predicted_type == 'unresolved'
    with pytest.raises(NonTransversalError):
        discriminant(0, 1)


def test_normal_form_type():
    """Test that the type of the normal form matches its discriminant."""
    assert normal_form_type(0.1, 0) == 'E5'
    assert normal_form_type(-0.5, 0) == 'E4'
    assert normal_form_type(-2, 0) == 'E3'
    for a in (0.1, -0.5, -2):
        assert discriminant(a, 0).predicted_type == normal_form_type(a, 0)


def test_axiumbilic_record():
    """Test the AxiumbilicRecord and its index."""
    rays = [SeparatrixRay(0.5, 'principal', 'separatrix', -1),
            SeparatrixRay(0.5 + 3.14159, 'mean', 'separatrix', -1),
            SeparatrixRay(1.5, 'principal', 'parabolic', 2)]
    record = AxiumbilicRecord((0.1, 0.2), 3.5, 'E4', rays)
    assert record.index == INDEX_STEP
    assert record.separatrix_count() == 2
    assert record.separatrix_count('principal') == 1
    assert record.parabolic_count('principal') == 1
    assert record.parabolic_count('mean') == 0
    assert AxiumbilicRecord((0, 0), type='E3').index == 0.25
    assert AxiumbilicRecord((0, 0), type='E5').index == -0.25
    assert AxiumbilicRecord((0, 0)).index is None

    copied = record.duplicate(branch='eps1', residual=1e-12)
    assert copied.branch == 'eps1'
    assert copied.type == 'E4'
    assert copied.position == (0.1, 0.2)
    rec_dict = copied.to_dict()
    assert rec_dict['umbilic_type'] == 'E4'
    assert rec_dict['index'] == 0.25
    assert len(rec_dict['separatrices']) == 3
    with pytest.raises(AssertionError):
        AxiumbilicRecord((0, 0), type='E6')


def test_find_axiumbilics_normal_form():
    """Test locating and classifying the origin of a normal form."""
    search = find_axiumbilics(NormalFormField(0.1, 0), (-1, 1, -1, 1), grid=16)
    assert len(search) == 1
    record = search[0]
    assert record.position == pytest.approx((0, 0), abs=1e-9)
    assert record.type == 'E5'
    assert record.index == -0.25
    assert record.det == pytest.approx(-0.1)
    assert search.critical_points == ()
    assert [r.type for r in search] == ['E5']


def test_find_axiumbilics_errors():
    """Test the validation of the search inputs."""
    with pytest.raises(AssertionError):
        find_axiumbilics(NormalFormField(0.1, 0), (-1, 1, -1, 1), grid=8)
    with pytest.raises(AssertionError):
        region_bounds((0.1, 0.1, -1, 1))
    assert region_bounds([-1, 1, -2, 2]) == (-1, 1, -2, 2)


def test_separatrices_of_normal_forms():
    """Test the separatrix rays of the E3 and E5 normal forms."""
    e3 = classify_point(NormalFormField(-2, 0), (0, 0))
    assert e3.type == 'E3'
    assert e3.separatrix_count() == 6
    assert e3.parabolic_count() == 0
    e5 = classify_point(NormalFormField(0.1, 0), (0, 0))
    assert e5.type == 'E5'
    assert e5.separatrix_count() == 10
    assert e5.parabolic_count() == 0


def test_index_around_critical_point():
    """Test the index of alpha_a around its Whitney critical point."""
    assert index(alpha_a(0), (0, 0), 0.1) == 0.5
    assert index(alpha_a(7.6), (0, 0), 0.1) == 0.5
    assert index(alpha_a(10), (0, 0), 0.1) == 0


def test_index_around_regular_point():
    """Test that a loop with no singular point inside has index zero."""
    field = NormalFormField(0.1, 0)
    assert index(field, (2, 2), 0.5) == 0
    rotations = loop_rotations(field, (2, 2), 0.5, samples=360)
    assert len(rotations) == 4
    assert rotations == pytest.approx([0, 0, 0, 0], abs=1e-6)
    with pytest.raises(AssertionError):
        loop_rotations(alpha_a(0), (0, 0), 0)
    with pytest.raises(AssertionError):
        loop_rotations(alpha_a(0), (0, 0), 0.1, samples=8)


def test_index_of_normal_forms():
    """Test the index of the E3 and E5 normal forms."""
    assert index(NormalFormField(-2, 0), (0, 0), 0.5) == 0.25
    assert index(NormalFormField(0.1, 0), (0, 0), 0.5) == -0.25
