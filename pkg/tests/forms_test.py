# coding utf-8
import math

import numpy as np
import pytest

from ladybug_axial.errors import CriticalPointError
from ladybug_axial.surface import alpha_a
from ladybug_axial.forms import FirstForm, first_form, normal_frame, wedge, \
    second_form_scaled, ellipse_of_curvature, normal_curvature_vector, deviation


def test_first_form():
    """Test the first fundamental form of alpha_a."""
    forms = first_form(alpha_a(2).jet(1, 1))
    assert forms.E == pytest.approx(2)
    assert forms.F == pytest.approx(1)
    assert forms.G == pytest.approx(6)
    assert forms.D == pytest.approx(11)
    assert not forms.is_critical()
    assert forms.length_squared(1, 0) == pytest.approx(2)

    origin = first_form(alpha_a(2).jet(0, 0))
    assert (origin.E, origin.F, origin.G, origin.D) == (1, 0, 0, 0)
    assert origin.is_critical()
    with pytest.raises(CriticalPointError):
        origin.orthonormal_basis()


def test_orthonormal_basis():
    """Test that the basis of a first form is orthonormal for that form."""
    forms = FirstForm(2, 1, 6)
    b1, b2 = forms.orthonormal_basis()
    metric = np.array([[2, 1], [1, 6]])
    assert b1.dot(metric).dot(b1) == pytest.approx(1)
    assert b2.dot(metric).dot(b2) == pytest.approx(1)
    assert b1.dot(metric).dot(b2) == pytest.approx(0, abs=1e-12)


def test_wedge():
    """Test that the triple product is orthogonal to its factors."""
    a, b, c = [1, 2, 0, 1], [0, 1, 3, -1], [2, 0, 1, 1]
    w = wedge(a, b, c)
    for vec in (a, b, c):
        assert np.dot(w, vec) == pytest.approx(0, abs=1e-12)
    assert list(wedge([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0])) == \
        pytest.approx([0, 0, 0, -1])


def test_normal_frame():
    """Test the normal frame of alpha_a at a regular point."""
    frame = normal_frame(alpha_a(2).jet(1, 0))
    assert list(frame.N1) == pytest.approx([0, 0, -2, 0])
    assert list(frame.N2) == pytest.approx([0, 0, 0, 2])
    assert frame.whitney_ok
    assert frame.orientation == -1

    jet = alpha_a(2).jet(1, 1)
    frame = normal_frame(jet)
    forms = first_form(jet)
    assert list(frame.N1) == pytest.approx([-6, 6, -2, -2])
    assert frame.n2_norm ** 2 == pytest.approx(forms.D * frame.n1_norm ** 2)
    assert frame.orientation == -1
    for normal in (frame.N1, frame.N2):
        assert normal.dot(jet.d_u) == pytest.approx(0, abs=1e-12)
        assert normal.dot(jet.d_v) == pytest.approx(0, abs=1e-12)


def test_normal_frame_critical_point():
    """Test that the frame vanishes but the Whitney condition holds at 0."""
    frame = normal_frame(alpha_a(0).jet(0, 0))
    assert frame.whitney_ok
    assert frame.n1_norm == 0
    assert frame.n2_norm == 0
    assert frame.orientation == 0
    with pytest.raises(CriticalPointError):
        frame.unit_normals()


def test_second_form_scaled():
    """Test the scaled second form coefficients."""
    jet = alpha_a(2).jet(1, 1)
    sff = second_form_scaled(jet, normal_frame(jet))
    e1, f1, g1, e2, f2, g2 = sff.scaled
    assert e1 == pytest.approx(0, abs=1e-12)
    assert f1 == pytest.approx(6)
    assert g1 == pytest.approx(-8)
    assert e2 == pytest.approx(0, abs=1e-12)
    assert f2 == pytest.approx(2)
    assert sff.is_normalized
    assert sff.normalized[1] == pytest.approx(6 / math.sqrt(80))

    origin = alpha_a(2).jet(0, 0)
    sff = second_form_scaled(origin, normal_frame(origin))
    assert sff.scaled == (0, 0, 0, 0, 0, 0)
    assert sff.normalized is None
    assert 'normalized' not in sff.to_dict()


def test_ellipse_of_curvature():
    """Test the ellipse of curvature against the normal curvature vectors."""
    jet = alpha_a(2).jet(1, 1)
    frame, forms = normal_frame(jet), first_form(jet)
    ellipse = ellipse_of_curvature(jet, frame, forms)
    major, minor = ellipse.semi_axes
    assert major >= minor >= 0
    assert ellipse.kind in ('ellipse', 'circle', 'segment', 'point')
    b1, b2 = forms.orthonormal_basis()
    for angle in (0, 0.3, 1.1, 2.5):
        direction = math.cos(angle) * b1 + math.sin(angle) * b2
        k_n = normal_curvature_vector(jet, frame, forms, direction)
        assert list(ellipse.normal_curvature(angle)) == pytest.approx(list(k_n))
        offset = np.linalg.norm(k_n - ellipse.center)
        assert minor - 1e-9 <= offset <= major + 1e-9


def test_deviation():
    """Test that the deviation stays between the squared semi-axes."""
    jet = alpha_a(7.6).jet(0.3, -0.2)
    frame, forms = normal_frame(jet), first_form(jet)
    ellipse = ellipse_of_curvature(jet, frame, forms)
    major, minor = ellipse.semi_axes
    for angle in np.linspace(0, math.pi, 7):
        value = deviation(jet, frame, forms, angle, ellipse)
        assert minor ** 2 - 1e-9 <= value <= major ** 2 + 1e-9


def test_ellipse_critical_point():
    """Test that the ellipse is undefined at a critical point."""
    jet = alpha_a(0).jet(0, 0)
    with pytest.raises(CriticalPointError):
        ellipse_of_curvature(jet, normal_frame(jet), first_form(jet))
