# coding utf-8
import math

import numpy as np
import pytest
from numpy.polynomial.polynomial import polycompanion

from ladybug_axial.errors import CriticalPointError, SingularPointError
from ladybug_axial.surface import alpha_a, PolynomialSurface
from ladybug_axial.forms import FirstForm, first_form, normal_frame, deviation, \
    ellipse_of_curvature, second_form_scaled
from ladybug_axial.quartic import AxialQuartic, complete_coefficients, \
    binary_form_roots, transform_binary_form, quartic_regular, quartic_extended, \
    check_long_form, axial_quartic, surface_directions, normal_form_coefficients, \
    normal_form_field, principal_directions_r3


def _parts(surface, u, v):
    jet = surface.jet(u, v)
    frame = normal_frame(jet)
    return jet, first_form(jet), frame, second_form_scaled(jet, frame)


def test_complete_coefficients():
    """Test the linear relations in an orthonormal chart."""
    coeffs = complete_coefficients(1, 2, FirstForm(1, 0, 1))
    assert coeffs == pytest.approx((1, 2, -6, -2, 1))
    quartic = AxialQuartic(coeffs, FirstForm(1, 0, 1))
    assert quartic.relation_residual() == pytest.approx(0, abs=1e-15)
    with pytest.raises(CriticalPointError):
        complete_coefficients(1, 2, FirstForm(0, 0, 1))


def test_axial_quartic_init():
    """Test the initialization of AxialQuartic."""
    forms = FirstForm(2, 0, 1)
    quartic = AxialQuartic((1, 0, -3, 0, 0.25), forms, point=(0.1, 0.2))
    assert quartic.form == 'regular'
    assert quartic.point == (0.1, 0.2)
    assert quartic.polynomial_form() == pytest.approx((8, 0, -24, 0, 2))
    assert quartic.evaluate(1, 0) == 1
    assert quartic.evaluate(0, 1) == 0.25
    assert quartic.scaled(2).coefficients == (2, 0, -6, 0, 0.5)
    assert quartic.to_dict()['coefficients'] == [1, 0, -3, 0, 0.25]
    with pytest.raises(AssertionError):
        AxialQuartic((1, 0, 0, 0), forms)
    with pytest.raises(AssertionError):
        AxialQuartic((1, 0, 0, 0, 1), forms, 'cubic')


def test_binary_form_roots():
    """Test the real directions of binary forms."""
    angles = binary_form_roots((-1, 0, 0, 0, 1))
    assert angles == pytest.approx([math.pi / 4, 3 * math.pi / 4])
    angles = binary_form_roots((0, 1, 0, -1, 0))
    assert angles == pytest.approx([0, math.pi / 4, math.pi / 2, 3 * math.pi / 4])
    assert binary_form_roots((1, 0, 2, 0, 1)) == []
    with pytest.raises(SingularPointError):
        binary_form_roots((0, 0, 0, 0, 0))


def test_transform_binary_form():
    """Test that a rotation by 45 degrees moves the root directions."""
    c = math.sqrt(0.5)
    rotated = transform_binary_form((-1, 0, 0, 0, 1), [[c, -c], [c, c]])
    angles = binary_form_roots(rotated)
    assert angles == pytest.approx([0, math.pi / 2], abs=1e-9)


def test_normal_form():
    """Test the directions of the normal form."""
    assert normal_form_coefficients(2, 3, 0.5, 1) == (1, 4, -6, -4, 1)
    field = normal_form_field(1, 0)
    pair = field(0, 1).directions()
    degrees = [math.degrees(a) for a in pair.angles]
    assert degrees == pytest.approx([22.5, 67.5, 112.5, 157.5])
    assert pair.is_complete
    for crossing in (pair.principal, pair.mean):
        assert abs(crossing[1] - crossing[0]) == pytest.approx(math.pi / 2)

    pair = field(0.5, 0).directions()
    degrees = [math.degrees(a) for a in pair.angles]
    assert degrees == pytest.approx([0, 45, 90, 135], abs=1e-9)


def test_quartic_regular_and_extended():
    """Test that the extended quartic is the regular one times |N2|^2."""
    jet, forms, frame, sff = _parts(alpha_a(2), 1, 1)
    regular = quartic_regular(forms, sff, (1, 1))
    extended = quartic_extended(forms, sff, frame, (1, 1))
    assert regular.form == 'regular'
    assert extended.form == 'extended'
    factor = frame.n2_norm ** 2
    for r, e in zip(regular.coefficients, extended.coefficients):
        assert e == pytest.approx(r * factor, rel=1e-9, abs=1e-9)
    assert regular.relation_residual() < 1e-12
    assert extended.relation_residual() < 1e-12
    assert check_long_form(forms, sff) < 1e-9


def test_quartic_at_critical_point():
    """Test the quartics at the Whitney critical point."""
    jet, forms, frame, sff = _parts(alpha_a(9), 0, 0)
    with pytest.raises(CriticalPointError):
        quartic_regular(forms, sff)
    extended = quartic_extended(forms, sff, frame)
    assert extended.is_zero()
    with pytest.raises(SingularPointError):
        extended.directions()
    with pytest.raises(CriticalPointError):
        axial_quartic(alpha_a(9), 0, 0, extended=False)


def test_directions_along_v_zero():
    """Test the axial directions of alpha_a along v = 0."""
    for u in (0.5, -0.25):
        pair = axial_quartic(alpha_a(7.6), u, 0).directions()
        expected = sorted([0, math.pi / 2, math.atan(1 / u) % math.pi,
                           math.atan(-1 / u) % math.pi])
        assert list(pair.angles) == pytest.approx(expected, abs=1e-9)


def test_surface_directions():
    """Test that the crossings of a regular point are orthogonal pairs."""
    surface = alpha_a(7.6)
    pair = surface_directions(surface, 0.3, -0.2)
    assert pair.count == 4
    assert pair.is_complete
    assert pair.deviations[0] >= pair.deviations[1]
    forms = first_form(surface.jet(0.3, -0.2))
    for crossing in (pair.branch('principal'), pair.branch('mean')):
        d0 = (math.cos(crossing[0]), math.sin(crossing[0]))
        d1 = (math.cos(crossing[1]), math.sin(crossing[1]))
        inner = forms.E * d0[0] * d1[0] + forms.F * (d0[0] * d1[1] + d0[1] * d1[0]) \
            + forms.G * d0[1] * d1[1]
        assert inner == pytest.approx(0, abs=1e-8)
    with pytest.raises(AssertionError):
        pair.branch('gaussian')


def test_principal_directions_r3():
    """Test the principal directions of a surface inside a 3-space."""
    surface = PolynomialSurface(('u', 'v', 'u*v + u**3', '0'))
    jet = surface.jet(0, 0)
    assert principal_directions_r3(jet) == pytest.approx([math.pi / 4, 3 * math.pi / 4])


def _projective_gap(angle, reference):
    d = (angle - reference) % math.pi
    return min(d, math.pi - d)


def test_binary_form_roots_companion_matrix():
    """Test random quartics against the eigenvalues of their companion matrix."""
    rng = np.random.default_rng(7)
    for _ in range(10000):
        coeffs = rng.normal(size=5)
        eigen = np.linalg.eigvals(polycompanion(coeffs))
        expected = [math.atan(z.real) % math.pi for z in eigen
                    if abs(z.imag) <= 1e-8 * (1 + abs(z.real))]
        angles = binary_form_roots(coeffs)
        assert len(angles) == len(expected)
        for angle in expected:
            assert min(_projective_gap(angle, a) for a in angles) < 1e-8


def _golden(function, low, high, sign):
    ratio = (math.sqrt(5) - 1) / 2
    for _ in range(80):
        left = high - ratio * (high - low)
        right = low + ratio * (high - low)
        if sign * function(left) < sign * function(right):
            low = left
        else:
            high = right
    return (low + high) / 2


def test_directions_match_deviation_sweep():
    """Test that the crossings are the stationary directions of the deviation."""
    rng = np.random.default_rng(11)
    surface = alpha_a(2)
    samples = 720
    step = math.pi / samples
    checked = 0
    for u, v in rng.uniform(0.05, 0.5, size=(30, 2)):
        jet = surface.jet(u, v)
        frame, forms = normal_frame(jet), first_form(jet)
        ellipse = ellipse_of_curvature(jet, frame, forms)
        major, minor = ellipse.semi_axes
        if major - minor < 1e-2 * major:
            continue

        def dev(angle):
            return deviation(jet, frame, forms, angle, ellipse)

        values = [dev(k * step) for k in range(samples)]
        maxima, minima = [], []
        for k in range(samples):
            before, here, after = values[k - 1], values[k], values[(k + 1) % samples]
            if here > before and here >= after:
                maxima.append(_golden(dev, (k - 1) * step, (k + 1) * step, 1))
            elif here < before and here <= after:
                minima.append(_golden(dev, (k - 1) * step, (k + 1) * step, -1))
        assert len(maxima) == 2 and len(minima) == 2

        pair = surface_directions(surface, u, v)
        for found, crossing in ((maxima, pair.principal), (minima, pair.mean)):
            for angle in found:
                assert min(_projective_gap(angle, c) for c in crossing) < 1e-6
        assert math.sqrt(max(dev(a) for a in maxima)) == pytest.approx(major, abs=1e-8)
        assert math.sqrt(min(dev(a) for a in minima)) == pytest.approx(minor, abs=1e-8)
        checked += 1
    assert checked >= 20
