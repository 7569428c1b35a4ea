# coding utf-8
import pytest

from ladybug_axial.errors import AxialError, EvaluationError, ClaimError, \
    CriticalPointError, BoundaryError


def test_error_hierarchy():
    """Test that every error can be caught as a ValueError."""
    for error in (AxialError, CriticalPointError, BoundaryError):
        with pytest.raises(ValueError):
            raise error('message')


def test_evaluation_error():
    """Test the attributes and message of EvaluationError."""
    error = EvaluationError('d_uv', [0.5, 1])
    assert error.partial == 'd_uv'
    assert error.point == (0.5, 1)
    assert str(error) == 'Non-finite value for partial "d_uv" at (u, v) = (0.5, 1).'


def test_claim_error():
    """Test the message of ClaimError with and without a sample."""
    assert str(ClaimError('p_from_P')) == 'Claim "p_from_P" failed'
    error = ClaimError('singularity_count', 9, 'expected 12 roots')
    assert error.claim_id == 'singularity_count'
    assert error.sample == 9
    assert str(error) == 'Claim "singularity_count" failed at a = 9: expected 12 roots'
