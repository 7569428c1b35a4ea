# coding=utf-8
"""Exceptions raised by the axial curvature computations.

All of them derive from ValueError so that callers written against the usual
ladybug convention of catching ValueError keep working.
"""


class AxialError(ValueError):
    """Base class for every computation error of this package."""


class EvaluationError(AxialError):
    """A surface jet could not be evaluated to finite values.

    Args:
        partial: Name of the offending partial derivative (eg. 'd_uv').
        point: The (u, v) point at which the evaluation failed.
    """

    def __init__(self, partial, point):
        self.partial = partial
        self.point = tuple(point)
        msg = 'Non-finite value for partial "{}" at (u, v) = {}.'.format(
            partial, self.point)
        AxialError.__init__(self, msg)


class CriticalPointError(AxialError):
    """The operation is undefined at a critical point of the map (EG - F^2 = 0)."""


class SingularPointError(AxialError):
    """All quartic coefficients vanish so the direction field is undefined."""


class NonTransversalError(AxialError):
    """The axiumbilic point (or normal form) is not transversal (det D-beta = 0)."""


class NonHyperbolicError(AxialError):
    """A singular point of the resolved field is not hyperbolic."""


class BoundaryError(AxialError):
    """A parameter lies inside the guard band of a regime boundary."""


class UndefinedIndexError(AxialError):
    """The winding of the axial configuration along a loop is not quantized."""


class ClaimError(AxialError):
    """An exact polynomial claim failed.

    Args:
        claim_id: Identifier of the claim that failed.
        sample: The parameter sample at which it failed (None for identities).
        detail: Text describing the mismatch.
    """

    def __init__(self, claim_id, sample=None, detail=''):
        self.claim_id = claim_id
        self.sample = sample
        self.detail = detail
        msg = 'Claim "{}" failed'.format(claim_id)
        if sample is not None:
            msg += ' at a = {}'.format(sample)
        if detail:
            msg += ': {}'.format(detail)
        AxialError.__init__(self, msg)
