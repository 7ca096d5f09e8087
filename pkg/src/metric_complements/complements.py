"""Metric complements and double complements as certified predicates.

A point is in the metric complement ``-S`` when it is bounded away from
``S``; for a located set that means a positive distance.  For a located
convex body the double complement ``-(-S)`` coincides with the interior, so
it is decided here by the interior margin; the brute-force referee in
:mod:`metric_complements.lab` checks that reduction from the definition.
"""
import numpy as np

from .bodies import ANALYTIC_TOL, SandwichSet, verdict_from_margin
from .errors import DimensionMismatch


def metric_complement_witness(body, x, r):
    """Certified separation ``r' = distance - tol`` of ``x`` from ``body``, or ``None``.

    Uses ``tol = r / 10`` for the distance query and succeeds when the
    distance is at least ``r - r / 10``.
    """
    if not r > 0:
        raise ValueError(f"separation radius must be positive, got {r}")
    tol = r / 10
    d = body.distance(x, tol)
    if d >= r - tol:
        return d - tol
    return None


def in_metric_complement(body, x, r):
    """True when ``x`` is certified to be at distance about ``r`` or more from ``body``."""
    return metric_complement_witness(body, x, r) is not None


def double_complement_membership(body, x, tol=ANALYTIC_TOL):
    """Verdict on ``x`` in ``-(-body)``, decided by the sign of the interior margin.

    Sandwich sets are routed to :func:`sandwich_double_complement`.
    """
    if isinstance(body, SandwichSet):
        return sandwich_double_complement(body, x, tol)
    return verdict_from_margin(body.interior_margin(x), tol)


def sandwich_double_complement(s, x, tol=ANALYTIC_TOL, recheck=False):
    """Double complement of the unknown set bracketed by ``s``.

    No point of ``s.outer`` is provably outside ``K``, so ``-(-K)`` is the
    interior of ``s.outer`` and membership in ``K`` never has to be decided.
    With ``recheck=True`` the inner-within-outer contract is sampled again
    (raising ``ContractViolation``) before answering.
    """
    if recheck:
        s.check_contract()
    return verdict_from_margin(s.outer.interior_margin(x), tol)


def double_complement_verdicts(body, X, tol=ANALYTIC_TOL):
    """Vectorized :func:`double_complement_membership`: -1 outside, 0 undetermined, 1 inside."""
    if isinstance(body, SandwichSet):
        body = body.outer
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[1] != body.dim:
        raise DimensionMismatch(f"expected points of dimension {body.dim}")
    m = body.interior_margins(X)
    return np.where(m > tol, 1, np.where(m < -tol, -1, 0))
