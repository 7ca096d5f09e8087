"""Witness-producing versions of the interior arguments for convex sets.

Each operation re-checks its hypotheses against the body, then returns the
explicit point and a certified radius.  Certificates are verified before
they are handed back, so a returned witness is always usable.
"""
from dataclasses import dataclass, field

import numpy as np

from .bodies import ANALYTIC_TOL, BallCertificate, SandwichSet
from .errors import OutOfBall, PreconditionFailed
from .linalg import as_vector

VERIFY_ATOL = 1e-9
SAMPLE_SHRINK = 1e-6

__all__ = [
    "BallCertificate",
    "SegmentWitness",
    "ball_transport",
    "closure_interior_witness",
    "density_witness",
    "segment_interior",
    "segment_interior_ball",
    "verify_certificate",
]


@dataclass(frozen=True)
class SegmentWitness:
    """A point ``z = (1 - lam) x + lam y`` together with a ball certificate around it."""

    z: np.ndarray
    lam: float
    certificate: BallCertificate
    tol: float = ANALYTIC_TOL
    details: dict = field(default_factory=dict, compare=False)

    @property
    def radius(self):
        return self.certificate.radius

    def to_dict(self):
        out = {"z": self.z.tolist(), "lambda": self.lam, "radius": self.radius, "tol": self.tol}
        out.update({k: (v.tolist() if isinstance(v, np.ndarray) else v)
                    for k, v in self.details.items()})
        return out


def _ball_points(center, radius, count, rng):
    d = center.size
    g = rng.standard_normal((count, d))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    r = radius * rng.random(count) ** (1.0 / d)
    # a quarter of the samples sit on the sphere itself, where violations show first
    r[: count // 4] = radius
    return center + g * r[:, None]


def verify_certificate(cert, method="auto", rng=None, samples=1000):
    """Independently check that ``B(cert.center, cert.radius)`` lies in ``cert.body``.

    ``"margin"`` compares the analytic interior margin of the center with
    the radius (to 1e-9).  ``"sample"`` draws ``samples`` points of the ball
    shrunk by a relative 1e-6 and requires every one to be within 1e-9 of
    the body.  ``"auto"`` uses the margin whenever the body has one.
    """
    body = cert.body
    if body is None:
        raise ValueError("certificate is not attached to a body")
    if isinstance(body, SandwichSet):
        body = body.inner
        method = "sample"
    if method == "auto":
        method = "margin"
    if method == "margin":
        return bool(body.interior_margin(cert.center) >= cert.radius - VERIFY_ATOL)
    if method == "sample":
        rng = np.random.default_rng(0) if rng is None else rng
        P = _ball_points(cert.center, cert.radius * (1 - SAMPLE_SHRINK), samples, rng)
        return bool(np.all(body.distances(P) <= VERIFY_ATOL))
    raise ValueError(f"unknown verification method {method!r}")


def _certify(body, center, radius):
    cert = BallCertificate(center, radius, body)
    if not verify_certificate(cert):
        raise RuntimeError(
            f"produced certificate failed verification: margin "
            f"{body.interior_margin(center):.3e} < radius {radius:.3e}")
    return cert


def _require_ball_inside(K, x, r, tol):
    if not r > 0:
        raise PreconditionFailed("radius", f"r must be positive, got {r}")
    m = K.interior_margin(x)
    if m < r - tol:
        raise PreconditionFailed("B(x, r) inside K", f"interior margin {m:.6g} < r = {r:.6g}")


def _require_in_closure(K, y, tol, name="y in closure(K)"):
    d = K.distance(y, tol)
    if d > tol:
        raise PreconditionFailed(name, f"distance {d:.6g} exceeds tol {tol:g}")
    return d


def ball_transport(x, y, lam, r, zeta):
    """Split a point of ``B(z, r)`` into points of ``B(x, r)`` and ``B(y, r)``.

    With ``z = (1 - lam) x + lam y`` and ``zeta`` in ``B(z, r)``, returns
    ``xi = x + zeta - z`` and ``eta = y + zeta - z``; then
    ``(1 - lam) xi + lam eta = zeta``.
    """
    x, y, zeta = as_vector(x), as_vector(y, dim=len(x)), as_vector(zeta, dim=len(x))
    if not 0 <= lam <= 1:
        raise ValueError(f"lambda must lie in [0, 1], got {lam}")
    z = (1 - lam) * x + lam * y
    offset = zeta - z
    if not np.linalg.norm(offset) < r:
        raise OutOfBall(f"|zeta - z| = {np.linalg.norm(offset):.6g} is not below r = {r}")
    return x + offset, y + offset


def segment_interior_ball(K, x, r, y, lam, tol=ANALYTIC_TOL):
    """Ball of radius ``(1 - lam)^2 r`` around ``z = (1 - lam) x + lam y`` inside ``K``.

    Needs ``B(x, r)`` inside ``K``, ``0 < lam < 1``, ``y != x`` and
    ``B(y, (1 - lam) r)`` meeting ``K``.
    """
    x = as_vector(x, dim=K.dim)
    y = as_vector(y, dim=K.dim)
    _require_ball_inside(K, x, r, tol)
    if not 0 < lam < 1:
        raise PreconditionFailed("0 < lambda < 1", f"got {lam}")
    if not np.linalg.norm(x - y) > tol:
        raise PreconditionFailed("x != y", "points coincide within tol")
    reach = (1 - lam) * r
    d = K.distance(y, tol)
    if not d < reach:
        raise PreconditionFailed("B(y, (1-lambda) r) meets K",
                                 f"distance {d:.6g} is not below {reach:.6g}")
    z = (1 - lam) * x + lam * y
    cert = _certify(K, z, (1 - lam) ** 2 * r)
    return SegmentWitness(z, float(lam), cert, tol, {"branch": "ball", "distance_y": d})


def density_witness(K, x0, r, y, eps, tol=ANALYTIC_TOL):
    """An interior point within ``eps / 2`` of a point ``y`` of the closure.

    If ``|x0 - y| < r`` then ``y`` is itself interior with radius
    ``r - |x0 - y|``.  Otherwise ``lam = 1 - eps / (2 |x0 - y|)`` and
    ``z = (1 - lam) x0 + lam y`` is at distance exactly ``eps / 2`` from
    ``y`` with ``B(z, (1 - lam) r)`` inside ``K``.
    """
    x0 = as_vector(x0, dim=K.dim)
    y = as_vector(y, dim=K.dim)
    _require_ball_inside(K, x0, r, tol)
    _require_in_closure(K, y, tol)
    gap = float(np.linalg.norm(x0 - y))
    if gap < r:
        cert = _certify(K, y, r - gap)
        return SegmentWitness(y, 1.0, cert, tol, {"branch": "near"})
    if not 0 < eps < 2 * gap:
        raise PreconditionFailed("0 < eps < 2|x0 - y|", f"eps = {eps}, |x0 - y| = {gap}")
    step = eps / (2 * gap)
    z = y + step * (x0 - y)
    cert = _certify(K, z, step * r)
    return SegmentWitness(z, 1.0 - step, cert, tol, {"branch": "segment"})


def segment_interior(K, x, r, y, lam, tol=ANALYTIC_TOL, near_branch=True):
    """Interior certificate for a point of the half-open segment ``[x, y)``.

    ``B(x, r)`` inside ``K`` and ``y`` in the closure of ``K``.  Points within
    ``r`` of ``x`` get radius ``r - |z - x|`` (skipped when
    ``near_branch=False``).  Otherwise an interior point near ``y`` is
    produced with :func:`density_witness` and :func:`segment_interior_ball`
    gives radius ``(1 - lam)^2 r``, shrunk by the factor ``(1 - tol)``.
    """
    x = as_vector(x, dim=K.dim)
    y = as_vector(y, dim=K.dim)
    _require_ball_inside(K, x, r, tol)
    dy = _require_in_closure(K, y, tol)
    if not 0 <= lam < 1:
        raise PreconditionFailed("0 <= lambda < 1", f"got {lam}")
    z = (1 - lam) * x + lam * y
    near = float(np.linalg.norm(z - x))
    if lam == 0 or (near_branch and near < r):
        cert = _certify(K, z, r - near if near_branch else r)
        return SegmentWitness(z, float(lam), cert, tol, {"branch": "near"})
    reach = (1 - lam) * r
    helper = density_witness(K, x, r, y, reach, tol)
    ball = segment_interior_ball(K, x, r, y, lam, tol)
    cert = _certify(K, ball.z, (1 - lam) ** 2 * r * (1 - tol))
    return SegmentWitness(ball.z, float(lam), cert, tol, {
        "branch": "segment",
        "interior_point_near_y": helper.z,
        "distance_y": dy,
    })


def closure_interior_witness(K, x0, r, y, s, tol=ANALYTIC_TOL, rng=None, samples=1000):
    """Certify that a point ``y`` of the closure's interior is interior to ``K``.

    Needs ``B(x0, r)`` inside ``K`` and the closed ball ``B(y, s)`` inside the
    closure (checked on ``samples`` points).  Pushes past ``y`` to
    ``z = (1 - alpha) x0 + alpha y`` with ``alpha = 1 + s / |y - x0|``, so
    ``|z - y| = s``, and certifies ``y`` as the point at ``lam = 1 / alpha``
    of the segment ``[x0, z)``.
    """
    x0 = as_vector(x0, dim=K.dim)
    y = as_vector(y, dim=K.dim)
    _require_ball_inside(K, x0, r, tol)
    gap = float(np.linalg.norm(y - x0))
    if not gap > tol:
        raise PreconditionFailed("y != x0", f"|y - x0| = {gap:.3g} is within tol")
    if not s > 0:
        raise PreconditionFailed("s > 0", f"got {s}")
    rng = np.random.default_rng(0) if rng is None else rng
    P = _ball_points(y, s * (1 - SAMPLE_SHRINK), samples, rng)
    d = K.distances(P)
    if np.any(d > tol):
        worst = P[int(np.argmax(d))]
        raise PreconditionFailed("closed B(y, s) inside closure(K)",
                                 f"sample {worst.tolist()} is {d.max():.3g} from K")
    alpha = 1 + s / gap
    z = (1 - alpha) * x0 + alpha * y
    if abs(np.linalg.norm(z - y) - s) > 1e-9:
        raise RuntimeError("far point is not at distance s from y")
    w = segment_interior(K, x0, r, z, 1 / alpha, tol, near_branch=False)
    return SegmentWitness(y, 1 / alpha, _certify(K, y, w.radius), tol, {
        "branch": "closure",
        "alpha": alpha,
        "far_point": z,
        "segment_point": w.z,
    })

