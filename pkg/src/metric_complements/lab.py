"""Brute-force referee for metric complements and theorem campaigns.

The grid oracle samples a box, labels every grid point by its distance to
the body and then answers double-complement questions from the labels
alone: ``x`` is in the sampled ``-(-S)`` when no point labelled as part of
``-S`` comes within ``margin`` of it.  This is the definition of the double
complement read at grid resolution, with no appeal to interior margins, so
comparing it with :func:`~metric_complements.complements.double_complement_membership`
checks the reduction ``-(-K) = interior(K)`` rather than assuming it.
"""
import enum
import json
import time
import warnings
from dataclasses import asdict, dataclass, field
from math import sqrt

import numpy as np
from scipy.spatial import cKDTree

from .bodies import Ball, HPolytope, SandwichSet, VPolytope
from .complements import double_complement_verdicts
from .errors import EmptyComplementSample, GridTooLarge
from .linalg import as_points, as_vector
from .shapes import body_to_dict
from .simplex import is_simplex, perturbation_tolerance, regular_simplex, scaled_simplex

MAX_GRID_POINTS = 10_000_000
THEOREMS = ("located-interior", "double-complement-convex", "closure-interior", "degenerate-empty")


class Label(enum.IntEnum):
    NEITHER = 0
    IN_S = 1
    IN_MINUS_S = 2


@dataclass(eq=False)
class GridOracle:
    """Labelled sample grid over ``bbox``.

    ``IN_S`` points are within ``step / 10`` of the body and ``IN_MINUS_S``
    points are at least ``eps`` away; everything else is ``NEITHER``.
    """

    body: object
    bbox: tuple
    step: float
    eps: float
    points: np.ndarray
    labels: np.ndarray
    distances: np.ndarray
    _tree: object = field(default=None, repr=False)

    @property
    def dim(self):
        return self.points.shape[1]

    @property
    def resolution(self):
        """Diagonal of a grid cell, ``step * sqrt(dim)``."""
        return self.step * sqrt(self.dim)

    @property
    def complement_points(self):
        return self.points[self.labels == Label.IN_MINUS_S]

    def counts(self):
        return {lab.name: int(np.count_nonzero(self.labels == lab)) for lab in Label}

    def nearest_complement(self, X, method="kdtree"):
        """Distance from each row of ``X`` to the nearest ``IN_MINUS_S`` grid point.

        ``method="brute"`` scans every labelled point and exists to check
        the k-d tree path.
        """
        X = as_points(X, dim=self.dim)
        C = self.complement_points
        if len(C) == 0:
            return np.full(len(X), np.inf)
        if method == "brute":
            out = np.empty(len(X))
            rows = max(1, 4_000_000 // len(C))
            for i in range(0, len(X), rows):
                diff = X[i:i + rows, None, :] - C[None]
                out[i:i + rows] = np.sqrt(np.einsum("ncd,ncd->nc", diff, diff).min(axis=1))
            return out
        if self._tree is None:
            self._tree = cKDTree(C)
        return self._tree.query(X)[0]


def default_bbox(body, pad):
    lo, hi = body.bounding_box()
    return np.asarray(lo, float) - pad, np.asarray(hi, float) + pad


def build_grid_oracle(body, bbox=None, step=0.01, eps=0.02, pad=None):
    """Sample ``bbox`` at spacing ``step`` and label each point by its distance to ``body``.

    For a sandwich set the outer body is sampled.  Without ``bbox`` the
    body's bounding box is padded by ``pad`` (default ``max(0.25, 5 (eps + step))``).
    """
    if isinstance(body, SandwichSet):
        body = body.outer
    if not step > 0 or not eps > 0:
        raise ValueError("step and eps must be positive")
    if eps < 2 * step:
        warnings.warn(f"eps={eps} is below 2*step={2 * step}; the sampled complement "
                      "may leak into the boundary band", stacklevel=2)
    if bbox is None:
        bbox = default_bbox(body, max(0.25, 5 * (eps + step)) if pad is None else pad)
    lo = as_vector(bbox[0], dim=body.dim)
    hi = as_vector(bbox[1], dim=body.dim)
    if np.any(hi <= lo):
        raise ValueError("bbox upper corner must exceed lower corner")
    sizes = np.floor((hi - lo) / step + 1e-9).astype(int) + 1
    total = int(np.prod(sizes.astype(float)))
    if total > MAX_GRID_POINTS:
        raise GridTooLarge(f"{total} grid points exceed the cap of {MAX_GRID_POINTS}")
    axes = [lo[i] + step * np.arange(sizes[i]) for i in range(body.dim)]
    points = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, body.dim)
    dist = body.distances(points)
    labels = np.full(len(points), Label.NEITHER, dtype=np.int8)
    labels[dist <= step / 10] = Label.IN_S
    labels[dist >= eps] = Label.IN_MINUS_S
    return GridOracle(body, (lo, hi), float(step), float(eps), points, labels, dist)


def oracle_double_complements(g, X, margin, method="kdtree"):
    """Vectorized :func:`oracle_double_complement`."""
    X = as_points(X, dim=g.dim)
    lo, hi = g.bbox
    covered = np.all((X - margin >= lo - 1e-12) & (X + margin <= hi + 1e-12), axis=1)
    if not np.any(g.labels == Label.IN_MINUS_S):
        warnings.warn("no grid point lies in the metric complement; answers are vacuous "
                      "(the complement may be empty or the box too small)",
                      EmptyComplementSample, stacklevel=2)
        return covered
    # grid coordinates carry rounding error, so exact ties at the margin are kept
    return covered & (g.nearest_complement(X, method) >= margin - 1e-9 * g.step)


def oracle_double_complement(g, x, margin, method="kdtree"):
    """Is ``x`` at least ``margin`` away from every sampled point of ``-S``?

    Points whose ``margin``-ball leaves the sampled box cannot be certified
    and get ``False``.  With no sampled complement at all the answer is
    vacuously ``True`` and an :class:`EmptyComplementSample` warning is issued.
    """
    return bool(oracle_double_complements(g, as_vector(x, dim=g.dim)[None, :], margin, method)[0])


# --------------------------------------------------------------------------
# Random instances


def random_body(kind, dim, complexity=8, seed=0):
    """Reproducible random convex body that contains a ball of radius at least 0.05.

    ``hpolytope``: ``complexity`` half-spaces tangent to a random ellipsoid
    (semi-axes in [0.2, 0.8]) plus a bounding box around it.
    ``vpolytope``: ``complexity`` points in a ball, plus a small regular
    simplex around its center whose inradius is 0.1.
    ``ball``: center in ``[-1, 1]^dim``, radius in ``[0.1, 1]``.
    """
    rng = np.random.default_rng(seed)
    if kind == "ball":
        return Ball(rng.uniform(-1, 1, dim), rng.uniform(0.1, 1.0))
    if kind == "hpolytope":
        center = rng.uniform(-0.5, 0.5, dim)
        axes = rng.uniform(0.2, 0.8, dim)
        U = rng.standard_normal((complexity, dim))
        U /= np.linalg.norm(U, axis=1, keepdims=True)
        support = U @ center + np.linalg.norm(U * axes, axis=1)
        slack = rng.uniform(1.0, 1.3, dim) * axes
        eye = np.eye(dim)
        A = np.vstack([U, eye, -eye])
        b = np.concatenate([support, center + slack, -(center - slack)])
        return HPolytope(A, b)
    if kind == "vpolytope":
        center = rng.uniform(-0.5, 0.5, dim)
        radius = rng.uniform(0.3, 0.9)
        g = rng.standard_normal((complexity, dim))
        g /= np.linalg.norm(g, axis=1, keepdims=True)
        pts = center + g * (radius * rng.random(complexity) ** (1 / dim))[:, None]
        core = scaled_simplex(center, 0.1 * dim).vertices
        return VPolytope(np.vstack([pts, core]))
    raise ValueError(f"unknown body kind {kind!r}")


# --------------------------------------------------------------------------
# Theorem campaigns


@dataclass
class VerificationReport:
    theorem: str
    body: dict
    grid: dict
    samples: int
    seed: int
    evaluated: int
    excluded: int
    band: float
    agreement: float
    violations: list
    passed: bool
    notes: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_dict(self):
        return asdict(self)

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    def summary(self):
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{verdict} {self.theorem}: {self.body['type']} in R^{self.grid['dim']}, "
                f"agreement {self.agreement:.4%} on {self.evaluated} points "
                f"({self.excluded} in the {self.band:g} band), "
                f"{len(self.violations)} violation(s), {self.wall_time:.2f}s")


def _violation_list(X, rows, limit, **columns):
    out = []
    for i in rows[:limit]:
        item = {"point": X[i].tolist()}
        item.update({k: (v[i].item() if hasattr(v[i], "item") else v[i])
                     for k, v in columns.items()})
        out.append(item)
    return out


def _uniform(rng, bbox, count):
    lo, hi = bbox
    return rng.uniform(lo, hi, size=(count, len(lo)))


def verify_theorem(theorem, body, step=0.01, eps=0.02, samples=10_000, seed=0,
                   bbox=None, band=None, margin=None, max_violations=25):
    """Run one verification campaign and return a :class:`VerificationReport`.

    ``located-interior``
        Sampled double complement against the sign of the interior margin,
        ignoring points whose margin is within ``band`` (default ``2 step``)
        of zero.  Pass iff agreement is 100%.
    ``double-complement-convex``
        ``samples`` midpoint trials between points that pass the sampled
        double complement with one resolution to spare; the midpoint must pass.
    ``closure-interior``
        Open and closed versions of the body must give identical interior
        verdicts off the band.  Balls are compared directly (and through
        their grid oracles); for polytopes the open version is the interior
        and its verdict is certified with perturbed regular simplices whose
        vertices are interior points.
    ``degenerate-empty``
        For a body with empty interior no sample (uniform in the box or drawn
        from the body) may pass the sampled double complement, and the
        interior test may not say Inside.

    The oracle threshold ``margin`` defaults to ``eps + step sqrt(dim)``:
    at least ``eps + band`` separates interior points off the band from
    the sampled complement, while exterior points off the band have a
    sampled complement point within ``step sqrt(dim)``.  The degenerate
    campaign uses ``eps + 2 step``, which exceeds the worst-case
    ``eps + step sqrt(dim)`` of points on a flat body for ``dim <= 3``.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {THEOREMS}")
    started = time.perf_counter()
    rng = np.random.default_rng(seed)
    band = 2 * step if band is None else band
    target = body.outer if isinstance(body, SandwichSet) else body
    dim = target.dim
    if margin is None:
        margin = eps + (2 * step if theorem == "degenerate-empty" else step * sqrt(dim))

    g = build_grid_oracle(target, bbox, step, eps)
    grid_info = {"dim": dim, "step": step, "eps": eps, "margin": margin,
                 "bbox": [g.bbox[0].tolist(), g.bbox[1].tolist()], "points": len(g.points),
                 "counts": g.counts()}
    runner = {
        "located-interior": _located_interior,
        "double-complement-convex": _double_complement_convex,
        "closure-interior": _closure_interior,
        "degenerate-empty": _degenerate_empty,
    }[theorem]
    evaluated, excluded, agreement, violations, notes = runner(
        body, target, g, rng, samples, band, margin, max_violations)
    return VerificationReport(
        theorem=theorem, body=body_to_dict(body), grid=grid_info, samples=samples,
        seed=seed, evaluated=evaluated, excluded=excluded, band=band,
        agreement=agreement, violations=violations,
        passed=bool(evaluated > 0 and agreement == 1.0),
        notes=notes, wall_time=time.perf_counter() - started)


def _located_interior(body, target, g, rng, samples, band, margin, limit):
    X = _uniform(rng, g.bbox, samples)
    m = target.interior_margins(X)
    keep = np.abs(m) > band
    oracle = oracle_double_complements(g, X, margin)
    operational = double_complement_verdicts(body, X, tol=0.0) == 1
    bad = np.flatnonzero(keep & (oracle != operational))
    n = int(keep.sum())
    notes = {"inside": int(np.count_nonzero(keep & operational)),
             "outside": int(np.count_nonzero(keep & ~operational))}
    return n, samples - n, 1.0 - bad.size / max(n, 1), \
        _violation_list(X, bad, limit, margin=m, oracle=oracle), notes


def _double_complement_convex(body, target, g, rng, samples, band, margin, limit):
    strict = margin + g.resolution
    passing = []
    total = 0
    for _ in range(50):
        X = _uniform(rng, g.bbox, max(4 * samples, 1000))
        passing.append(X[oracle_double_complements(g, X, strict)])
        total += sum(len(p) for p in passing[-1:])
        if total >= 2 * min(samples, 1000):
            break
    P = np.vstack(passing)
    if len(P) < 2:
        return 0, 0, 0.0, [], {"passing_points": len(P)}
    i = rng.integers(len(P), size=samples)
    j = rng.integers(len(P), size=samples)
    mid = 0.5 * (P[i] + P[j])
    ok = oracle_double_complements(g, mid, margin)
    bad = np.flatnonzero(~ok)
    notes = {"passing_points": len(P), "endpoint_margin": strict}
    return samples, 0, 1.0 - bad.size / samples, _violation_list(mid, bad, limit), notes


_UNIT_DELTA = {}


def _unit_simplex_delta(n, rng):
    """Perturbation room of the unit regular simplex around its barycentre (scales with radius)."""
    if n not in _UNIT_DELTA:
        _UNIT_DELTA[n] = perturbation_tolerance(regular_simplex(n), np.zeros(n), rng)
    return _UNIT_DELTA[n]


def _open_polytope_certified(P, xi, m, rng):
    """Certify ``xi`` interior to the open polytope from a margin ``m`` of its closure.

    With ``r = m / 3``, points ``x`` of ``B(xi, r)`` are surrounded by a
    regular simplex of radius ``r``; its vertices are jittered by less than
    the perturbation room and must land in the open polytope, and ``x``
    must keep strictly positive barycentric weights.
    """
    n = P.dim
    r = m / 3
    delta = min(_unit_simplex_delta(n, rng) * r, 0.999 * r) * (1 - 1e-3)
    unit = regular_simplex(n).vertices
    offsets = rng.standard_normal((3, n))
    offsets *= (r * rng.random((3, 1)) ** (1 / n)) / np.linalg.norm(offsets, axis=1, keepdims=True)
    for x in np.vstack([xi, xi + offsets]):
        a = x + r * unit
        jitter = rng.standard_normal(a.shape)
        jitter *= delta * rng.random((len(a), 1)) / np.linalg.norm(jitter, axis=1, keepdims=True)
        verts = a + jitter
        if not np.all(P.interior_margins(verts) > 0) or not is_simplex(verts):
            return False
        M = np.vstack([verts.T, np.ones(n + 1)])
        if not np.all(np.linalg.solve(M, np.append(x, 1.0)) > 0):
            return False
    return True


def _closure_interior(body, target, g, rng, samples, band, margin, limit):
    X = _uniform(rng, g.bbox, samples)
    if isinstance(target, Ball):
        closed = Ball(target.center, target.radius, closed=True)
        opened = Ball(target.center, target.radius, closed=False)
        m = closed.interior_margins(X)
        keep = np.abs(m) > band
        v_closed = double_complement_verdicts(closed, X, tol=0.0) == 1
        v_open = double_complement_verdicts(opened, X, tol=0.0) == 1
        g_open = build_grid_oracle(opened, g.bbox, g.step, g.eps)
        same_labels = bool(np.array_equal(g.labels, g_open.labels))
        o_closed = oracle_double_complements(g, X, margin)
        o_open = oracle_double_complements(g_open, X, margin)
        bad = np.flatnonzero(keep & ((v_closed != v_open) | (o_closed != o_open)
                                     | (v_closed != o_closed)))
        if not same_labels:
            bad = np.arange(len(X))[keep]
        notes = {"route": "open vs closed ball", "grid_labels_identical": same_labels}
    else:
        m = target.interior_margins(X)
        keep = np.abs(m) > band
        v_closed = m > 0
        v_open = np.zeros(len(X), dtype=bool)
        for i in np.flatnonzero(keep & v_closed):
            v_open[i] = _open_polytope_certified(target, X[i], m[i], rng)
        bad = np.flatnonzero(keep & (v_closed != v_open))
        notes = {"route": "perturbed simplex certificates for the open polytope",
                 "certified_inside": int(v_open.sum())}
    n = int(keep.sum())
    return n, samples - n, 1.0 - bad.size / max(n, 1), _violation_list(X, bad, limit, margin=m), notes


def _degenerate_empty(body, target, g, rng, samples, band, margin, limit):
    half = samples // 2
    X = np.vstack([_uniform(rng, g.bbox, samples - half), target.sample(half, rng)])
    oracle = oracle_double_complements(g, X, margin)
    inside = double_complement_verdicts(target, X) == 1
    bad = np.flatnonzero(oracle | inside)
    notes = {"max_interior_margin": float(target.interior_margins(X).max()),
             "oracle_inside": int(oracle.sum()), "interior_inside": int(inside.sum())}
    return samples, 0, 1.0 - bad.size / samples, \
        _violation_list(X, bad, limit, oracle=oracle, interior=inside), notes
