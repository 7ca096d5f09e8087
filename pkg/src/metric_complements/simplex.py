"""Simplices: explicit regular coordinates, facets, inradius and perturbation room."""
from dataclasses import dataclass
from math import sqrt

import numpy as np

from .bodies import HPolytope
from .errors import DimensionMismatch, PreconditionFailed, SingularMatrix
from .linalg import Hyperplane, affine_system, as_points, as_vector, solve_linear

MAX_DIM = 16
DEGENERACY_RTOL = 1e-10


def _det_test(V):
    """``|det(v_i - v_0)|`` against ``1e-10 * (max edge)^n``."""
    n = V.shape[1]
    D = V[1:] - V[0]
    edges = np.linalg.norm(V[:, None, :] - V[None, :, :], axis=2)
    longest = edges.max()
    if longest == 0:
        return False
    return abs(np.linalg.det(D)) > DEGENERACY_RTOL * longest ** n


def is_simplex(points):
    """True when ``n+1`` points in R^n are affinely independent (scale-invariant test)."""
    V = as_points(points)
    if V.shape[0] != V.shape[1] + 1:
        return False
    return bool(_det_test(V))


@dataclass(frozen=True, eq=False)
class Simplex:
    """``n+1`` affinely independent vertices in R^n, one per row."""

    vertices: np.ndarray

    def __post_init__(self):
        V = as_points(self.vertices)
        if V.shape[0] != V.shape[1] + 1:
            raise DimensionMismatch(f"an n-simplex in R^n needs n+1 vertices, got {V.shape}")
        if not _det_test(V):
            raise SingularMatrix("vertices are affinely dependent")
        V.flags.writeable = False
        object.__setattr__(self, "vertices", V)

    @property
    def dim(self):
        return self.vertices.shape[1]

    def as_hpolytope(self):
        return HPolytope.from_facets(facet_hyperplanes(self))


def _vertices_of(s):
    return s.vertices if isinstance(s, Simplex) else as_points(s)


def regular_simplex(n):
    """Regular ``n``-simplex inscribed in the unit sphere with barycentre 0.

    Vertices ``sqrt(1 + 1/n) e_i - n^{-3/2} (sqrt(n+1) + 1) u`` for
    ``i = 1..n`` and ``u / sqrt(n)``, where ``u`` is the all-ones vector.
    The closed forms (unit norms, centroid at the origin, all edges
    ``sqrt(2(n+1)/n)``) are re-checked before returning.
    """
    if not (isinstance(n, (int, np.integer)) and 1 <= n <= MAX_DIM):
        raise ValueError(f"dimension must be an integer in 1..{MAX_DIM}, got {n}")
    u = np.ones(n)
    shift = n ** -1.5 * (sqrt(n + 1) + 1)
    V = np.vstack([sqrt(1 + 1 / n) * np.eye(n) - shift * u, u / sqrt(n)])
    report = regularity_report(V)
    if report["max_norm_error"] > 1e-9 or report["barycentre_norm"] > 1e-9 \
            or report["max_edge_error"] > 1e-9:
        raise RuntimeError(f"regular simplex construction drifted: {report}")
    return Simplex(V)


def regularity_report(vertices, center=None, radius=1.0):
    """Norm, edge and barycentre errors of a (scaled) regular simplex."""
    V = as_points(vertices)
    n = V.shape[1]
    c = np.zeros(n) if center is None else as_vector(center, dim=n)
    norms = np.linalg.norm(V - c, axis=1)
    i, j = np.triu_indices(len(V), 1)
    edges = np.linalg.norm(V[i] - V[j], axis=1)
    side = radius * sqrt(2 * (n + 1) / n)
    return {
        "dim": n,
        "max_norm_error": float(np.max(np.abs(norms - radius))),
        "barycentre_norm": float(np.linalg.norm(V.mean(axis=0) - c)),
        "side_length": side,
        "max_edge_error": float(np.max(np.abs(edges - side))),
    }


def scaled_simplex(a, r, n=None):
    """The regular simplex ``a + r * regular_simplex(n)``."""
    a = as_vector(a, dim=n)
    if not r > 0:
        raise ValueError(f"scale must be positive, got {r}")
    return Simplex(a + r * regular_simplex(a.size).vertices)


def barycentre(s):
    return _vertices_of(s).mean(axis=0)


def facet_hyperplanes(s):
    """Facet ``i`` passes through every vertex but ``v_i``; ``v_i`` is on the ``<=`` side.

    Normals come out unit length.  Row ``i`` of the inverse affine system is
    the affine barycentric-weight function ``w_i``, whose zero set is facet
    ``i`` and which is positive on the simplex side.
    """
    V = _vertices_of(s)
    n = V.shape[1]
    M = affine_system(V)
    Minv = solve_linear(M, np.eye(n + 1))
    planes = []
    for row in Minv:
        c, d = row[:n], row[n]
        norm = np.linalg.norm(c)
        planes.append(Hyperplane(-c / norm, d / norm))
    return planes


def inradius_at(s, c):
    """Signed distance from ``c`` to the nearest facet; positive inside."""
    c = as_vector(c)
    return min(f.signed_distance(c) for f in facet_hyperplanes(s))


def _weights_bound(V, c):
    """Minimum barycentric weight of ``c`` and a norm bound on the inverse affine system."""
    n = V.shape[1]
    M = affine_system(V)
    Minv = solve_linear(M, np.eye(n + 1))
    w = Minv @ np.append(c, 1.0)
    # Frobenius norm bounds the spectral norm from above
    return float(w.min()), float(np.linalg.norm(Minv)), n


def perturbation_bound(w_min, inv_norm, n, delta):
    """Worst-case drop of a barycentric weight when every vertex moves by less than ``delta``.

    With ``M`` the affine system, ``E`` the perturbation and ``w'`` the new
    weights, ``w' - w = -M^{-1} E w'`` and ``||E w'|| <= delta ||w'||_1``, which
    gives ``||w' - w|| <= K delta / (1 - K delta sqrt(n+1))`` for
    ``K >= ||M^{-1}||``.  Returns ``inf`` once the perturbed system may be singular.
    """
    k = inv_norm * delta * sqrt(n + 1)
    if k >= 1:
        return float("inf")
    return inv_norm * delta / (1 - k)


def perturbation_tolerance(s, c, rng=None, trials=10_000, tol=1e-9):
    """A ``delta > 0`` such that moving each vertex by less than ``delta`` keeps
    the hull a nondegenerate simplex with ``c`` strictly inside.

    ``delta`` is the largest value (by bisection over ``[0, inradius]``) for
    which the first-order weight bound stays below the smallest weight of
    ``c``, and it must then survive ``trials`` randomized perturbations at
    magnitude ``delta * (1 - 1e-3)``; on any failure it is halved and
    rechecked.  Pass ``trials=0`` to skip the randomized stage.
    """
    V = _vertices_of(s)
    if V.shape[0] != V.shape[1] + 1 or not _det_test(V):
        raise PreconditionFailed("is_simplex", "vertex set is degenerate")
    c = as_vector(c, dim=V.shape[1])
    r_in = inradius_at(V, c)
    if not r_in > tol:
        raise PreconditionFailed("interior", f"inradius at c is {r_in:.3g}, not above tol")
    w_min, K, n = _weights_bound(V, c)

    def bound_ok(delta):
        return perturbation_bound(w_min, K, n, delta) < w_min

    lo, hi = 0.0, r_in
    if bound_ok(hi):
        lo = hi
    else:
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if bound_ok(mid):
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-12 * r_in:
                break
    delta = lo
    if not delta > 0:
        raise PreconditionFailed("interior", "no positive perturbation radius found")
    if trials:
        rng = np.random.default_rng() if rng is None else rng
        for _ in range(60):
            report = perturbation_check(V, c, delta * (1 - 1e-3), rng, trials)
            if report["failures"] == 0:
                break
            delta *= 0.5
        else:
            raise RuntimeError("randomized perturbation check never passed")
    return delta


def perturbation_check(s, c, magnitude, rng, trials=10_000, batch=2_000):
    """Randomized adversary for :func:`perturbation_tolerance`.

    Every vertex is moved by exactly ``magnitude``: half the trials use
    uniformly random directions, the rest push the vertices of the facet
    nearest ``c`` straight towards it.  Weights are recomputed with numpy's
    batched solver, independently of :func:`solve_linear`.
    """
    V = _vertices_of(s)
    c = as_vector(c, dim=V.shape[1])
    n = V.shape[1]
    facets = facet_hyperplanes(V)
    nearest = int(np.argmin([f.signed_distance(c) for f in facets]))
    inward = -facets[nearest].normal
    failures = 0
    min_weight = np.inf
    done = 0
    while done < trials:
        b = min(batch, trials - done)
        dirs = rng.standard_normal((b, n + 1, n))
        targeted = np.arange(b) >= b // 2
        if targeted.any():
            push = np.broadcast_to(inward, (n + 1, n)).copy()
            push[nearest] = rng.standard_normal(n)
            jitter = 0.25 * rng.standard_normal((targeted.sum(), n + 1, n))
            dirs[targeted] = push + jitter
        dirs /= np.linalg.norm(dirs, axis=2, keepdims=True)
        P = V + magnitude * dirs
        M = np.concatenate([P.transpose(0, 2, 1), np.ones((b, 1, n + 1))], axis=1)
        D = P[:, 1:] - P[:, :1]
        longest = np.linalg.norm(P[:, :, None] - P[:, None], axis=3).max(axis=(1, 2))
        degenerate = np.abs(np.linalg.det(D)) <= DEGENERACY_RTOL * longest ** n
        with np.errstate(all="ignore"):
            W = np.linalg.solve(M, np.broadcast_to(np.append(c, 1.0), (b, n + 1))[..., None])[..., 0]
        wmin = W.min(axis=1)
        failures += int(np.count_nonzero(degenerate | ~(wmin > 0)))
        min_weight = min(min_weight, float(np.nanmin(wmin)))
        done += b
    return {"trials": trials, "magnitude": float(magnitude), "failures": failures,
            "min_weight": min_weight}
