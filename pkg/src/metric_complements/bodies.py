"""Located convex bodies in Euclidean R^n.

Every body answers the same questions: nearest point (:func:`project`),
distance, a signed interior margin and a three-valued membership verdict.
Balls are handled analytically.  V-polytopes use Wolfe's minimum-norm-point
method and H-polytopes use Dykstra's cyclic projections finished by an
active-set KKT solve, so both return the nearest point rather than just a
feasible one.

The batched :func:`distances` and :func:`interior_margins` exist for grid
workloads.  For polytopes in low dimension they enumerate candidate active
sets exactly and never touch the iterative solvers, which makes them a
useful cross-check of the scalar path.
"""
import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.optimize import linprog, nnls
from scipy.spatial import ConvexHull, QhullError

from .errors import (
    ContractViolation,
    DimensionMismatch,
    EmptyBody,
    EmptyInterior,
    NoConvergence,
    NotLocated,
    Unbounded,
)
from .linalg import Hyperplane, as_points, as_vector

ANALYTIC_TOL = 1e-9
ITERATIVE_TOL = 1e-7
MAX_ITER = 100_000

# Active-set candidates whose Gram matrix is worse conditioned than this are
# skipped; the error this introduces is O(angle^2) and far below 1e-6.
_GRAM_COND_MAX = 1e8
_KKT_TOL = 1e-11
_CHUNK = 1 << 21


class Status(str, enum.Enum):
    INSIDE = "Inside"
    OUTSIDE = "Outside"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class MembershipVerdict:
    """Tolerance-aware membership answer.

    ``margin`` is positive for Inside/Outside (how far the point is from the
    decision boundary) and the raw signed margin, of magnitude at most
    ``tol``, for Undetermined.
    """

    status: Status
    margin: float

    def to_dict(self):
        return {"status": self.status.value, "margin": float(self.margin)}


def verdict_from_margin(margin, tol):
    """Map a signed interior margin onto a verdict with a ``2 * tol`` band."""
    margin = float(margin)
    if margin > tol:
        return MembershipVerdict(Status.INSIDE, margin)
    if margin < -tol:
        return MembershipVerdict(Status.OUTSIDE, -margin)
    return MembershipVerdict(Status.UNDETERMINED, margin)


@dataclass(frozen=True)
class BallCertificate:
    """Assertion that the ball ``B(center, radius)`` lies inside ``body``."""

    center: np.ndarray
    radius: float
    body: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "center", as_vector(self.center))
        if not self.radius > 0:
            raise ValueError(f"certificate radius must be positive, got {self.radius}")
        object.__setattr__(self, "radius", float(self.radius))

    def to_dict(self):
        return {"center": self.center.tolist(), "radius": self.radius}


class ConvexBody:
    """Common surface of the located bodies."""

    dim: int

    def _check(self, x):
        return as_vector(x, dim=self.dim)

    def _check_points(self, X):
        return as_points(X, dim=self.dim)

    def project(self, x, tol=None):
        raise NotImplementedError

    def distance(self, x, tol=None):
        x = self._check(x)
        return float(np.linalg.norm(x - self.project(x, tol)))

    def distances(self, X):
        raise NotImplementedError

    def interior_margin(self, x):
        return float(self.interior_margins(self._check(x)[None, :])[0])

    def interior_margins(self, X):
        raise NotImplementedError

    def contains(self, x, tol=ANALYTIC_TOL):
        return verdict_from_margin(self.interior_margin(x), tol)

    def bounding_box(self):
        raise NotImplementedError

    def sample(self, count, rng):
        raise NotImplementedError


# --------------------------------------------------------------------------
# Balls


@dataclass(frozen=True, eq=False)
class Ball(ConvexBody):
    center: np.ndarray
    radius: float
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "center", as_vector(self.center))
        if not (np.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"ball radius must be positive, got {self.radius}")
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def dim(self):
        return self.center.size

    def project(self, x, tol=None):
        x = self._check(x)
        offset = x - self.center
        d = np.linalg.norm(offset)
        if d <= self.radius:
            return x.copy()
        return self.center + offset * (self.radius / d)

    def distances(self, X):
        X = self._check_points(X)
        return np.maximum(np.linalg.norm(X - self.center, axis=1) - self.radius, 0.0)

    def interior_margins(self, X):
        # open and closed balls share the supremum radius
        X = self._check_points(X)
        return self.radius - np.linalg.norm(X - self.center, axis=1)

    def bounding_box(self):
        return self.center - self.radius, self.center + self.radius

    def sample(self, count, rng):
        g = rng.standard_normal((count, self.dim))
        g /= np.linalg.norm(g, axis=1, keepdims=True)
        r = self.radius * rng.random(count) ** (1.0 / self.dim)
        return self.center + g * r[:, None]


# --------------------------------------------------------------------------
# H-polytopes


def _normalize_rows(A, b):
    s = np.linalg.norm(A, axis=1)
    if np.any(s == 0):
        raise ValueError("every facet normal must be nonzero")
    return A / s[:, None], b / s


def _kkt_projection(U, h, x, active):
    """Nearest point of ``{U y <= h}`` to ``x`` if ``active`` is the right active set.

    The candidate is the projection onto the affine set cut out by the
    active facets.  It is accepted only if it is feasible and ``x - p`` is a
    nonnegative combination of the active normals (checked by NNLS, which
    copes with degenerate vertices where the multipliers are not unique).
    """
    A = U[active]
    if A.shape[0] == 0:
        return None
    hJ = h[active]
    nu = np.linalg.lstsq(A @ A.T, A @ x - hJ, rcond=None)[0]
    p = x - A.T @ nu
    scale = 1.0 + np.max(np.abs(h)) + np.max(np.abs(x))
    if np.max(np.abs(A @ p - hJ)) > _KKT_TOL * scale:
        return None
    if np.max(U @ p - h) > _KKT_TOL * scale:
        return None
    # the residual nnls reports is unreliable for wide systems; recompute it
    weights = nnls(A.T, x - p)[0]
    if np.linalg.norm(A.T @ weights - (x - p)) > 1e-9 * scale:
        return None
    return p


def _enumerate_active_sets(U, h, x, slack, width=1e-3):
    """Try every subset of at most ``dim`` nearly tight facets as the active set.

    Dykstra crawls in narrow wedges; once its iterate is close, the true
    active set is among the facets with small slack, and a conic
    Caratheodory argument says ``dim`` of them suffice.
    """
    d = U.shape[1]
    near = np.argsort(slack)[: 3 * d]
    near = near[slack[near] <= width * (1.0 + np.max(np.abs(h)))]
    active = np.zeros(len(h), dtype=bool)
    for s in range(1, min(d, near.size) + 1):
        for J in itertools.combinations(near, s):
            active[:] = False
            active[list(J)] = True
            exact = _kkt_projection(U, h, x, active)
            if exact is not None:
                return exact
    return None


def dykstra_projection(U, h, x, tol=ITERATIVE_TOL, max_iter=MAX_ITER):
    """Project ``x`` onto ``{y : U y <= h}`` (rows of ``U`` unit length).

    Dykstra's correction terms make the cyclic half-space projections
    converge to the nearest point.  After every sweep the current support
    of the corrections is tried as an active set; a KKT-consistent answer
    ends the loop with an essentially exact projection.
    """
    x = np.asarray(x, dtype=float)
    if np.max(U @ x - h) <= 0:
        return x.copy()
    m = U.shape[0]
    p = x.copy()
    Q = np.zeros((m, x.size))
    for sweep in range(max_iter):
        for i in range(m):
            y = p + Q[i]
            t = U[i] @ y - h[i]
            p = y - t * U[i] if t > 0 else y
            Q[i] = y - p
        mu = np.einsum("ij,ij->i", Q, U)
        slack = h - U @ p
        exact = _kkt_projection(U, h, x, mu > 0)
        if exact is None and sweep % 20 == 19:
            exact = _enumerate_active_sets(U, h, x, slack)
        if exact is not None:
            return exact
        violation = max(0.0, -slack.min())
        gap = float(mu @ slack)
        if violation <= tol and np.sqrt(2 * abs(gap)) <= tol:
            return p
    raise NoConvergence(f"Dykstra projection did not reach tol={tol} in {max_iter} sweeps")


def _combinations_by_size(m, sizes):
    for s in sizes:
        combos = np.array(list(itertools.combinations(range(m), s)), dtype=int)
        if combos.size:
            yield s, combos


def _chunks(n, per_row):
    step = max(1, _CHUNK // max(per_row, 1))
    for start in range(0, n, step):
        yield slice(start, min(n, start + step))


def _hpolytope_distances(U, h, X):
    """Exact distances to ``{U y <= h}`` by enumerating dual active sets.

    For any facet subset ``J`` whose KKT multipliers are nonnegative the
    value ``||U_J^T nu||`` is a dual lower bound on the distance, and the
    true active set attains it, so the distance is the maximum over subsets.
    """
    m, d = U.shape
    viol = X @ U.T - h
    best = np.maximum(viol.max(axis=1), 0.0)
    outside = np.flatnonzero(best > 0)
    if outside.size == 0 or d == 1:
        return best
    Xo = X[outside]
    bo = best[outside]
    for s, combos in _combinations_by_size(m, range(2, min(d, m) + 1)):
        UJ = U[combos]
        G = UJ @ UJ.transpose(0, 2, 1)
        keep = np.linalg.cond(G) < _GRAM_COND_MAX
        if not keep.any():
            continue
        UJ, G, combos = UJ[keep], G[keep], combos[keep]
        Ginv = np.linalg.inv(G)
        hJ = h[combos]
        for sl in _chunks(len(Xo), len(combos) * s):
            R = np.einsum("nd,csd->ncs", Xo[sl], UJ) - hJ
            nu = np.einsum("ncs,cst->nct", R, Ginv)
            val2 = np.einsum("ncs,ncs->nc", nu, R)
            ok = np.all(nu >= -1e-12, axis=2)
            val = np.sqrt(np.where(ok, np.maximum(val2, 0.0), 0.0)).max(axis=1)
            bo[sl] = np.maximum(bo[sl], val)
    best[outside] = bo
    return best


@dataclass(frozen=True, eq=False)
class HPolytope(ConvexBody):
    """Intersection of the half-spaces ``{x : normals[i] @ x <= offsets[i]}``.

    With ``bounded=True`` (the default) a bounding box is computed by
    coordinate-wise linear programs at construction and unbounded input is
    rejected.
    """

    normals: np.ndarray
    offsets: np.ndarray
    bounded: bool = True
    box: tuple = field(default=None, repr=False)

    def __post_init__(self):
        A = np.array(self.normals, dtype=float, ndmin=2)
        b = np.array(self.offsets, dtype=float, ndmin=1)
        if A.ndim != 2 or b.ndim != 1 or A.shape[0] != b.size or A.shape[0] == 0:
            raise DimensionMismatch(f"normals {A.shape} and offsets {b.shape} disagree")
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
            raise ValueError("facet data must be finite")
        U, h = _normalize_rows(A, b)
        for arr in (A, b, U, h):
            arr.flags.writeable = False
        object.__setattr__(self, "normals", A)
        object.__setattr__(self, "offsets", b)
        object.__setattr__(self, "_U", U)
        object.__setattr__(self, "_h", h)
        if self.bounded and self.box is None:
            object.__setattr__(self, "box", _lp_bounding_box(U, h))

    @classmethod
    def from_facets(cls, facets, bounded=True):
        facets = list(facets)
        return cls([f.normal for f in facets], [f.offset for f in facets], bounded=bounded)

    @classmethod
    def box_from_bounds(cls, lower, upper):
        lower, upper = as_vector(lower), as_vector(upper, dim=len(lower))
        eye = np.eye(lower.size)
        return cls(np.vstack([eye, -eye]), np.concatenate([upper, -lower]),
                   box=(lower.copy(), upper.copy()))

    @property
    def dim(self):
        return self.normals.shape[1]

    @property
    def facets(self):
        return [Hyperplane(a, c) for a, c in zip(self.normals, self.offsets)]

    def project(self, x, tol=None, max_iter=MAX_ITER):
        x = self._check(x)
        return dykstra_projection(self._U, self._h, x, tol or ITERATIVE_TOL, max_iter)

    def distances(self, X):
        X = self._check_points(X)
        m, d = self._U.shape
        if sum(_n_choose(m, s) for s in range(2, min(d, m) + 1)) <= 20_000:
            return _hpolytope_distances(self._U, self._h, X)
        return np.array([self.distance(x, ANALYTIC_TOL) for x in X])

    def slacks(self, X):
        """Signed facet slacks ``(offset_i - <u_i, x>)`` for unit normals ``u_i``."""
        return self._h - self._check_points(X) @ self._U.T

    def interior_margins(self, X):
        X = self._check_points(X)
        margins = self.slacks(X).min(axis=1)
        outside = margins < 0
        if outside.any():
            margins[outside] = -self.distances(X[outside])
        return margins

    def bounding_box(self):
        if self.box is None:
            raise Unbounded("polytope was built with bounded=False")
        return self.box

    def sample(self, count, rng):
        lo, hi = self.bounding_box()
        out = []
        for _ in range(200):
            P = rng.uniform(lo, hi, size=(max(count, 64) * 4, self.dim))
            out.extend(P[np.all(self.slacks(P) >= 0, axis=1)])
            if len(out) >= count:
                return np.array(out[:count])
        # flat polytopes have no volume to hit; fall back to projected points
        P = rng.uniform(lo, hi, size=(count, self.dim))
        return np.array([self.project(p, ANALYTIC_TOL) for p in P])


def _n_choose(m, s):
    from math import comb
    return comb(m, s)


def _lp_bounding_box(U, h):
    d = U.shape[1]
    lo, hi = np.empty(d), np.empty(d)
    for i in range(d):
        for sign, store in ((1.0, lo), (-1.0, hi)):
            c = np.zeros(d)
            c[i] = sign
            res = linprog(c, A_ub=U, b_ub=h, bounds=[(None, None)] * d, method="highs")
            if res.status == 2:
                raise EmptyBody("half-space system is infeasible")
            if res.status == 3:
                raise Unbounded(f"polytope is unbounded along coordinate {i}")
            if res.status != 0:
                raise RuntimeError(f"bounding-box LP failed: {res.message}")
            store[i] = res.x[i]
    return lo, hi


# --------------------------------------------------------------------------
# V-polytopes


def _affine_minimizer(Q):
    """Weights ``a`` (summing to 1) minimizing ``||a @ Q||``."""
    s = Q.shape[0]
    K = np.zeros((s + 1, s + 1))
    K[:s, :s] = Q @ Q.T
    K[:s, s] = K[s, :s] = 1.0
    rhs = np.zeros(s + 1)
    rhs[s] = 1.0
    return np.linalg.lstsq(K, rhs, rcond=None)[0][:s]


def min_norm_point(P, tol=ITERATIVE_TOL, max_iter=MAX_ITER):
    """Wolfe's method: the point of ``conv(P)`` nearest the origin.

    Stops when the support-function gap certifies ``||y|| <= dist + tol``.
    Returns ``(point, indices, weights)``.
    """
    P = np.asarray(P, dtype=float)
    S = [int(np.argmin(np.einsum("ij,ij->i", P, P)))]
    w = np.array([1.0])
    y = P[S[0]].copy()
    eps = 1e-14
    for _ in range(max_iter):
        ny = np.linalg.norm(y)
        if ny <= tol:
            return y, S, w
        dots = P @ y
        j = int(np.argmin(dots))
        if (ny * ny - dots[j]) / ny <= tol or j in S:
            return y, S, w
        S.append(j)
        w = np.append(w, 0.0)
        while True:
            alpha = _affine_minimizer(P[S])
            if np.all(alpha > eps):
                w = alpha
                break
            shrink = (alpha <= eps) & (w > alpha)
            if not shrink.any():
                w = np.clip(alpha, 0.0, None)
                w /= w.sum()
                break
            theta = np.min(w[shrink] / (w[shrink] - alpha[shrink]))
            w = theta * alpha + (1 - theta) * w
            keep = w > eps
            S = [i for i, k in zip(S, keep) if k]
            w = w[keep] / w[keep].sum()
        y = w @ P[S]
    raise NoConvergence(f"minimum-norm-point search did not reach tol={tol} in {max_iter} steps")


def _vpolytope_distances(G, X, inside=None):
    """Exact distances to ``conv(G)`` by enumerating generator subsets.

    The nearest point of a point outside the hull lies in the relative
    interior of a face spanned by at most ``dim`` generators; any subset
    whose affine projection has nonnegative weights gives a point of the
    hull, so the distance is the minimum over such subsets.
    """
    k, d = G.shape
    best = np.min(np.linalg.norm(X[:, None, :] - G[None], axis=2), axis=1)
    todo = np.arange(len(X)) if inside is None else np.flatnonzero(~inside)
    if inside is not None:
        best[inside] = 0.0
    Xo = X[todo]
    bo = best[todo]
    for s, combos in _combinations_by_size(k, range(2, min(d, k) + 1)):
        q0 = G[combos[:, 0]]
        D = G[combos[:, 1:]] - q0[:, None, :]
        Gram = D @ D.transpose(0, 2, 1)
        keep = np.linalg.cond(Gram) < _GRAM_COND_MAX ** 1.25
        if not keep.any():
            continue
        q0, D, Gram = q0[keep], D[keep], Gram[keep]
        Ginv = np.linalg.inv(Gram)
        for sl in _chunks(len(Xo), len(q0) * d):
            R = Xo[sl][:, None, :] - q0[None]
            t = np.einsum("ncd,ctd->nct", R, D)
            t = np.einsum("nct,cts->ncs", t, Ginv)
            ok = np.all(t >= -1e-12, axis=2) & (t.sum(axis=2) <= 1 + 1e-12)
            resid = R - np.einsum("ncs,csd->ncd", t, D)
            dist = np.where(ok, np.linalg.norm(resid, axis=2), np.inf).min(axis=1)
            bo[sl] = np.minimum(bo[sl], dist)
    best[todo] = bo
    return best


@dataclass(frozen=True, eq=False)
class VPolytope(ConvexBody):
    """Convex hull of a finite, nonempty list of generators."""

    generators: np.ndarray

    def __post_init__(self):
        G = as_points(self.generators)
        G.flags.writeable = False
        object.__setattr__(self, "generators", G)

    @property
    def dim(self):
        return self.generators.shape[1]

    @cached_property
    def affine_dim(self):
        D = self.generators - self.generators[0]
        if not np.any(D):
            return 0
        scale = np.max(np.abs(D))
        return int(np.linalg.matrix_rank(D, tol=1e-10 * scale))

    @cached_property
    def hrep(self):
        """Facet description, or ``None`` when the hull is not full-dimensional."""
        if self.affine_dim < self.dim:
            return None
        G = self.generators
        if self.dim == 1:
            lo, hi = G.min(), G.max()
            return HPolytope([[1.0], [-1.0]], [hi, -lo], box=(np.array([lo]), np.array([hi])))
        try:
            hull = ConvexHull(G)
        except QhullError:
            return None
        eq = hull.equations
        return HPolytope(eq[:, :-1], -eq[:, -1], box=self.bounding_box())

    def project(self, x, tol=None):
        x = self._check(x)
        y, _, _ = min_norm_point(self.generators - x, tol or ITERATIVE_TOL)
        return x + y

    def distances(self, X):
        X = self._check_points(X)
        H = self.hrep
        inside = None if H is None else H.slacks(X).min(axis=1) >= 0
        return _vpolytope_distances(self.generators, X, inside)

    def interior_margins(self, X):
        X = self._check_points(X)
        H = self.hrep
        if H is None:
            return -self.distances(X)
        margins = H.slacks(X).min(axis=1)
        outside = margins < 0
        if outside.any():
            margins[outside] = -_vpolytope_distances(self.generators, X[outside])
        return margins

    def bounding_box(self):
        return self.generators.min(axis=0), self.generators.max(axis=0)

    def sample(self, count, rng):
        W = rng.dirichlet(np.ones(len(self.generators)), size=count)
        return W @ self.generators


# --------------------------------------------------------------------------
# Sandwich sets


@dataclass(frozen=True, eq=False)
class SandwichSet(ConvexBody):
    """A convex set known only through bounds ``inner ⊆ K ⊆ outer``.

    The contract is that ``outer`` is closed and located and no point of
    ``outer`` is provably outside ``K``.  Membership in ``K`` itself is never
    decided; the double complement of ``K`` is the interior of ``outer``.
    Construction spot-checks ``inner ⊆ outer`` on ``check_samples`` points.
    """

    inner: ConvexBody
    outer: ConvexBody
    check_samples: int = 256
    seed: int = 0

    def __post_init__(self):
        if self.inner.dim != self.outer.dim:
            raise DimensionMismatch("inner and outer bodies live in different dimensions")
        if isinstance(self.outer, (SandwichSet,)) or (
                isinstance(self.outer, Ball) and not self.outer.closed):
            raise ContractViolation("outer body must be closed and located")
        self.check_contract()

    @property
    def dim(self):
        return self.outer.dim

    def check_contract(self, samples=None, seed=None):
        rng = np.random.default_rng(self.seed if seed is None else seed)
        P = self.inner.sample(samples or self.check_samples, rng)
        if isinstance(self.inner, VPolytope):
            P = np.vstack([P, self.inner.generators])
        d = self.outer.distances(P)
        bad = np.flatnonzero(d > ANALYTIC_TOL)
        if bad.size:
            raise ContractViolation(
                f"inner point {P[bad[0]].tolist()} lies {d[bad[0]]:.3g} outside the outer body")

    def project(self, x, tol=None):
        raise NotLocated("a sandwich set has no distance oracle; query its outer body")

    def distances(self, X):
        raise NotLocated("a sandwich set has no distance oracle; query its outer body")

    def interior_margins(self, X):
        raise NotLocated("interior of a sandwich set is undecidable; use sandwich_double_complement")

    def bounding_box(self):
        return self.outer.bounding_box()

    def sample(self, count, rng):
        return self.inner.sample(count, rng)


# --------------------------------------------------------------------------
# Functional surface


def project(body, x, tol=None):
    """Nearest point of ``body``'s closure to ``x``."""
    return body.project(x, tol)


def distance(body, x, tol=None):
    return body.distance(x, tol)


def distances(body, X):
    """Distances for a ``(count, dim)`` batch of points."""
    return body.distances(X)


def contains(body, x, tol=ANALYTIC_TOL):
    return body.contains(x, tol)


def interior_margin(body, x):
    """Largest ``r`` with ``B(x, r)`` inside ``body``; minus the distance when outside."""
    return body.interior_margin(x)


def interior_margins(body, X):
    return body.interior_margins(X)


def bounding_box(body):
    return body.bounding_box()


def sample_points(body, count, rng):
    return body.sample(count, rng)


def chebyshev_ball(body, tol=ANALYTIC_TOL):
    """Largest inscribed ball, found by a small dense LP.

    The returned radius is recomputed as the exact facet margin of the LP
    center, so it can be checked directly with :func:`interior_margin`.
    """
    if isinstance(body, Ball):
        return BallCertificate(body.center, body.radius, body)
    if isinstance(body, VPolytope):
        H = body.hrep
        if H is None:
            raise EmptyInterior("hull of the generators is not full-dimensional")
        cert = chebyshev_ball(H, tol)
        return BallCertificate(cert.center, cert.radius, body)
    if not isinstance(body, HPolytope):
        raise TypeError(f"no Chebyshev ball for {type(body).__name__}")
    if not body.bounded:
        raise Unbounded("Chebyshev ball needs a bounded polytope")
    U, h = body._U, body._h
    d = body.dim
    c = np.zeros(d + 1)
    c[-1] = -1.0
    A = np.hstack([U, np.ones((U.shape[0], 1))])
    res = linprog(c, A_ub=A, b_ub=h, bounds=[(None, None)] * d + [(0, None)], method="highs")
    if res.status == 3:
        raise Unbounded("Chebyshev LP is unbounded")
    if res.status != 0:
        raise EmptyInterior(f"Chebyshev LP failed: {res.message}")
    center = res.x[:d]
    radius = float(np.min(h - U @ center))
    if radius <= tol:
        raise EmptyInterior(f"largest inscribed radius {radius:.3g} is not above tol")
    return BallCertificate(center, radius, body)


def translate(body, a):
    """The body ``{x - a : x in body}``."""
    a = as_vector(a, dim=body.dim)
    if isinstance(body, Ball):
        return Ball(body.center - a, body.radius, body.closed)
    if isinstance(body, HPolytope):
        box = None if body.box is None else (body.box[0] - a, body.box[1] - a)
        return HPolytope(body.normals, body.offsets - body.normals @ a, body.bounded, box)
    if isinstance(body, VPolytope):
        return VPolytope(body.generators - a)
    if isinstance(body, SandwichSet):
        return SandwichSet(translate(body.inner, a), translate(body.outer, a),
                           body.check_samples, body.seed)
    raise TypeError(f"cannot translate {type(body).__name__}")
