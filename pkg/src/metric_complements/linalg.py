"""Small dense linear algebra: vectors, hyperplanes, solves, barycentric coordinates.

Points are plain 1-D float64 numpy arrays; :func:`as_vector` is the single
gatekeeper that validates them.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, SingularMatrix

PIVOT_RTOL = 1e-12


def as_vector(x, dim=None):
    """Return ``x`` as a finite, read-only 1-D float array.

    Scalars are promoted to 1-D vectors so that points of R^1 can be passed
    as plain numbers.
    """
    v = np.array(x, dtype=float, ndmin=1)
    if v.ndim != 1 or v.size == 0:
        raise ValueError(f"expected a non-empty 1-D coordinate array, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector coordinates must be finite")
    if dim is not None and v.size != dim:
        raise DimensionMismatch(f"expected dimension {dim}, got {v.size}")
    v.flags.writeable = False
    return v


def as_points(points, dim=None):
    """Return a finite ``(count, dim)`` float array."""
    P = np.array(points, dtype=float)
    if P.ndim == 1:
        P = P[:, None] if dim == 1 else P[None, :]
    if P.ndim != 2 or P.shape[1] == 0:
        raise ValueError(f"expected a (count, dim) array, got shape {P.shape}")
    if not np.all(np.isfinite(P)):
        raise ValueError("point coordinates must be finite")
    if dim is not None and P.shape[1] != dim:
        raise DimensionMismatch(f"expected dimension {dim}, got {P.shape[1]}")
    return P


@dataclass(frozen=True)
class Hyperplane:
    """The set ``{x : <normal, x> = offset}``.

    Used as a facet, ``{x : <normal, x> <= offset}`` is the retained side.
    """

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        n = as_vector(self.normal)
        if not np.linalg.norm(n) > 0:
            raise ValueError("hyperplane normal must be nonzero")
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def dim(self):
        return self.normal.size

    def signed_distance(self, x):
        """Positive on the retained (``<=``) side."""
        return (self.offset - self.normal @ np.asarray(x, float)) / np.linalg.norm(self.normal)

    def normalized(self):
        s = np.linalg.norm(self.normal)
        return Hyperplane(self.normal / s, self.offset / s)


def solve_linear(A, b):
    """Solve ``A x = b`` by Gaussian elimination with partial pivoting.

    Raises :class:`SingularMatrix` when a pivot falls below ``1e-12`` times
    the largest entry magnitude of the original matrix.
    """
    M = np.array(A, dtype=float)
    rhs = np.array(b, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatch(f"matrix must be square, got shape {M.shape}")
    n = M.shape[0]
    if rhs.shape[0] != n:
        raise DimensionMismatch(f"right-hand side has length {rhs.shape[0]}, expected {n}")
    scale = np.max(np.abs(M)) if M.size else 0.0
    threshold = PIVOT_RTOL * scale
    if scale == 0.0:
        raise SingularMatrix("zero matrix")

    for k in range(n):
        p = k + int(np.argmax(np.abs(M[k:, k])))
        if abs(M[p, k]) <= threshold:
            raise SingularMatrix(f"pivot {abs(M[p, k]):.3e} at column {k} below threshold")
        if p != k:
            M[[k, p]] = M[[p, k]]
            rhs[[k, p]] = rhs[[p, k]]
        factors = M[k + 1:, k] / M[k, k]
        M[k + 1:, k:] -= np.outer(factors, M[k, k:])
        rhs[k + 1:] -= np.multiply.outer(factors, rhs[k]) if rhs.ndim > 1 else factors * rhs[k]

    x = np.zeros_like(rhs)
    for k in range(n - 1, -1, -1):
        x[k] = (rhs[k] - M[k, k + 1:] @ x[k + 1:]) / M[k, k]
    return x


def affine_system(vertices):
    """The ``(n+1) x (n+1)`` matrix mapping barycentric weights to ``(point, 1)``."""
    V = np.asarray(vertices, dtype=float)
    if V.ndim != 2 or V.shape[0] != V.shape[1] + 1:
        raise DimensionMismatch(f"need n+1 vertices in R^n, got array of shape {V.shape}")
    return np.vstack([V.T, np.ones(V.shape[0])])


def barycentric(vertices, p):
    """Barycentric weights of ``p`` with respect to ``n+1`` vertices in R^n.

    Weights sum to one and are negative for coordinates on the far side of
    the opposite facet.

    >>> barycentric([[0, 0], [1, 0], [0, 1]], [1, 1])
    array([-1.,  1.,  1.])
    """
    M = affine_system(vertices)
    p = as_vector(p, dim=M.shape[1] - 1)
    return solve_linear(M, np.append(p, 1.0))
