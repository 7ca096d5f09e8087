"""Independent reference computations used by the tests."""
import numpy as np
from scipy.optimize import minimize
from scipy.spatial import ConvexHull


def segment_distance(p, a, b):
    ab = b - a
    t = np.clip(np.dot(p - a, ab) / np.dot(ab, ab), 0.0, 1.0)
    return float(np.linalg.norm(p - (a + t * ab)))


def convex_polygon_distance(vertices_ccw, p):
    """Distance to a convex polygon given by counter-clockwise vertices."""
    V = np.asarray(vertices_ccw, float)
    p = np.asarray(p, float)
    edges = np.roll(V, -1, axis=0) - V
    cross = edges[:, 0] * (p[1] - V[:, 1]) - edges[:, 1] * (p[0] - V[:, 0])
    if np.all(cross >= 0):
        return 0.0
    return min(segment_distance(p, V[i], V[(i + 1) % len(V)]) for i in range(len(V)))


def hull_distance_qp(G, x):
    """Distance from ``x`` to conv(G) by a generic constrained least-squares solve."""
    G = np.asarray(G, float)
    x = np.asarray(x, float)
    if G.shape[1] == 2:
        return convex_polygon_distance(G[ConvexHull(G).vertices], x)
    k = len(G)
    res = minimize(lambda w: np.sum((G.T @ w - x) ** 2), np.full(k, 1 / k),
                   jac=lambda w: 2 * G @ (G.T @ w - x), method="SLSQP", bounds=[(0, 1)] * k,
                   constraints=[{"type": "eq", "fun": lambda w: w.sum() - 1}],
                   options={"ftol": 1e-15, "maxiter": 1000})
    return float(np.linalg.norm(G.T @ res.x - x))
