import numpy as np
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from metric_complements import (
    Ball, HPolytope, Status, VPolytope, barycentric, chebyshev_ball, density_witness,
    double_complement_membership, in_metric_complement, inradius_at, interior_margin,
    is_simplex, random_body, verify_certificate,
)

coords = st.floats(-3, 3, allow_nan=False, allow_infinity=False)
point2 = arrays(np.float64, 2, elements=coords)
SQUARE = HPolytope.box_from_bounds([0, 0], [1, 1])
BIG = HPolytope.box_from_bounds([-1, -1], [2, 2])
settings.register_profile("repo", max_examples=60, deadline=None)
settings.load_profile("repo")


@given(point2, st.floats(0.05, 1.0))
def test_interior_implies_double_complement(x, tol):
    if interior_margin(SQUARE, x) > tol:
        assert double_complement_membership(SQUARE, x, tol).status is Status.INSIDE


@given(point2, st.floats(0.05, 2.0), st.floats(0, 1), st.floats(0, 2 * np.pi))
def test_complement_open_with_modulus(x, r, t, angle):
    if in_metric_complement(SQUARE, x, r):
        y = x + (r / 4) * t * np.array([np.cos(angle), np.sin(angle)])
        assert in_metric_complement(SQUARE, y, r / 2)


@given(point2, st.floats(0.05, 2.0))
def test_anti_tone(x, r):
    # SQUARE is inside BIG, so being away from BIG means being away from SQUARE
    if in_metric_complement(BIG, x, r):
        assert in_metric_complement(SQUARE, x, r)


@given(st.integers(0, 10_000), arrays(np.float64, 3, elements=st.floats(-2, 2)))
def test_facet_barycentric_duality(seed, p):
    V = np.random.default_rng(seed).standard_normal((4, 3))
    if not is_simplex(V):
        return
    w = barycentric(V, p)
    r = inradius_at(V, p)
    if abs(r) > 1e-9:
        assert np.sign(w.min()) == np.sign(r)


@given(st.integers(0, 10_000))
def test_density_distance_law(seed):
    rng = np.random.default_rng(seed)
    K = random_body("hpolytope", 2, 6, seed)
    c = chebyshev_ball(K)
    y = K.project(c.center + 3 * rng.standard_normal(2))
    gap = np.linalg.norm(c.center - y)
    if gap <= c.radius:
        return
    eps = rng.uniform(0.01, 1.99) * gap
    w = density_witness(K, c.center, c.radius * (1 - 1e-9), y, eps, tol=1e-7)
    assert abs(np.linalg.norm(y - w.z) - eps / 2) <= 1e-12
    assert verify_certificate(w.certificate)


@given(point2, st.floats(0.1, 1.0))
def test_ball_distance_is_one_lipschitz(x, r):
    b = Ball([0.5, 0.5], r)
    y = x + 0.1
    assert abs(b.distance(x) - b.distance(y)) <= np.linalg.norm(x - y) + 1e-12


@given(st.integers(0, 10_000))
def test_scalar_and_batched_distances_agree(seed):
    rng = np.random.default_rng(seed)
    body = random_body(["hpolytope", "vpolytope"][seed % 2], 2, 6, seed)
    X = rng.uniform(-2, 2, (5, 2))
    for x, d in zip(X, body.distances(X)):
        assert abs(body.distance(x) - d) <= 1e-6


@given(point2)
def test_vpolytope_matches_hpolytope_square(x):
    V = VPolytope([[0, 0], [1, 0], [1, 1], [0, 1]])
    assert abs(V.distances(x[None])[0] - SQUARE.distances(x[None])[0]) <= 1e-9
    assert abs(V.interior_margin(x) - SQUARE.interior_margin(x)) <= 1e-9
