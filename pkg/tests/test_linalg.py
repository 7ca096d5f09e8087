import numpy as np
import pytest

from metric_complements.errors import DimensionMismatch, SingularMatrix
from metric_complements.linalg import (
    Hyperplane, affine_system, as_points, as_vector, barycentric, solve_linear,
)


def test_as_vector_promotes_scalars_and_freezes():
    v = as_vector(2.5)
    assert v.shape == (1,)
    with pytest.raises(ValueError):
        v[0] = 1.0


@pytest.mark.parametrize("bad", [[np.nan, 1.0], [np.inf], [], [[1.0, 2.0]]])
def test_as_vector_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        as_vector(bad)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        as_vector([1, 2], dim=3)
    with pytest.raises(DimensionMismatch):
        as_points([[1, 2]], dim=3)


def test_as_points_one_dimensional_column():
    assert as_points([0.0, 1.0, 2.0], dim=1).shape == (3, 1)


def test_solve_matches_numpy(rng):
    for n in (1, 2, 5, 12):
        A = rng.standard_normal((n, n)) + n * np.eye(n)
        b = rng.standard_normal(n)
        np.testing.assert_allclose(solve_linear(A, b), np.linalg.solve(A, b), atol=1e-12)


def test_solve_needs_pivoting():
    A = np.array([[0.0, 1.0], [1.0, 0.0]])
    np.testing.assert_allclose(solve_linear(A, [2.0, 3.0]), [3.0, 2.0])


def test_solve_matrix_rhs(rng):
    A = rng.standard_normal((4, 4)) + 4 * np.eye(4)
    np.testing.assert_allclose(solve_linear(A, np.eye(4)) @ A, np.eye(4), atol=1e-12)


@pytest.mark.parametrize("A", [np.zeros((2, 2)), [[1.0, 2.0], [2.0, 4.0]]])
def test_singular(A):
    with pytest.raises(SingularMatrix):
        solve_linear(A, [1.0, 1.0])


def test_hyperplane_signed_distance():
    h = Hyperplane([0.0, 2.0], 2.0)
    assert h.signed_distance([5.0, 0.0]) == pytest.approx(1.0)
    assert h.signed_distance([5.0, 3.0]) == pytest.approx(-2.0)
    n = h.normalized()
    assert np.linalg.norm(n.normal) == pytest.approx(1.0)
    assert n.offset == pytest.approx(1.0)


def test_barycentric_outside_point():
    w = barycentric([[0, 0], [1, 0], [0, 1]], [1, 1])
    np.testing.assert_allclose(w, [-1, 1, 1], atol=1e-12)


def test_barycentric_reconstructs(rng):
    V = rng.standard_normal((4, 3))
    p = rng.standard_normal(3)
    w = barycentric(V, p)
    assert w.sum() == pytest.approx(1.0)
    np.testing.assert_allclose(w @ V, p, atol=1e-10)


def test_affine_system_shape():
    M = affine_system([[0, 0], [1, 0], [0, 1]])
    np.testing.assert_array_equal(M[-1], [1, 1, 1])
    assert M.shape == (3, 3)
