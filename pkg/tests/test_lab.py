import json

import numpy as np
import pytest

from metric_complements import (
    Ball, HPolytope, SandwichSet, VPolytope, build_grid_oracle, chebyshev_ball,
    oracle_double_complement, oracle_double_complements, random_body, verify_theorem,
)
from metric_complements.errors import EmptyComplementSample, GridTooLarge
from metric_complements.lab import Label
from metric_complements.shapes import dumps


@pytest.fixture(scope="module")
def interval_grid():
    return build_grid_oracle(VPolytope([[0.0], [1.0]]), ([-1.0], [3.0]), 0.01, 0.02)


def test_interval_labels(interval_grid):
    g = interval_grid
    x = g.points[:, 0]
    comp = g.labels == Label.IN_MINUS_S
    # exactly the points at or beyond -0.02 and 1.02, up to rounding of the grid
    expected = (x <= -0.02 + 1e-9) | (x >= 1.02 - 1e-9)
    assert np.array_equal(comp, expected)
    assert np.all(g.labels[(x >= 0) & (x <= 1)] == Label.IN_S)


def test_label_invariants(rng):
    body = random_body("hpolytope", 2, 6, seed=4)
    g = build_grid_oracle(body, step=0.05, eps=0.1)
    exact = body.distances(g.points)
    assert np.all(exact[g.labels == Label.IN_MINUS_S] >= g.eps)
    assert np.all(exact[g.labels == Label.IN_S] <= g.step / 10)


def test_ball_center_in_s():
    g = build_grid_oracle(Ball([0, 0], 1), ([-2, -2], [2, 2]), 0.1, 0.2)
    i = np.argmin(np.linalg.norm(g.points, axis=1))
    assert g.labels[i] == Label.IN_S


def test_interval_double_complement(interval_grid):
    assert oracle_double_complement(interval_grid, [0.5], 0.3)
    assert not oracle_double_complement(interval_grid, [1.0], 0.3)
    assert not oracle_double_complement(interval_grid, [10.0], 0.3)


def test_empty_complement_sample():
    g = build_grid_oracle(Ball([0, 0], 1), ([-1, -1], [1, 1]), 0.1, 5.0)
    assert g.counts()["IN_MINUS_S"] == 0
    with pytest.warns(EmptyComplementSample):
        assert oracle_double_complement(g, [0, 0], 0.5)


def test_eps_warning_and_cap():
    with pytest.warns(UserWarning, match="below 2"):
        build_grid_oracle(Ball([0], 1), ([-2], [2]), 0.1, 0.15)
    with pytest.raises(GridTooLarge):
        build_grid_oracle(Ball([0, 0, 0], 1), step=0.001, eps=0.002)


def test_kdtree_matches_brute_force(rng):
    g = build_grid_oracle(random_body("vpolytope", 2, 7, seed=2), step=0.02, eps=0.04)
    X = rng.uniform(g.bbox[0], g.bbox[1], (500, 2))
    np.testing.assert_allclose(g.nearest_complement(X), g.nearest_complement(X, "brute"))
    np.testing.assert_array_equal(oracle_double_complements(g, X, 0.07),
                                  oracle_double_complements(g, X, 0.07, "brute"))


def test_grid_level_complement_characterization():
    """A grid point passes iff its margin-neighbourhood holds no complement label (brute force)."""
    g = build_grid_oracle(HPolytope.box_from_bounds([0, 0], [1, 1]), step=0.05, eps=0.1)
    margin = g.eps + g.resolution
    C = g.complement_points
    lo, hi = g.bbox
    inner = np.all((g.points - margin >= lo - 1e-12) & (g.points + margin <= hi + 1e-12), axis=1)
    brute = np.array([not np.any(np.linalg.norm(C - p, axis=1) < margin) for p in g.points])
    np.testing.assert_array_equal(oracle_double_complements(g, g.points, margin), brute & inner)
    # and the passing grid points are interior, at least eps away from the boundary up to a step
    P = g.points[brute & inner]
    assert np.all(g.body.interior_margins(P) >= g.eps - g.step)


@pytest.mark.parametrize("kind", ["hpolytope", "vpolytope", "ball"])
@pytest.mark.parametrize("dim", [1, 2, 3])
def test_random_body_contract(kind, dim):
    for seed in range(4):
        b = random_body(kind, dim, 8, seed)
        assert dumps(b) == dumps(random_body(kind, dim, 8, seed))
        assert chebyshev_ball(b).radius >= 0.05 - 1e-9
        if kind == "ball":
            assert 0.1 <= b.radius <= 1 and np.all(np.abs(b.center) <= 1)
    with pytest.raises(ValueError):
        random_body("torus", 2)


def test_located_interior_square():
    r = verify_theorem("located-interior", HPolytope.box_from_bounds([0, 0], [1, 1]), samples=4000)
    assert r.passed and r.agreement == 1.0 and r.violations == []
    assert 0 <= r.agreement <= 1 and r.band == pytest.approx(0.02)


def test_located_interior_sandwich():
    s = SandwichSet(VPolytope([[0.0], [1.0]]), VPolytope([[0.0], [2.0]]))
    r = verify_theorem("located-interior", s, samples=4000)
    assert r.passed and r.body["type"] == "sandwich"


def test_degenerate_segment():
    r = verify_theorem("degenerate-empty", VPolytope([[0, 0], [2, 0]]), samples=4000)
    assert r.passed and r.notes["oracle_inside"] == 0


def test_degenerate_detects_full_body():
    r = verify_theorem("degenerate-empty", HPolytope.box_from_bounds([0, 0], [1, 1]), samples=2000)
    assert not r.passed and r.violations


def test_wrong_margin_is_caught():
    """A margin below the grid resolution lets exterior points pass, and the campaign must fail."""
    r = verify_theorem("located-interior", Ball([0, 0], 1), samples=2000, margin=0.001)
    assert not r.passed


@pytest.mark.parametrize("theorem", ["double-complement-convex", "closure-interior"])
@pytest.mark.parametrize("kind", ["hpolytope", "vpolytope", "ball"])
def test_other_campaigns(theorem, kind):
    r = verify_theorem(theorem, random_body(kind, 2, 6, seed=7), samples=300, seed=1)
    assert r.passed, r.summary()


def test_unknown_theorem(unit_square):
    with pytest.raises(ValueError):
        verify_theorem("pythagoras", unit_square)


def test_report_determinism():
    b = random_body("vpolytope", 2, 6, seed=3)
    a = verify_theorem("located-interior", b, samples=500, seed=9).to_dict()
    c = verify_theorem("located-interior", b, samples=500, seed=9).to_dict()
    a.pop("wall_time"), c.pop("wall_time")
    assert json.dumps(a) == json.dumps(c)
    keys = list(verify_theorem("located-interior", b, samples=10, seed=9).to_dict())
    assert keys[:3] == ["theorem", "body", "grid"] and keys[-1] == "wall_time"
