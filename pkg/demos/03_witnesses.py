"""Constructive interior witnesses: every answer is a point plus a certified ball.

Run: python3 demos/03_witnesses.py
"""
from metric_complements import (
    Ball, HPolytope, VPolytope, ball_transport, closure_interior_witness, density_witness,
    segment_interior, segment_interior_ball, verify_certificate,
)
from metric_complements.errors import PreconditionFailed

square = HPolytope.box_from_bounds([0, 0], [1, 1])

xi, eta = ball_transport([0, 0], [2, 0], 0.5, 1.0, [1, 0.5])
print("transport: xi =", xi, "eta =", eta)

w = segment_interior_ball(square, [0.5, 0.5], 0.5, [1, 0.5], 0.5)
print(f"segment ball: z = {w.z}, radius {w.radius} (verified {verify_certificate(w.certificate)})")

w = density_witness(VPolytope([[0.0], [1.0]]), [0.5], 0.5, [1.0], 0.5)
print(f"density: z = {w.z}, lambda = {w.lam}, radius {w.radius}")

w = segment_interior(Ball([0, 0], 1), [0, 0], 1.0, [1, 0], 0.9, near_branch=False)
print(f"segment toward the boundary: z = {w.z}, radius {w.radius:.6f}")

w = closure_interior_witness(Ball([0, 0], 1, closed=False), [0, 0], 1.0, [0.5, 0], 0.5)
print(f"closure interior: y = {w.z}, alpha = {w.details['alpha']}, radius {w.radius:.9f}")

try:
    segment_interior_ball(square, [0.5, 0.5], 0.5, [5, 0.5], 0.5)
except PreconditionFailed as exc:
    print("rejected:", exc.hypothesis)
