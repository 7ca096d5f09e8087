"""Located convex bodies: projections, distances and interior margins.

Run: python3 demos/01_bodies.py
"""
import numpy as np

from metric_complements import Ball, HPolytope, VPolytope, chebyshev_ball

square = HPolytope.box_from_bounds([0, 0], [1, 1])
triangle = VPolytope([[0, 0], [1, 0], [0, 1]])
disk = Ball([0, 0], 1)

for name, body in [("square", square), ("triangle", triangle), ("disk", disk)]:
    x = np.array([2.0, 3.0])
    print(f"{name:8s} nearest point to {x} is {np.round(body.project(x), 6)}, "
          f"distance {body.distance(x):.6f}")

# The interior margin is the radius of the largest ball around x inside the body,
# and minus the distance when x is outside.
for x in ([0.5, 0.25], [1.0, 0.5], [1.5, 0.5]):
    print(f"square margin at {x}: {square.interior_margin(x):+.4f}")

c = chebyshev_ball(triangle)
print(f"largest ball in the triangle: center {np.round(c.center, 5)}, radius {c.radius:.5f}")

# A segment in the plane is located but has no interior.
segment = VPolytope([[0, 0], [2, 0]])
print(f"segment: affine dimension {segment.affine_dim}, margin at (1, 0) = {segment.interior_margin([1, 0])}")
