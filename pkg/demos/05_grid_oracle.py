"""The brute-force referee: sampled -(-K) against the interior test.

Run: python3 demos/05_grid_oracle.py
"""
from metric_complements import (
    HPolytope, VPolytope, build_grid_oracle, oracle_double_complement, random_body, verify_theorem,
)

interval = VPolytope([[0.0], [1.0]])
g = build_grid_oracle(interval, ([-1.0], [3.0]), step=0.01, eps=0.02)
print("labels on [-1, 3]:", g.counts())
for x in (0.5, 1.0, 10.0):
    print(f"  sampled -(-K) at {x}: {oracle_double_complement(g, [x], 0.3)}")

square = HPolytope.box_from_bounds([0, 0], [1, 1])
print(verify_theorem("located-interior", square).summary())
print(verify_theorem("degenerate-empty", VPolytope([[0, 0], [2, 0]])).summary())
for kind in ("hpolytope", "vpolytope", "ball"):
    body = random_body(kind, 2, 8, seed=1)
    print(verify_theorem("double-complement-convex", body, samples=1000).summary())
    print(verify_theorem("closure-interior", body, samples=1000).summary())
