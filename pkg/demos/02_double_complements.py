"""Metric complements, double complements and the sandwich construction.

Run: python3 demos/02_double_complements.py
"""
from metric_complements import (
    Ball, SandwichSet, VPolytope, double_complement_membership, in_metric_complement,
    metric_complement_witness,
)

disk = Ball([0, 0], 1)
print("(3, 0) bounded away from the disk at r = 1:", in_metric_complement(disk, [3, 0], 1.0))
print("certified separation:", metric_complement_witness(disk, [3, 0], 1.0))
print("(1.0005, 0) at r = 0.01:", in_metric_complement(disk, [1.0005, 0], 1e-2))

for x in ([0, 0], [1, 0], [2, 0]):
    v = double_complement_membership(disk, x)
    print(f"-(-disk) at {x}: {v.status.value} (margin {v.margin:g})")

# Only bounds on K are known: [0, 1] inside K inside [0, 2], with nothing in
# [0, 2] provably outside K.  The double complement of K is then (0, 2),
# decided without ever deciding membership in K itself.
K = SandwichSet(VPolytope([[0.0], [1.0]]), VPolytope([[0.0], [2.0]]))
for x in (1.5, -0.5, 2.5, 0.0, 2.0):
    print(f"sandwich -(-K) at {x:+.1f}: {double_complement_membership(K, [x]).status.value}")
