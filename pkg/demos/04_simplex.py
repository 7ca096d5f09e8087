"""The regular simplex, its inradius and how far its vertices may move.

Run: python3 demos/04_simplex.py
"""
import numpy as np

from metric_complements import inradius_at, perturbation_check, perturbation_tolerance, regular_simplex
from metric_complements.simplex import regularity_report

rng = np.random.default_rng(0)
print(" n  side       inradius  1/n       delta    failures")
for n in (1, 2, 3, 5, 8):
    s = regular_simplex(n)
    rep = regularity_report(s.vertices)
    r = inradius_at(s, np.zeros(n))
    if n >= 2:
        delta = perturbation_tolerance(s, np.zeros(n), rng)
        fails = perturbation_check(s, np.zeros(n), delta * (1 - 1e-3), rng, 10_000)["failures"]
        extra = f"{delta:.4f}   {fails}"
    else:
        extra = "-"
    print(f"{n:2d}  {rep['side_length']:.6f}  {r:.6f}  {1 / n:.6f}  {extra}")
