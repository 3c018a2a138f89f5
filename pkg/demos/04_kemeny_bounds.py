"""
Bounds on Kemeny's constant
===========================

Lower bounds (general, bipartite, majorization, regular-with-diameter) and
the second-eigenvalue upper bound against the exact value.
"""

import numpy as np

import clusterwalk as cw
from clusterwalk.graph_core import random_connected

rows = [cw.generate(*s) for s in [("complete", 4), ("complete_bipartite", 2, 2),
                                   ("path", 4), ("petersen",), ("barbell", 4, 3, 4)]]
rng = np.random.default_rng(3)
rows += [random_connected(10, 0.3, rng) for _ in range(3)]

fmt = lambda v: "   -    " if v is None else f"{v:8.4f}"
print(f"{'graph':16s} {'K':>8s} {'general':>8s} {'bipart':>8s} {'major':>8s} {'diam':>8s} {'upper':>8s}")
for g in rows:
    b = cw.bounds(g)
    print(f"{g.name:16s} {b.k_actual:8.4f} {fmt(b.lower_general)} {fmt(b.lower_bipartite)} "
          f"{fmt(b.lower_majorization)} {fmt(b.lower_diameter)} {fmt(b.upper_eigen)}")

# %%
# Kirchhoff index sits between (n/max deg) K and (n/min deg) K.
for g in rows[:4]:
    s = cw.sandwich_check(g)
    print(f"{g.name:16s} {s.lower:9.4f} <= {s.value:9.4f} <= {s.upper:9.4f}")
