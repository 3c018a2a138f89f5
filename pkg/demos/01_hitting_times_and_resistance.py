"""
Hitting times, effective resistance and Kemeny's constant
=========================================================

A walk through the basic invariants on the 4-vertex path.
"""

import numpy as np

import clusterwalk as cw

np.set_printoptions(precision=4, suppress=True)

# %%
# The path 0-1-2-3.  Hitting times come from first-step linear systems.
p4 = cw.generate("path", 4)
h = cw.hitting_matrix_solve(p4)
print("E_a T_b on P4:\n", h)

# %%
# Effective resistances (unit resistors) give the same matrix through the
# potential identity, and commute times are 2m times the resistance.
res = cw.resistance_matrix(p4)
print("resistances:\n", res.r)
print("same hitting times from resistances:",
      np.allclose(h, cw.hitting_matrix_resistance(p4, res.r)))
print("commute time 0<->3:", h[0, 3] + h[3, 0], "= 2m R_03 =", 2 * p4.m * res.r[0, 3])
print("Kirchhoff index:", res.kirchhoff)

# %%
# Kemeny's constant from the spectrum and from pi-weighted hitting times.
# The second route gives one value per start vertex; they all agree.
kr = cw.kemeny(p4)
print("K spectral:", kr.k_eigen, " K from hitting times:", kr.per_start)

# %%
# A Monte Carlo sanity check of E_0 T_3 = 9.
est = cw.simulate_hitting(p4, 0, 3, trials=200_000, seed=7)
print(f"simulated E_0 T_3 = {est.mean:.3f} +- {est.stderr:.3f}")
