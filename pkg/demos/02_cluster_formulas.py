"""
Kemeny's constant and Kirchhoff index of a cluster G1{G2}
=========================================================

Glue a copy of G2 onto every vertex of G1, then compare the closed forms
with exact values computed on the glued graph.
"""

import clusterwalk as cw

c4, k2 = cw.generate("cycle", 4), cw.generate("complete", 2)
cg = cw.cluster(cw.ClusterSpec(c4, k2, root=0))
print(cg.graph, "contact map:", cg.contact)

# %%
# With m1 != m2 the printed Kemeny closed form and the (2m - m2) variant
# disagree; the exact value settles it.
rep = cw.cluster_report(c4, k2)
print("exact K =", rep.k_exact, " exact R =", rep.r_exact)
for name, value in rep.rows.items():
    print(f"  {name:22s} {value:12.6f}   rel dev {rep.deltas[name]:.2e}")

# %%
# Self-clusters G{G}: the derived forms match, the printed (3n+1) K1 form
# and the R-from-K relation built on it do not.
for g in (cw.generate("complete", 2), cw.generate("complete", 3), c4):
    rep = cw.self_cluster_report(g)
    print(f"\n{g.name}{{{g.name}}}: K = {rep.k_exact:.6f}, R = {rep.r_exact:.6f}")
    for name in ("k_self_printed", "k_self_derived", "r_self", "r_from_k_printed", "r_from_k_derived"):
        print(f"  {name:18s} {rep.rows[name]:12.6f}   rel dev {rep.deltas[name]:.2e}")
