"""Exact 2-core of a percolated random graph next to the local sampling estimate.

Run: python3 demos/01_exact_vs_local.py
"""

from twocore import draw_coupling, erdos_renyi, estimate, er_branching_oracle, percolate_at, two_core

n, c, seed = 50_000, 4.0, 1
g = erdos_renyi(n, c, seed)
coupling = draw_coupling(g, seed)

print(f"ER(n={n}, c={c}); K=500, T=20000 samples per row")
print(f"{'p':>5} {'exact C2':>9} {'exact C2max':>11} {'I2':>7} {'I2inf':>7} {'branching':>9}")
for p in (0.2, 0.4, 0.6, 0.8, 1.0):
    gp = percolate_at(coupling, p)
    ex = two_core(gp)
    rep = estimate(gp, K=500, T=20_000, seed=seed)
    print(f"{p:5.1f} {ex.frac_c2:9.4f} {ex.frac_c2max:11.4f} {rep.I2:7.4f} {rep.I2inf:7.4f} "
          f"{er_branching_oracle(c * p)[1]:9.4f}")

# Below the threshold cp = 1 there is no giant, and the local estimate still finds small cycles.
