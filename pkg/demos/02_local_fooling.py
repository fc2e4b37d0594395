"""Locally tree-like but globally fragmented graphs fool any local estimator.

sqrt(n) disjoint random regular graphs look, from inside a small ball, exactly
like one large random regular graph.  The estimator says "giant 2-core" while
the largest 2-core component has only sqrt(n) vertices.

Run: python3 demos/02_local_fooling.py
"""

from twocore import disjoint_regular, estimate, random_regular, two_core
from twocore.diagnostics import find_balanced_cut

n, d = 10_000, 5
for name, g in (("one random 5-regular graph", random_regular(n, d, 3)),
                ("100 disjoint copies on 100 vertices", disjoint_regular(n, d, 3))):
    rep = estimate(g, K=50, T=5_000, seed=3, with_exact=True)
    cut = find_balanced_cut(g, 0.25, iters=4, seed=0)
    print(f"{name}:")
    print(f"  I2inf = {rep.I2inf:.3f}   exact |C2max|/n = {rep.exact_comparison['frac_c2max']:.3f}")
    print(f"  best balanced cut found: {cut.crossing} crossing edges "
          f"(sides {cut.size_a}/{cut.size_b})")
