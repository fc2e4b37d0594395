"""Segment coloring of the forest hanging off a seed set, and a sprinkling run.

Run: python3 demos/03_coloring_and_sprinkling.py
"""

import numpy as np

from twocore import erdos_renyi
from twocore.diagnostics import (
    color_forest,
    random_rooted_forest,
    seed_core_experiment,
    sprinkling_bound,
    verify_lemma6,
)

rng = np.random.default_rng(0)
g, H = random_rooted_forest(rng, 400, n_trees=3)
for ell in (2, 4, 8):
    cf = color_forest(g, H, ell)
    counts = {c: sum(1 for v in cf.color.values() if v == c) for c in ("red", "purple", "black", "gray")}
    rep = verify_lemma6(cf)
    print(f"ell={ell}: {len(cf.segments)} complete segments, colors {counts}, "
          f"min colored/regular upstream ratio {rep.min_ratio:.3f}")

print()
b = sprinkling_bound(1000, 100, 0.1, 0.5, 5)
print(f"union bound 2^(n/ell)(1-beta^L)^(delta n/2 - n/ell) at n=1000: {b.raw:.1f} (vacuous={b.vacuous})")
for beta in (0.5, 0.7, 0.9):
    b = sprinkling_bound(10**6, 100, 0.1, beta, 5)
    print(f"n=1e6, beta={beta}: log bound {b.log_bound:.1f} (vacuous={b.vacuous})")

print()
rep = seed_core_experiment(erdos_renyi(20_000, 4, 5), 0.5, 0.7, 5, seed=5)
print(f"seed set H of {rep.H_size} vertices, {rep.F_trees} trees of size >= 5 outside it,")
print(f"{rep.disjoint_paths} edge-disjoint H-F paths; after sprinkling (beta={rep.beta:.2f}) "
      f"the giant has a 2-core of {rep.two_core_after_sprinkle} vertices")
