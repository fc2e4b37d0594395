"""Exact ground truth: coreness, the 2-core, its components, and planted-ray local membership."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import ComponentLabeling, Graph, connected_components, induced_subgraph


def coreness(g: Graph) -> np.ndarray:
    """Core number of every vertex."""
    if g.n == 0:
        return np.zeros(0, dtype=np.int64)
    return _kernels.core_numbers(g.indptr, g.indices, g.n)


@dataclass(frozen=True)
class CoreResult:
    n: int
    m: int
    two_core: np.ndarray  # sorted vertex ids
    two_core_components: ComponentLabeling  # labels in original ids, -1 outside the core
    frac_cmax: float
    frac_c2: float
    frac_c2max: float

    @property
    def c2max(self) -> np.ndarray:
        cid = self.two_core_components.largest_id
        if cid is None:
            return np.zeros(0, dtype=np.int64)
        return self.two_core_components.members(cid)

    def as_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "frac_cmax": self.frac_cmax,
                "frac_c2": self.frac_c2, "frac_c2max": self.frac_c2max}


def two_core_mask(g: Graph) -> np.ndarray:
    if g.n == 0:
        return np.zeros(0, dtype=bool)
    return _kernels.peel_two_core(g.indptr, g.indices, g.n)


def two_core(g: Graph) -> CoreResult:
    mask = two_core_mask(g)
    core = np.flatnonzero(mask)
    sub, ids = induced_subgraph(g, core)
    sub_cc = connected_components(sub)
    label = np.full(g.n, -1, dtype=np.int64)
    # component ids are the smallest original vertex id, since ids is sorted
    label[ids] = ids[sub_cc.label] if len(ids) else []
    sizes = {int(ids[c]): s for c, s in sub_cc.sizes.items()}
    comps = ComponentLabeling(label, sizes)
    cc = connected_components(g)
    n = max(g.n, 1)
    cmax = max(cc.sizes.values(), default=0)
    c2max = max(sizes.values(), default=0)
    return CoreResult(g.n, g.m, core, comps, cmax / n, len(core) / n, c2max / n)


def c2_ell_set(g: Graph, ell: int) -> np.ndarray:
    """Vertices v whose radius-ell ball, with a ray planted on every distance-ell vertex,
    keeps v in an infinite component of its 2-core.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if g.n == 0:
        return np.zeros(0, dtype=np.int64)
    return np.flatnonzero(_kernels.c2_ell_mask(g.indptr, g.indices, g.n, ell))


def gadget_membership(g: Graph, root: int, members, frontier) -> tuple[bool, bool]:
    """Independent check of planted-ray membership via finite gadgets.

    Builds the subgraph induced by ``members``, hangs a pendant edge ending in a
    fresh triangle off every ``frontier`` vertex, and runs plain 2-core peeling.
    Returns (root in the 2-core, root's 2-core component contains a gadget).
    """
    sub, ids = induced_subgraph(g, members)
    pos = {int(v): i for i, v in enumerate(ids)}
    edges = [tuple(e) for e in sub.edges().tolist()]
    nxt = sub.n
    gadget_tops = []
    for f in frontier:
        a, b, c = nxt, nxt + 1, nxt + 2
        nxt += 3
        edges += [(pos[int(f)], a), (a, b), (b, c), (a, c)]
        gadget_tops.append(a)
    h = Graph.from_edges(nxt, edges)
    res = two_core(h)
    r = pos[int(root)]
    lab = res.two_core_components.label
    if lab[r] < 0:
        return False, False
    return True, any(lab[a] == lab[r] for a in gadget_tops)


def er_branching_oracle(lam: float, tol: float = 1e-12) -> tuple[float, float]:
    """Poisson(lam) branching limits: survival probability and giant-2-core probability.

    The survival probability is the largest root of z = 1 - exp(-lam z); the
    giant 2-core probability is P(Poisson(lam z) >= 2) = 1 - (1 + lam z) exp(-lam z).
    """
    if lam < 0:
        raise ValueError("lam must be >= 0")
    if lam <= 1:
        return 0.0, 0.0
    f = lambda z: 1.0 - math.exp(-lam * z) - z
    # f > 0 just above 0 when lam > 1, and f(1) < 0
    lo, hi = min(1e-9, 0.5 * (1 - 1 / lam)), 1.0
    while f(lo) <= 0:
        lo /= 2
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    z = 0.5 * (lo + hi)
    return z, 1.0 - (1.0 + lam * z) * math.exp(-lam * z)
