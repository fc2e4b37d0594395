"""Union bound for sprinkling into colored segments, and a concrete seed-core experiment."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import asdict, dataclass

import numpy as np

from ..cores import two_core_mask
from ..graph import Graph, connected_components, induced_subgraph
from ..percolation import draw_coupling, percolate_at, sprinkle
from .flow import edge_disjoint_paths
from .forest import StructureError


@dataclass(frozen=True)
class SprinklingBound:
    log_bound: float  # natural log; -inf when the bound is exactly 0
    bound: float  # min(1, exp(log_bound))
    exponent: float  # delta*n/2 - n/ell
    vacuous: bool  # exponent <= 0 or the raw bound is >= 1

    @property
    def raw(self) -> float:
        return math.exp(self.log_bound) if self.log_bound < 700 else math.inf


def sprinkling_bound(n: float, ell: float, delta: float, beta: float, L: float) -> SprinklingBound:
    """2^(n/ell) * (1 - beta^L)^(delta n / 2 - n / ell), evaluated in log space."""
    if n < 1 or ell < 1 or not 0 < beta <= 1 or delta <= 0 or L <= 0:
        raise ValueError("need n, ell >= 1; 0 < beta <= 1; delta, L > 0")
    expo = delta * n / 2 - n / ell
    base = 1.0 - beta**L
    head = (n / ell) * math.log(2)
    if base == 0.0:
        log_b = -math.inf if expo > 0 else (head if expo == 0 else math.inf)
    else:
        log_b = head + expo * math.log(base)
    vacuous = expo <= 0 or log_b >= 0
    return SprinklingBound(log_b, min(1.0, math.exp(min(log_b, 0.0))), expo, vacuous)


def short_path_length(mean_degree: float, delta: float) -> float:
    """Length cap L = mean degree / delta for at least half of delta*n disjoint paths."""
    return mean_degree / delta


@dataclass
class SeedCoreReport:
    n: int
    cmax_size: int
    H_size: int
    F_trees: int
    F_size: int
    disjoint_paths: int | None
    disjoint_paths_filtered: int | None
    beta: float
    two_core_after_sprinkle: int
    nonempty_after_sprinkle: bool

    def as_dict(self) -> dict:
        return asdict(self)


def _bfs_prefix(g: Graph, start: int, size: int) -> list[int]:
    out, seen, queue = [], {start}, deque([start])
    while queue and len(out) < size:
        u = queue.popleft()
        out.append(u)
        for w in g.neighbors(u).tolist():
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return out


def seed_core_experiment(g: Graph, p_low: float, p_high: float, ell: int, seed: int,
                         epsilon: float | None = None, count_paths: bool = True) -> SeedCoreReport:
    """Two-step construction on one coupling.

    Percolate at ``p_low``, grow a connected seed H inside the largest
    component by BFS from its smallest-id leaf, collect the trees of size
    >= ``ell`` left after removing H (the forest F), count edge-disjoint H-F
    paths in the base graph (also with the F-to-H attachment edges removed),
    then sprinkle up to ``p_high`` and record whether the largest component
    now has a nonempty 2-core.
    """
    if not p_low < p_high:
        raise ValueError("need p_low < p_high")
    if ell < 2:
        raise ValueError("ell must be >= 2")
    coupling = draw_coupling(g, seed)
    low = percolate_at(coupling, p_low)
    cc = connected_components(low)
    cid = cc.largest_id
    cmax = cc.members(cid) if cid is not None else np.zeros(0, dtype=np.int64)
    n = g.n
    if epsilon is None:
        epsilon = 0.2 * len(cmax) / max(n, 1)
    h_size = int(math.floor(epsilon * n / 2))
    if h_size < 1 or len(cmax) < h_size:
        raise StructureError(
            f"largest component has {len(cmax)} vertices, cannot host H of size {h_size}")
    deg = low.degree()
    leaves = cmax[deg[cmax] == 1]
    start = int(leaves[0]) if len(leaves) else int(cmax[0])
    H = _bfs_prefix(low, start, h_size)
    in_h = np.zeros(n, dtype=bool)
    in_h[H] = True
    rest = cmax[~in_h[cmax]]
    sub, ids = induced_subgraph(low, rest)
    scc = connected_components(sub)
    ecount: dict[int, int] = {}
    se = sub.edges()
    for c in scc.label[se[:, 0]].tolist():
        ecount[c] = ecount.get(c, 0) + 1
    F: list[int] = []
    trees = 0
    for c, s in scc.sizes.items():
        if s >= ell and ecount.get(c, 0) == s - 1:
            F.extend(ids[scc.members(c)].tolist())
            trees += 1
    paths = filtered = None
    if count_paths and F:
        paths = edge_disjoint_paths(g, H, F)
        in_f = np.zeros(n, dtype=bool)
        in_f[F] = True
        le = low.edges()
        attach = (in_f[le[:, 0]] & in_h[le[:, 1]]) | (in_h[le[:, 0]] & in_f[le[:, 1]])
        drop = {tuple(x) for x in le[attach].tolist()}
        ge = g.edges()
        keep = [i for i, x in enumerate(ge.tolist()) if tuple(x) not in drop]
        filtered = edge_disjoint_paths(Graph.from_edges(n, ge[keep]), H, F)
    beta = 1.0 - (1.0 - p_high) / (1.0 - p_low)
    aux = int(np.random.SeedSequence([seed, 1]).generate_state(1, np.uint64)[0])
    high = sprinkle(coupling, p_low, p_high, aux)
    hcc = connected_components(high)
    hmax = hcc.members(hcc.largest_id) if hcc.largest_id is not None else np.zeros(0, dtype=np.int64)
    hsub, _ = induced_subgraph(high, hmax)
    core_size = int(two_core_mask(hsub).sum())
    return SeedCoreReport(n, len(cmax), len(H), trees, len(F), paths, filtered, beta,
                          core_size, core_size > 0)
