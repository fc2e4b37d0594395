"""Local sampling estimator for the 2-core and the giant 2-core.

Each sample draws a uniform root, explores the largest BFS ball with at most
``K`` vertices, and decides whether the root is potentially in the 2-core
(and in an infinite piece of it) by peeling the ball with one virtual unit of
degree on every truncation-frontier vertex.
"""

from __future__ import annotations

import math
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Literal, Sequence

import numpy as np

from . import _kernels
from ._rng import STREAM_SAMPLES, mix_key
from .graph import Graph

Mode = Literal["semantic", "paper_literal"]
MODES = ("semantic", "paper_literal")
THREADS_ENV = "TWOCORE_THREADS"


@dataclass(frozen=True)
class Ball:
    root: int
    R: int
    members: np.ndarray  # BFS order, root first
    dist: np.ndarray  # aligned with members
    induced_edges: np.ndarray  # (k, 2) original ids, u < v
    frontier: np.ndarray
    truncated: bool
    degree_overflow: bool = False

    @property
    def S(self) -> int:
        return len(self.members)


def explore_ball(g: Graph, v: int, K: int) -> Ball:
    if K < 2:
        raise ValueError("K must be >= 2")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if g.degree(v) >= K:
        return Ball(v, 0, np.array([v]), np.array([0]), np.zeros((0, 2), dtype=np.int64),
                    np.zeros(0, dtype=np.int64), True, degree_overflow=True)
    mark = np.zeros(g.n, dtype=np.int64)
    dist = np.zeros(g.n, dtype=np.int64)
    order = np.empty(min(g.n, K + 1), dtype=np.int64)
    S, R, trunc = _kernels.explore(g.indptr, g.indices, v, K, _kernels.NO_CAP, 1, mark, dist, order)
    members = order[:S].copy()
    inside = mark == 1
    src = np.repeat(members, g.indptr[members + 1] - g.indptr[members])
    dst = np.concatenate([g.neighbors(u) for u in members])
    keep = inside[dst] & (src < dst)
    edges = np.stack([src[keep], dst[keep]], axis=1)
    d = dist[members]
    frontier = members[d == R] if trunc else np.zeros(0, dtype=np.int64)
    return Ball(v, int(R), members, d, edges, frontier, bool(trunc))


def protected_peeling(members: Sequence[int], edges: np.ndarray, protected) -> set[int]:
    """Survivors of peeling while (degree + [protected]) <= 1."""
    adj: dict[int, set[int]] = {int(u): set() for u in members}
    for u, w in np.asarray(edges).reshape(-1, 2).tolist():
        adj[u].add(w)
        adj[w].add(u)
    prot = {int(f) for f in protected}
    deg = {u: len(nb) + (u in prot) for u, nb in adj.items()}
    alive = set(adj)
    queue = deque(u for u in adj if deg[u] <= 1)
    alive -= set(queue)
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    alive.discard(w)
                    queue.append(w)
    return alive


def classify(ball: Ball, mode: Mode = "semantic") -> tuple[int, int]:
    """(I2_t, I2inf_t) for one explored ball."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if ball.degree_overflow:
        return 1, 1
    alive = protected_peeling(ball.members, ball.induced_edges, ball.frontier)
    if ball.root not in alive:
        return 0, 0
    if mode == "paper_literal":
        return 1, int(len(ball.frontier) > 0)
    frontier = {int(f) for f in ball.frontier}
    adj: dict[int, list[int]] = {u: [] for u in alive}
    for u, w in ball.induced_edges.tolist():
        if u in alive and w in alive:
            adj[u].append(w)
            adj[w].append(u)
    seen = {ball.root}
    queue = deque([ball.root])
    while queue:
        u = queue.popleft()
        if u in frontier:
            return 1, 1
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return 1, 0


def sample_size(epsilon: float) -> int:
    """Hoeffding sample count T = ceil((8 / eps^2) ln(8 / eps)).

    With this T, P(|mean - E| >= eps/4) <= 2 exp(-2 T (eps/4)^2) <= eps/4.
    """
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    return math.ceil(8.0 / epsilon**2 * math.log(8.0 / epsilon))


@dataclass
class EstimateReport:
    I2: float
    I2inf: float
    T: int
    K: int
    seed: int
    mode: str
    epsilon: float | None = None
    sum_I2: int = 0
    sum_I2inf: int = 0
    per_sample: np.ndarray | None = field(default=None, repr=False)  # columns: vertex, I2_t, I2inf_t
    exact_comparison: dict | None = None

    def as_dict(self, include_samples: bool = False) -> dict:
        d = asdict(self)
        d.pop("per_sample")
        if include_samples and self.per_sample is not None:
            d["per_sample"] = self.per_sample.tolist()
        return d


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def estimate(
    g: Graph,
    K: int,
    T: int,
    seed: int,
    mode: Mode = "semantic",
    *,
    workers: int | None = None,
    keep_samples: bool = False,
    epsilon: float | None = None,
    with_exact: bool = False,
) -> EstimateReport:
    """Monte Carlo estimate of the 2-core and giant-2-core fractions.

    The root of sample ``t`` is a pure function of ``(seed, t)``, so the report
    does not depend on ``workers``.
    """
    if K < 2 or T < 1:
        raise ValueError("need K >= 2 and T >= 1")
    if g.n < 1:
        raise ValueError("cannot sample from an empty graph")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    workers = workers or default_workers()
    key = mix_key(seed, STREAM_SAMPLES)
    vs = np.empty(T, dtype=np.int64)
    i2 = np.empty(T, dtype=np.int8)
    i2inf = np.empty(T, dtype=np.int8)
    literal = mode == "paper_literal"
    bounds = np.linspace(0, T, min(workers, T) + 1).astype(np.int64)

    def run(k):
        _kernels.estimate_range(g.indptr, g.indices, g.n, K, key, bounds[k], bounds[k + 1],
                                literal, vs, i2, i2inf)

    if len(bounds) == 2:
        run(0)
    else:
        with ThreadPoolExecutor(len(bounds) - 1) as pool:
            list(pool.map(run, range(len(bounds) - 1)))
    s2, s2inf = int(i2.sum(dtype=np.int64)), int(i2inf.sum(dtype=np.int64))
    rep = EstimateReport(s2 / T, s2inf / T, T, K, int(seed), mode, epsilon, s2, s2inf)
    if keep_samples:
        rep.per_sample = np.stack([vs, i2, i2inf], axis=1)
    if with_exact:
        from .cores import two_core

        ex = two_core(g)
        rep.exact_comparison = {
            "frac_c2": ex.frac_c2, "frac_c2max": ex.frac_c2max,
            "gap_I2": rep.I2 - ex.frac_c2, "gap_I2inf": rep.I2inf - ex.frac_c2max,
        }
    return rep


def sweep(spec, p_grid: Sequence[float], K: int, T: int, seed: int, with_exact: bool = True,
          mode: Mode = "semantic", graph: Graph | None = None, workers: int | None = None) -> list[dict]:
    """Estimate along a percolation path ``p_grid`` on one coupled base graph.

    ``spec`` is a GeneratorSpec (ignored when ``graph`` is given).
    """
    from .cores import two_core
    from .percolation import draw_coupling, percolate_at

    if any(not 0 <= p <= 1 for p in p_grid):
        raise ValueError("p_grid must lie in [0, 1]")
    base = graph if graph is not None else spec.build()
    coupling = draw_coupling(base, seed)
    rows = []
    for p in p_grid:
        gp = percolate_at(coupling, p)
        rep = estimate(gp, K, T, seed, mode, workers=workers)
        row = {"p": float(p), "I2": rep.I2, "I2inf": rep.I2inf, "frac_c2": None, "frac_c2max": None}
        if with_exact:
            ex = two_core(gp)
            row["frac_c2"], row["frac_c2max"] = ex.frac_c2, ex.frac_c2max
        rows.append(row)
    return rows


def literal_branch_count(g: Graph, v: int, K: int) -> tuple[int, int]:
    """Branch/cycle/reach bookkeeping of the textbook exploration routine, kept as written.

    Two readings are needed to make it executable: the root counts as visited,
    and the tree edge back to a vertex's BFS parent is not treated as closing a
    cycle.  Truncation is vertex-granular (stop as soon as S > K).
    """
    nb_v = g.neighbors(v).tolist()
    if len(nb_v) >= K:
        return 1, 1
    r_of: dict[int, int] = {v: 0}
    branch: dict[int, int] = {}
    parent: dict[int, int] = {}
    reach: dict[int, int] = {}
    cycle: dict[int, bool] = {}
    S = 1
    queue = deque()
    for u in nb_v:
        r_of[u] = 1
        branch[u] = u
        parent[u] = v
        reach[u] = 1
        cycle[u] = False
        S += 1
        queue.append(u)
    r = 0
    stop = False
    while queue and not stop:
        u = queue.popleft()
        r = r_of[u]
        for w in g.neighbors(u).tolist():
            if w == parent[u]:
                continue
            if w not in r_of:
                r_of[w] = r + 1
                branch[w] = branch[u]
                parent[w] = u
                reach[branch[u]] = r + 1
                S += 1
                if S > K:
                    stop = True
                    break
                queue.append(w)
            else:
                cycle[branch[u]] = True
    if S >= K:
        hit = sum(1 for u in nb_v if cycle[u] or reach[u] == r)
        ind = int(hit >= 2)
        return ind, ind
    return int(sum(1 for u in nb_v if cycle[u]) >= 2), 0
