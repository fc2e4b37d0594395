"""Seeded random-graph models.

Every generator is a pure function of its parameters and seed.  Multigraph
intermediates (configuration model, household attachment) are erased to simple
graphs by :meth:`Graph.from_edges`.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

import numpy as np

from .graph import Graph, disjoint_union

MODELS = ("erdos_renyi", "configuration", "random_regular", "household_triangle", "disjoint_regular")
_ALIASES = {"er": "erdos_renyi", "cm": "configuration", "rr": "random_regular",
            "household": "household_triangle", "dr": "disjoint_regular"}


class RegularityWarning(UserWarning):
    """random_regular fell back to an erased, only near-regular graph."""


def _rng(seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def _pair_index_to_edge(idx: np.ndarray) -> np.ndarray:
    # lower-triangular enumeration: idx = u(u-1)/2 + v with v < u
    u = ((1 + np.sqrt(1 + 8 * idx.astype(np.float64))) // 2).astype(np.int64)
    base = u * (u - 1) // 2
    u = np.where(base > idx, u - 1, u)
    base = u * (u - 1) // 2
    u = np.where(idx - base >= u, u + 1, u)
    base = u * (u - 1) // 2
    return np.stack([idx - base, u], axis=1)


def erdos_renyi(n: int, c: float, seed: int) -> Graph:
    """G(n, c/(n-1)) by geometric skipping over the n(n-1)/2 vertex pairs."""
    if n < 0 or c < 0:
        raise ValueError("need n >= 0 and c >= 0")
    if n > 0 and c >= n:
        raise ValueError(f"mean degree c={c} must be < n={n}")
    if n < 2 or c == 0:
        return Graph.empty(n)
    p = c / (n - 1)
    total = n * (n - 1) // 2
    if p >= 1:
        return Graph.from_edges(n, _pair_index_to_edge(np.arange(total, dtype=np.int64)))
    rng = _rng(seed)
    chunks = []
    pos = -1
    batch = int(total * p + 10 * math.sqrt(total * p) + 64)
    while True:
        gaps = rng.geometric(p, size=batch)
        idx = pos + np.cumsum(gaps)
        chunks.append(idx[idx < total])
        if idx[-1] >= total:
            break
        pos = int(idx[-1])
    return Graph.from_edges(n, _pair_index_to_edge(np.concatenate(chunks)))


def configuration_model(degrees: Sequence[int], seed: int) -> Graph:
    """Erased configuration model: uniform stub matching, then loops/multi-edges dropped."""
    deg = np.asarray(degrees, dtype=np.int64)
    n = len(deg)
    if np.any(deg < 0):
        raise ValueError("degrees must be non-negative")
    if deg.sum() % 2:
        raise ValueError("degree sum must be even")
    if n and deg.max() >= n:
        raise ValueError("every degree must be < n")
    stubs = np.repeat(np.arange(n, dtype=np.int64), deg)
    stubs = _rng(seed).permutation(stubs)
    return Graph.from_edges(n, stubs.reshape(-1, 2))


def _pair_stubs_simple(n: int, d: int, rng: np.random.Generator) -> np.ndarray | None:
    """One pairing of the n*d points that never creates loops or repeated edges.

    Two free points are drawn uniformly and paired when admissible.  Returns
    None once no admissible pair is left among the free points.
    """
    pts = np.repeat(np.arange(n, dtype=np.int64), d).tolist()
    adj: list[set[int]] = [set() for _ in range(n)]
    edges = []
    misses = 0
    while pts:
        i, j = rng.integers(len(pts), size=2)
        u, w = pts[i], pts[j]
        if i == j or u == w or w in adj[u]:
            misses += 1
            if misses > 64:
                if not _has_admissible_pair(pts, adj):
                    return None
                misses = 0
            continue
        misses = 0
        adj[u].add(w)
        adj[w].add(u)
        edges.append((u, w))
        for k in sorted((i, j), reverse=True):
            pts[k] = pts[-1]
            pts.pop()
    return np.asarray(edges, dtype=np.int64).reshape(-1, 2)


def _has_admissible_pair(pts: list[int], adj: list[set[int]]) -> bool:
    verts = sorted(set(pts))
    return any(w not in adj[u] for a, u in enumerate(verts) for w in verts[a + 1 :])


def random_regular(n: int, d: int, seed: int, max_retries: int = 100) -> Graph:
    """Random d-regular graph.

    Each attempt first draws a plain configuration-model matching; if that is
    not simple it tries an admissible-partner pairing.  After ``max_retries``
    failed attempts the last erased graph is returned with
    ``warn_flag`` set and a :class:`RegularityWarning` issued.
    """
    if (n * d) % 2:
        raise ValueError("n*d must be even")
    if d < 0 or (n > 0 and d >= n):
        raise ValueError("need 0 <= d < n")
    rng = _rng(seed)
    last = None
    for _ in range(max_retries):
        stubs = rng.permutation(np.repeat(np.arange(n, dtype=np.int64), d))
        g = Graph.from_edges(n, stubs.reshape(-1, 2))
        if g.m * 2 == n * d:
            return g
        last = g
        pairs = _pair_stubs_simple(n, d, rng)
        if pairs is not None:
            return Graph.from_edges(n, pairs)
    warnings.warn(f"random_regular(n={n}, d={d}) returned a near-regular graph", RegularityWarning)
    object.__setattr__(last, "warn_flag", True)
    return last


def household_triangle(base: Graph, seed: int) -> Graph:
    """Replace each base vertex v by triangle {3v, 3v+1, 3v+2}; attach base edges to random members."""
    n = base.n
    v = np.arange(n, dtype=np.int64)
    tri = np.concatenate([
        np.stack([3 * v, 3 * v + 1], axis=1),
        np.stack([3 * v + 1, 3 * v + 2], axis=1),
        np.stack([3 * v, 3 * v + 2], axis=1),
    ])
    e = base.edges()
    picks = _rng(seed).integers(0, 3, size=(len(e), 2))
    attached = 3 * e + picks
    return Graph.from_edges(3 * n, np.concatenate([tri, attached]))


def disjoint_regular(n: int, d: int, seed: int) -> Graph:
    """ceil(sqrt(n)) independent random d-regular graphs on ceil(sqrt(n)) vertices each."""
    k = math.isqrt(n)
    if k * k < n:
        k += 1
    if d >= k or (d * k) % 2:
        raise ValueError(f"need d < {k} and d*{k} even")
    seeds = np.random.SeedSequence(seed).spawn(k)
    parts = [random_regular(k, d, int(s.generate_state(1, np.uint64)[0])) for s in seeds]
    return disjoint_union(parts)


@dataclass
class GeneratorSpec:
    model: str
    params: dict[str, Any] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        self.model = _ALIASES.get(self.model, self.model)
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; choose from {MODELS}")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str | dict) -> "GeneratorSpec":
        obj = json.loads(text) if isinstance(text, str) else dict(text)
        return cls(obj["model"], dict(obj.get("params", {})), int(obj.get("seed", 0)))

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "GeneratorSpec":
        """Parse ``model:key=val,key=val`` (or a JSON object)."""
        text = text.strip()
        if text.startswith("{"):
            return cls.from_json(text)
        model, _, rest = text.partition(":")
        params: dict[str, Any] = {}
        for item in filter(None, rest.split(",")):
            k, _, v = item.partition("=")
            params[k.strip()] = _number(v.strip())
        if "seed" in params:
            seed = int(params.pop("seed"))
        return cls(model, params, seed)

    def build(self) -> Graph:
        p = self.params
        if self.model == "erdos_renyi":
            return erdos_renyi(int(p["n"]), float(p["c"]), self.seed)
        if self.model == "configuration":
            return configuration_model(p["degrees"], self.seed)
        if self.model == "random_regular":
            return random_regular(int(p["n"]), int(p["d"]), self.seed)
        if self.model == "disjoint_regular":
            return disjoint_regular(int(p["n"]), int(p["d"]), self.seed)
        # household over an ER base by default
        base_seed, own_seed = np.random.SeedSequence(self.seed).generate_state(2, np.uint64)
        base = erdos_renyi(int(p["n"]), float(p["c"]), int(base_seed))
        return household_triangle(base, int(own_seed))


def _number(s: str):
    try:
        return int(s)
    except ValueError:
        return float(s)
