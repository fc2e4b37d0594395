"""Immutable undirected simple graphs in compressed (CSR) adjacency form."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _cc

INF = -1  # marker for unreachable vertices in distance arrays


class GraphFormatError(ValueError):
    """Malformed edge-list input."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``indptr``/``indices`` hold the sorted neighbor lists in CSR layout.
    Build instances with :meth:`from_edges` so normalization always happens.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    dropped_loops: int = field(default=0, compare=False)
    dropped_duplicates: int = field(default=0, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] | np.ndarray) -> "Graph":
        arr = np.asarray(edges, dtype=np.int64)
        if arr.size == 0:
            arr = np.zeros((0, 2), dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("edges must be a sequence of (u, v) pairs")
        if n < 0:
            raise ValueError("n must be non-negative")
        if len(arr) and (arr.min() < 0 or arr.max() >= n):
            raise ValueError(f"edge endpoint out of range for n={n}")
        loops = arr[:, 0] == arr[:, 1]
        arr = arr[~loops]
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        key = np.unique(lo * max(n, 1) + hi)
        dups = len(arr) - len(key)
        lo, hi = key // max(n, 1), key % max(n, 1)
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.add.at(indptr, src + 1, 1)
        np.cumsum(indptr, out=indptr)
        g = cls(n, indptr, dst.astype(np.int64), int(loops.sum()), int(dups))
        g.indptr.setflags(write=False)
        g.indices.setflags(write=False)
        return g

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls.from_edges(n, [])

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def degree(self, v: int | None = None):
        if v is None:
            return np.diff(self.indptr)
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def edges(self) -> np.ndarray:
        """Edge array of shape ``(m, 2)`` with ``u < v``, in ascending order.

        This order is the canonical edge indexing used by percolation couplings.
        """
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        mask = src < self.indices
        return np.stack([src[mask], self.indices[mask]], axis=1)

    def adjacency_lists(self) -> list[list[int]]:
        return [self.neighbors(v).tolist() for v in range(self.n)]

    def to_csr(self) -> csr_matrix:
        data = np.ones(len(self.indices), dtype=np.int8)
        return csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def check(self) -> None:
        """Full scan of the simple-graph invariants; raises AssertionError on failure."""
        assert len(self.indptr) == self.n + 1 and self.indptr[0] == 0
        assert self.indptr[-1] == len(self.indices) and len(self.indices) % 2 == 0
        for v in range(self.n):
            nb = self.neighbors(v)
            assert np.all(np.diff(nb) > 0), f"neighbors of {v} not strictly sorted"
            assert not np.any(nb == v), f"self-loop at {v}"
        a = self.to_csr()
        assert (a != a.T).nnz == 0, "adjacency not symmetric"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class ComponentLabeling:
    label: np.ndarray  # component id per vertex = smallest vertex id in it
    sizes: dict[int, int]

    @property
    def largest_id(self) -> int | None:
        if not self.sizes:
            return None
        best = max(self.sizes.values())
        return min(c for c, s in self.sizes.items() if s == best)

    @property
    def count(self) -> int:
        return len(self.sizes)

    def members(self, cid: int) -> np.ndarray:
        return np.flatnonzero(self.label == cid)


def connected_components(g: Graph) -> ComponentLabeling:
    if g.n == 0:
        return ComponentLabeling(np.zeros(0, dtype=np.int64), {})
    _, raw = _cc(g.to_csr(), directed=False)
    # relabel each component by its smallest vertex id
    first = np.full(raw.max() + 1, g.n, dtype=np.int64)
    np.minimum.at(first, raw, np.arange(g.n))
    label = first[raw]
    ids, counts = np.unique(label, return_counts=True)
    return ComponentLabeling(label, dict(zip(ids.tolist(), counts.tolist())))


def bfs_distances(g: Graph, sources: Iterable[int]) -> np.ndarray:
    """Hop distance from the nearest source; unreachable vertices get ``INF`` (-1)."""
    src = sorted(set(int(s) for s in sources))
    if not src:
        raise ValueError("bfs_distances needs at least one source")
    if src[0] < 0 or src[-1] >= g.n:
        raise ValueError("source out of range")
    dist = np.full(g.n, INF, dtype=np.int64)
    dist[src] = 0
    queue = deque(src)
    indptr, indices = g.indptr, g.indices
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in indices[indptr[u] : indptr[u + 1]]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, np.ndarray]:
    """Subgraph on ``keep`` with compacted ids; returned map sends new id -> original id."""
    ids = np.unique(np.fromiter((int(k) for k in keep), dtype=np.int64))
    if len(ids) and (ids[0] < 0 or ids[-1] >= g.n):
        raise ValueError("vertex out of range")
    remap = np.full(g.n, -1, dtype=np.int64)
    remap[ids] = np.arange(len(ids))
    e = g.edges()
    if len(e):
        a, b = remap[e[:, 0]], remap[e[:, 1]]
        ok = (a >= 0) & (b >= 0)
        e = np.stack([a[ok], b[ok]], axis=1)
    return Graph.from_edges(len(ids), e), ids


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    offset = 0
    chunks = []
    for p in parts:
        chunks.append(p.edges() + offset)
        offset += p.n
    edges = np.concatenate(chunks) if chunks else np.zeros((0, 2), dtype=np.int64)
    return Graph.from_edges(offset, edges)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    v = np.arange(n)
    return Graph.from_edges(n, np.stack([v, (v + 1) % n], axis=1))


def path_graph(n: int) -> Graph:
    v = np.arange(max(n - 1, 0))
    return Graph.from_edges(n, np.stack([v, v + 1], axis=1))


def complete_graph(n: int) -> Graph:
    iu = np.triu_indices(n, 1)
    return Graph.from_edges(n, np.stack(iu, axis=1))


def star_graph(leaves: int) -> Graph:
    v = np.arange(1, leaves + 1)
    return Graph.from_edges(leaves + 1, np.stack([np.zeros_like(v), v], axis=1))


# --- edge-list text format -------------------------------------------------

_MAX_ID = 2**31 - 1


def load_edge_list(text: str | bytes) -> Graph:
    """Parse the edge-list format: optional ``n <count>`` header, ``u v`` lines, ``#`` comments.

    Dropped self-loops and duplicate edges are reported on the returned graph.
    """
    if isinstance(text, bytes):
        text = text.decode()
    n_header = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "n" and n_header is None and not pairs:
            if len(tok) != 2 or not tok[1].isdigit():
                raise GraphFormatError(f"line {lineno}: bad header {raw!r}")
            n_header = int(tok[1])
            continue
        if len(tok) != 2 or not (tok[0].isdigit() and tok[1].isdigit()):
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = int(tok[0]), int(tok[1])
        if u > _MAX_ID or v > _MAX_ID:
            raise OverflowError(f"line {lineno}: vertex id exceeds {_MAX_ID}")
        pairs.append((u, v))
    n = 1 + max((max(p) for p in pairs), default=-1)
    if n_header is not None:
        if n_header < n:
            raise GraphFormatError(f"header n={n_header} but vertex id {n - 1} present")
        n = n_header
    return Graph.from_edges(n, pairs)


def dump_edge_list(g: Graph, header: bool = True) -> str:
    lines = [f"n {g.n}"] if header else []
    lines += [f"{u} {v}" for u, v in g.edges().tolist()]
    return "\n".join(lines) + "\n"
