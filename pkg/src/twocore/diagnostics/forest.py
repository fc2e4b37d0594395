"""Orientation of the forest hanging off a seed set H, the segment coloring, and its 1/3 check."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from ..graph import Graph, connected_components

RED, PURPLE, BLACK, GRAY = "red", "purple", "black", "gray"


class StructureError(ValueError):
    """Input graph does not have the required tree-outside-H structure."""


@dataclass(frozen=True)
class Orientation:
    H: frozenset
    depth: dict[int, int]
    parent: dict[int, int]  # unique downstream neighbor (may lie in H)
    children: dict[int, list[int]]

    def subtree(self, v: int) -> list[int]:
        out, stack = [], [v]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(self.children[u])
        return out


def orient_forest(g: Graph, H) -> Orientation:
    """Orient every tree of ``g - H`` toward H and compute depths (leaves have depth 1)."""
    Hs = frozenset(int(h) for h in H)
    if not Hs:
        raise StructureError("H must be nonempty")
    if connected_components(g).count != 1:
        raise StructureError("graph must be connected")
    parent: dict[int, int] = {}
    children: dict[int, list[int]] = {}
    order: list[int] = []
    # each tree of g - H must touch H through exactly one edge
    for h in sorted(Hs):
        for u in g.neighbors(h).tolist():
            if u in Hs:
                continue
            if u in parent:
                raise StructureError(f"tree containing {u} has more than one edge into H")
            parent[u] = h
    queue = deque(sorted(parent))
    for u in queue:
        children[u] = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in g.neighbors(u).tolist():
            if w == parent[u]:
                continue
            if w in Hs:
                raise StructureError(f"tree containing {u} has more than one edge into H")
            if w in parent:
                raise StructureError(f"g - H contains a cycle through {u}-{w}")
            parent[w] = u
            children[w] = []
            children[u].append(w)
            queue.append(w)
    depth: dict[int, int] = {}
    for u in reversed(order):
        depth[u] = 1 + max((depth[c] for c in children[u]), default=0)
    return Orientation(Hs, depth, parent, children)


@dataclass
class Segment:
    color: str
    vertices: list[int]
    complete: bool

    @property
    def top(self) -> int:
        return self.vertices[0]


@dataclass
class ColoredForest:
    orientation: Orientation
    ell: int
    initial_color: dict[int, str]
    color: dict[int, str]
    segments: list[Segment]  # final red/purple segments
    gray_edges: set[tuple[int, int]] = field(default_factory=set)
    reverted: list[Segment] = field(default_factory=list)

    @property
    def depth(self) -> dict[int, int]:
        return self.orientation.depth

    @property
    def parent(self) -> dict[int, int]:
        return self.orientation.parent


def depth_color(depth: int, ell: int) -> str:
    if depth <= ell:
        return RED
    if depth > 2 * ell and 1 <= depth % (2 * ell) <= ell:
        return PURPLE
    return BLACK


def color_forest(g: Graph, H, ell: int, orientation: Orientation | None = None) -> ColoredForest:
    if ell < 1:
        raise ValueError("ell must be >= 1")
    ori = orientation or orient_forest(g, H)
    depth, parent = ori.depth, ori.parent
    first = {u: depth_color(d, ell) for u, d in depth.items()}

    # segments: connected pieces of same-colored vertices joined by consecutive-depth edges
    def joins(u: int) -> bool:
        p = parent[u]
        return p in depth and first[u] == first[p] != BLACK and depth[p] == depth[u] + 1

    tops = [u for u in depth if first[u] != BLACK and not joins(u)]
    color = dict(first)
    segments, reverted, gray_edges = [], [], set()
    for top in sorted(tops):
        verts, stack = [], [top]
        while stack:
            u = stack.pop()
            verts.append(u)
            stack.extend(c for c in ori.children[u] if joins(c))
        complete = any(depth[u] % ell == 0 for u in verts)
        seg = Segment(first[top], verts, complete)
        if complete:
            segments.append(seg)
            continue
        reverted.append(seg)
        new = GRAY if seg.color == RED else BLACK
        for u in verts:
            color[u] = new
        if new == GRAY:
            gray_edges.update((u, parent[u]) for u in verts)
    return ColoredForest(ori, ell, first, color, segments, gray_edges, reverted)


@dataclass
class UpstreamReport:
    checked: int
    violations: list[tuple[int, int, int]]  # (vertex, colored, regular)
    min_ratio: float
    exempt: int = 0  # red vertices strictly below the top of their segment

    @property
    def ok(self) -> bool:
        return not self.violations


def upstream_counts(cf: ColoredForest) -> tuple[dict[int, int], dict[int, int]]:
    """Regular and colored inclusive upstream sizes at every vertex outside H.

    A segment lies inside the inclusive upstream of v iff its top does, so both
    counts accumulate bottom-up in one pass.
    """
    ori = cf.orientation
    seg_size = {s.top: len(s.vertices) for s in cf.segments}
    reg: dict[int, int] = {}
    col: dict[int, int] = {}
    for u in sorted(ori.depth, key=ori.depth.get):
        reg[u] = int(cf.color[u] != GRAY) + sum(reg[c] for c in ori.children[u])
        col[u] = seg_size.get(u, 0) + sum(col[c] for c in ori.children[u])
    return reg, col


def verify_lemma6(cf: ColoredForest) -> UpstreamReport:
    """Check colored inclusive upstream >= 1/3 of regular inclusive upstream.

    Checked at every non-gray vertex of depth >= ell.  Red vertices below the
    top of their segment see only part of it (a red leaf has ratio 0), so they
    are counted in ``exempt`` instead.
    """
    reg, col = upstream_counts(cf)
    violations = []
    ratio = float("inf")
    checked = exempt = 0
    for u, d in cf.depth.items():
        if cf.color[u] == GRAY:
            continue
        if d < cf.ell:
            exempt += 1
            continue
        checked += 1
        ratio = min(ratio, col[u] / reg[u])
        if 3 * col[u] < reg[u]:
            violations.append((u, col[u], reg[u]))
    return UpstreamReport(checked, violations, ratio, exempt)


def check_segments(cf: ColoredForest) -> list[str]:
    """Structural problems with the final coloring; empty when every invariant holds."""
    problems = []
    for s in cf.segments:
        ds = [cf.depth[u] for u in s.vertices]
        if len(s.vertices) < cf.ell:
            problems.append(f"segment at {s.top} has size {len(s.vertices)} < {cf.ell}")
        if max(ds) - min(ds) + 1 != cf.ell or cf.depth[s.top] != max(ds):
            problems.append(f"segment at {s.top} does not have height {cf.ell}")
        if any(cf.color[u] != s.color for u in s.vertices):
            problems.append(f"segment at {s.top} has mixed final colors")
    for u, c in cf.color.items():
        if c not in (RED, PURPLE, BLACK, GRAY):
            problems.append(f"vertex {u} has color {c}")
    colored = {u for s in cf.segments for u in s.vertices}
    stray = [u for u, c in cf.color.items() if c in (RED, PURPLE) and u not in colored]
    if stray:
        problems.append(f"colored vertices outside any complete segment: {stray[:5]}")
    return problems


def random_rooted_forest(rng: np.random.Generator, n_tree: int, h_size: int = 3,
                         n_trees: int | None = None) -> tuple[Graph, list[int]]:
    """Random instance: a cycle H on ``h_size`` vertices with random trees hung off it by single edges."""
    h_size = max(h_size, 3)
    H = list(range(h_size))
    edges = [(i, (i + 1) % h_size) for i in range(h_size)]
    if n_tree < 1:
        raise ValueError("n_tree must be >= 1")
    n_trees = min(n_trees or int(rng.integers(1, 6)), n_tree)
    nxt = h_size
    sizes = rng.multinomial(n_tree - n_trees, np.ones(n_trees) / n_trees) + 1
    for sz in sizes:
        root = nxt
        edges.append((int(rng.integers(h_size)), root))
        for i in range(1, sz):
            # random recursive tree, mixed with path-like growth for deep instances
            if rng.random() < 0.5:
                par = root + i - 1
            else:
                par = root + int(rng.integers(i))
            edges.append((par, root + i))
        nxt += sz
    return Graph.from_edges(nxt, edges), H
