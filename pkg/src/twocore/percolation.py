"""Edge percolation with a monotone coupling across p, and sprinkling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._rng import STREAM_PERCOLATION, STREAM_SPRINKLE, mix_key, uniforms
from .graph import Graph


@dataclass(frozen=True, eq=False)
class PercolationCoupling:
    """One uniform weight in [0, 1) per base edge; edge ``i`` is ``base.edges()[i]``."""

    base: Graph
    weights: np.ndarray
    seed: int

    def edges_below(self, p: float) -> np.ndarray:
        return self.base.edges()[self.weights < p]


def edge_weights(m: int, seed: int, stream: int = STREAM_PERCOLATION) -> np.ndarray:
    """Weight of edge ``i`` depends only on ``(seed, stream, i)``."""
    return uniforms(mix_key(seed, stream), np.arange(m, dtype=np.uint64))


def draw_coupling(g: Graph, seed: int) -> PercolationCoupling:
    w = edge_weights(g.m, seed)
    w.setflags(write=False)
    return PercolationCoupling(g, w, int(seed))


def _check_p(p: float, name: str = "p") -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"{name}={p} outside [0, 1]")


def percolate_at(c: PercolationCoupling, p: float) -> Graph:
    """Keep the base edges whose weight is < p (so p=1 keeps every edge)."""
    _check_p(p)
    return Graph.from_edges(c.base.n, c.edges_below(p))


def sprinkle_beta(p_low: float, p_high: float) -> float:
    """Extra retention probability that lifts G(p_low) to G(p_high)."""
    return 1.0 - (1.0 - p_high) / (1.0 - p_low)


def sprinkle(c: PercolationCoupling, p_low: float, p_high: float, aux_seed: int) -> Graph:
    """Union of G(p_low) from ``c`` with an independent beta-percolation keyed by ``aux_seed``.

    Every base edge ends up present with probability exactly ``p_high``.
    """
    _check_p(p_low, "p_low")
    _check_p(p_high, "p_high")
    if not p_low < p_high:
        raise ValueError("sprinkle needs p_low < p_high")
    beta = sprinkle_beta(p_low, p_high)
    fresh = edge_weights(c.base.m, aux_seed, STREAM_SPRINKLE)
    keep = (c.weights < p_low) | (fresh < beta)
    return Graph.from_edges(c.base.n, c.base.edges()[keep])
