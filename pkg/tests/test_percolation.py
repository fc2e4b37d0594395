import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twocore import _rng
from twocore.generators import erdos_renyi
from twocore.graph import Graph, complete_graph
from twocore.percolation import draw_coupling, percolate_at, sprinkle, sprinkle_beta


def _py_hash(key: int, t: int) -> int:
    mask = (1 << 64) - 1
    return _rng._py_splitmix((key + t * 0x9E3779B97F4A7C15) & mask)


def test_vector_hash_matches_scalar():
    key = _rng.mix_key(12345, 7)
    ts = np.array([0, 1, 2, 10**6, 2**40 + 3], dtype=np.uint64)
    got = _rng.hash_counters(key, ts).tolist()
    assert got == [_py_hash(int(key), int(t)) for t in ts.tolist()]


def test_counter_index_in_range():
    key = _rng.mix_key(3, _rng.STREAM_SAMPLES)
    idx = [_rng.counter_index(key, t, 7) for t in range(5000)]
    assert min(idx) == 0 and max(idx) == 6
    counts = np.bincount(idx, minlength=7)
    assert np.all(np.abs(counts - 5000 / 7) <= 5 * math.sqrt(5000 / 7))


def test_streams_differ():
    assert _rng.mix_key(1, _rng.STREAM_PERCOLATION) != _rng.mix_key(1, _rng.STREAM_SPRINKLE)


def test_edgeless_coupling():
    c = draw_coupling(Graph.empty(4), 0)
    assert len(c.weights) == 0
    assert percolate_at(c, 0.5).m == 0


def test_coupling_reproducible():
    g = erdos_renyi(300, 3, 1)
    assert np.array_equal(draw_coupling(g, 5).weights, draw_coupling(g, 5).weights)
    assert not np.array_equal(draw_coupling(g, 5).weights, draw_coupling(g, 6).weights)


def test_weight_mean_k4():
    g = complete_graph(4)
    w = np.concatenate([draw_coupling(g, s).weights for s in range(100_000)])
    assert abs(w.mean() - 0.5) <= 0.005
    assert w.min() >= 0 and w.max() < 1


def test_percolate_endpoints():
    g = erdos_renyi(200, 4, 2)
    c = draw_coupling(g, 9)
    assert percolate_at(c, 1.0) == g
    p0 = percolate_at(c, 0.0)
    assert p0.n == g.n and p0.m == 0


def test_percolate_rejects_bad_p():
    c = draw_coupling(complete_graph(3), 0)
    for p in (-0.1, 1.5):
        with pytest.raises(ValueError):
            percolate_at(c, p)


@settings(max_examples=50)
@given(st.integers(0, 2**63), st.floats(0, 1), st.floats(0, 1))
def test_monotone_in_p(seed, a, b):
    lo, hi = min(a, b), max(a, b)
    c = draw_coupling(erdos_renyi(60, 4, seed % 1000), seed)
    e_lo = {tuple(e) for e in percolate_at(c, lo).edges().tolist()}
    e_hi = {tuple(e) for e in percolate_at(c, hi).edges().tolist()}
    assert e_lo <= e_hi


def test_beta_values():
    assert sprinkle_beta(0.0, 0.3) == pytest.approx(0.3)
    assert sprinkle_beta(0.5, 0.75) == pytest.approx(0.5)


def test_sprinkle_contains_low():
    g = erdos_renyi(500, 4, 3)
    c = draw_coupling(g, 4)
    low = {tuple(e) for e in percolate_at(c, 0.4).edges().tolist()}
    high = {tuple(e) for e in sprinkle(c, 0.4, 0.6, 99).edges().tolist()}
    assert low <= high


def test_sprinkle_from_zero_is_fresh_percolation():
    g = complete_graph(30)
    c = draw_coupling(g, 1)
    trials = 2000
    tot = sum(sprinkle(c, 0.0, 0.3, s).m for s in range(trials))
    freq = tot / (trials * g.m)
    assert abs(freq - 0.3) <= 5 * math.sqrt(0.3 * 0.7 / (trials * g.m))


def test_sprinkle_marginal_k100():
    g = complete_graph(100)
    trials = 10_000
    counts = np.zeros((100, 100))
    for t in range(trials):
        c = draw_coupling(g, 2 * t)
        e = sprinkle(c, 0.5, 0.8, 2 * t + 1).edges()
        counts[e[:, 0], e[:, 1]] += 1
    freq = counts[np.triu_indices(100, 1)] / trials
    sd = math.sqrt(0.8 * 0.2 / trials)
    assert np.all(np.abs(freq - 0.8) <= 0.02)
    assert abs(freq.mean() - 0.8) <= 5 * sd / math.sqrt(g.m)


def test_sprinkle_requires_order():
    c = draw_coupling(complete_graph(3), 0)
    with pytest.raises(ValueError):
        sprinkle(c, 0.6, 0.6, 1)
