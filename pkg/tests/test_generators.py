import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import matching_triangle_probability
from twocore.cores import two_core
from twocore.generators import (
    GeneratorSpec,
    RegularityWarning,
    configuration_model,
    disjoint_regular,
    erdos_renyi,
    household_triangle,
    random_regular,
)
from twocore.graph import Graph, complete_graph, connected_components, path_graph


def test_er_edgeless_and_complete():
    assert erdos_renyi(5, 0, seed=1).m == 0
    assert erdos_renyi(5, 4, seed=1) == complete_graph(5)


def test_er_mean_degree():
    n, c = 100_000, 4.0
    p = c / (n - 1)
    # sd of 2m/n with m ~ Bin(n(n-1)/2, p) is about 0.009, so 0.05 is a 5 sigma band
    assert 5 * 2 * math.sqrt(n * (n - 1) / 2 * p * (1 - p)) / n <= 0.05
    for seed in range(10):
        assert abs(2 * erdos_renyi(n, c, seed).m / n - c) <= 0.05


def test_er_reproducible():
    assert erdos_renyi(500, 3, 7) == erdos_renyi(500, 3, 7)
    assert erdos_renyi(500, 3, 7) != erdos_renyi(500, 3, 8)


def test_er_rejects_bad_mean():
    with pytest.raises(ValueError):
        erdos_renyi(5, 5, 0)


def test_er_pair_frequencies_uniform():
    # every pair equally likely: per-pair frequency over seeds within 5 sigma of p
    n, c, trials = 8, 2.0, 4000
    p = c / (n - 1)
    counts = np.zeros((n, n))
    for s in range(trials):
        e = erdos_renyi(n, c, s).edges()
        counts[e[:, 0], e[:, 1]] += 1
    iu = np.triu_indices(n, 1)
    freq = counts[iu] / trials
    assert np.all(np.abs(freq - p) <= 5 * math.sqrt(p * (1 - p) / trials))


def test_configuration_forced_edge():
    assert configuration_model([1, 1], 0) == path_graph(2)


def test_configuration_all_zero():
    assert configuration_model([0, 0, 0], 3).m == 0


def test_configuration_triangle_frequency():
    q = matching_triangle_probability()
    trials = 10_000
    hits = sum(configuration_model([2, 2, 2], s).m == 3 for s in range(trials))
    assert abs(hits / trials - q) <= 5 * math.sqrt(q * (1 - q) / trials)


@pytest.mark.parametrize("degs", [[1, 2], [4, 2, 1, 1], [-1, 1]])
def test_configuration_rejects_invalid(degs):
    with pytest.raises(ValueError):
        configuration_model(degs, 0)


@settings(max_examples=40)
@given(st.lists(st.integers(0, 4), min_size=5, max_size=30), st.integers(0, 2**32))
def test_configuration_degrees_bounded(degs, seed):
    if sum(degs) % 2:
        degs[next(i for i, d in enumerate(degs) if d > 0)] -= 1
    g = configuration_model(degs, seed)
    g.check()
    assert np.all(g.degree() <= np.array(degs))


def test_random_regular_k4():
    assert random_regular(4, 3, 0) == complete_graph(4)


def test_random_regular_union_of_cycles():
    for s in range(20):
        g = random_regular(6, 2, s)
        assert np.all(g.degree() == 2)
        cc = connected_components(g)
        assert sum(cc.sizes.values()) == 6 and all(sz >= 3 for sz in cc.sizes.values())


def test_random_regular_large():
    with warnings.catch_warnings():
        warnings.simplefilter("error", RegularityWarning)
        g = random_regular(1000, 5, 11)
    assert np.all(g.degree() == 5)


def test_random_regular_rejects_odd():
    with pytest.raises(ValueError):
        random_regular(5, 3, 0)


def test_household_single_vertex():
    g = household_triangle(Graph.empty(1), 0)
    assert (g.n, g.m) == (3, 3)


def test_household_single_edge():
    g = household_triangle(path_graph(2), 0)
    assert (g.n, g.m) == (6, 7)


def test_household_every_vertex_in_core():
    g = household_triangle(erdos_renyi(10_000, 4, 3), 4)
    assert two_core(g).frac_c2 == 1.0


def test_household_attachments_within_triangles():
    base = erdos_renyi(300, 3, 1)
    g = household_triangle(base, 2)
    e = g.edges()
    inter = e[e[:, 0] // 3 != e[:, 1] // 3]
    got = {tuple(sorted(x)) for x in (inter // 3).tolist()}
    assert got == {tuple(x) for x in base.edges().tolist()}
    assert g.m == 3 * base.n + base.m


def test_disjoint_regular_k4_copies():
    g = disjoint_regular(16, 3, 0)
    cc = connected_components(g)
    assert g.n == 16 and cc.count == 4
    assert g == Graph.from_edges(16, [e for k in range(4) for e in (complete_graph(4).edges() + 4 * k)])


def test_disjoint_regular_large():
    g = disjoint_regular(10_000, 5, 2)
    cc = connected_components(g)
    assert cc.count == 100 and set(cc.sizes.values()) == {100}
    assert np.all(g.degree() == 5)


@pytest.mark.parametrize("n", [10, 17, 50, 99])
def test_disjoint_regular_component_count(n):
    k = math.isqrt(n - 1) + 1
    g = disjoint_regular(n, 2, 5)
    assert connected_components(g).count >= k  # 2-regular copies may split into cycles
    assert g.n == k * k


def test_disjoint_regular_rejects():
    with pytest.raises(ValueError):
        disjoint_regular(16, 4, 0)
    with pytest.raises(ValueError):
        disjoint_regular(25, 3, 0)


def test_spec_roundtrip_and_aliases():
    s = GeneratorSpec.parse("er:n=1000,c=4", seed=9)
    assert s.model == "erdos_renyi" and s.params == {"n": 1000, "c": 4} and s.seed == 9
    assert GeneratorSpec.from_json(s.to_json()) == s
    assert GeneratorSpec.parse(s.to_json()) == s
    assert s.build() == erdos_renyi(1000, 4, 9)


def test_spec_unknown_model():
    with pytest.raises(ValueError):
        GeneratorSpec.parse("smallworld:n=10")
