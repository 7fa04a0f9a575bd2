import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reliapath.errors import ResourceLimitError
from reliapath.generators import random_network
from reliapath.model import Edge, Network, Path, path_reliability
from reliapath.oracle import brute_force_best, enumerate_paths

from .conftest import diamond, line_net


def test_single_edge_has_one_path():
    assert list(enumerate_paths(line_net([0.5]))) == [Path(["e0"])]


def test_diamond_has_two_paths_in_edge_id_order():
    net = diamond(([1], [1]), ([1], [1]))
    assert list(enumerate_paths(net)) == [Path(["l1", "l2"]), Path(["u1", "u2"])]


def test_stacked_diamonds_have_four_paths():
    edges = [
        Edge("a1", "s", "a", (1,)), Edge("a2", "a", "m", (1,)),
        Edge("b1", "s", "b", (1,)), Edge("b2", "b", "m", (1,)),
        Edge("c1", "m", "c", (1,)), Edge("c2", "c", "t", (1,)),
        Edge("d1", "m", "d", (1,)), Edge("d2", "d", "t", (1,)),
    ]
    net = Network(1, (1.0,), ["s", "a", "b", "m", "c", "d", "t"], "s", "t", edges)
    paths = list(enumerate_paths(net))
    assert len(paths) == 4 == len(set(paths))


def test_unreachable_sink_yields_nothing():
    net = Network(1, (1.0,), ("s", "a", "t"), "s", "t", (Edge("e", "s", "a", (1,)),))
    assert list(enumerate_paths(net)) == []
    res = brute_force_best(net)
    assert res.path is None and res.reliability == 0.0


def test_parallel_edges_are_distinct_paths():
    net = Network(1, (1.0,), ("s", "t"), "s", "t", (Edge("x", "s", "t", (0.3,)), Edge("y", "s", "t", (0.7,))))
    assert len(list(enumerate_paths(net))) == 2
    assert brute_force_best(net).path == Path(["y"])


def test_path_guard():
    edges = []
    names = ["s"] + [f"v{i}" for i in range(1, 12)] + ["t"]
    for i in range(12):
        edges += [Edge(f"a{i}", names[i], names[i + 1], (1,)), Edge(f"b{i}", names[i], names[i + 1], (1,))]
    net = Network(1, (1.0,), names, "s", "t", edges)
    with pytest.raises(ResourceLimitError):
        brute_force_best(net, max_paths=1000)


def test_brute_force_diamond_d1():
    net = diamond(([0.9], [1.0]), ([0.5], [1.0]))
    res = brute_force_best(net)
    assert res.path == Path(["u1", "u2"])
    assert res.reliability == pytest.approx(0.9)


def test_all_ones_tie_picks_first_enumerated():
    net = diamond(([1.0], [1.0]), ([1.0], [1.0]))
    res = brute_force_best(net)
    assert res.reliability == 1.0
    assert res.path == next(iter(enumerate_paths(net)))


def test_brute_force_gap_diamond(gap_diamond):
    res = brute_force_best(gap_diamond)
    assert res.path == Path(["u1", "u2"])
    assert res.reliability == 0.5
    assert path_reliability(gap_diamond, Path(["l1", "l2"])) == pytest.approx(0.36)


networks = st.builds(
    random_network,
    n_vertices=st.integers(2, 8),
    state_count=st.integers(1, 3),
    seed=st.integers(0, 10**6),
    density=st.floats(0.2, 0.9),
    parallel=st.sampled_from([0.0, 0.3]),
)


@settings(max_examples=60, deadline=None)
@given(networks)
def test_best_dominates_every_path(net):
    best = brute_force_best(net)
    assert best.reliability == path_reliability(net, best.path)
    for path in enumerate_paths(net):
        assert path_reliability(net, path) <= best.reliability


@settings(max_examples=40, deadline=None)
@given(networks, st.randoms(use_true_random=False))
def test_state_relabeling_invariance(net, rnd):
    perm = list(range(net.state_count))
    rnd.shuffle(perm)
    relabeled = Network(
        net.state_count,
        [net.prior[i] for i in perm],
        net.vertices,
        net.source,
        net.sink,
        [Edge(e.id, e.tail, e.head, [e.reliability[i] for i in perm]) for e in net.edges],
    )
    assert brute_force_best(relabeled).reliability == pytest.approx(brute_force_best(net).reliability, rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(
    st.builds(
        random_network,
        n_vertices=st.integers(2, 9),
        state_count=st.just(1),
        seed=st.integers(0, 10**6),
        density=st.floats(0.2, 0.9),
        reliability_range=st.just((0.05, 1.0)),
    )
)
def test_single_state_matches_dijkstra(net):
    g = nx.MultiDiGraph()
    for e in net.edges:
        g.add_edge(e.tail, e.head, key=e.id, weight=-math.log(e.reliability[0]))
    cost = nx.dijkstra_path_length(g, net.source, net.sink)
    assert brute_force_best(net).reliability == pytest.approx(math.exp(-cost), rel=1e-9)
