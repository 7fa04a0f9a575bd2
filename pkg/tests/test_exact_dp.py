import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reliapath.errors import InputError, PrecisionError, ResourceLimitError
from reliapath.exact_dp import (
    IntegerCostNetwork,
    build_table,
    dominance_prune,
    dp_solve,
    grid_objective,
    quantize_exact,
)
from reliapath.generators import random_network
from reliapath.model import IMPOSSIBLE, Edge, Network, Path
from reliapath.oracle import brute_force_best, enumerate_paths

from .conftest import diamond, line_net

LEVELS = [math.exp(-j) for j in range(4)]

grid_networks = st.builds(
    random_network,
    n_vertices=st.integers(2, 8),
    state_count=st.integers(1, 3),
    seed=st.integers(0, 10**6),
    density=st.floats(0.2, 0.9),
    levels=st.just(LEVELS + [0.0]),
    parallel=st.sampled_from([0.0, 0.3]),
)


def path_vector(icnet, path):
    vec = (0,) * icnet.base.state_count
    for i in path:
        vec = tuple(a + b for a, b in zip(vec, icnet.costs[i]))
    return vec


def test_quantize_examples():
    ic = quantize_exact(line_net([math.exp(-2)], [1.0]), 1.0)
    assert ic.costs == {"e0": (-2,), "e1": (0,)}
    with pytest.raises(PrecisionError, match="e0"):
        quantize_exact(line_net([math.exp(-1.5)]), 1.0)
    ic = quantize_exact(line_net([0.0, math.exp(-1)], prior=(0.5, 0.5)), 0.5)
    assert ic.costs["e0"] == (IMPOSSIBLE, -2)


def test_integer_cost_network_rejects_bad_costs():
    net = line_net([0.5])
    with pytest.raises(InputError):
        IntegerCostNetwork(net, 1.0, {"e0": (1,)})
    with pytest.raises(InputError):
        IntegerCostNetwork(net, 1.0, {"e0": (-0.5,)})
    with pytest.raises(InputError):
        IntegerCostNetwork(net, 0.0, {"e0": (0,)})


def test_dp_single_state_additive():
    e = math.exp
    net = diamond(([e(-1)], [e(-2)]), ([e(-2)], [e(-2)]))
    res = dp_solve(quantize_exact(net))
    assert res.path == Path(["u1", "u2"])
    assert res.reliability == pytest.approx(e(-3))


def test_dp_mixture_diamond(grid_diamond):
    ic = quantize_exact(grid_diamond)
    assert ic.costs["u1"] == (0, IMPOSSIBLE) and ic.costs["l1"] == (-1, -1)
    table = build_table(ic, prune=False)
    assert set(table["t"]) == {(0, IMPOSSIBLE), (-2, -2)}
    assert grid_objective(grid_diamond.prior, 1.0, (0, IMPOSSIBLE)) == 0.5
    assert grid_objective(grid_diamond.prior, 1.0, (-2, -2)) == pytest.approx(0.1353, abs=1e-4)
    res = dp_solve(ic)
    assert res.path == Path(["u1", "u2"]) and res.reliability == 0.5
    assert res.reliability == brute_force_best(grid_diamond).reliability


def test_unreachable_sink():
    net = Network(1, (1.0,), ("s", "a", "t"), "s", "t", (Edge("e", "s", "a", (1.0,)),))
    assert dp_solve(quantize_exact(net)).path is None


def test_table_guard():
    net = random_network(9, 3, seed=1, density=0.9, levels=LEVELS)
    with pytest.raises(ResourceLimitError):
        dp_solve(quantize_exact(net), prune=False, max_entries=5)


def test_dominance_examples():
    assert set(dominance_prune({(-1, -1): 1, (-2, -2): 2})) == {(-1, -1)}
    assert set(dominance_prune({(-1, -3): 1, (-3, -1): 2})) == {(-1, -3), (-3, -1)}
    assert set(dominance_prune({(0, IMPOSSIBLE): 1, (0, -5): 2})) == {(0, -5)}


def test_dominance_keeps_back_pointers():
    pruned = dominance_prune({(-1, -1): ["a"], (-2, -2): ["b"], (-3, 0): ["c"]})
    assert pruned == {(-1, -1): ["a"], (-3, 0): ["c"]}


@st.composite
def vector_sets(draw):
    d = draw(st.integers(1, 3))
    comp = st.one_of(st.integers(-6, 0), st.just(IMPOSSIBLE))
    vecs = draw(st.sets(st.tuples(*[comp] * d), min_size=1, max_size=25))
    return {v: None for v in vecs}


@given(vector_sets())
def test_dominance_prune_matches_quadratic_definition(table):
    def dominated(v):
        return any(o != v and all(a >= b for a, b in zip(o, v)) for o in table)

    assert set(dominance_prune(table)) == {v for v in table if not dominated(v)}


@given(vector_sets(), st.lists(st.floats(0.01, 1.0), min_size=3, max_size=3))
def test_dominance_prune_keeps_best_objective(table, weights):
    d = len(next(iter(table)))
    prior = [w / sum(weights[:d]) for w in weights[:d]]
    best = max(grid_objective(prior, 0.7, v) for v in table)
    assert max(grid_objective(prior, 0.7, v) for v in dominance_prune(table)) == best


@settings(max_examples=80, deadline=None)
@given(grid_networks)
def test_table_completeness(net):
    ic = quantize_exact(net)
    table = build_table(ic, prune=False)
    expected = {path_vector(ic, p) for p in enumerate_paths(net)}
    assert set(table.get(net.sink, {})) == expected


@settings(max_examples=80, deadline=None)
@given(grid_networks)
def test_back_pointers_reconstruct_paths(net):
    ic = quantize_exact(net)
    table = build_table(ic, prune=False)
    for v, entries in table.items():
        for vec, pointers in entries.items():
            for edge_id, parent_vec in pointers:
                e = net.edge(edge_id)
                assert e.head == v
                assert tuple(a + b for a, b in zip(parent_vec, ic.costs[edge_id])) == vec
                assert parent_vec in table[e.tail]


@settings(max_examples=100, deadline=None)
@given(grid_networks)
def test_oracle_equivalence_and_pruning_soundness(net):
    ic = quantize_exact(net)
    expected = brute_force_best(net).reliability
    assert dp_solve(ic).reliability == expected
    assert dp_solve(ic, prune=False).reliability == expected


@settings(max_examples=60, deadline=None)
@given(grid_networks)
def test_table_size_bound(net):
    ic = quantize_exact(net)
    n, q, d = len(net.vertices), ic.q, net.state_count
    for entries in build_table(ic, prune=False).values():
        finite = [v for v in entries if IMPOSSIBLE not in v]
        assert len(finite) <= (n * q) ** d
