import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reliapath.errors import InputError
from reliapath.exact_dp import dp_solve, quantize_exact
from reliapath.generators import random_3cnf, random_templates
from reliapath.model import Path, path_reliability
from reliapath.oracle import brute_force_best, enumerate_paths
from reliapath.reductions import (
    CnfFormula,
    TemplateSet,
    bitstring_to_path,
    canonical_bitstring,
    count_matches,
    format_dimacs,
    matches,
    network_from_templates,
    parse_dimacs,
    path_to_bitstring,
    templates_from_3sat,
)


def bitstrings(width):
    return ("".join(b) for b in itertools.product("01", repeat=width))


def test_single_clause_templates():
    ts = templates_from_3sat(CnfFormula(3, [(1, -2, 3)]))
    assert ts.width == 5
    assert ts.templates == ("1**00", "*0*01", "**110")


def test_empty_formula():
    ts = templates_from_3sat(CnfFormula(4, []))
    assert ts.width == 4 and len(ts) == 0


def test_two_identical_clauses():
    ts = templates_from_3sat(CnfFormula(3, [(1, 2, 3), (1, 2, 3)]))
    assert len(ts) == 6 and ts.width == 7
    assert [t[3:5] for t in ts.templates] == ["00", "01", "10", "**", "**", "**"]
    assert [t[5:7] for t in ts.templates] == ["**", "**", "**", "00", "01", "10"]


def test_cnf_rejects_bad_clauses():
    with pytest.raises(InputError):
        CnfFormula(3, [(1, 1, 2)])
    with pytest.raises(InputError):
        CnfFormula(3, [(1, 2)])
    with pytest.raises(InputError):
        CnfFormula(2, [(1, 2, 3)])


def test_matches_examples():
    assert matches("1*", "10")
    assert not matches("1*", "01")
    assert all(matches("**", b) for b in bitstrings(2))
    with pytest.raises(InputError):
        matches("1*", "1")


def test_count_matches_examples():
    ts = TemplateSet.from_strings(["1*", "*0"])
    assert count_matches(ts, "10") == 2
    assert count_matches(ts, "01") == 0
    assert count_matches(TemplateSet(2, ()), "01") == 0
    with pytest.raises(InputError):
        count_matches(ts, "101")


def test_template_set_validation():
    with pytest.raises(InputError):
        TemplateSet.from_strings(["1*", "0"])
    with pytest.raises(InputError):
        TemplateSet.from_strings(["1x"])


def test_network_two_templates():
    art = network_from_templates(TemplateSet.from_strings(["1*", "*0"]))
    net = art.network
    assert len(net.vertices) == 3 and len(net.edges) == 4
    assert path_reliability(net, Path(["e1", "e2'"])) == 1
    assert art.bit_to_edges == (("e1", "e1'"), ("e2", "e2'"))


def test_network_single_template():
    net = network_from_templates(TemplateSet.from_strings(["1"])).network
    assert path_reliability(net, Path(["e1"])) == 1
    assert path_reliability(net, Path(["e1'"])) == 0


def test_network_all_wildcards():
    net = network_from_templates(TemplateSet.from_strings(["***"])).network
    assert all(path_reliability(net, p) == 1 for p in enumerate_paths(net))


def test_network_rejects_empty():
    with pytest.raises(InputError):
        network_from_templates(TemplateSet(3, ()))
    with pytest.raises(InputError):
        network_from_templates(TemplateSet(0, ("",)))


def test_bitstring_path_examples():
    art = network_from_templates(TemplateSet.from_strings(["1*", "*0"]))
    for ids, bits in [(["e1", "e2"], "11"), (["e1'", "e2'"], "00"), (["e1", "e2'"], "10")]:
        assert path_to_bitstring(art, Path(ids)) == bits
        assert bitstring_to_path(art, bits) == Path(ids)
    with pytest.raises(InputError):
        bitstring_to_path(art, "1")
    with pytest.raises(InputError):
        bitstring_to_path(art, "1x")
    with pytest.raises(InputError):
        path_to_bitstring(art, Path(["e1"]))


def test_dimacs_round_trip():
    text = "c example\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n"
    cnf = parse_dimacs(text)
    assert cnf.variable_count == 3 and cnf.clauses == ((1, -2, 3), (-1, 2, -3))
    assert parse_dimacs(format_dimacs(cnf)) == cnf


def test_dimacs_clauses_may_span_lines():
    assert parse_dimacs("p cnf 3 1\n1 -2\n3 0\n").clauses == ((1, -2, 3),)


@pytest.mark.parametrize(
    "text",
    ["1 2 3 0\n", "p cnf 3 2\n1 2 3 0\n", "p cnf 3 1\n1 2 3\n", "p cnf 3 1\n1 two 3 0\n", "p dnf 3 1\n1 2 3 0\n"],
)
def test_dimacs_errors(text):
    with pytest.raises(InputError):
        parse_dimacs(text)


def test_unsatisfiable_formula_stays_below_one_third():
    # all eight sign patterns over three variables
    clauses = [tuple(s * v for s, v in zip(signs, (1, 2, 3))) for signs in itertools.product((1, -1), repeat=3)]
    cnf = CnfFormula(3, clauses)
    assert not cnf.is_satisfiable()
    art = network_from_templates(templates_from_3sat(cnf))
    res = dp_solve(quantize_exact(art.network))
    assert res.reliability < Fraction(1, 3)
    assert res.reliability == Fraction(7, 24)


def test_canonical_bitstring():
    cnf = CnfFormula(3, [(1, -2, 3)])
    assert canonical_bitstring(cnf, [False, False, False]) == "00001"
    assert canonical_bitstring(cnf, [True, True, True]) == "11100"
    with pytest.raises(InputError):
        canonical_bitstring(cnf, [False, True, False])


templates = st.builds(
    random_templates,
    seed=st.integers(0, 10**6),
    width=st.integers(1, 6),
    count=st.integers(1, 9),
)


@settings(max_examples=50, deadline=None)
@given(templates)
def test_reduction_identity(ts):
    art = network_from_templates(ts)
    d = len(ts)
    for b in bitstrings(ts.width):
        path = bitstring_to_path(art, b)
        assert path_to_bitstring(art, path) == b
        assert path_reliability(art.network, path) * d == count_matches(ts, b)


@settings(max_examples=30, deadline=None)
@given(templates)
def test_every_path_has_one_edge_per_bit(ts):
    art = network_from_templates(ts)
    paths = list(enumerate_paths(art.network))
    assert len(paths) == 2**ts.width
    assert all(len(p) == ts.width for p in paths)


cnfs = st.builds(random_3cnf, seed=st.integers(0, 10**6), variable_count=st.integers(3, 4), clause_count=st.integers(1, 3))


@settings(max_examples=40, deadline=None)
@given(cnfs)
def test_per_clause_exclusivity(cnf):
    ts = templates_from_3sat(cnf)
    for b in bitstrings(ts.width):
        for i in range(len(cnf.clauses)):
            assert sum(matches(t, b) for t in ts.templates[3 * i : 3 * i + 3]) <= 1


@settings(max_examples=40, deadline=None)
@given(cnfs)
def test_sat_correspondence(cnf):
    ts = templates_from_3sat(cnf)
    m = len(cnf.clauses)
    sat = cnf.is_satisfiable()
    assert sat == any(count_matches(ts, b) >= m for b in bitstrings(ts.width))
    net = network_from_templates(ts).network
    assert sat == (brute_force_best(net).reliability >= Fraction(1, 3))
    if sat:
        p = cnf.variable_count
        for bits in range(2**p):
            assignment = [(bits >> i) & 1 == 1 for i in range(p)]
            if cnf.satisfied_by(assignment):
                assert count_matches(ts, canonical_bitstring(cnf, assignment)) == m
