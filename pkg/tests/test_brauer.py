import random
from collections import Counter
from math import comb

import pytest
from hypothesis import given, strategies as st

from brauerkit.brauer import (BrauerGraph, CountStatus, Formula, GraphTag, SelfFoldedError, algebra_of_brauer_graph,
                              brauer_cycle, brauer_graph_dot, brauer_line, brauer_star, classify_graph,
                              cycle_census, format_brauer_graph, gamma_of_gentle, is_brauer_tree,
                              parse_brauer_graph, predicted_count, tau_tilting_finite)
from brauerkit.corpus import BRAUER_KINDS, random_brauer_graph, random_gentle_nontree, random_gentle_tree
from brauerkit.presentation import ParseError, ValidationError


def dimension_formula(g: BrauerGraph) -> int:
    # 2|E| + sum over vertices of val(v) * (m(v) val(v) - 1)
    return 2 * len(g.edges) + sum(g.degree(v) * (m * g.degree(v) - 1) for v, m in g.vertices)


def cartan_formula(g: BrauerGraph) -> list[list[int]]:
    ends = {e: Counter((u, w)) for e, u, w in g.edges}
    mult = dict(g.vertices)
    ids = [e for e, _, _ in g.edges]
    return [[sum(mult[v] * ends[i][v] * ends[j][v] for v in mult) for j in ids] for i in ids]


def test_gamma_of_f1_is_a_single_path(fx):
    g = gamma_of_gentle(fx("F1"))
    assert len(g.edges) == 2 and len(g.vertices) == 3
    cls = classify_graph(g)
    assert cls.is_line and cls.is_star


def test_gamma_of_f2_is_a_star(fx):
    cls = classify_graph(gamma_of_gentle(fx("F2")))
    assert cls.tag is GraphTag.STAR and not cls.is_line


def test_gamma_of_f3_is_a_line(fx):
    g = gamma_of_gentle(fx("F3"))
    assert classify_graph(g).tag is GraphTag.LINE
    assert [v for v, _ in g.vertices] == ["v(a)", "v(b)", "v(e1)", "v(e3)"]


def test_gamma_of_f5_is_a_triangle(fx):
    g = gamma_of_gentle(fx("F5"))
    cls = classify_graph(g)
    assert cls.tag is GraphTag.CYCLE and cls.cycle_census.parities == ("odd",)


def test_self_folded_rejected(fx):
    with pytest.raises(SelfFoldedError):
        gamma_of_gentle(fx("F6"))


@pytest.mark.parametrize("name", ["F1", "F2", "F3", "F5"])
def test_trivial_extension_identities(fx, name):
    a = fx(name)
    t = algebra_of_brauer_graph(gamma_of_gentle(a))
    c = a.cartan_matrix()
    n = len(c)
    assert t.dimension == 2 * a.dimension
    assert t.cartan_matrix() == [[c[i][j] + c[j][i] for j in range(n)] for i in range(n)]


def test_single_edge_gives_dual_numbers():
    g = BrauerGraph([("u", 1), ("w", 1)], [("E", "u", "w")], {})
    a = algebra_of_brauer_graph(g)
    assert a.dimension == 2 and a.cartan_matrix() == [[2]]


def test_predictions():
    assert predicted_count(brauer_line(3)) == predicted_count(brauer_star(3))
    assert predicted_count(brauer_line(3)).value == 20
    p = predicted_count(brauer_cycle(3))
    assert (p.status, p.value, p.formula) == (CountStatus.KNOWN, 32, Formula.ODD_CYCLE_POWER)
    assert predicted_count(brauer_cycle(4)).status is CountStatus.INFINITE
    assert predicted_count(brauer_star(2, center_multiplicity=2)).value == 6


def test_odd_cycle_with_pendant(fixture_path):
    g = parse_brauer_graph(open(fixture_path("triangle_pendant")).read())
    cls = classify_graph(g)
    assert cls.tag is GraphTag.OTHER
    assert tau_tilting_finite(g)
    assert predicted_count(g).status is CountStatus.FINITE_UNKNOWN


def test_exceptional_vertex_recorded():
    cls = classify_graph(brauer_star(3, center_multiplicity=3))
    assert cls.exceptional_vertices == ("c",) and cls.tag is GraphTag.TREE


def test_two_exceptional_vertices_is_not_a_brauer_tree():
    g = brauer_line(2).with_multiplicity("v0", 2).with_multiplicity("v2", 2)
    assert not is_brauer_tree(g)
    assert tau_tilting_finite(g)


def test_rotation_equality_is_cyclic():
    a = BrauerGraph([("c", 1), ("x", 1), ("y", 1), ("z", 1)],
                    [("E1", "c", "x"), ("E2", "c", "y"), ("E3", "c", "z")], {"c": ["E1", "E2", "E3"]})
    b = BrauerGraph([("c", 1), ("x", 1), ("y", 1), ("z", 1)],
                    [("E1", "c", "x"), ("E2", "c", "y"), ("E3", "c", "z")], {"c": ["E2", "E3", "E1"]})
    c = BrauerGraph([("c", 1), ("x", 1), ("y", 1), ("z", 1)],
                    [("E1", "c", "x"), ("E2", "c", "y"), ("E3", "c", "z")], {"c": ["E1", "E3", "E2"]})
    assert a == b and a != c


def test_graph_validation():
    with pytest.raises(ValidationError):
        BrauerGraph([("u", 1)], [("E", "u", "u")], {})
    with pytest.raises(ValidationError):
        BrauerGraph([("u", 1), ("w", 1), ("x", 1)], [("E", "u", "w"), ("F", "w", "x")], {})
    with pytest.raises(ValidationError):
        BrauerGraph([("u", 1), ("w", 1), ("x", 1), ("y", 1)], [("E", "u", "w"), ("F", "x", "y")], {})


def test_parse_error_line():
    with pytest.raises(ParseError) as e:
        parse_brauer_graph("bvertex: u m=1\nbvertex: w m=x\n")
    assert e.value.line == 2


def test_dot_output():
    dot = brauer_graph_dot(brauer_star(2, center_multiplicity=2))
    assert dot.startswith("graph G {") and '"c" [label="c (m=2)"]' in dot and dot.count("--") == 2


def test_cycle_census_two_cycles():
    rng = random.Random(3)
    g = random_brauer_graph(rng, "two_cycles")
    assert cycle_census(g).independent_cycles == 2
    assert not tau_tilting_finite(g)


graphs = st.builds(lambda seed, kind: random_brauer_graph(random.Random(seed), kind),
                   st.integers(0, 10_000), st.sampled_from(BRAUER_KINDS))


@given(graphs)
def test_brauer_algebra_dimension_and_cartan(g):
    a = algebra_of_brauer_graph(g)
    assert a.dimension == dimension_formula(g)
    c = a.cartan_matrix()
    assert c == cartan_formula(g)
    assert c == [list(r) for r in zip(*c)]


@given(graphs)
def test_graph_text_roundtrip(g):
    assert parse_brauer_graph(format_brauer_graph(g)) == g


@given(st.integers(0, 10_000), st.integers(1, 6), st.booleans())
def test_gamma_is_tree_iff_quiver_is_tree(seed, n, tree):
    rng = random.Random(seed)
    a = random_gentle_tree(rng, n) if tree or n < 2 else random_gentle_nontree(rng, n)
    g = gamma_of_gentle(a)
    assert is_brauer_tree(g) is (tree or n < 2)
    assert len(g.edges) == len(a.vertices)


@given(st.integers(1, 5))
def test_standard_families(n):
    assert predicted_count(brauer_line(n)).value == comb(2 * n, n)
    assert classify_graph(brauer_cycle(n + 1)).tag is GraphTag.CYCLE
