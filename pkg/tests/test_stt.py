import json
from math import comb

import pytest
from hypothesis import given, strategies as st

from brauerkit.brauer import algebra_of_brauer_graph, brauer_cycle, brauer_line, brauer_star, gamma_of_gentle
from brauerkit.corpus import linear_orientations
from brauerkit.repmod import projective_at, simple_module, is_isomorphic
from brauerkit.stt import (InfiniteTypeError, Mark, compatible, count_json, hasse_dot, hasse_quiver,
                           indecomposable_catalog, support_tau_tilting)


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def index_of(cat, module):
    return next(k for k, e in enumerate(cat.entries) if e.module.dims == module.dims and is_isomorphic(e.module, module))


def test_catalog_sizes(fx):
    assert len(indecomposable_catalog(fx("F1"))) == 3
    assert len(indecomposable_catalog(fx("F4"))) == 6
    assert len(indecomposable_catalog(fx("F3"))) == 5


def test_catalog_has_each_projective_once(fx):
    for name in ("F1", "F3", "F4", "F6"):
        p = fx(name)
        cat = indecomposable_catalog(p)
        for v in p.vertices:
            hits = [e for e in cat.entries if is_isomorphic(e.module, projective_at(p, v))]
            assert len(hits) == 1 and hits[0].projective


def test_compatibility_examples(fx):
    p = fx("F4")
    cat = indecomposable_catalog(p)
    s1, s2 = index_of(cat, simple_module(p, "1")), index_of(cat, simple_module(p, "2"))
    p1 = index_of(cat, projective_at(p, "1"))
    assert not compatible(cat, s1, s2)
    assert compatible(cat, p1, s1)
    assert compatible(cat, Mark("2"), s1)
    assert not compatible(cat, Mark("1"), s1)
    assert compatible(cat, Mark("1"), Mark("2"))


def test_local_algebra_has_two_pairs(fx):
    res = support_tau_tilting(fx("F6"))
    assert len(res.pairs) == 2
    hq = hasse_quiver(res.catalog, res.pairs)
    assert len(hq.edges) == 1 and hq.edges[0] == (hq.source, hq.sink)


def test_two_edge_line(fx):
    res = support_tau_tilting(fx("F4"))
    assert len(res.pairs) == 6
    hq = hasse_quiver(res.catalog, res.pairs)
    assert hq.is_regular(2)
    assert res.pairs[hq.sink].marks == ("1", "2")
    assert all(res.catalog.entries[k].projective for k in res.pairs[hq.source].modules)


@pytest.mark.parametrize("graph,count", [
    (brauer_line(3), 20), (brauer_star(3), 20), (brauer_cycle(3), 32),
    (brauer_star(2, center_multiplicity=1), 6), (brauer_star(2, center_multiplicity=2), 6),
    (brauer_star(3, center_multiplicity=2), 20),
])
def test_brauer_counts(graph, count):
    a = algebra_of_brauer_graph(graph)
    res = support_tau_tilting(a)
    assert len(res.pairs) == count
    assert hasse_quiver(res.catalog, res.pairs).is_regular(len(a.vertices))


def test_trivial_extensions_of_fixtures(fx):
    assert len(support_tau_tilting(algebra_of_brauer_graph(gamma_of_gentle(fx("F2")))).pairs) == 20
    assert len(support_tau_tilting(algebra_of_brauer_graph(gamma_of_gentle(fx("F5")))).pairs) == 32


def test_even_cycle_is_infinite():
    with pytest.raises(InfiniteTypeError) as e:
        support_tau_tilting(algebra_of_brauer_graph(brauer_cycle(4)))
    assert e.value.witness is not None


def test_catalog_refuses_bands():
    with pytest.raises(InfiniteTypeError):
        indecomposable_catalog(algebra_of_brauer_graph(brauer_cycle(3)))


@given(st.integers(1, 4), st.data())
def test_hereditary_type_a_counts_are_catalan(n, data):
    p = data.draw(st.sampled_from(linear_orientations(n)))
    res = support_tau_tilting(p)
    assert len(res.pairs) == catalan(n + 1)
    hq = hasse_quiver(res.catalog, res.pairs)
    assert hq.is_regular(n)
    assert len(hq.edges) == n * len(res.pairs) // 2


@given(st.integers(2, 3), st.data())
def test_orientation_does_not_change_trivial_extension_count(n, data):
    p = data.draw(st.sampled_from(linear_orientations(n)))
    t = algebra_of_brauer_graph(gamma_of_gentle(p))
    assert len(support_tau_tilting(t).pairs) == comb(2 * n, n)


def test_every_rigid_module_lies_in_some_pair(fx):
    for a in (fx("F3"), algebra_of_brauer_graph(brauer_cycle(3))):
        res = support_tau_tilting(a)
        used = {k for p in res.pairs for k in p.modules}
        rigid = {k for k, e in enumerate(res.catalog.entries) if e.tau_rigid}
        assert used == rigid


def test_pairs_respect_support(fx):
    res = support_tau_tilting(fx("F3"))
    for p in res.pairs:
        assert len(p.modules) + len(p.marks) == 3
        for k in p.modules:
            assert all(res.catalog.entries[k].module.dim(v) == 0 for v in p.marks)


def test_dot_and_json(fx):
    res = support_tau_tilting(fx("F4"))
    dot = hasse_dot(res.catalog, hasse_quiver(res.catalog, res.pairs), "F4")
    assert dot.startswith('digraph "F4" {') and dot.count("->") == 6
    obj = json.loads(count_json("F4", 2, 6, True, None))
    assert list(obj) == ["algebra", "n", "count", "finite", "formula"]


def test_output_is_deterministic(fx):
    a = algebra_of_brauer_graph(brauer_cycle(3))
    first = [p.describe(support_tau_tilting(a).catalog) for p in support_tau_tilting(a).pairs]
    res = support_tau_tilting(a)
    assert first == [p.describe(res.catalog) for p in res.pairs]
