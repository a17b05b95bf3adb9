import pytest
from hypothesis import given, strategies as st

from brauerkit.brauer import algebra_of_brauer_graph, brauer_cycle, brauer_line
from brauerkit.corpus import linear_orientations
from brauerkit.presentation import ValidationError, make_presentation
from brauerkit.repmod import hom_dim, is_isomorphic
from brauerkit.strings import (EnumerationCapError, StringAlgebra, StringWord, band_module, brick_band,
                               detect_bands, enumerate_strings, string_module, string_quotient)


def test_string_counts_of_fixtures(fx):
    assert [str(s) for s in enumerate_strings(fx("F1"))] == ["e1", "e2", "a"]
    assert len(enumerate_strings(fx("F3"))) == 5
    assert len(enumerate_strings(string_quotient(fx("F4")))) == 6
    assert len(enumerate_strings(fx("F2"))) == 6


def test_quotient_passes_monomial_inputs_through(fx):
    assert string_quotient(fx("F3")) is fx("F3")
    assert string_quotient(fx("F4")) is fx("F4")


def test_quotient_splits_binomials():
    a = algebra_of_brauer_graph(brauer_cycle(3))
    q = string_quotient(a)
    assert not q.relations.binomials
    sides = {p.arrows for pq in a.relations.binomials for p in pq}
    assert sides <= {p.arrows for p in q.relations.monomials}


def test_quotient_rejects_non_special_biserial():
    p = make_presentation("1234", [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "4")])
    with pytest.raises(ValidationError):
        string_quotient(p)


@given(st.integers(1, 6))
def test_path_algebra_has_n_choose_two_plus_n_strings(n):
    for p in linear_orientations(n)[:4]:
        assert len(enumerate_strings(p)) == n * (n + 1) // 2


@given(st.integers(2, 7))
def test_radical_square_zero_line_has_2n_minus_1_strings(n):
    vs = [str(k) for k in range(1, n + 1)]
    arrows = [(f"a{k}", vs[k - 1], vs[k]) for k in range(1, n)]
    zero = [(f"a{k}", f"a{k + 1}") for k in range(1, n - 1)]
    assert len(enumerate_strings(make_presentation(vs, arrows, zero=zero))) == 2 * n - 1


def test_canonical_form_picks_one_orientation(fx):
    sa = StringAlgebra(string_quotient(fx("F4")))
    w = (("α", 1), ("β", 1))
    assert sa.canonical(w) == sa.canonical(sa.inverse(w))


def test_invalid_words(fx):
    sa = StringAlgebra(fx("F3"))
    assert not sa.is_string((("a", 1), ("b", 1)))
    assert not sa.is_string((("b", -1), ("a", -1)))
    assert not sa.is_string((("a", 1), ("a", -1)))
    assert sa.is_string((("a", 1),))


def test_string_modules_are_pairwise_distinct_bricks_on_path_algebras():
    p = linear_orientations(4)[3]
    mods = [string_module(p, w) for w in enumerate_strings(p)]
    for m in mods:
        assert hom_dim(m, m) == 1
    for i, m in enumerate(mods):
        for n in mods[i + 1:]:
            assert not is_isomorphic(m, n)


def brauer_quotient(g):
    return string_quotient(algebra_of_brauer_graph(g))


def test_bands():
    assert detect_bands(brauer_quotient(brauer_line(3))) is None
    assert detect_bands(make_presentation("12", [("a", "1", "2"), ("b", "1", "2")])) is not None
    assert detect_bands(brauer_quotient(brauer_cycle(4))) is not None


def test_kronecker_band_module_is_a_brick():
    k = make_presentation("12", [("a", "1", "2"), ("b", "1", "2")])
    band = detect_bands(k)
    m = band_module(k, band, lam=3)
    assert m.dims == (1, 1) and hom_dim(m, m) == 1
    assert brick_band(k) is not None


def test_brick_bands_follow_cycle_parity():
    assert brick_band(algebra_of_brauer_graph(brauer_cycle(3))) is None
    assert brick_band(algebra_of_brauer_graph(brauer_cycle(4))) is not None
    assert brick_band(algebra_of_brauer_graph(brauer_cycle(2))) is not None


def test_enumeration_cap():
    k = make_presentation("12", [("a", "1", "2"), ("b", "1", "2")])
    with pytest.raises(EnumerationCapError):
        enumerate_strings(k, max_words=50)
    assert len(enumerate_strings(k, max_length=2)) == 2 + 2 + 2


def test_trivial_string_label():
    assert str(StringWord("3")) == "e3"
