import random

import pytest
from hypothesis import given, strategies as st

from brauerkit.corpus import random_gentle_nontree, random_gentle_tree
from brauerkit.gentle import (NotGentleError, Shape, check_gentle, is_gentle, maximal_paths, quiver_shape,
                              rad_square_zero)
from brauerkit.presentation import make_presentation


@pytest.mark.parametrize("name,gentle,sb", [
    ("F1", True, True), ("F2", True, True), ("F3", True, True),
    ("F4", False, True), ("F5", True, True), ("F6", True, True),
])
def test_gentle_flags(fx, name, gentle, sb):
    rep = check_gentle(fx(name))
    assert rep.is_gentle is gentle
    assert rep.is_special_biserial is sb


def test_three_arrows_out_is_a_degree_violation():
    p = make_presentation("1234", [("a", "1", "2"), ("b", "1", "3"), ("c", "1", "4")])
    rep = check_gentle(p)
    assert not rep.is_gentle and not rep.is_special_biserial
    assert any(v.condition == "degree" for v in rep.violations)


def test_two_relations_after_one_arrow():
    p = make_presentation("1234", [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "4")],
                          zero=[("a", "b"), ("a", "c")])
    conds = {v.condition for v in check_gentle(p).violations}
    assert "in-ideal" in conds


def test_two_nonzero_continuations():
    p = make_presentation("1234", [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "4")])
    rep = check_gentle(p)
    assert "outside-ideal" in {v.condition for v in rep.violations}
    assert not rep.is_special_biserial


def test_maximal_paths_of_fixtures(fx):
    m2 = maximal_paths(fx("F2"))
    assert [str(p) for p in m2.maximal] == ["a b"] and m2.trivial_marks == ("1", "2", "3")
    m3 = maximal_paths(fx("F3"))
    assert sorted(str(p) for p in m3.maximal) == ["a", "b"] and m3.trivial_marks == ("1", "3")
    m5 = maximal_paths(fx("F5"))
    assert sorted(str(p) for p in m5.maximal) == ["a", "b", "c"] and m5.trivial_marks == ()


def test_single_vertex_gets_two_marks():
    m = maximal_paths(make_presentation("1", []))
    assert m.trivial_marks == ("1", "1")


def test_maximal_paths_reject_non_gentle(fx):
    with pytest.raises(NotGentleError):
        maximal_paths(fx("F4"))


@pytest.mark.parametrize("name,shape", [
    ("F1", Shape.LINEAR_A), ("F2", Shape.LINEAR_A), ("F3", Shape.TYPE_A_TREE),
    ("F5", Shape.TILDE_A_CYCLE), ("F6", Shape.OTHER),
])
def test_quiver_shapes(fx, name, shape):
    assert quiver_shape(fx(name)).shape is shape


def test_branching_witness():
    p = make_presentation("1234", [("a", "1", "2"), ("b", "3", "2"), ("c", "2", "4")], zero=[("a", "c")])
    qs = quiver_shape(p)
    assert qs.shape is Shape.GENERAL_TREE and qs.branching_witness == "2"


def test_rad_square_zero(fx):
    assert rad_square_zero(fx("F3")) and rad_square_zero(fx("F5"))
    assert not rad_square_zero(fx("F2"))


@given(st.integers(0, 10_000), st.integers(1, 6), st.booleans())
def test_every_arrow_in_one_maximal_path(seed, n, tree):
    rng = random.Random(seed)
    p = random_gentle_tree(rng, n) if tree or n < 2 else random_gentle_nontree(rng, n)
    assert is_gentle(p)
    mps = maximal_paths(p)
    arrows = sorted(a for q in mps.maximal for a in q.arrows)
    assert arrows == sorted(a.name for a in p.quiver.arrows)
    for q in mps.maximal:
        assert not p.is_zero_path(q)
