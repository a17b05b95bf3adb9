from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brauerkit.brauer import algebra_of_brauer_graph, brauer_cycle, brauer_line, brauer_star
from brauerkit.corpus import linear_orientations
from brauerkit.linalg import Matrix, rref
from brauerkit.repmod import (ModuleError, RepModule, direct_sum, dual, fac_contains, hom_basis, hom_dim,
                              is_isomorphic, is_projective, minimal_projective_presentation, projective_at,
                              simple_module, syzygy, tau, zero_module)
from brauerkit.stt import indecomposable_catalog


def inverse(rows):
    n = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    red, _ = rref(aug, 2 * n)
    return [r[n:] for r in red]


def coxeter(pres):
    """dim(tau M) = dim(M) * (-C^{-1} C^T) for hereditary algebras, rows of C being projectives."""
    c = Matrix(pres.cartan_matrix())
    return (Matrix(inverse(c.rows)) @ c.transpose()).scale(-1)


def test_projective_dimension_vectors(fx):
    assert projective_at(fx("F1"), "1").dims == (1, 1)
    p = projective_at(fx("F4"), "1")
    assert p.dims == (2, 1)
    assert projective_at(fx("F3"), "1").dims == (1, 1, 0)


def test_unknown_vertex(fx):
    with pytest.raises(ModuleError):
        projective_at(fx("F1"), "9")


def test_relations_are_checked(fx):
    p = fx("F3")
    one = Matrix([[1]])
    with pytest.raises(ModuleError):
        RepModule(p, (1, 1, 1), {"a": one, "b": one})


@pytest.mark.parametrize("other", ["S1", "S2", "P1", "P2"])
def test_hom_from_projective_is_dimension(fx, other):
    p = fx("F4")
    mods = {"S1": simple_module(p, "1"), "S2": simple_module(p, "2"),
            "P1": projective_at(p, "1"), "P2": projective_at(p, "2")}
    assert hom_dim(projective_at(p, "1"), mods[other]) == mods[other].dim("1")


def test_hom_examples(fx):
    p = fx("F4")
    s1 = simple_module(p, "1")
    assert hom_dim(s1, s1) == 1
    assert hom_dim(projective_at(p, "1"), projective_at(p, "1")) == 2
    for f in hom_basis(projective_at(p, "1"), projective_at(p, "2")):
        f.check()


def test_minimal_presentations(fx):
    f4, f3 = fx("F4"), fx("F3")
    pp = minimal_projective_presentation(simple_module(f4, "1"))
    assert (pp.p0, pp.p1) == (("1",), ("2",))
    pp = minimal_projective_presentation(projective_at(f4, "1"))
    assert (pp.p0, pp.p1) == (("1",), ())
    pp = minimal_projective_presentation(simple_module(f3, "2"))
    assert (pp.p0, pp.p1) == (("2",), ("3",))
    with pytest.raises(ModuleError):
        minimal_projective_presentation(zero_module(f3))


def test_tau_examples(fx):
    f4, f1 = fx("F4"), fx("F1")
    assert is_isomorphic(tau(simple_module(f4, "1")), simple_module(f4, "2"))
    assert tau(simple_module(f1, "1")).dims == (0, 1)
    for name in ("F1", "F2", "F3", "F4", "F5", "F6"):
        p = fx(name)
        for v in p.vertices:
            assert tau(projective_at(p, v)).is_zero()
    with pytest.raises(ModuleError):
        tau(zero_module(f1))


def test_syzygy_examples(fx):
    f4 = fx("F4")
    s1 = simple_module(f4, "1")
    assert syzygy(s1).dims == (1, 1)
    assert syzygy(projective_at(f4, "1")).is_zero()
    assert is_isomorphic(syzygy(syzygy(s1)), simple_module(f4, "2"))


def test_fac_examples(fx):
    f4 = fx("F4")
    s1, p1 = simple_module(f4, "1"), projective_at(f4, "1")
    assert fac_contains(s1, zero_module(f4))
    assert fac_contains(p1, s1)
    assert not fac_contains(s1, p1)
    assert fac_contains([p1, projective_at(f4, "2")], syzygy(s1))


def test_direct_sum_and_isomorphism(fx):
    p = fx("F3")
    a, b = simple_module(p, "1"), projective_at(p, "2")
    assert is_isomorphic(direct_sum([a, b]), direct_sum([b, a]))
    assert not is_isomorphic(a, simple_module(p, "2"))
    assert is_projective(direct_sum([projective_at(p, "1"), b]))


def test_dump_mentions_arrows(fx):
    text = projective_at(fx("F4"), "1").dump()
    assert text.startswith("module P1") and "dims: 1:2 2:1" in text and "α:" in text


def test_dual_of_opposite_projective_is_injective(fx):
    p = fx("F3")
    inj = dual(projective_at(p.opposite(), "3"), p)
    inj.check_relations()
    assert inj.dims == (0, 1, 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_tau_follows_coxeter_on_path_algebras(n):
    for p in linear_orientations(n):
        phi = coxeter(p)
        for e in indecomposable_catalog(p).entries:
            if e.projective:
                continue
            assert e.tau.dims == tuple(int(x) for x in phi.row_vector(e.module.dims))


symmetric = [algebra_of_brauer_graph(g) for g in (brauer_line(3), brauer_star(3), brauer_cycle(3),
                                                 brauer_star(2, center_multiplicity=2))]


@given(st.sampled_from(range(len(symmetric))), st.randoms(use_true_random=False))
def test_tau_is_second_syzygy_on_symmetric(idx, rnd):
    cat = _catalog(idx)
    e = rnd.choice(cat.entries)
    if e.projective:
        assert e.tau.is_zero()
    else:
        assert is_isomorphic(e.tau, syzygy(syzygy(e.module)))
        assert tau(e.module).dims == e.tau.dims


_cats = {}


def _catalog(idx):
    if idx not in _cats:
        from brauerkit.stt import support_tau_tilting

        _cats[idx] = support_tau_tilting(symmetric[idx]).catalog
    return _cats[idx]


@given(st.sampled_from(range(len(symmetric))), st.randoms(use_true_random=False))
def test_hom_from_projective_property(idx, rnd):
    p = symmetric[idx]
    m = rnd.choice(_catalog(idx).entries).module
    v = rnd.choice(p.vertices)
    assert hom_dim(projective_at(p, v), m) == m.dim(v)


@given(st.sampled_from(range(len(symmetric))), st.randoms(use_true_random=False))
def test_fac_is_reflexive_and_transitive(idx, rnd):
    ents = _catalog(idx).entries
    x, y, z = (rnd.choice(ents).module for _ in range(3))
    assert fac_contains(x, x)
    if fac_contains(x, y) and fac_contains(y, z):
        assert fac_contains(x, z)
    if fac_contains(x, y) and fac_contains(y, x) and x.dims == y.dims:
        assert is_isomorphic(x, y)
