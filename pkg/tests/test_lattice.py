from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hnbundles.errors import NotInKernelLattice, UnsupportedRank
from hnbundles.lattice import (FinAbGroup, fundamental_groups, lattice_tower,
                               levi_fundamental_groups, levi_lattice_tower,
                               levi_topological_type, obstruction_class,
                               topological_type)
from hnbundles.parabolic import ParabolicIndex
from hnbundles.rootsys import GroupFamily, weyl_orbit

FAMILIES = [GroupFamily("gl", r) for r in (3, 4, 5)] + \
    [GroupFamily("sl", r) for r in (3, 4)] + \
    [GroupFamily("sp", r) for r in (4, 6)] + \
    [GroupFamily("so", r) for r in (4, 5, 6, 7)]


def test_fundamental_group_table():
    for r in range(3, 13):
        assert [g.describe() for g in fundamental_groups(GroupFamily("gl", r))] \
            == ["1", "Z", "Z"]
        assert [g.describe() for g in fundamental_groups(GroupFamily("sl", r))] \
            == ["1", "1", "1"]
        if r % 2 == 0:
            assert [g.describe() for g in fundamental_groups(GroupFamily("sp", r))] \
                == ["1", "1", "1"]
        assert [g.describe() for g in fundamental_groups(GroupFamily("so", r))] \
            == ["Z/2", "Z/2", "1"]


def test_tower_examples():
    gl3 = lattice_tower(GroupFamily("gl", 3))
    assert gl3.psi_denominators == (3,)
    assert not gl3.lam.contains((1, 0, 0)) and gl3.lam.contains((1, -1, 0))
    sp4 = lattice_tower(GroupFamily("sp", 4))
    assert sp4.lam.contains((1, 0)) and sp4.lam.contains((0, 1))
    so5 = lattice_tower(GroupFamily("so", 5))
    assert so5.lam.contains((1, 1)) and so5.lam.contains((0, 2))
    assert not so5.lam.contains((1, 0))
    assert so5.lam_sat.contains((1, 0))


@pytest.mark.parametrize("family", FAMILIES)
def test_tower_inclusions_and_ses(family):
    t = lattice_tower(family)
    for v in t.lam.basis:
        assert t.lam_sat.contains(v)
    der, pi1, ab = fundamental_groups(family)
    # short exact sequence 1 -> pi1_der -> pi1 -> pi1_ab -> 1
    assert pi1.free_rank == ab.free_rank
    assert pi1.torsion == der.torsion
    assert ab.torsion == ()
    assert der.free_rank == 0


def test_levi_examples():
    gl4 = GroupFamily("gl", 4)
    index = ParabolicIndex(gl4, frozenset({1}))
    der, pi1, ab = levi_fundamental_groups(gl4, index)
    assert pi1.describe() == "Z x Z"
    assert levi_lattice_tower(gl4, index).psi_denominators == (2, 2)
    sp6 = GroupFamily("sp", 6)
    idx2 = ParabolicIndex(sp6, frozenset({1}))
    assert levi_fundamental_groups(sp6, idx2)[1].describe() == "Z"
    assert levi_lattice_tower(sp6, idx2).psi_denominators == (2,)
    empty = ParabolicIndex(gl4, frozenset())
    assert levi_lattice_tower(gl4, empty).lam.basis == \
        lattice_tower(gl4).lam.basis


def test_obstruction_examples():
    assert obstruction_class(GroupFamily("gl", 3), (2, 1, 0)) == ((3,), ())
    assert obstruction_class(GroupFamily("sp", 4), (5, -2)) == ((), ())
    assert obstruction_class(GroupFamily("so", 4), (1, 0)) == ((), (1,))
    assert obstruction_class(GroupFamily("so", 4), (1, 1)) == ((), (0,))


def test_obstruction_errors():
    with pytest.raises(NotInKernelLattice):
        obstruction_class(GroupFamily("sl", 3), (1, 0, 0))
    with pytest.raises(NotInKernelLattice):
        obstruction_class(GroupFamily("gl", 2), (Fraction(1, 2), 0))


def test_topological_type_examples():
    assert topological_type(GroupFamily("gl", 5), (1, 1, 1, 0, 0)) == \
        tuple([Fraction(3, 5)] * 5)
    assert topological_type(GroupFamily("sp", 4), (2, 1)) == (0, 0)
    assert topological_type(GroupFamily("gl", 2), (1, 1)) == (1, 1)


def test_gl_psi_lattice():
    # central averages of integer vectors sweep exactly (1/r)Z(1,...,1)
    r = 4
    family = GroupFamily("gl", r)
    seen = {topological_type(family, tuple(1 if j < k else 0 for j in range(r)))
            for k in range(r + 1)}
    assert seen == {tuple([Fraction(k, r)] * r) for k in range(r + 1)}


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FAMILIES),
       st.lists(st.integers(-3, 3), min_size=1, max_size=5),
       st.lists(st.integers(-3, 3), min_size=1, max_size=5))
def test_obstruction_additive_and_type_invariant(family, xs, ys):
    dim = family.cartan_dim
    a = list((xs * 5)[:dim])
    b = list((ys * 5)[:dim])
    if family.kind == "sl":
        a[-1] -= sum(a)
        b[-1] -= sum(b)
    fa, ta = obstruction_class(family, a)
    fb, tb = obstruction_class(family, b)
    fs, ts = obstruction_class(family, [x + y for x, y in zip(a, b)])
    assert fs == tuple(x + y for x, y in zip(fa, fb))
    torsion = fundamental_groups(family)[1].torsion
    assert ts == tuple((x + y) % d for x, y, d in zip(ta, tb, torsion))
    for w in weyl_orbit(family, tuple(a)):
        assert topological_type(family, w) == topological_type(family, a)


def test_levi_topological_type():
    gl4 = GroupFamily("gl", 4)
    index = ParabolicIndex(gl4, frozenset({1}))
    assert levi_topological_type(gl4, index, (3, 1, 1, 1)) == \
        (2, 2, 1, 1)
    sp4 = GroupFamily("sp", 4)
    idx = ParabolicIndex(sp4, frozenset({0}))
    assert levi_topological_type(sp4, idx, (3, 2)) == (3, 0)
