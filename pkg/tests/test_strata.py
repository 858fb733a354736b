from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hnbundles.errors import FamilyMismatch, TooLarge
from hnbundles.strata import (StrataPoset, edges_from_dot, enumerate_strata,
                              gl_dominance, hull_membership, stratum_label,
                              stratum_leq, to_dot)
from hnbundles.rootsys import GroupFamily, dominant_representative, weyl_orbit


def test_hull_examples():
    gl3 = GroupFamily("gl", 3)
    assert hull_membership(gl3, (2, 0, -2), (1, 0, -1))
    assert hull_membership(gl3, (2, 0, -2), (2, 0, -2))
    assert not hull_membership(gl3, (2, 0, -2), (3, 0, -3))
    sp4 = GroupFamily("sp", 4)
    assert hull_membership(sp4, (2, 1), (1, 1))
    assert not hull_membership(sp4, (1, 1), (2, 1))


def test_hull_guard():
    with pytest.raises(TooLarge):
        hull_membership(GroupFamily("gl", 7), (0,) * 7, (0,) * 7)


def test_hull_agrees_with_gl_dominance():
    # the LP is the reference, prefix-sum dominance the fast cross-check
    for dim in (2, 3):
        fam = GroupFamily("gl", dim)
        vecs = [v for v in product(range(-3, 4), repeat=dim)
                if list(v) == sorted(v, reverse=True)]
        for mu in vecs:
            for nu in vecs:
                assert hull_membership(fam, mu, nu) == gl_dominance(mu, nu)


def test_hull_rejects_total_degree_mismatch():
    assert not hull_membership(GroupFamily("gl", 2), (1, 0), (1, 1))
    assert not gl_dominance((1, 0), (1, 1))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([GroupFamily("gl", 3), GroupFamily("sp", 4),
                        GroupFamily("so", 5), GroupFamily("so", 4)]),
       st.lists(st.integers(-2, 2), min_size=2, max_size=3),
       st.lists(st.integers(-2, 2), min_size=2, max_size=3))
def test_hull_weyl_invariant(family, xs, ys):
    dim = family.cartan_dim
    mu = tuple((xs * 3)[:dim])
    nu = tuple((ys * 3)[:dim])
    base = hull_membership(family, mu, nu)
    for w in weyl_orbit(family, mu):
        assert hull_membership(family, w, nu) == base
    for w in weyl_orbit(family, nu):
        assert hull_membership(family, mu, w) == base


def test_stratum_leq_examples():
    gl3 = GroupFamily("gl", 3)
    lo = stratum_label(gl3, (1, 0, -1))
    hi = stratum_label(gl3, (2, 0, -2))
    assert stratum_leq(lo, hi) and not stratum_leq(hi, lo)
    assert stratum_leq(lo, lo)
    # across parabolic shapes the hull side matches prefix-sum dominance
    assert hull_membership(gl3, (1, 1, -2), (1, 0, -1)) == \
        gl_dominance((1, 1, -2), (1, 0, -1))
    assert not stratum_leq(lo, stratum_label(gl3, (1, 1, -2)))
    with pytest.raises(FamilyMismatch):
        stratum_leq(lo, stratum_label(GroupFamily("gl", 2), (1, -1)))


def test_semistable_label_below_everything():
    gl3 = GroupFamily("gl", 3)
    ss = stratum_label(gl3, (0, 0, 0))
    for coords in product(range(-2, 3), repeat=3):
        if list(coords) != sorted(coords, reverse=True) or sum(coords) != 0:
            continue
        lab = stratum_label(gl3, coords)
        assert stratum_leq(ss, lab)
        assert stratum_leq(lab, ss) == (lab == ss)
    sp4 = GroupFamily("sp", 4)
    ss2 = stratum_label(sp4, (0, 0))
    for coords in product(range(3), repeat=2):
        if coords[0] < coords[1]:
            continue
        assert stratum_leq(ss2, stratum_label(sp4, coords))


def test_enumerate_gl2_degree_zero():
    p = enumerate_strata(GroupFamily("gl", 2), 1, total_degree=0)
    mus = [lab.mu.mu for lab in p.labels]
    assert mus == [(1, -1), (0, 0)]
    assert [sorted(lab.index.members) for lab in p.labels] == [[0], []]
    assert p.relation == {(1, 0)}  # semistable label sits below


def test_enumerate_sp2_and_bound_zero():
    p = enumerate_strata(GroupFamily("sp", 2), 1)
    assert [lab.mu.mu for lab in p.labels] == [(1,), (0,)]
    for fam in (GroupFamily("gl", 3), GroupFamily("sp", 4), GroupFamily("so", 5)):
        q = enumerate_strata(fam, 0)
        assert len(q.labels) == 1 and not q.relation


def test_enumerate_guards():
    with pytest.raises(TooLarge):
        enumerate_strata(GroupFamily("gl", 5), 1)
    with pytest.raises(TooLarge):
        enumerate_strata(GroupFamily("gl", 2), 5)


def _closure(p: StrataPoset):
    k = len(p.labels)
    leq = [[i == j for j in range(k)] for i in range(k)]
    for i, j in p.relation:
        leq[i][j] = True
    for m in range(k):
        for i in range(k):
            for j in range(k):
                leq[i][j] = leq[i][j] or (leq[i][m] and leq[m][j])
    return leq


@pytest.mark.parametrize("family,bound", [
    (GroupFamily("gl", 3), 2), (GroupFamily("sp", 4), 2),
    (GroupFamily("so", 5), 2), (GroupFamily("so", 4), 2)])
def test_poset_laws(family, bound):
    p = enumerate_strata(family, bound)
    k = len(p.labels)
    direct = [[stratum_leq(p.labels[i], p.labels[j]) for j in range(k)]
              for i in range(k)]
    # antisymmetry and transitivity
    for i in range(k):
        assert direct[i][i]
        for j in range(k):
            if i != j and direct[i][j]:
                assert not direct[j][i]
            for m in range(k):
                if direct[i][j] and direct[j][m]:
                    assert direct[i][m]
    # the covering relation closes back up to the full order
    closed = _closure(p)
    for i in range(k):
        for j in range(k):
            assert closed[i][j] == direct[i][j]
    # covers are irredundant
    for i, j in p.relation:
        assert not any(m not in (i, j) and direct[i][m] and direct[m][j]
                       for m in range(k))


def test_labels_use_dominant_representatives():
    gl3 = GroupFamily("gl", 3)
    p = enumerate_strata(gl3, 1)
    for lab in p.labels:
        assert tuple(lab.mu.mu) == dominant_representative(gl3, lab.mu.mu)
        assert all(isinstance(c, (int, Fraction)) for c in lab.mu.mu)


def test_dot_round_trip():
    p = enumerate_strata(GroupFamily("gl", 2), 1, total_degree=0)
    text = to_dot(p)
    assert text == to_dot(p)  # byte-deterministic
    nodes, edges = edges_from_dot(text)
    assert len(nodes) == 2 and len(edges) == 1
    edge = next(iter(edges))
    assert edge == ("(0,0);{}", "(1,-1);{a1,2}")  # edge runs lower to higher
    q = enumerate_strata(GroupFamily("sp", 4), 1)
    nodes_q, edges_q = edges_from_dot(to_dot(q))
    assert len(nodes_q) == len(q.labels) and len(edges_q) == len(q.relation)


def test_dot_empty_edges():
    p = enumerate_strata(GroupFamily("gl", 2), 0)
    text = to_dot(p)
    assert text.startswith("digraph strata {") and text.endswith("}\n")
    nodes, edges = edges_from_dot(text)
    assert len(nodes) == 1 and not edges
