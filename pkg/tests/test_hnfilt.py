import pytest
from hypothesis import given, settings, strategies as st

from hnbundles.bundle import Atom, PlainBundle, SoBundle, SpBundle, underlying
from hnbundles.errors import TooLarge, UnsupportedRank
from hnbundles.hnfilt import (extend_with_perps, hn_filtration,
                              hn_filtration_so, hn_filtration_sp,
                              hn_uniqueness_oracle, scss)

B = PlainBundle((Atom(3, 1), Atom(1, 2), Atom(1, 2), Atom(-2, 1)))


def test_scss_examples():
    assert scss(B) == (Atom(3, 1),)
    whole = PlainBundle((Atom(0, 1), Atom(0, 3)))
    assert scss(whole) == whole.atoms
    assert scss(PlainBundle((Atom(2, 2), Atom(1, 1)))) == (Atom(2, 2), Atom(1, 1))


def test_hn_filtration_examples():
    filt = hn_filtration(B)
    assert [q.atoms for q in filt.quotients] == [
        (Atom(3, 1),), (Atom(1, 2), Atom(1, 2)), (Atom(-2, 1),)]
    assert list(filt.slopes) == [3, 0.5, -2]
    single = hn_filtration(PlainBundle((Atom(1, 2), Atom(1, 2))))
    assert len(single.quotients) == 1
    three = hn_filtration(PlainBundle((Atom(2, 1), Atom(1, 1), Atom(0, 1))))
    assert len(three.quotients) == 3


def test_hn_filtration_sp_examples():
    f = hn_filtration_sp(SpBundle((Atom(2, 1),), (Atom(0, 2),)))
    assert [q.atoms for q in f.quotients] == [(Atom(2, 1),)]
    assert sum(a.rank for a in f.middle) == 2
    trivial = hn_filtration_sp(SpBundle((), (Atom(0, 4),)))
    assert not trivial.quotients and sum(a.rank for a in trivial.middle) == 4
    lagr = hn_filtration_sp(SpBundle((Atom(3, 1), Atom(1, 2)), ()))
    assert [q.atoms for q in lagr.quotients] == [(Atom(3, 1),), (Atom(1, 2),)]
    assert not lagr.middle


def test_hn_filtration_so_examples():
    f = hn_filtration_so(SoBundle((Atom(1, 1),), (Atom(0, 2),)))
    assert [q.atoms for q in f.quotients] == [(Atom(1, 1),)] and f.rank_flag
    g = hn_filtration_so(SoBundle((Atom(2, 1), Atom(1, 1)), (Atom(0, 1),)))
    assert [q.atoms for q in g.quotients] == [(Atom(2, 1),), (Atom(1, 1),)]
    assert not g.rank_flag
    t = hn_filtration_so(SoBundle((), (Atom(0, 6),)))
    assert not t.quotients
    with pytest.raises(UnsupportedRank):
        hn_filtration_so(SoBundle((Atom(1, 1),), ()))


def test_extend_with_perps_examples():
    f = extend_with_perps(hn_filtration_sp(SpBundle((Atom(2, 1),), (Atom(0, 2),))))
    assert [q.atoms for q in f.quotients] == [
        (Atom(2, 1),), (Atom(0, 2),), (Atom(-2, 1),)]
    t = extend_with_perps(hn_filtration_sp(SpBundle((), (Atom(0, 4),))))
    assert len(t.quotients) == 1
    lagr = extend_with_perps(
        hn_filtration_sp(SpBundle((Atom(3, 1), Atom(1, 2)), ())))
    assert [q.atoms for q in lagr.quotients] == [
        (Atom(3, 1),), (Atom(1, 2),), (Atom(-1, 2),), (Atom(-3, 1),)]


def test_uniqueness_oracle_examples():
    assert hn_uniqueness_oracle(PlainBundle((Atom(3, 1), Atom(-2, 1))))
    assert hn_uniqueness_oracle(PlainBundle((Atom(0, 1), Atom(0, 1))))
    assert hn_uniqueness_oracle(SpBundle((Atom(2, 1), Atom(1, 1)), ()))


def test_uniqueness_oracle_guard():
    with pytest.raises(TooLarge):
        hn_uniqueness_oracle(PlainBundle((Atom(0, 9),)))


@settings(max_examples=150, deadline=None)
@given(st.lists(st.builds(Atom, st.integers(-3, 3), st.integers(1, 2)),
                min_size=1, max_size=4).map(tuple))
def test_oracle_agrees_with_fast_path(atoms):
    b = PlainBundle(atoms)
    if b.rank <= 6:
        assert hn_uniqueness_oracle(b)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.builds(Atom, st.integers(1, 3), st.integers(1, 2)),
                max_size=3).map(tuple),
       st.integers(0, 2), st.booleans())
def test_perp_extension_matches_plain_route(positive, zeros, symplectic):
    if symplectic:
        b = SpBundle(positive, tuple([Atom(0, 1)] * (2 * zeros)))
    else:
        b = SoBundle(positive, tuple([Atom(0, 1)] * (2 * zeros + 1)))
    if b.rank == 0 or (not symplectic and b.rank < 3):
        return
    filt = hn_filtration_sp(b) if symplectic else hn_filtration_so(b)
    assert extend_with_perps(filt).quotients == \
        hn_filtration(underlying(b)).quotients


@settings(max_examples=100, deadline=None)
@given(st.lists(st.builds(Atom, st.integers(-3, 3), st.integers(1, 2)),
                min_size=1, max_size=4).map(tuple))
def test_slopes_are_distinct_atom_slopes(atoms):
    b = PlainBundle(atoms)
    filt = hn_filtration(b)
    assert list(filt.slopes) == sorted({a.slope for a in atoms}, reverse=True)
    assert (len(filt.quotients) == 1) == \
        (len({a.slope for a in atoms}) == 1)
