"""Harder-Narasimhan filtrations on the formal model.

The fast path groups atoms by slope; the oracles re-derive the same
filtrations by exhaustive enumeration of ordered partitions (plain) or
isotropic chains (Sp/SO), so the two routes check each other.
"""

from dataclasses import dataclass
from itertools import combinations

from .bundle import (Atom, PlainBundle, SlBundle, SoBundle, SpBundle, dual,
                     is_semistable, underlying)
from .errors import TooLarge, UnsupportedRank, ZeroBundle

ORACLE_RANK_GUARD = 8


@dataclass(frozen=True)
class Filtration:
    """Ordered semistable quotients with strictly decreasing slopes."""

    quotients: tuple

    def __post_init__(self):
        slopes = [q.slope for q in self.quotients]
        assert slopes == sorted(slopes, reverse=True) and len(set(slopes)) == len(slopes)
        assert all(is_semistable(q) for q in self.quotients)

    @property
    def slopes(self):
        return tuple(q.slope for q in self.quotients)


@dataclass(frozen=True)
class IsotropicFiltration:
    """Isotropic quotients of positive decreasing slopes plus a slope-0
    middle; rank_flag marks the SO-even isotropic rank n-1 case."""

    quotients: tuple
    middle: tuple
    rank_flag: bool = False

    def __post_init__(self):
        slopes = [q.slope for q in self.quotients]
        assert slopes == sorted(slopes, reverse=True) and len(set(slopes)) == len(slopes)
        assert all(s > 0 for s in slopes)

    @property
    def isotropic_rank(self) -> int:
        return sum(q.rank for q in self.quotients)


def scss(b: PlainBundle):
    """Strongly contradicting semistability subobject: the maximal-slope atoms."""
    top = max(a.slope for a in b.atoms)
    return tuple(a for a in b.atoms if a.slope == top)


def _group_by_slope(atoms):
    slopes = sorted({a.slope for a in atoms}, reverse=True)
    return tuple(PlainBundle(tuple(a for a in atoms if a.slope == s)) for s in slopes)


def hn_filtration(b) -> Filtration:
    """HN filtration of a plain (or SL) bundle, reported by its quotients."""
    if isinstance(b, SlBundle):
        b = b.underlying
    return Filtration(_group_by_slope(b.atoms))


def hn_filtration_sp(b: SpBundle) -> IsotropicFiltration:
    """Isotropic HN filtration of a symplectic bundle."""
    return IsotropicFiltration(_group_by_slope(b.positive) if b.positive else (),
                               b.zero_part)


def hn_filtration_so(b: SoBundle) -> IsotropicFiltration:
    """Isotropic HN filtration of a special-orthogonal bundle.

    rank_flag is set when the total rank is even and the isotropic part
    has rank n-1; the associated parabolic then carries both special
    simple roots.
    """
    if b.rank < 3:
        raise UnsupportedRank("SO filtration needs total rank >= 3")
    quotients = _group_by_slope(b.positive) if b.positive else ()
    iso_rank = sum(q.rank for q in quotients)
    flag = b.rank % 2 == 0 and iso_rank == b.rank // 2 - 1
    return IsotropicFiltration(quotients, b.zero_part, flag)


def extend_with_perps(f: IsotropicFiltration) -> Filtration:
    """Complete an isotropic filtration by the co-isotropic perps: the
    result is the plain HN filtration of the underlying bundle."""
    quotients = list(f.quotients)
    if sum(a.rank for a in f.middle):
        quotients.append(PlainBundle(f.middle))
    quotients.extend(dual(q) for q in reversed(f.quotients))
    return Filtration(tuple(quotients))


def _ordered_partitions(atoms):
    """All ordered set partitions of the atom multiset, by index blocks."""

    def rec(remaining):
        if not remaining:
            yield []
            return
        for k in range(1, len(remaining) + 1):
            for blk in combinations(remaining, k):
                left = [i for i in remaining if i not in blk]
                for tail in rec(left):
                    yield [blk] + tail

    for part in rec(tuple(range(len(atoms)))):
        yield [tuple(atoms[i] for i in blk) for blk in part]


def _sub_multisets(atoms):
    for k in range(len(atoms) + 1):
        seen = set()
        for pick in combinations(range(len(atoms)), k):
            key = tuple(sorted(atoms[i] for i in pick))
            if key not in seen:
                seen.add(key)
                yield key


def hn_uniqueness_oracle(b) -> bool:
    """Exhaustively verify that exactly one filtration satisfies the
    defining conditions, and that it is the fast-path output."""
    if isinstance(b, (SpBundle, SoBundle)):
        return _uniqueness_isotropic(b)
    if isinstance(b, SlBundle):
        b = b.underlying
    if b.rank > ORACLE_RANK_GUARD:
        raise TooLarge(f"rank {b.rank} exceeds the oracle guard")
    winners = set()
    for part in _ordered_partitions(b.atoms):
        blocks = [PlainBundle(blk) for blk in part]
        if not all(is_semistable(q) for q in blocks):
            continue
        slopes = [q.slope for q in blocks]
        if all(x > y for x, y in zip(slopes, slopes[1:])):
            winners.add(tuple(tuple(q.atoms) for q in blocks))
    expected = tuple(tuple(q.atoms) for q in hn_filtration(b).quotients)
    return winners == {expected}


def _uniqueness_isotropic(b) -> bool:
    if b.rank > ORACLE_RANK_GUARD:
        raise TooLarge(f"rank {b.rank} exceeds the oracle guard")
    winners = set()
    for sub in _sub_multisets(b.positive):
        # candidate isotropic part: ordered partitions of the chosen
        # sub-multiset; the middle is everything else
        rest = list(b.positive)
        for a in sub:
            rest.remove(a)
        middle_ok = not rest  # leftover positive atoms destabilize the middle
        parts = _ordered_partitions(list(sub)) if sub else iter([[]])
        for part in parts:
            blocks = [PlainBundle(blk) for blk in part]
            if not all(is_semistable(q) for q in blocks):
                continue
            slopes = [q.slope for q in blocks]
            if not all(x > y for x, y in zip(slopes, slopes[1:])):
                continue
            if not (all(s > 0 for s in slopes) and middle_ok):
                continue
            winners.add(tuple(tuple(q.atoms) for q in blocks))
    if isinstance(b, SpBundle):
        fast = hn_filtration_sp(b)
    else:
        fast = hn_filtration_so(b)
    expected = tuple(tuple(q.atoms) for q in fast.quotients)
    return winners == {expected}
