"""Canonical reductions of torus-split principal bundles and HN types.

Both characterizations are implemented: the filtration route (the
reduction whose adjoint data is the perp of the top isotropic step) and
the Levi-semistability plus dominant-character route, together with a
brute-force degree-maximization oracle that checks them against each
other.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bundle import PlainBundle, SlBundle, SoBundle, SpBundle
from .errors import InvalidReduction, NotIntegral, TooLarge
from .hnfilt import hn_filtration, hn_filtration_so, hn_filtration_sp
from .intlin import solve_rational
from .parabolic import ParabolicIndex, character_generators
from .rootsys import (GL, SL, SO, SP, GroupFamily, all_roots,
                      dominant_representative, evaluate, is_dominant,
                      is_root, simple_roots, weyl_orbit)

ORACLE_DIM_GUARD = 5


@dataclass(frozen=True)
class HNType:
    """Dominant rational Cartan vector of slopes."""

    family: GroupFamily
    mu: tuple

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(Fraction(c) for c in self.mu))
        assert len(self.mu) == self.family.cartan_dim
        assert is_dominant(self.family, self.mu)


@dataclass(frozen=True)
class CanonicalReduction:
    family: GroupFamily
    index: ParabolicIndex
    mu: HNType
    ad_positive_roots: frozenset
    ad_parabolic_roots: frozenset


def forced_index(family: GroupFamily, mu) -> ParabolicIndex:
    """The parabolic index a dominant vector determines: simple roots
    taking a positive value on it."""
    members = frozenset(i for i, a in enumerate(simple_roots(family))
                        if evaluate(a, mu) > 0)
    return ParabolicIndex(family, members)


@lru_cache(maxsize=None)
def _is_positive_combination(family, root):
    coeffs = solve_rational(simple_roots(family), root)
    return coeffs is not None and all(c >= 0 for c in coeffs)


@lru_cache(maxsize=None)
def _parabolic_root_sets(family, index):
    """(Levi roots, nilradical roots) of the standard parabolic P_I."""
    simples = simple_roots(family)
    keep = [simples[i] for i in range(len(simples)) if i not in index.members]
    levi = frozenset(a for a in all_roots(family)
                     if keep and solve_rational(keep, a) is not None)
    nilrad = frozenset(a for a in all_roots(family)
                       if a not in levi and _is_positive_combination(family, a))
    return levi, nilrad


@lru_cache(maxsize=None)
def _generators(family, index):
    return tuple(character_generators(family, index))


def canonical_reduction(family: GroupFamily, a) -> CanonicalReduction:
    """The canonical parabolic reduction of the torus-split bundle with
    degree vector a, reported at its dominant representative."""
    a = tuple(a)
    if any(not isinstance(c, int) and (not hasattr(c, "denominator") or c.denominator != 1)
           for c in a):
        raise NotIntegral(f"need an integral degree vector, got {a}")
    family.require_root_system()
    a = tuple(int(c) for c in a)
    mu = dominant_representative(family, a)
    index = forced_index(family, mu)
    positives = frozenset(r for r in all_roots(family) if evaluate(r, mu) > 0)
    parabolic = frozenset(r for r in all_roots(family) if evaluate(r, mu) >= 0)
    return CanonicalReduction(family, index, HNType(family, mu), positives, parabolic)


def _family_of(b) -> GroupFamily:
    if isinstance(b, SlBundle):
        return GroupFamily(SL, b.underlying.rank)
    if isinstance(b, PlainBundle):
        return GroupFamily(GL, b.rank)
    if isinstance(b, SpBundle):
        return GroupFamily(SP, b.rank)
    return GroupFamily(SO, b.rank)


def hn_type(b) -> HNType:
    """Dominant slope vector of the HN filtration: quotient slopes with
    multiplicity for GL/SL, positive slopes padded by zeros for Sp/SO."""
    family = _family_of(b)
    if isinstance(b, (PlainBundle, SlBundle)):
        coords = []
        for q in hn_filtration(b).quotients:
            coords.extend([q.slope] * q.rank)
        return HNType(family, tuple(coords))
    filt = hn_filtration_sp(b) if isinstance(b, SpBundle) else hn_filtration_so(b)
    coords = []
    for q in filt.quotients:
        coords.extend([q.slope] * q.rank)
    n = family.cartan_dim
    coords.extend([Fraction(0)] * (n - len(coords)))
    return HNType(family, tuple(coords))


def check_bh(family: GroupFamily, a, red: CanonicalReduction):
    """Evaluate the two BH positivity conditions on a reduction.

    Returns (levi_semistable, char_degrees): the Levi extension is
    semistable iff every simple root outside the index vanishes on the
    reduction point, and char_degrees pairs the character generators of
    the index against it (all positive for a canonical reduction).
    """
    a = tuple(int(c) for c in a)
    mu = red.mu.mu
    if tuple(dominant_representative(family, a)) != tuple(
            dominant_representative(family, mu)):
        raise InvalidReduction("reduction point is not in the Weyl orbit of a")
    return bh_conditions(family, red.index, mu)


def bh_conditions(family: GroupFamily, index: ParabolicIndex, v):
    """The two conditions at an arbitrary reduction point v (possibly a
    non-dominant Weyl translate); used by the exhaustive oracle."""
    simples = simple_roots(family)
    levi_ss = all(evaluate(simples[i], v) == 0
                  for i in range(len(simples)) if i not in index.members)
    if not index.members:
        return levi_ss, []
    degrees = [evaluate(chi, v) for chi in _generators(family, index)]
    return levi_ss, degrees


def ad_degree(family: GroupFamily, index: ParabolicIndex, v) -> int:
    """Degree of the adjoint bundle of the reduction to P_I at point v:
    the sum of parabolic-root values (Levi pairs cancel)."""
    levi, nilrad = _parabolic_root_sets(family, index)
    return sum(evaluate(a, v) for a in levi) + sum(evaluate(a, v) for a in nilrad)


def ad_degree_max_oracle(family: GroupFamily, a):
    """Exhaustive maximum of ad_degree over all (index, Weyl point) pairs."""
    if family.cartan_dim > ORACLE_DIM_GUARD:
        raise TooLarge("enumeration guard exceeded")
    a = tuple(int(c) for c in a)
    count = len(simple_roots(family))
    best = None
    argmax = []
    for bits in range(1 << count):
        index = ParabolicIndex(family, frozenset(
            i for i in range(count) if bits >> i & 1))
        for v in weyl_orbit(family, a):
            val = ad_degree(family, index, v)
            if best is None or val > best:
                best = val
                argmax = [(index, v)]
            elif val == best:
                argmax.append((index, v))
    return best, argmax


def bracket_closure_check(red: CanonicalReduction) -> bool:
    """Root-level shadow of Lie-bracket closure: both adjoint root sets
    are closed under root addition."""
    family = red.family
    for roots in (red.ad_positive_roots, red.ad_parabolic_roots):
        for x in roots:
            for y in roots:
                s = tuple(p + q for p, q in zip(x, y))
                if any(s) and is_root(family, s) and s not in roots:
                    return False
    return True
