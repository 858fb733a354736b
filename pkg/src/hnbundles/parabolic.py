"""Standard parabolic subgroups P_I as subsets of simple roots.

Covers the flag correspondence, Levi block shapes, containment order,
and characters of P_I represented by their differentials (integer
functionals on Cartan coordinates).
"""

from dataclasses import dataclass
from math import gcd

from .errors import FamilyMismatch, InvalidFlag, NotACharacter, NothingToGenerate
from .intlin import _row_kernel, primitive, solve_rational
from .rootsys import (GL, SL, SO, SP, GroupFamily, coroot, evaluate,
                      root_name, simple_roots)


@dataclass(frozen=True)
class ParabolicIndex:
    """Subset I of simple-root indices: empty = G itself, full = Borel."""

    family: GroupFamily
    members: frozenset

    def __post_init__(self):
        count = len(simple_roots(self.family))
        if not all(0 <= i < count for i in self.members):
            raise ValueError("parabolic index out of range")

    def roots(self):
        simples = simple_roots(self.family)
        return [simples[i] for i in sorted(self.members)]

    def names(self):
        return [root_name(self.family, i) for i in sorted(self.members)]


def parabolic_from_flag(family: GroupFamily, flag_ranks) -> ParabolicIndex:
    """Index of the standard parabolic stabilizing a flag of the given ranks.

    Ranks are subbundle ranks: < r for GL/SL, <= n (isotropic) for Sp/SO.
    The SO-even ranks n-1 and n hit the two special simple roots.
    """
    ranks = list(flag_ranks)
    if ranks != sorted(set(ranks)) or any(l < 1 for l in ranks):
        raise InvalidFlag(f"flag ranks must be strictly increasing positive: {ranks}")
    members = set()
    if family.kind in (GL, SL):
        if any(l >= family.r for l in ranks):
            raise InvalidFlag(f"GL/SL flag ranks must be < {family.r}")
        members.update(l - 1 for l in ranks)
        return ParabolicIndex(family, frozenset(members))
    family.require_root_system()
    n = family.n
    if any(l > n for l in ranks):
        raise InvalidFlag(f"isotropic ranks must be <= {n}")
    for l in ranks:
        if family.kind == SP or family.r % 2 == 1:
            members.add(l - 1 if l < n else n - 1)
        elif l == n - 1:
            members.update({n - 2, n - 1})
        elif l == n:
            members.add(n - 1)
        else:
            members.add(l - 1)
    return ParabolicIndex(family, frozenset(members))


@dataclass(frozen=True)
class LeviBlocks:
    """Contiguous diagonal blocks of the Levi factor, as (start, length)
    pairs over the r matrix coordinates, 1-based, mirrored for Sp/SO."""

    family: GroupFamily
    blocks: tuple

    def sizes(self):
        return tuple(length for _, length in self.blocks)


def levi_blocks(family: GroupFamily, index: ParabolicIndex) -> LeviBlocks:
    """Diagonal block shape of the Levi factor L_I inside the r x r matrix."""
    if index.family != family:
        raise FamilyMismatch("index belongs to a different family")
    r = family.r
    cuts = set()
    if family.kind in (GL, SL):
        cuts.update(i + 1 for i in index.members)
    else:
        n = family.n
        for i in index.members:
            if family.kind == SP:
                if i < n - 1:
                    cuts.update({i + 1, r - i - 1})
                else:
                    cuts.add(n)
            elif family.r % 2 == 1:
                if i < n - 1:
                    cuts.update({i + 1, r - i - 1})
                else:
                    cuts.update({n, n + 1})
            else:
                if i < n - 1:
                    cuts.update({i + 1, r - i - 1})
                else:
                    cuts.add(n)
    bounds = [0] + sorted(cuts) + [r]
    blocks = tuple((bounds[k] + 1, bounds[k + 1] - bounds[k])
                   for k in range(len(bounds) - 1) if bounds[k + 1] > bounds[k])
    return LeviBlocks(family, blocks)


def parabolic_leq(a: ParabolicIndex, b: ParabolicIndex) -> bool:
    """P_a contained in P_b: larger index set means smaller parabolic."""
    if a.family != b.family:
        raise FamilyMismatch("cannot compare parabolics of different families")
    return a.members >= b.members


def is_dominant_character(family: GroupFamily, index: ParabolicIndex, dchi):
    """Decide dominance of a character differential of P_I.

    Requires dchi to vanish on the coroots of the simple roots outside I
    (so it really is a character of the parabolic).  Returns (flag, coeffs)
    where coeffs is the exact decomposition over the simple roots, or None
    when dchi does not lie in their rational span.
    """
    simples = simple_roots(family)
    dchi = tuple(dchi)
    for i, alpha in enumerate(simples):
        if i not in index.members and evaluate(dchi, coroot(family, alpha)) != 0:
            raise NotACharacter(
                f"functional does not vanish on the coroot of {root_name(family, i)}")
    if not any(dchi):
        raise NotACharacter("the zero functional is not a character")
    coeffs = solve_rational(simples, dchi)
    if coeffs is None:
        return False, None
    ok = all(c.denominator == 1 and c >= 0 for c in coeffs)
    return ok, coeffs


def character_generators(family: GroupFamily, index: ParabolicIndex):
    """One primitive character differential per member of I.

    The generator for alpha lies in the rational span of the simple roots,
    pairs to zero with the coroot of every other simple root, and pairs
    positively with the coroot of alpha.  The solution line is unique; the
    primitive integer point with positive pairing is returned.
    """
    if not index.members:
        raise NothingToGenerate("empty parabolic index has no generators")
    simples = simple_roots(family)
    coroots = [coroot(family, a) for a in simples]
    out = []
    for i in sorted(index.members):
        # unknowns: coefficients c over simples; constraints: pairing with
        # the other coroots vanishes
        others = [k for k in range(len(simples)) if k != i]
        mat = [[evaluate(simples[j], coroots[k]) for k in others]
               for j in range(len(simples))]
        kernel = _row_kernel(mat)
        assert len(kernel) == 1
        c = kernel[0]
        chi = tuple(sum(c[j] * simples[j][t] for j in range(len(simples)))
                    for t in range(family.cartan_dim))
        chi = primitive(chi)
        if evaluate(chi, coroots[i]) < 0:
            chi = tuple(-x for x in chi)
        # smallest multiple whose simple-root decomposition is integral
        decomp = solve_rational(simples, chi)
        scale = 1
        for c in decomp:
            scale = scale * c.denominator // gcd(scale, c.denominator)
        out.append(tuple(scale * x for x in chi))
    return out
