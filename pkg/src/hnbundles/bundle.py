"""Formal bundle model: finite direct sums of semistable atoms.

An atom is a pair (degree, rank) standing for a semistable bundle with
those invariants.  Plain bundles are multisets of atoms; SL bundles add
the trivial-determinant constraint; Sp/SO bundles store the positive
isotropic part and a slope-0 block, the mirror being implied.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (InvalidFlag, NotDegreeZero, NotIntegral, UnsupportedRank,
                     ZeroBundle)
from .rootsys import GL, SL, SO, SP, GroupFamily, all_roots, evaluate


@dataclass(frozen=True, order=True)
class Atom:
    degree: int
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("atom rank must be positive")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)


def _canon(atoms):
    out = tuple(sorted(atoms, reverse=True))
    if not all(isinstance(a, Atom) for a in out):
        raise TypeError("expected atoms")
    return out


@dataclass(frozen=True)
class PlainBundle:
    """Finite nonempty multiset of atoms."""

    atoms: tuple

    def __post_init__(self):
        object.__setattr__(self, "atoms", _canon(self.atoms))
        if not self.atoms:
            raise ZeroBundle("bundle needs at least one atom")

    @property
    def rank(self) -> int:
        return sum(a.rank for a in self.atoms)

    @property
    def degree(self) -> int:
        return sum(a.degree for a in self.atoms)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)


@dataclass(frozen=True)
class SlBundle:
    """Plain bundle with trivial determinant (total degree zero)."""

    underlying: PlainBundle

    def __post_init__(self):
        if self.underlying.degree != 0:
            raise NotDegreeZero("SL bundle must have total degree 0")


def _check_positive(atoms):
    atoms = _canon(atoms)
    if any(a.slope <= 0 for a in atoms):
        raise ValueError("positive part must consist of slope > 0 atoms")
    return atoms


def _check_zero(atoms):
    atoms = _canon(atoms)
    if any(a.degree != 0 for a in atoms):
        raise ValueError("zero block must consist of degree-0 atoms")
    return atoms


@dataclass(frozen=True)
class SpBundle:
    """Symplectic bundle: positive isotropic part plus slope-0 block.

    The underlying bundle is positive + dual(positive) + zero block; the
    zero block is kept as a multiset of slope-0 atoms so that filtration
    quotients compare exactly against the plain-bundle route.
    """

    positive: tuple
    zero_part: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "positive", _check_positive(self.positive))
        object.__setattr__(self, "zero_part", _check_zero(self.zero_part))
        if self.rank % 2 != 0:
            raise UnsupportedRank("Sp bundle rank must be even")

    @property
    def zero_rank(self) -> int:
        return sum(a.rank for a in self.zero_part)

    @property
    def rank(self) -> int:
        return 2 * sum(a.rank for a in self.positive) + self.zero_rank


@dataclass(frozen=True)
class SoBundle:
    """Special-orthogonal bundle, same shape as SpBundle with odd ranks allowed."""

    positive: tuple
    zero_part: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "positive", _check_positive(self.positive))
        object.__setattr__(self, "zero_part", _check_zero(self.zero_part))

    @property
    def zero_rank(self) -> int:
        return sum(a.rank for a in self.zero_part)

    @property
    def rank(self) -> int:
        return 2 * sum(a.rank for a in self.positive) + self.zero_rank


def zero_block(rank: int):
    """Opaque slope-0 block of the given rank, as a single atom."""
    return (Atom(0, rank),) if rank else ()


def underlying(b) -> PlainBundle:
    """The plain bundle beneath any decorated kind."""
    if isinstance(b, PlainBundle):
        return b
    if isinstance(b, SlBundle):
        return b.underlying
    mirror = tuple(Atom(-a.degree, a.rank) for a in b.positive)
    return PlainBundle(b.positive + b.zero_part + mirror)


def dual(b: PlainBundle) -> PlainBundle:
    return PlainBundle(tuple(Atom(-a.degree, a.rank) for a in b.atoms))


def tensor(a: PlainBundle, b: PlainBundle) -> PlainBundle:
    """Formal tensor product; atom products stay single semistable atoms."""
    out = []
    for x in a.atoms:
        for y in b.atoms:
            out.append(Atom(x.degree * y.rank + y.degree * x.rank, x.rank * y.rank))
    return PlainBundle(tuple(out))


def direct_sum(a: PlainBundle, b: PlainBundle) -> PlainBundle:
    return PlainBundle(a.atoms + b.atoms)


def vertical_degree(family: GroupFamily, e, f) -> int:
    """Degree of the vertical tangent bundle of the flag reduction.

    e = (total degree, total rank) of the ambient bundle, f = (degree, rank)
    of the subbundle (isotropic for Sp/SO).  Nonnegative exactly when the
    slope test for semistability holds, positive when it holds strictly.
    """
    d, r = e
    fdeg, l = f
    if family.kind in (GL, SL):
        if not 1 <= l < r:
            raise InvalidFlag(f"need 1 <= l < r, got l={l}, r={r}")
        return -fdeg * r + d * l
    if d != 0:
        raise NotDegreeZero("Sp/SO vertical degree needs ambient degree 0")
    if family.kind == SP:
        if r % 2 != 0:
            raise UnsupportedRank("Sp rank must be even")
        n = r // 2
        if not 1 <= l <= n:
            raise InvalidFlag(f"need 1 <= l <= {n}, got {l}")
        return -fdeg * (2 * n - l + 1)
    if r < 3:
        raise UnsupportedRank("SO vertical degree needs r >= 3")
    if not 1 <= l <= r // 2:
        raise InvalidFlag(f"need 1 <= l <= {r // 2}, got {l}")
    return -fdeg * (r - l - 1)


def vertical_degree_composite(family: GroupFamily, e, f) -> int:
    """Same quantity through the determinant-line route, for cross-checks.

    GL/SL: deg(F* tensor E/F).  Sp: deg(F* tensor F_perp/F) plus the
    det(F*)^(l+1) twist.  SO: the same with twist exponent l-1.
    """
    d, r = e
    fdeg, l = f
    if family.kind in (GL, SL):
        if not 1 <= l < r:
            raise InvalidFlag(f"need 1 <= l < r, got l={l}, r={r}")
        fs = PlainBundle((Atom(-fdeg, l),))
        quot = PlainBundle((Atom(d - fdeg, r - l),))
        return tensor(fs, quot).degree
    if d != 0:
        raise NotDegreeZero("Sp/SO vertical degree needs ambient degree 0")
    if family.kind == SP:
        n = r // 2
        if r % 2 != 0:
            raise UnsupportedRank("Sp rank must be even")
        if not 1 <= l <= n:
            raise InvalidFlag(f"need 1 <= l <= {n}, got {l}")
        mid = -fdeg * (2 * n - 2 * l)
        return mid + (l + 1) * (-fdeg)
    if r < 3:
        raise UnsupportedRank("SO vertical degree needs r >= 3")
    if not 1 <= l <= r // 2:
        raise InvalidFlag(f"need 1 <= l <= {r // 2}, got {l}")
    mid = -fdeg * (r - 2 * l)
    return mid + (l - 1) * (-fdeg)


def is_semistable(b) -> bool:
    """Slope semistability on the formal model.

    Plain/SL: all atoms share one slope.  Sp/SO: the positive part is
    empty.  An SO bundle of total rank 2 is always semistable.
    """
    if isinstance(b, SlBundle):
        b = b.underlying
    if isinstance(b, PlainBundle):
        return len({a.slope for a in b.atoms}) == 1
    if isinstance(b, SoBundle) and b.rank == 2:
        return True
    return not b.positive


def adjoint_bundle(family: GroupFamily, a) -> SoBundle:
    """Adjoint bundle of the torus-split bundle with degree vector a.

    One rank-1 atom of degree alpha(a) per root, plus a rank-(dim T)
    trivial block; the SO decoration takes the positive-degree atoms as
    the isotropic positive part.
    """
    a = tuple(a)
    if any(not isinstance(c, int) and (not hasattr(c, "denominator") or c.denominator != 1)
           for c in a):
        raise NotIntegral(f"adjoint bundle needs an integral vector, got {a}")
    a = tuple(int(c) for c in a)
    positive = []
    zero = [Atom(0, 1)] * family.torus_dim
    for alpha in all_roots(family):
        v = evaluate(alpha, a)
        if v > 0:
            positive.append(Atom(v, 1))
        elif v == 0:
            zero.append(Atom(0, 1))
    return SoBundle(tuple(positive), tuple(zero))


def adjoint_gl(e: PlainBundle) -> SoBundle:
    """End(E) = E* tensor E with its split orthogonal structure."""
    prod = tensor(dual(e), e)
    positive = tuple(a for a in prod.atoms if a.slope > 0)
    zero = tuple(a for a in prod.atoms if a.degree == 0)
    return SoBundle(positive, zero)
