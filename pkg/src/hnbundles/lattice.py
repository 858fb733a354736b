"""Kernel lattice, coroot lattice, saturation, fundamental groups, and
the central slope data, all through integer normal forms.

Gamma is the cocharacter lattice of the maximal torus in its own
coordinates (for SL, the trace-zero sublattice of Z^r, presented by a
basis).  Lambda is the integer span of all coroots, Lambda-hat its
saturation inside Gamma; the quotients give the fundamental groups.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInKernelLattice
from .intlin import (_row_kernel, invert_unimodular, smith_normal_form,
                     solve_rational)
from .parabolic import ParabolicIndex, levi_blocks
from .rootsys import (GL, SL, GroupFamily, all_roots, coroot, evaluate,
                      simple_roots)


@dataclass(frozen=True)
class IntegerLattice:
    ambient_dim: int
    basis: tuple

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        coeffs = solve_rational(self.basis, tuple(v))
        return coeffs is not None and all(c.denominator == 1 for c in coeffs)


@dataclass(frozen=True)
class FinAbGroup:
    """Finitely generated abelian group in invariant-factor form."""

    free_rank: int
    torsion: tuple

    def __post_init__(self):
        assert all(d >= 2 for d in self.torsion)
        assert all(x % y == 0 for x, y in zip(self.torsion[1:], self.torsion))

    @property
    def order(self):
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def describe(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "1"


@dataclass(frozen=True)
class LatticeTower:
    family: GroupFamily
    gamma_basis: tuple
    lam: IntegerLattice
    lam_sat: IntegerLattice
    psi_denominators: tuple

    @property
    def gamma_dim(self) -> int:
        return len(self.gamma_basis)


def _gamma_basis(family: GroupFamily):
    dim = family.cartan_dim
    if family.kind == SL:
        return tuple(tuple(1 if j == i else (-1 if j == i + 1 else 0) for j in range(dim))
                     for i in range(dim - 1))
    return tuple(tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim))


def _lattice_from_spans(vectors, ambient_dim):
    """Canonical bases of the integer span and of its saturation."""
    mat = [list(v) for v in vectors]
    if not mat:
        empty = IntegerLattice(ambient_dim, ())
        return empty, empty
    diag, v = smith_normal_form(mat)
    vinv = invert_unimodular(v)
    basis = []
    sat = []
    for i, d in enumerate(diag):
        if d != 0:
            basis.append(tuple(d * x for x in vinv[i]))
            sat.append(tuple(vinv[i]))
    return IntegerLattice(ambient_dim, tuple(basis)), IntegerLattice(ambient_dim, tuple(sat))


def _psi_denominators(family, blocks):
    if family.kind in (GL, SL):
        return tuple(length for _, length in blocks)
    # only blocks inside the first n diagonal coordinates have a free
    # central parameter; the middle and mirrored blocks are determined
    n = family.cartan_dim
    return tuple(length for start, length in blocks if start - 1 + length <= n)


def _tower(family, roots, blocks):
    dim = family.cartan_dim
    coroots = [coroot(family, a) for a in roots]
    lam, lam_sat = _lattice_from_spans(coroots, dim)
    return LatticeTower(family, _gamma_basis(family), lam, lam_sat,
                        _psi_denominators(family, blocks))


def lattice_tower(family: GroupFamily) -> LatticeTower:
    family.require_root_system()
    return _tower(family, all_roots(family), ((1, family.r),))


def levi_lattice_tower(family: GroupFamily, index: ParabolicIndex) -> LatticeTower:
    """Tower of the Levi factor: coroots restricted to the Levi roots."""
    family.require_root_system()
    simples = simple_roots(family)
    keep = [simples[i] for i in range(len(simples)) if i not in index.members]
    levi_roots = [a for a in all_roots(family)
                  if keep and solve_rational(keep, a) is not None]
    return _tower(family, levi_roots, levi_blocks(family, index).blocks)


def _quotient(ambient_basis, sub_basis):
    """Quotient of the ambient lattice by the sublattice, canonical form."""
    if not sub_basis:
        return FinAbGroup(len(ambient_basis), ())
    coords = []
    for v in sub_basis:
        c = solve_rational(ambient_basis, v)
        assert c is not None and all(x.denominator == 1 for x in c)
        coords.append([int(x) for x in c])
    diag, _ = smith_normal_form(coords)
    nonzero = [d for d in diag if d != 0]
    free = len(ambient_basis) - len(nonzero)
    torsion = tuple(d for d in nonzero if d > 1)
    return FinAbGroup(free, torsion)


def fundamental_groups(family: GroupFamily):
    """(pi1 of the derived group, pi1 of G, pi1 of the abelianization)."""
    return _tower_groups(lattice_tower(family))


def levi_fundamental_groups(family: GroupFamily, index: ParabolicIndex):
    return _tower_groups(levi_lattice_tower(family, index))


def _tower_groups(t: LatticeTower):
    pi1 = _quotient(t.gamma_basis, t.lam.basis)
    pi1_der = _quotient(t.lam_sat.basis, t.lam.basis)
    pi1_ab = _quotient(t.gamma_basis, t.lam_sat.basis)
    return pi1_der, pi1, pi1_ab


def _check_in_gamma(family, a):
    a = tuple(a)
    if len(a) != family.cartan_dim or any(
            not isinstance(c, int) and (not hasattr(c, "denominator") or c.denominator != 1)
            for c in a):
        raise NotInKernelLattice(f"{a} is not a cocharacter of the torus")
    a = tuple(int(c) for c in a)
    if family.kind == SL and sum(a) != 0:
        raise NotInKernelLattice("SL cocharacters have trace zero")
    return a


def free_functionals(family: GroupFamily):
    """Integer functionals cutting out the free part of pi1(G): the
    Hermite-reduced kernel of the coroot span, restricted to Gamma."""
    dim = family.cartan_dim
    coroots = [coroot(family, r) for r in all_roots(family)]
    kernel = _row_kernel([[cr[i] for cr in coroots] for i in range(dim)])
    gamma = _gamma_basis(family)
    return tuple(f for f in kernel if any(evaluate(f, g) for g in gamma))


def obstruction_class(family: GroupFamily, a):
    """Class of the degree cocharacter a in pi1(G) = Gamma/Lambda.

    Returns (free_coords, torsion_residues): free coordinates through the
    canonical kernel functionals (for GL this is the total degree), and
    torsion residues in adapted Smith coordinates, reduced mod the
    invariant factors.
    """
    a = _check_in_gamma(family, a)
    t = lattice_tower(family)
    free = tuple(evaluate(f, a) for f in free_functionals(family))
    coords = solve_rational(t.gamma_basis, a)
    assert coords is not None and all(c.denominator == 1 for c in coords)
    coords = [int(c) for c in coords]
    rel = []
    for v in t.lam.basis:
        c = solve_rational(t.gamma_basis, v)
        rel.append([int(x) for x in c])
    residues = []
    if rel:
        diag, vmat = smith_normal_form(rel)
        adapted = [sum(coords[i] * vmat[i][j] for i in range(len(coords)))
                   for j in range(len(coords))]
        for i, d in enumerate(diag):
            if d > 1:
                residues.append(adapted[i] % d)
    return free, tuple(residues)


def topological_type(family: GroupFamily, a):
    """Central averaging of a degree vector: the slope-type of the bundle."""
    a = _check_in_gamma(family, a)
    if family.kind == GL:
        avg = Fraction(sum(a), family.r)
        return tuple(avg for _ in a)
    return tuple(Fraction(0) for _ in a)


def levi_topological_type(family: GroupFamily, index: ParabolicIndex, a):
    """Per-Levi-block averaging; Sp/SO middle blocks average to zero."""
    a = _check_in_gamma(family, a)
    blocks = levi_blocks(family, index).blocks
    dim = family.cartan_dim
    out = [Fraction(0)] * dim
    for start, length in blocks:
        lo = start - 1
        hi = lo + length
        if family.kind in (GL, SL):
            avg = Fraction(sum(a[lo:hi]), length)
            for i in range(lo, hi):
                out[i] = avg
        elif hi <= dim:
            avg = Fraction(sum(a[lo:hi]), length)
            for i in range(lo, hi):
                out[i] = avg
    return tuple(out)
