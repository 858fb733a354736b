"""Harder-Narasimhan stratification poset.

Labels are (dominant type, forced parabolic index) pairs; the order
combines parabolic containment with Weyl-orbit convex-hull membership,
decided by exact rational linear programming.  A fast partial-sum
dominance test for GL cross-checks the LP.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .canon import HNType, forced_index
from .errors import FamilyMismatch, TooLarge
from .parabolic import ParabolicIndex, parabolic_leq
from .rootsys import GL, SL, GroupFamily, is_dominant, weyl_orbit

HULL_DIM_GUARD = 6
ENUM_DIM_GUARD = 4
ENUM_BOUND_GUARD = 4


def _phase_one_feasible(columns, target):
    """Exact feasibility of: nonnegative lambda with sum 1 and
    sum(lambda_j * columns[j]) = target.  Phase-1 simplex, Bland's rule."""
    m = len(target) + 1
    n = len(columns)
    rows = []
    rhs = []
    for i in range(m - 1):
        row = [Fraction(c[i]) for c in columns]
        b = Fraction(target[i])
        if b < 0:
            row = [-x for x in row]
            b = -b
        rows.append(row)
        rhs.append(b)
    rows.append([Fraction(1)] * n)
    rhs.append(Fraction(1))
    # tableau with one artificial per row
    tab = [rows[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [rhs[i]]
           for i in range(m)]
    width = n + m
    obj = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(width + 1):
            obj[j] -= tab[i][j]
    for j in range(n, width):
        obj[j] += Fraction(1)  # artificial costs cancel against the sum
    basis = list(range(n, width))
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        pivot = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                if pivot is None or ratio < pivot[0] or \
                        (ratio == pivot[0] and basis[i] < basis[pivot[1]]):
                    pivot = (ratio, i)
        if pivot is None:
            return False  # unbounded cannot happen on a bounded feasibility stub
        _, prow = pivot
        pv = tab[prow][enter]
        tab[prow] = [x / pv for x in tab[prow]]
        for i in range(m):
            if i != prow and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[prow])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, tab[prow])]
        basis[prow] = enter
    return obj[width] == 0


def hull_membership(family: GroupFamily, mu, nu) -> bool:
    """Whether nu lies in the convex hull of the Weyl orbit of mu."""
    if family.cartan_dim > HULL_DIM_GUARD:
        raise TooLarge("hull guard exceeded")
    orbit = weyl_orbit(family, tuple(mu))
    return _phase_one_feasible([tuple(p) for p in orbit], tuple(nu))


def gl_dominance(mu, nu) -> bool:
    """Partial-sum dominance for GL: with equal totals, every prefix sum
    of the descending sort of nu stays below that of mu."""
    a = sorted(mu, reverse=True)
    b = sorted(nu, reverse=True)
    if sum(a) != sum(b):
        return False
    pa = pb = Fraction(0)
    for x, y in zip(a, b):
        pa += x
        pb += y
        if pb > pa:
            return False
    return True


@dataclass(frozen=True)
class StratumLabel:
    family: GroupFamily
    mu: HNType
    index: ParabolicIndex

    def __post_init__(self):
        assert self.index == forced_index(self.family, self.mu.mu)


def stratum_label(family: GroupFamily, mu) -> StratumLabel:
    t = HNType(family, tuple(Fraction(c) for c in mu))
    return StratumLabel(family, t, forced_index(family, t.mu))


def stratum_leq(a: StratumLabel, b: StratumLabel) -> bool:
    """True when b dominates a: the parabolic of b sits inside that of a
    and the type of a lies in the orbit hull of the type of b.  The
    semistable label of a topological type ends up below every label of
    that type under this orientation."""
    if a.family != b.family:
        raise FamilyMismatch("labels of different families")
    if not parabolic_leq(b.index, a.index):
        return False
    return hull_membership(a.family, b.mu.mu, a.mu.mu)


@dataclass(frozen=True)
class StrataPoset:
    labels: tuple
    relation: frozenset  # covering pairs (lower index, higher index)


def enumerate_strata(family: GroupFamily, bound: int,
                     total_degree=None) -> StrataPoset:
    """All dominant integer labels with coordinates in [-bound, bound],
    ordered by covering pairs of the stratum order."""
    dim = family.cartan_dim
    if dim > ENUM_DIM_GUARD or bound > ENUM_BOUND_GUARD:
        raise TooLarge("enumeration guard exceeded")
    labels = []
    for coords in product(range(bound, -bound - 1, -1), repeat=dim):
        if not is_dominant(family, coords):
            continue
        if family.kind == SL and sum(coords) != 0:
            continue
        if total_degree is not None and family.kind in (GL, SL) \
                and sum(coords) != total_degree:
            continue
        labels.append(stratum_label(family, coords))
    labels.sort(key=lambda s: s.mu.mu, reverse=True)
    k = len(labels)
    leq = [[i == j or stratum_leq(labels[i], labels[j]) for j in range(k)]
           for i in range(k)]
    covers = set()
    for i in range(k):
        for j in range(k):
            if i == j or not leq[i][j] or leq[j][i]:
                continue
            if any(m not in (i, j) and leq[i][m] and leq[m][j]
                   and not leq[m][i] and not leq[j][m] for m in range(k)):
                continue
            covers.add((i, j))
    return StrataPoset(tuple(labels), frozenset(covers))


def _label_name(s: StratumLabel) -> str:
    mu = ",".join(str(c) for c in s.mu.mu)
    names = ",".join(s.index.names())
    return f"({mu});{{{names}}}"


def to_dot(p: StrataPoset) -> str:
    """Byte-deterministic DOT rendering of the covering relation."""
    lines = ["digraph strata {"]
    for s in p.labels:
        lines.append(f'  "{_label_name(s)}";')
    for i, j in sorted(p.relation):
        lines.append(f'  "{_label_name(p.labels[i])}" -> "{_label_name(p.labels[j])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def edges_from_dot(text: str):
    """Edge set parsed back from to_dot output, for round-trip checks."""
    edges = set()
    nodes = set()
    for line in text.splitlines():
        line = line.strip()
        if line.startswith('"') and "->" in line:
            left, right = line.split("->")
            edges.add((left.strip().strip('"'),
                       right.strip().rstrip(";").strip().strip('"')))
        elif line.startswith('"') and line.endswith('";'):
            nodes.add(line[1:-2])
    return nodes, edges
