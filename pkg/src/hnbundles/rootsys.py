"""Root systems of the classical groups GL, SL, Sp, SO in diagonal coordinates.

Cartan vectors are tuples of exact rationals of length ``cartan_dim``:
r for GL/SL, n for Sp(2n) and SO(2n)/SO(2n+1).  Roots are integer
functionals of the same length, evaluated by the dot product.  All Weyl
group machinery is generated from simple reflections rather than
hard-coded permutation models.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotARoot, TooLarge, UnsupportedRank

GL, SL, SP, SO = "gl", "sl", "sp", "so"
KINDS = (GL, SL, SP, SO)

WEYL_DIM_GUARD = 8


@dataclass(frozen=True)
class GroupFamily:
    """One of GL(r), SL(r), Sp(r) with r even, SO(r)."""

    kind: str
    r: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.r < 1:
            raise ValueError("rank must be positive")
        if self.kind == SP and self.r % 2 != 0:
            raise UnsupportedRank(f"Sp requires even matrix size, got {self.r}")
        if self.kind == SO and self.r < 2:
            raise UnsupportedRank(f"SO requires r >= 2, got {self.r}")

    @property
    def cartan_dim(self) -> int:
        if self.kind in (GL, SL):
            return self.r
        return self.r // 2

    @property
    def n(self) -> int:
        """Isotropic rank bound for Sp/SO; alias of cartan_dim."""
        return self.cartan_dim

    @property
    def dim_group(self) -> int:
        r = self.r
        if self.kind == GL:
            return r * r
        if self.kind == SL:
            return r * r - 1
        if self.kind == SP:
            n = r // 2
            return n * (2 * n + 1)
        return r * (r - 1) // 2

    @property
    def torus_dim(self) -> int:
        """Dimension of the maximal torus (Cartan subgroup)."""
        if self.kind == GL:
            return self.r
        if self.kind == SL:
            return self.r - 1
        return self.r // 2

    def require_root_system(self):
        """Reject the degenerate SO(2) root system."""
        if self.kind == SO and self.r < 3:
            raise UnsupportedRank("SO(2) has no usable root system")


def _e(i, dim, c=1):
    v = [0] * dim
    v[i] = c
    return tuple(v)


def evaluate(functional, v):
    """Dot-product pairing of an integer functional against a Cartan vector."""
    return sum(a * b for a, b in zip(functional, v))


@lru_cache(maxsize=None)
def simple_roots(family: GroupFamily):
    """Ordered simple roots of the family in diagonal coordinates."""
    family.require_root_system()
    dim = family.cartan_dim
    out = [tuple(_sub(_e(l, dim), _e(l + 1, dim))) for l in range(dim - 1)]
    if family.kind in (GL, SL):
        return tuple(out)
    n = dim
    if family.kind == SP:
        out.append(_e(n - 1, dim, 2))
    elif family.r % 2 == 1:
        out.append(_e(n - 1, dim))
    else:
        last = list(_e(n - 2, dim))
        last[n - 1] = 1
        out.append(tuple(last))
    return tuple(out)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def positive_roots(family: GroupFamily):
    """Positive roots: closure of the simple system, listed deterministically."""
    family.require_root_system()
    dim = family.cartan_dim
    out = []
    for i in range(dim):
        for j in range(i + 1, dim):
            out.append(_sub(_e(i, dim), _e(j, dim)))
            if family.kind in (SP, SO):
                out.append(tuple(a + b for a, b in zip(_e(i, dim), _e(j, dim))))
    if family.kind == SP:
        out.extend(_e(i, dim, 2) for i in range(dim))
    elif family.kind == SO and family.r % 2 == 1:
        out.extend(_e(i, dim) for i in range(dim))
    return tuple(sorted(out, reverse=True))


@lru_cache(maxsize=None)
def all_roots(family: GroupFamily):
    pos = positive_roots(family)
    return pos + tuple(tuple(-c for c in a) for a in pos)


@lru_cache(maxsize=None)
def _root_set(family: GroupFamily):
    return frozenset(all_roots(family))


def is_root(family: GroupFamily, functional) -> bool:
    return tuple(functional) in _root_set(family)


@lru_cache(maxsize=None)
def coroot(family: GroupFamily, root):
    """The coroot 2a/<a,a> of a root, under the standard dot product."""
    if not is_root(family, root):
        raise NotARoot(f"{root} is not a root of {family}")
    norm = sum(c * c for c in root)
    out = [Fraction(2 * c, norm) for c in root]
    # classical coroots are integral in these coordinates
    return tuple(int(c) for c in out)


def reflect(family: GroupFamily, root, v):
    """Reflection s_root applied to a Cartan vector: v - root(v) * coroot."""
    cr = coroot(family, root)
    val = evaluate(root, v)
    return tuple(x - val * c for x, c in zip(v, cr))


@lru_cache(maxsize=None)
def weyl_orbit(family: GroupFamily, v):
    """Finite Weyl orbit of v, generated by simple reflections; sorted output."""
    family.require_root_system()
    if family.cartan_dim > WEYL_DIM_GUARD:
        raise TooLarge(f"cartan_dim {family.cartan_dim} exceeds orbit guard")
    v = tuple(v)
    simples = simple_roots(family)
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for w in frontier:
            for a in simples:
                img = reflect(family, a, w)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return tuple(sorted(seen, reverse=True))


def dominant_representative(family: GroupFamily, v):
    """Unique orbit element in the closed Weyl chamber (all simple roots >= 0)."""
    family.require_root_system()
    simples = simple_roots(family)
    v = tuple(v)
    while True:
        for a in simples:
            if evaluate(a, v) < 0:
                v = reflect(family, a, v)
                break
        else:
            return v


def is_dominant(family: GroupFamily, v) -> bool:
    return all(evaluate(a, v) >= 0 for a in simple_roots(family))


def weyl_group_order(family: GroupFamily) -> int:
    """Order of the Weyl group, by orbit-stabilizer on a regular vector."""
    dim = family.cartan_dim
    regular = tuple(2 ** (dim - i) for i in range(dim))
    return len(weyl_orbit(family, regular))


def root_name(family: GroupFamily, index: int) -> str:
    """Stable display name of the index-th simple root."""
    n = family.cartan_dim
    if family.kind in (GL, SL) or index < n - 1:
        return f"a{index + 1},{index + 2}"
    if family.kind == SP:
        return f"2a{n}"
    if family.r % 2 == 1:
        return f"a{n}"
    return f"a{n - 1}+a{n}"
