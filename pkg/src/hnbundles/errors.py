"""Exception hierarchy shared across the library."""


class HnBundleError(Exception):
    """Base class for all library errors."""


class UnsupportedRank(HnBundleError):
    """Rank outside the range a family supports (e.g. SO with r < 3)."""


class NotARoot(HnBundleError):
    """Functional is not a root of the given family."""


class TooLarge(HnBundleError):
    """Input exceeds an enumeration guard."""


class InvalidFlag(HnBundleError):
    """Flag rank out of the admissible range."""


class FamilyMismatch(HnBundleError):
    """Operands belong to different group families."""


class NotACharacter(HnBundleError):
    """Functional is not the differential of a character of the parabolic."""


class NothingToGenerate(HnBundleError):
    """Character generators requested for the empty parabolic index."""


class ZeroBundle(HnBundleError):
    """Operation on an empty bundle."""


class NotDegreeZero(HnBundleError):
    """Sp/SO vertical degree requires total degree zero."""


class NotIntegral(HnBundleError):
    """Cartan vector with non-integer coordinates where a cocharacter is required."""


class NotInKernelLattice(HnBundleError):
    """Vector does not lie in the kernel lattice of the family."""


class InvalidReduction(HnBundleError):
    """Reduction data inconsistent with the given degree vector."""
