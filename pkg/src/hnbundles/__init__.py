"""Exact-arithmetic toolkit for Harder-Narasimhan filtrations, canonical
reductions, and HN-type stratifications of decorated bundles on a formal
model, for the classical groups GL, SL, Sp, SO."""

from .bundle import (Atom, PlainBundle, SlBundle, SoBundle, SpBundle,
                     adjoint_bundle, adjoint_gl, direct_sum, dual,
                     is_semistable, tensor, underlying, vertical_degree)
from .canon import (CanonicalReduction, HNType, canonical_reduction, check_bh,
                    hn_type)
from .errors import HnBundleError
from .hnfilt import (Filtration, IsotropicFiltration, extend_with_perps,
                     hn_filtration, hn_filtration_so, hn_filtration_sp,
                     hn_uniqueness_oracle, scss)
from .lattice import (FinAbGroup, LatticeTower, fundamental_groups,
                      lattice_tower, levi_fundamental_groups,
                      levi_lattice_tower, obstruction_class, topological_type)
from .parabolic import (LeviBlocks, ParabolicIndex, character_generators,
                        is_dominant_character, levi_blocks, parabolic_from_flag,
                        parabolic_leq)
from .rootsys import (GroupFamily, coroot, dominant_representative,
                      positive_roots, simple_roots, weyl_orbit)
from .strata import (StrataPoset, StratumLabel, enumerate_strata,
                     hull_membership, stratum_leq, to_dot)

__all__ = [name for name in dir() if not name.startswith("_")]
