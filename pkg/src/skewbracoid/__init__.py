"""Skew braces, skew bracoids, and set-theoretic Yang-Baxter solutions
constructed from abelian maps on finite groups."""

from .braces import (OpTable, SkewBrace, brace_block, braces_from_map,
                     circle_table, gamma_family, make_brace, opposite_table,
                     quotient_brace, verify_brace)
from .bracoids import (Bracoid, bracoid_from_C1, bracoid_from_C2,
                       find_contained_brace, phi_tower_bracoid,
                       reduce_bracoid, verify_bracoid)
from .errors import (InternalConsistencyError, PreconditionError,
                     SkewBracoidError, WorkLimitError)
from .groups import (FiniteGroup, Subgroup, build_group, center, coset_space,
                     cyclic, dihedral, direct_product, enumerate_subgroups,
                     from_table, is_normal, semidirect, subgroup_generated,
                     symmetric)
from .ideals import (IdealVerdict, classify_subgroup, find_strong_left_ideals,
                     named_subgroups)
from .maps import (GroupMap, enumerate_abelian_maps, identity_map,
                   left_regular_map, make_map, map_analysis, phi_of,
                   phi_power, product_swap_map, psi_iterate, trivial_map)
from .serialize import export_json, export_pretty, parse_group, parse_map
from .ybe import (YbeSolution, build_ybe_abelian_pair,
                  build_ybe_from_contained_brace, build_ybe_idempotent,
                  build_ybe_product, verify_ybe)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
