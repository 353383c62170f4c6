"""Exact computation with finite cycle sets, involutive set-theoretic
solutions of the Yang-Baxter equation, and left braces."""

from .brace import (IdealLattice, LeftBrace, additive_span, all_ideals,
                    derived_cycle_set, ideal_action_orbits, ideal_closure,
                    is_cyclic_additive, is_ideal, is_left_ideal,
                    is_simple_brace, is_trivial_brace, lambda_map, lambda_orbits,
                    quotient_brace, socle, sub_cycle_set,
                    transitive_cycle_bases, trivial_brace, validate_brace)
from .characterize import (Classification, MinimalIdealReport, TheoremReport,
                           check_minimal_ideal, classify_cycle_set,
                           congruence_to_ideal, ideal_to_congruence,
                           theorem_characterization)
from .cycleset import (CycleSet, SolutionYBE, all_congruences, are_isomorphic,
                       canonical_form, congruence_closure, cyclic_cycle_set,
                       enumerate_cycle_sets, from_solution, is_congruence,
                       is_indecomposable, is_irretractable, is_simple,
                       multipermutation_level, permutation_group, quotient,
                       relabel, retraction, to_solution, trivial_cycle_set,
                       validate)
from .errors import (BraceError, ConsistencyError, CycleSetError, Error,
                     ParseError, PreconditionError, SolutionError,
                     ValidationError)
from .group_brace import (BaseReconstructionReport, GroupBraceResult,
                          SocleQuotientReport, check_base_reconstruction,
                          group_brace, socle_quotient_check)
from .io_catalog import (CatalogEntry, catalog, catalog_get, catalog_ids,
                         emit_report, parse_brace, parse_cycle_set,
                         parse_perm, parse_solution, render_brace,
                         render_cycle_set, render_perm, render_solution)
from .perm import (Perm, PermGroup, compose, group_closure, identity,
                   inverse, is_transitive, orbits)

__version__ = "0.1.0"
