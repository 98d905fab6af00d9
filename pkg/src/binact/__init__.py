"""binact: conjugacy-class graphs, relational complexity and non-binariness
witnesses for finite permutation group actions."""

from .config import Bounds, BoundExceeded, DEFAULT_BOUNDS, RunConfig
from .perm import (Exchange, Permutation, Quad, compose, conjugate, cycles,
                   cycle_type, exchange_related, fixed_points, from_cycles,
                   identity, inverse, is_quad, order, parity, power,
                   quads_on_support, support)
from .group import (ConjugacyClass, PermGroup, alternating, centralizer,
                    class_of, conjugacy_classes, generate, normalizer,
                    rational_class, subgroup_closure, subgroups_up_to_conjugacy,
                    symmetric)
from .action import (Action, CosetAction, NaturalAction, UnionAction,
                     coset_action, fixed_set, fixed_set_subgroup, fixity,
                     max_fixity_classes, natural_action, point_stabilizer,
                     regular_action, trivial_action)
from .classgraph import (ClassGraph, EdgeWitness, build_gamma,
                         build_gamma_rational, component_group,
                         connected_components, dot_export, graph_summary,
                         normalize_involution, quad_edge_oracle)
from .relcomplex import (BinaryVerdict, NonBinaryWitness, RCReport,
                         component_criterion, fixity_criterion, is_binary,
                         k_related, rc_exact, reduce_union, subset_criterion,
                         triple_criterion_search, triple_improvable,
                         witness_to_tuples)
from .verify import (VerificationResult, enumerate_binary_actions, run_suite,
                     verify_component_counts, verify_h_triple,
                     verify_normalizer_lemma, verify_parity_propagation,
                     verify_pcycle_edge_trick, verify_three_cycle_lemma)

__version__ = "0.1.0"
