"""Colouring graphs from random lists: exact solvers, choosability
certification, tightness gadgets, closed-form bound evaluators, and
reproducible Monte Carlo experiments."""

from .bounds import (
    GadgetProbability,
    IntegralQuery,
    ThresholdQuery,
    component_tail_bound,
    evaluate_order,
    gadget_probability,
    integral_bound_check,
    threshold_general,
    threshold_hfree,
    witness_term_ratio,
)
from .choosability import (
    ChoosabilityReport,
    GSearchReport,
    choice_number,
    chromatic_number,
    g_search,
    is_k_choosable,
)
from .dangerous import DangerousSubgraph, component_profile, dangerous_subgraph
from .errors import (
    CapExceededError,
    ColourableBaseError,
    ComponentTooLargeError,
    GraphParseError,
    RandlistsError,
)
from .experiments import (
    EstimateRecord,
    SweepResult,
    component_experiment,
    gadget_experiment,
    mc_colourable,
    sweep,
    wilson_interval,
)
from .gadget import GadgetInstance, build_gadget, has_bad_copy
from .graphs import (
    ForbiddenSpec,
    Graph,
    blow_up,
    complete_multipartite,
    contains_forbidden,
    cycle_power,
    disjoint_cliques,
    petersen,
)
from .graphio import parse_edge_list, parse_graph6, to_graph6
from .lists import ListAssignment, sample_assignment, sample_k_subset
from .rng import Seed, SplitMix64
from .solver import (
    Colouring,
    Witness,
    exact_list_colouring,
    is_colourable,
    minimal_witness,
    rainbow_matching_colouring,
    reduce_unique_colours,
    validate_witness,
)

__version__ = "0.1.0"
