"""Finite topological spaces and extremal disconnectedness."""

from .conditions import (
    ALL_IDS,
    CONDITION_IDS,
    Verdict,
    Witness,
    check_condition,
    check_corollary2,
    check_e_reduced,
    check_e_unrestricted,
    check_hint_fact,
    check_hint_fact_open,
    check_lemma1,
    is_extremally_disconnected,
)
from .dsl import Claim, ParseError, eval_claim, model_check, parse_claim
from .enumeration import (
    CapExceeded,
    canonical_form,
    enumerate_by_families,
    enumerate_homeo_classes,
    enumerate_topologies,
)
from .harness import ed_census, find_counterexample, verify_theorem
from .io import load_topology
from .pointset import PointSet
from .topology import (
    Topology,
    build_from_opens,
    build_from_preorder,
    closed_sets,
    closure,
    derive_preorder,
    interior,
    is_closed,
    is_open,
    open_sets,
)

__version__ = "0.1.0"
