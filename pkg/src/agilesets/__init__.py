"""Agile vertex sets, minor obstructions and their certificates."""

from __future__ import annotations

from .agility import (
    AgilityVerdict,
    dexterity_order,
    find_agile_subset,
    find_disjoint_connected_covers,
    is_agile,
    is_dexterous,
    is_independent,
    is_m_agile,
    is_m_connected,
    lift_through_minor,
    minor_minimal_reduction,
    reduce_to_2connected,
)
from .budget import Budget, BudgetExceeded
from .claims import claim_ids, run_all, run_claim
from .cross import Cross, find_cross, validate_cross
from .decomposition import (
    CrossingReport,
    TreeDecomposition,
    decompose_along_order2,
    nested_family_check,
    torsos,
    tree_decomposition_from_nested,
)
from .enumeration import connected_graphs, connected_graphs_upto
from .formats import Graph6Error, parse_graph6, read_graph, serialize_graph6
from .generators import (
    LabeledGraph,
    complete_bipartite,
    counterexample_graph,
    fan,
    grid,
    ladder,
    regular_strip,
    strip,
    wheel,
)
from .graph import Graph, GraphError, cut_vertices, is_connected, normal_spanning_tree
from .minors import has_k2k_minor, has_minor, is_outerplanar, regular_strip_from_crossings
from .models import MinorModel, validate_minor_model
from .separations import Separation, order2_separations, torso

__version__ = "0.1.0"
