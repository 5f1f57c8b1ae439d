"""Tension-continuous mappings between finite graphs."""

from .graphs import (
    Circuit,
    Cut,
    Digraph,
    GraphError,
    ParseError,
    SpanningForest,
    circuit_union,
    complete_graph,
    cycle_graph,
    digraph,
    disjoint_union,
    enumerate_circuits,
    fundamental_circuits,
    hypercube_graph,
    isomorphic,
    oriented_circuit,
    parse_graph,
    parse_graph6,
    path_graph,
    product,
    spanning_forest,
    subdivide_balanced,
    undirected,
)
from .groups import (
    Cyclic,
    CYCLIC_Z,
    GroupSpec,
    INFINITY,
    TRIVIAL,
    Z,
    Zn,
    divisors,
    exponent,
    parse_group,
    reduce_group,
)
from .tensions import (
    EdgeFunction,
    edge_function,
    elementary_tension,
    flow_basis,
    is_flow,
    is_tension,
    potential_tension,
)
from .ttmaps import (
    CompareResult,
    DivisorSet,
    EdgeMap,
    SearchBudgetExceeded,
    TTSearchResult,
    algebraic_image,
    cayley_lift,
    compare,
    count_tt_maps,
    enumerate_tt_maps,
    find_tt,
    g_invariant,
    is_cut_tt_Z,
    is_tt,
    is_tt_rigid,
    tt_divisor_set,
    tt_exists,
    tt_exists_via_hom,
    tt_set,
)
from .homs import (
    VertexMap,
    chromatic_number,
    find_all_homs,
    find_hom,
    homotens_pair,
    induced_map,
    is_hom_induced,
    is_nice,
    k5_target_check,
)
from .deltas import (
    RigidBase,
    chi_tt,
    delta,
    functor_image,
    functor_map,
    halved_cube_component,
    integer_cone_member,
    rigid_search,
    tt_set_circuit_union,
)
from .named import named_graph
from .randlab import Experiment, estimate_fraction, sample_gnp

__version__ = "0.1.0"
