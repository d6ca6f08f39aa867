"""Spectral bounds, exact values and constructions for distance-t chromatic indices."""

from .bounds import (
    BoundReport,
    Chi2Class,
    DiagStats,
    Method,
    Poly,
    chi2_behaviour_class,
    chi2_closed,
    chi2_closed_regular,
    chi3_closed_regular,
    first_inertial,
    hoffman_general,
    hoffman_regular,
    line_data,
    second_inertial,
    wilf,
)
from .catalog import named
from .constructions import (
    BipartiteOrdered,
    EdgeColouring,
    SrgParams,
    balanced_bipartite_product,
    balbiprod_tight_predicate,
    complete,
    complete_bipartite,
    cycle,
    e6_parameters,
    e6_wilf_ratio,
    gm_spectrum_formula,
    guo_mohar,
    six_colouring_cycles,
    srg_wilf,
    t_critical_example,
    twelve_colouring_gm,
)
from .en import (
    Interval,
    en_conjecture_value,
    forbidden_interval_general,
    forbidden_interval_regular,
    screen_counterexample,
)
from .errors import GraphError, InapplicableError, ParseError
from .exact import ExactResult, brute_force_chi, chromatic_number, exact_chi_t_prime, validate_colouring
from .graph import (
    Graph,
    edge_distance,
    is_t_partially_walk_regular,
    line_graph,
    max_degree,
    power_graph,
    regularity,
)
from .io import parse_graph, write_graph
from .polyopt import OptResult, optimize_first_inertial, optimize_hoffman, optimize_second_inertial
from .spectral import Spectrum, adjacency_spectrum, interlacing_check, line_graph_spectrum_regular

__version__ = "0.1.0"
