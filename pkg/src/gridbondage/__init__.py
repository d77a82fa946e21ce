"""Exact domination and bondage numbers of strong and direct products of paths."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    Graph, GraphError, GridSpec, cartesian_product, connected_components, direct_product,
    distance, grid_graph, parse_graph, path_graph, read_graph, remove_edges, strong_product,
    write_graph, format_graph,
)
from .domination import (  # noqa: E402
    EnumerationIncomplete, GammaSetFamily, canonical_gamma_set_strong, domination_number,
    enumerate_gamma_sets, exists_dominating_set, is_dominating, max_disjoint_gamma_sets,
    property_P_gamma_sets, satisfies_property_P, vertices_in_some_gamma_set,
)
from .bondage import BondageResult, bondage_number, is_bondage_set, lemma1_bound, lemma2_bound  # noqa: E402
from .oracle import (  # noqa: E402
    Prediction, ResidueClass, canonical_path_gamma_sets, gamma_path, gamma_strong,
    predict_bondage_direct, predict_bondage_strong, witness_bondage_set_strong,
)
