"""Trussness-lifting anchor selection over undirected graphs."""

from .decomposition import (AnchorState, TrussLabeling,
                            anchored_truss_decompose, hulls, layers,
                            order_key, precedes, truss_decompose,
                            trussness_gain, write_labeling_csv)
from .experiments import ExperimentSpec, run_experiment
from .fastpeel import HAVE_NUMBA, PeelKernel
from .followers import (EdgeStatus, FollowerSearchState, FollowerSet,
                        effective_support, get_followers, retract,
                        seed_candidates, upward_route_size)
from .generators import (GadgetResult, GadgetSpec, Witness, bowtie_graph,
                         canonical_membership, complete_graph,
                         coverage_greedy, find_nonsubmodular_witness,
                         generate_gadget, gnm_random_graph, path_graph,
                         planted_clique_graph, powerlaw_cluster_graph)
from .graph import (EdgeListParseError, Graph, common_neighbors,
                    load_edge_list, neighbor_edges, subgraph, support,
                    triangle_count)
from .sampling import subgraph_sample
from .selection import (EnumerationCapError, STRATEGIES, SelectionResult,
                        StrategyConfig, run_strategy, select_base,
                        select_base_plus, select_exact, select_gas,
                        select_random)
from .tree import (ROOT_ID, ReuseLedger, ReuseUpdate, TreeNode,
                   TrussComponentTree, build_tree, classify_reuse,
                   compute_sla, follower_reuse)

__version__ = "0.1.0"
