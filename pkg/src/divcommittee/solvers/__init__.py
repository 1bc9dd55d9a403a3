from .brute import brute_force
from .feasibility import FeasibilityRange, feasibility_interval_1laminar
from .dp import dp_independent_1laminar
from .greedy import greedy_lower_extension
from .intersection import (
    ExchangeGraph,
    exchange_graph,
    matroid_intersection_feasibility,
    weighted_matroid_intersection,
)
from .balanced import balanced_pair_greedy, cc_balanced_complement, pair_greedy_bound
from .dispatch import ALGORITHMS, check_feasible, choose_algorithm, solve

__all__ = [
    "ALGORITHMS",
    "ExchangeGraph",
    "FeasibilityRange",
    "balanced_pair_greedy",
    "brute_force",
    "cc_balanced_complement",
    "check_feasible",
    "choose_algorithm",
    "dp_independent_1laminar",
    "exchange_graph",
    "feasibility_interval_1laminar",
    "greedy_lower_extension",
    "matroid_intersection_feasibility",
    "pair_greedy_bound",
    "solve",
    "weighted_matroid_intersection",
]
