from dataclasses import dataclass
from typing import Callable

from curvilinearguard.dominate.diagonal_dominator import (
    diag_2dominate_contraction,
    diag_2dominate_linear,
)
from curvilinearguard.dominate.domination_bounds import (
    diag_bound,
    edge_bound,
    edge_linear_bound,
)
from curvilinearguard.dominate.edge_dominator import (
    edge_2dominate_linear,
    edge_2dominate_quadratic,
)
from curvilinearguard.trigraph.triangulation_graph import Mode


@dataclass(frozen=True)
class Algorithm:
    name: str
    mode: Mode
    run: Callable
    bound: Callable


ALGORITHMS = {
    algorithm.name: algorithm
    for algorithm in (
        Algorithm("diag-linear", Mode.DIAGONAL, diag_2dominate_linear, diag_bound),
        Algorithm("diag-contract", Mode.DIAGONAL, diag_2dominate_contraction, diag_bound),
        Algorithm("edge-quadratic", Mode.EDGE, edge_2dominate_quadratic, edge_bound),
        Algorithm("edge-linear", Mode.EDGE, edge_2dominate_linear, edge_linear_bound),
    )
}

DEFAULT_ALGORITHM = {Mode.DIAGONAL: "diag-linear", Mode.EDGE: "edge-quadratic"}


def algorithm_for(name) -> Algorithm:
    if name not in ALGORITHMS:
        raise KeyError(f"Unknown algorithm {name}, expected one of {', '.join(ALGORITHMS)}")
    return ALGORITHMS[name]
