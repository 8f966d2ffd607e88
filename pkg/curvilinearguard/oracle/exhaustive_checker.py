import sys
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

import pandas as pd
from tqdm import tqdm

from curvilinearguard.dominate.algorithm_registry import (
    DEFAULT_ALGORITHM,
    algorithm_for,
)
from curvilinearguard.errors import GuardingError, NTooLarge
from curvilinearguard.oracle.brute_force_oracle import min_2dominating_set
from curvilinearguard.tracking_decorator import TrackingDecorator
from curvilinearguard.trigraph.triangulation_generator import enumerate_triangulations
from curvilinearguard.trigraph.triangulation_graph import (
    DominatingSet,
    Mode,
    TriangulationGraph,
    is_2_dominated,
)

MAX_EXHAUSTIVE_SIZE = 12


@dataclass
class InstanceRow:
    index: int
    diagonals: str
    size: int
    bound: int
    optimum: Optional[int] = None
    violation: Optional[str] = None


@dataclass
class ExhaustiveReport:
    n: int
    mode: str
    algorithm: str
    checked: int = 0
    exception: int = 0
    rows: list = field(default_factory=list)

    @property
    def violations(self):
        return [row for row in self.rows if row.violation is not None]

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(
            [asdict(row) for row in self.rows],
            columns=["index", "diagonals", "size", "bound", "optimum", "violation"],
        )

    def write_csv(self, path):
        self.to_dataframe().to_csv(path, index=False)

    def summary(self):
        return f"{len(self.violations)} violations / {self.checked} triangulations"

    def to_dict(self):
        return {
            "n": self.n,
            "mode": self.mode,
            "algorithm": self.algorithm,
            "checked": self.checked,
            "violations": [asdict(row) for row in self.violations],
            "exception": self.exception,
        }


def find_violation(
    graph: TriangulationGraph, result: DominatingSet, mode: Mode, bound, optimum=None
):
    """
    First broken promise of an algorithm result, or None
    :param graph: triangulation graph
    :param result: dominating set returned by the algorithm
    :param mode: expected mode
    :param bound: promised maximum size
    :param optimum: optional oracle optimum
    :return: violation text or None
    """
    if mode is Mode.EDGE:
        diagonals = [m for m in result.sorted_members() if not graph.is_boundary(*m)]
        if diagonals:
            return f"diagonal members {diagonals}"
    if not is_2_dominated(graph, result):
        return "not 2-dominated"
    if len(result) > bound:
        return f"size {len(result)} exceeds bound {bound}"
    if optimum is not None and optimum > len(result):
        return f"size {len(result)} below oracle optimum {optimum}"
    return None


@TrackingDecorator.track_time
def check_bound_exhaustive(
    n,
    mode: Mode,
    bound_fn: Callable = None,
    algorithm: str = None,
    with_optimum=True,
    quiet=False,
    max_n=MAX_EXHAUSTIVE_SIZE,
) -> ExhaustiveReport:
    """
    Runs an algorithm over every triangulation of the convex n-gon
    :param n: number of vertices, at most max_n
    :param mode: diagonal or edge guards
    :param bound_fn: promised size as a function of n, defaults to the bound of the algorithm
    :param algorithm: registered algorithm name, defaults to the reference algorithm of the mode
    :param with_optimum: compares every result with the oracle optimum
    :param quiet: suppresses status lines, which go to stderr
    :param max_n: largest accepted n
    :return: report
    """
    if n > max_n:
        raise NTooLarge(f"Exhaustive checks are limited to n <= {max_n}")

    chosen = algorithm_for(algorithm or DEFAULT_ALGORITHM[mode])
    bound = (bound_fn or chosen.bound)(n)
    report = ExhaustiveReport(n=n, mode=mode.value, algorithm=chosen.name)

    for index, graph in enumerate(
        tqdm(
            iterable=enumerate_triangulations(n),
            desc=f"Check {chosen.name} n={n}",
            unit="triangulation",
            disable=quiet,
        )
    ):
        try:
            result = chosen.run(graph)
            optimum = min_2dominating_set(graph, mode).size if with_optimum else None
            violation = find_violation(graph, result, mode, bound, optimum)
            report.rows.append(
                InstanceRow(
                    index=index,
                    diagonals=str([list(d) for d in graph.diagonals]),
                    size=len(result),
                    bound=bound,
                    optimum=optimum,
                    violation=violation,
                )
            )
            if violation is not None:
                not quiet and print(
                    f"✗️ Violation: {violation}, diagonals {list(graph.diagonals)}",
                    file=sys.stderr,
                )
        except GuardingError as e:
            report.exception += 1
            print(f"✗️ Exception: {str(e)}, diagonals {list(graph.diagonals)}", file=sys.stderr)
        report.checked += 1

    not quiet and print(
        f"check_bound_exhaustive finished with checked: {report.checked}, "
        f"violations: {len(report.violations)}, exception: {report.exception}",
        file=sys.stderr,
    )
    return report
