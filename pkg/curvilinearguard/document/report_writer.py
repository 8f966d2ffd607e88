import os
from dataclasses import asdict, is_dataclass

import pandas as pd
import yaml

from curvilinearguard.monotone.monotone_decomposer import MonotoneDecomposition
from curvilinearguard.tracking_decorator import TrackingDecorator


class IndentDumper(yaml.Dumper):
    def increase_indent(self, flow=False, indentless=False):
        return super(IndentDumper, self).increase_indent(flow, False)


def dump_report(report) -> str:
    """
    YAML text of a report
    :param report: dict or dataclass
    :return: YAML document
    """
    content = asdict(report) if is_dataclass(report) else dict(report)

    return yaml.dump(
        content,
        sort_keys=False,
        default_flow_style=False,
        Dumper=IndentDumper,
        allow_unicode=True,
        width=float("inf"),
        explicit_start=True,
    )


@TrackingDecorator.track_time
def write_report_yaml(report, report_path, quiet=False):
    path_name = os.path.dirname(report_path)
    if path_name:
        os.makedirs(path_name, exist_ok=True)

    with open(report_path, "w", encoding="utf-8") as file:
        file.write(dump_report(report))

    not quiet and print(f"✓ Write report {os.path.basename(report_path)}")


def sigma_table(decomposition: MonotoneDecomposition) -> pd.DataFrame:
    """One row per sorted point u0..u(n+1) with its chain and edges"""
    return pd.DataFrame(
        {
            "j": range(len(decomposition.points)),
            "x": [float(p[0]) for p in decomposition.points],
            "y": [float(p[1]) for p in decomposition.points],
            "vertex": decomposition.corners,
            "sigma": decomposition.sigma,
            "left": decomposition.left_edges,
            "right": decomposition.right_edges,
            "opposite": decomposition.opposite_edges,
        }
    )


def write_csv(dataframe: pd.DataFrame, csv_path, quiet=False):
    path_name = os.path.dirname(csv_path)
    if path_name:
        os.makedirs(path_name, exist_ok=True)
    dataframe.to_csv(csv_path, index=False)
    not quiet and print(f"✓ Write {os.path.basename(csv_path)}")
