import json
import os
from dataclasses import dataclass, field
from typing import List

from dacite import DaciteError, from_dict

from curvilinearguard.errors import FormatError
from curvilinearguard.trigraph.triangulation_graph import (
    DominatingSet,
    Mode,
    TriangulationGraph,
    build_from_diagonals,
)


@dataclass
class GraphRecord:
    n: int
    diagonals: List[List[int]] = field(default_factory=list)


@dataclass
class DominatingSetRecord:
    mode: str
    members: List[List[int]] = field(default_factory=list)


def parse_json(text):
    """
    Parses JSON text, reporting syntax errors with their position
    :param text: JSON document
    :return: parsed value
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(e.msg, e.lineno, e.colno) from e


def read_json_file(path):
    if not os.path.exists(path):
        raise FormatError(f"File {path} does not exist")
    with open(path, "r", encoding="utf-8") as file:
        return parse_json(file.read())


def write_json_file(path, content):
    path_name = os.path.dirname(path)
    if path_name:
        os.makedirs(path_name, exist_ok=True)
    with open(path, "w", encoding="utf-8") as json_file:
        json_file.write(dump_json(content))


def dump_json(content):
    return json.dumps(content, ensure_ascii=False, indent=2) + "\n"


def record_of(data_class, data, config=None):
    """Typed record from parsed JSON, shape errors become format errors"""
    if not isinstance(data, dict):
        raise FormatError(f"Expected a JSON object for {data_class.__name__}")
    try:
        return from_dict(data_class=data_class, data=data, config=config)
    except DaciteError as e:
        raise FormatError(str(e)) from e


def _pairs(rows, what):
    pairs = []
    for row in rows:
        if len(row) != 2:
            raise FormatError(f"Every {what} needs exactly two labels, got {row}")
        pairs.append((row[0], row[1]))
    return pairs


def graph_from_data(data) -> TriangulationGraph:
    record = record_of(GraphRecord, data)
    return build_from_diagonals(record.n, _pairs(record.diagonals, "diagonal"))


def graph_to_data(graph: TriangulationGraph):
    return {"n": graph.n, "diagonals": [list(d) for d in graph.diagonals]}


def load_graph(path) -> TriangulationGraph:
    """
    Loads a triangulation graph file {"n": .., "diagonals": [[i, j], ..]}
    :param path: graph JSON file
    :return: validated triangulation graph
    """
    return graph_from_data(read_json_file(path))


def parse_mode(value) -> Mode:
    try:
        return Mode(value)
    except ValueError as e:
        raise FormatError(f"Unknown mode {value}, expected diagonal or edge") from e


def dominating_set_from_data(data) -> DominatingSet:
    record = record_of(DominatingSetRecord, data)
    return DominatingSet.of(parse_mode(record.mode), _pairs(record.members, "member"))


def dominating_set_to_data(dominating_set: DominatingSet):
    return {
        "mode": dominating_set.mode.value,
        "members": [list(m) for m in dominating_set.sorted_members()],
    }


def load_dominating_set(path) -> DominatingSet:
    return dominating_set_from_data(read_json_file(path))
