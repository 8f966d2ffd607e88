from dataclasses import dataclass

import networkx as nx

from curvilinearguard.trigraph.triangulation_graph import TriangulationGraph


@dataclass(frozen=True)
class DualTree:
    graph: nx.Graph
    triangles: tuple

    @property
    def node_count(self):
        return self.graph.number_of_nodes()

    @property
    def link_count(self):
        return self.graph.number_of_edges()

    @property
    def links(self):
        """Links as (node, node, diagonal) triples"""
        return [(a, b, data["diagonal"]) for a, b, data in self.graph.edges(data=True)]

    def diagonal_of(self, a, b):
        return self.graph.edges[a, b]["diagonal"]

    def max_degree(self):
        return max((degree for _, degree in self.graph.degree()), default=0)

    def is_path(self):
        return self.node_count == 1 or (
            nx.is_tree(self.graph) and self.max_degree() <= 2
        )


def dual_tree(graph: TriangulationGraph) -> DualTree:
    """
    Builds the dual tree: one node per triangle, one link per diagonal
    :param graph: triangulation graph
    :return: dual tree
    """
    tree = nx.Graph()
    tree.add_nodes_from(
        (index, {"triangle": triangle}) for index, triangle in enumerate(graph.triangles)
    )
    for diagonal in graph.diagonals:
        first, second = graph.edge_triangles[diagonal]
        tree.add_edge(first, second, diagonal=diagonal)
    return DualTree(graph=tree, triangles=tuple(graph.triangles))
