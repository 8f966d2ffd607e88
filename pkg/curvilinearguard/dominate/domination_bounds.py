import math

from curvilinearguard.trigraph.triangulation_graph import Mode


def diag_bound(n):
    """Diagonal guards sufficient for any triangulation graph with n vertices"""
    return (n + 1) // 3


def edge_bound(n):
    """Edge guards sufficient for any triangulation graph, the quadrilateral needs two"""
    if n == 4:
        return 2
    return (2 * n + 1) // 5


def edge_linear_bound(n):
    """Edge guards reached by the linear time algorithm"""
    if n == 4:
        return 2
    return 3 * n // 7


def monotone_bound(n):
    return math.ceil((n + 1) / 4)


def mobile_lower_bound(n):
    return n // 3


def edge_lower_bound(n):
    return math.ceil(n / 3)


def bound_for(mode: Mode, n):
    return diag_bound(n) if mode is Mode.DIAGONAL else edge_bound(n)
