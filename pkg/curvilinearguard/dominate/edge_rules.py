from functools import partial

from curvilinearguard.dominate.local_view import LocalFrame, LocalSet, Reduction
from curvilinearguard.errors import RuleNotApplicable


def e(*indices):
    """Boundary edges e_i = vi v(i+1) in local labels"""
    return [(i, i + 1) for i in indices]


#
# Sides of 5 to 8 boundary edges, two more edge guards per reduction
#


def plan_edge_quadratic(frame: LocalFrame) -> Reduction:
    """
    Reduced graph and rewrite for a minimal side of k boundary edges,
    5 <= k <= 8. The side of five edges contracts the remainder, the others
    keep up to two triangles of the side.
    :param frame: local frame of the side
    :return: reduction
    """
    k = frame.k
    if k == 5:
        if frame.apex(0, 5) in (1, 2):
            frame = frame.reflect()
        return Reduction("edge.k5", frame, contract_at=0, rewrite=_edge_k5)
    if k == 6:
        return Reduction("edge.k6", frame, (), rewrite=_edge_k6)
    if k == 7:
        if frame.apex(0, 7) == 4:
            frame = frame.reflect()
        return Reduction("edge.k7", frame, (3,), rewrite=_edge_k7)
    if k == 8:
        second = frame.apex(0, 4)
        rule = {1: _edge_k8_v1, 2: _edge_k8_v2, 3: _edge_k8_v3}.get(second)
        if rule is None:
            raise RuleNotApplicable("Side of 8 edges without apex v4 on d")
        return Reduction(f"edge.k8.v{second}", frame, (second, 4), rewrite=rule)
    raise RuleNotApplicable(f"No edge rule for k={k}")


def _edge_k5(s: LocalSet):
    return s.rewrite("v0", add=e(0, 3))


def _edge_k6(s: LocalSet):
    if s.has(0, 6):
        return s.rewrite("d06", remove=[(0, 6)], add=e(0, 2, 5))
    if s.cov(0):
        return s.rewrite("v0", add=e(2, 4))
    return s.rewrite("v6", add=e(1, 3))


def _edge_k7(s: LocalSet):
    if s.count((0, 3), (3, 7)):
        return s.rewrite("d03|d37", remove=[(0, 3), (3, 7)], add=e(0, 3, 6))
    return s.rewrite("v0+v7", add=e(2, 4))


def _edge_k8_v1(s: LocalSet):
    d14, d48 = s.has(1, 4), s.has(4, 8)
    if d14 and d48:
        return s.rewrite("d14+d48", remove=[(1, 4), (4, 8)], add=e(0, 3, 5, 7))
    if d14:
        if s.cov(8):
            return s.rewrite("d14+v8", remove=[(1, 4)], add=e(0, 3, 5))
        return s.rewrite("d14+v0", remove=[(1, 4)], add=e(2, 4, 7))
    if d48:
        return s.rewrite("d48", remove=[(4, 8)], add=e(2, 4, 7))
    return s.rewrite("e0+v8", add=e(3, 5))


def _edge_k8_v2(s: LocalSet):
    inner = [(0, 2), (2, 4), (4, 8)]
    present = [pair for pair in inner if s.has(*pair)]
    if len(present) >= 2:
        return s.rewrite("two of d02/d24/d48", remove=inner, add=e(0, 3, 5, 7))
    if not present:
        s.impossible("edge.k8.v2 without d02, d24, d48")
    (single,) = present
    if single == (0, 2):
        return s.rewrite("d02", remove=inner, add=e(0, 3, 5))
    if single == (2, 4):
        if s.cov(0):
            return s.rewrite("d24+v0", remove=inner, add=e(2, 4, 7))
        return s.rewrite("d24+v8", remove=inner, add=e(0, 3, 5))
    return s.rewrite("d48", remove=inner, add=e(2, 4, 7))


def _edge_k8_v3(s: LocalSet):
    d03, d48, e3 = s.has(0, 3), s.has(4, 8), s.has(3, 4)
    if d03 and d48:
        return s.rewrite("d03+d48", remove=[(0, 3), (4, 8)], add=e(0, 3, 5, 7))
    if d03:
        if e3:
            return s.rewrite("d03+e3", remove=[(0, 3)], add=e(0, 5, 7))
        return s.rewrite("d03", remove=[(0, 3)], add=e(0, 3, 5))
    if d48:
        if e3:
            return s.rewrite("d48+e3", remove=[(4, 8)], add=e(0, 5, 7))
        return s.rewrite("d48", remove=[(4, 8)], add=e(2, 4, 7))
    if s.cov(8):
        return s.rewrite("e3+v8", add=e(0, 5))
    return s.rewrite("e3+v0", remove=[(3, 4)], add=e(2, 4, 7))


#
# Sides of 6 to 10 boundary edges, three more guards per seven vertices
#


def plan_edge_linear(frame: LocalFrame) -> Reduction:
    """
    Reduced graph and rewrite for a minimal side of k boundary edges,
    6 <= k <= 10. Sides of 6 and 7 edges remove five vertices and add two
    guards, longer sides remove seven vertices and add three.
    :param frame: local frame of the side
    :return: reduction
    """
    k = frame.k
    if k == 6:
        return Reduction("linear.k6", frame, (), rewrite=_linear_k6)
    if k == 7:
        apex = frame.apex(0, 7)
        if apex in (4, 5):
            frame = frame.reflect()
            apex = 7 - apex
        rule = _linear_k7_v2 if apex == 2 else _linear_k7_v3
        return Reduction(f"linear.k7.v{apex}", frame, (apex,), rewrite=rule)
    if k == 8:
        return Reduction("linear.k8", frame, (), rewrite=_linear_k8)
    if k == 9:
        if frame.apex(0, 9) == 5:
            frame = frame.reflect()
        return Reduction("linear.k9", frame, (4,), rewrite=_linear_k9)
    if k == 10:
        return _plan_linear_k10(frame)
    raise RuleNotApplicable(f"No linear edge rule for k={k}")


def _linear_k6(s: LocalSet):
    if s.has(0, 6):
        return s.rewrite("d06", remove=[(0, 6)], add=e(0, 2, 5))
    if s.cov(0) and s.cov(6):
        return s.rewrite("v0+v6", add=e(1, 4))
    if not s.cov(0):
        s = s.reflected()

    frame = s.frame
    apex = frame.apex(0, 6)
    if apex != 1:
        return s.rewrite("v0", add=e(2, 4))
    if frame.apex(1, 6) in (2, 3):
        return s.rewrite("v0+v1.near", add=e(2, 5))
    return s.rewrite("v0+v1.far", add=e(1, 4))


def _linear_k7_v2(s: LocalSet):
    d02, d27 = s.has(0, 2), s.has(2, 7)
    if d02 and d27:
        return s.rewrite("d02+d27", remove=[(0, 2), (2, 7)], add=e(0, 2, 4, 6))
    if d02:
        if s.frame.apex(2, 7) in (3, 4):
            return s.rewrite("d02.near", remove=[(0, 2)], add=e(0, 3, 6))
        return s.rewrite("d02.far", remove=[(0, 2)], add=e(0, 2, 5))
    if d27:
        return s.rewrite("d27", remove=[(2, 7)], add=e(1, 4, 6))
    return s.rewrite("v0+v7", add=e(2, 5))


def _linear_k7_v3(s: LocalSet):
    if s.count((0, 3), (3, 7)):
        return s.rewrite("d03|d37", remove=[(0, 3), (3, 7)], add=e(0, 3, 6))
    return s.rewrite("v0+v7", add=e(2, 5))


def _linear_k8(s: LocalSet):
    if s.has(0, 8):
        return s.rewrite("d08", remove=[(0, 8)], add=e(0, 3, 5, 7))
    if s.cov(0):
        return s.rewrite("v0", add=e(2, 4, 7))
    return s.rewrite("v8", add=e(0, 3, 5))


def _linear_k9(s: LocalSet):
    if s.count((0, 4), (4, 9)):
        return s.rewrite("d04|d49", remove=[(0, 4), (4, 9)], add=e(0, 3, 5, 8))
    return s.rewrite("v0+v9", add=e(2, 4, 6))


def _plan_linear_k10(frame: LocalFrame) -> Reduction:
    second = frame.apex(0, 5)
    if second == 4 and frame.apex(5, 10) != 6:
        # Mirror image of a side with v' in v1..v3
        frame = frame.reflect()
        second = frame.apex(0, 5)

    if second == 1:
        rule = _linear_k10_v1
    elif second in (2, 3):
        rule = partial(_linear_k10_v23, second=second)
    else:
        rule = _linear_k10_v4
    return Reduction(f"linear.k10.v{second}", frame, (second, 5), rewrite=rule)


def _linear_k10_v1(s: LocalSet):
    if s.count((1, 5), (5, 10)):
        return s.rewrite("d15|d5,10", remove=[(1, 5), (5, 10)], add=e(1, 4, 6, 9))
    return s.rewrite("e0+v10", add=e(3, 5, 7))


def _linear_k10_v23(s: LocalSet, second):
    inner = [(0, second), (second, 5), (5, 10)]
    present = s.count(*inner)
    if present >= 2:
        return s.rewrite("two of d',d'',d5,10", remove=inner, add=e(0, 2, 5, 7, 9))
    if present == 0:
        s.impossible("linear.k10 without d', d'', d5,10")

    # v0 covered by a member other than d' = v0 v'
    v0 = s.frame.v(0)
    others = s.table.counts[v0] - (1 if s.has(0, second) else 0)
    if others > 0:
        return s.rewrite("single+v0", remove=inner, add=e(2, 5, 7, 9))
    return s.rewrite("single+v10", remove=inner, add=e(0, 2, 5, 7))


def _linear_k10_v4(s: LocalSet):
    if s.count((0, 4), (5, 10)):
        return s.rewrite("d04|d5,10", remove=[(0, 4), (5, 10)], add=e(0, 3, 6, 9))
    return s.rewrite("e4", remove=[(4, 5)], add=e(0, 3, 6, 9))
