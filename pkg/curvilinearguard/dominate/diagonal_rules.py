from functools import partial

from curvilinearguard.dominate.local_view import LocalFrame, LocalSet, Reduction
from curvilinearguard.errors import RuleNotApplicable

#
# Cut off sides of 4, 5 or 6 boundary edges, diagonal guards
#


def plan_diagonal(frame: LocalFrame) -> Reduction:
    """
    Chooses the reduced graph for a minimal side of k boundary edges,
    4 <= k <= 6, and the rewrite turning its dominating set into one of the
    whole graph with one more diagonal guard
    :param frame: local frame of the side, v0 vk being the separating diagonal
    :return: reduction
    """
    k = frame.k
    if k == 4:
        return Reduction("diag.k4", frame, (), rewrite=_diag_k4)
    if k == 5:
        if frame.apex(0, 5) == 3:
            frame = frame.reflect()
        return Reduction("diag.k5", frame, (2,), rewrite=_diag_k5)
    if k == 6:
        return _plan_diag_k6(frame)
    raise RuleNotApplicable(f"No diagonal rule for k={k}")


def _diag_k4(s: LocalSet):
    if not s.cov(0):
        s = s.reflected()
    frame = s.frame
    if frame.has(1, 3):
        return s.rewrite("d13", add=[(1, 3)])
    if frame.has(2, 4):
        return s.rewrite("d24", add=[(2, 4)])
    return s.rewrite("d02+d03", add=[(2, 3)])


def _diag_k5(s: LocalSet):
    if s.has(0, 2):
        return s.rewrite("d02", add=[(3, 4)])
    if s.has(2, 5):
        return s.rewrite("d25", remove=[(2, 5)], add=[(0, 2), (4, 5)])
    return s.rewrite("v0+v5", add=[(2, 3)])


def _plan_diag_k6(frame: LocalFrame) -> Reduction:
    first = frame.apex(0, 3)
    second = frame.apex(3, 6)
    if first == 1 and second == 4:
        # Mirror image of the case v'=v2
        frame = frame.reflect()
        first, second = 2, 5

    if first == 2:
        inner = (3, 5) if second == 5 else (4, 6)
        return Reduction(
            "diag.k6.v2", frame, (2, 3), rewrite=partial(_diag_k6_near, inner=inner)
        )
    return Reduction("diag.k6.v1v5", frame, (1, 3), rewrite=_diag_k6_far)


def _diag_k6_near(s: LocalSet, inner):
    if s.has(0, 2):
        return s.rewrite("d02", add=[inner])
    if s.has(3, 6):
        if s.cov(0):
            return s.rewrite("d36+v0", remove=[(3, 6)], add=[(2, 3), (5, 6)])
        return s.rewrite("d36", remove=[(3, 6)], add=[(0, 1), (5, 6)])
    if s.has(0, 3):
        return s.rewrite("d03", remove=[(0, 3)], add=[(0, 2), inner])
    return s.rewrite("e2", remove=[(2, 3)], add=[(0, 2), inner])


def _diag_k6_far(s: LocalSet):
    if s.has(1, 3):
        return s.rewrite("d13", add=[(5, 6)])
    if s.has(0, 3):
        return s.rewrite("d03", remove=[(0, 3)], add=[(0, 1), (3, 5)])
    if s.has(0, 1):
        return s.rewrite("e0", add=[(3, 5)])
    return s.rewrite("d36", remove=[(3, 6)], add=[(1, 3), (5, 6)])


#
# Cut off sides of 3 or 4 boundary edges, contraction variant
#


def plan_diagonal_contraction(frame: LocalFrame) -> Reduction:
    """
    Minimal sides of 3 or 4 boundary edges. Three edges contract the
    remainder with a vertex guard at v0 that d02 takes over, four edges keep
    the remainder and add d24 next to a covered v0.
    :param frame: local frame of the side
    :return: reduction
    """
    k = frame.k
    if k == 3:
        if not frame.has(0, 2):
            frame = frame.reflect()
        return Reduction("contract.k3", frame, contract_at=0, rewrite=_contract_k3)
    if k == 4:
        return Reduction("contract.k4", frame, (), rewrite=_contract_k4)
    raise RuleNotApplicable(f"No contraction rule for k={k}")


def _contract_k3(s: LocalSet):
    return s.rewrite("d02", add=[(0, 2)])


def _contract_k4(s: LocalSet):
    if not s.cov(0):
        s = s.reflected()
    return s.rewrite("d24", add=[(2, 4)])
