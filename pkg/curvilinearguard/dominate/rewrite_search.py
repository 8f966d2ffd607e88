import logging
from itertools import combinations
from typing import Callable, Optional

from curvilinearguard.dominate.local_view import MemberTable, Rewrite

logger = logging.getLogger(__name__)

MAX_ADDED = 6


def search_rewrite(
    table: MemberTable,
    forced_out,
    optional_out,
    candidates,
    budget,
    accepts: Callable,
    max_added=MAX_ADDED,
) -> Optional[Rewrite]:
    """
    Bounded search for a rewrite (D minus R) plus A of at most budget members
    :param table: members of the reduced graph, lifted to the current one
    :param forced_out: members that must leave the set
    :param optional_out: members that may leave the set
    :param candidates: edges that may join the set
    :param budget: maximum size of the resulting set
    :param accepts: predicate on (removed, added) sets
    :param max_added: largest number of added members tried
    :return: rewrite or None
    """
    forced_out = {member for member in forced_out if member in table.members}
    optional_out = sorted(set(optional_out) & table.members - forced_out)
    candidates = sorted(set(candidates) - table.members)
    base = len(table) - len(forced_out)

    for added_count in range(0, min(max_added, len(candidates)) + 1):
        for removed_count in range(len(optional_out), -1, -1):
            if base - removed_count + added_count > budget:
                break
            for removed in combinations(optional_out, removed_count):
                removed = forced_out | set(removed)
                for added in combinations(candidates, added_count):
                    added = set(added)
                    if accepts(removed, added):
                        return Rewrite(
                            case="search",
                            remove=frozenset(removed),
                            add=frozenset(added),
                        )
    return None
