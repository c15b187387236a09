import logging
from typing import List, Optional

from amoeba_types.types import SubsetMultiset
from error.errors import EmptyMemberError

logger = logging.getLogger(__name__)


def _first_crossing_pair(members: List[int]):
    for i in range(len(members)):
        a = members[i]
        for j in range(i + 1, len(members)):
            b = members[j]
            if a & b and a & ~b and b & ~a:
                return i, j
    return None


def uncross(S: SubsetMultiset, trace: Optional[List[SubsetMultiset]] = None) -> SubsetMultiset:
    """
    Rewrite S into a cross-free multiset T with S ⪰ T.

    This is the ONLY public function in this file (following GOLDEN RULE).
    Repeatedly replace the first crossing pair (canonical order) S, S' by
    S ∩ S', S ∪ S'. Nested pairs are skipped since their rewrite is the
    identity. Each rewrite strictly increases n(S) = sum |S|^2 and keeps every
    element count c(S)_e, which bounds the number of steps.

    Args:
        S: multiset without the empty set
        trace: if given, receives every intermediate multiset, starting with S

    Returns:
        SubsetMultiset: a cross-free multiset below S

    Raises:
        EmptyMemberError: if the empty set is a member
    """

    members = S.members()
    if any(m == 0 for m in members):
        raise EmptyMemberError("the empty set cannot be a member")

    if trace is not None:
        trace.append(S)

    steps = 0
    while True:
        pair = _first_crossing_pair(members)
        if pair is None:
            break
        i, j = pair
        a, b = members[i], members[j]
        # j > i, so deleting j first keeps index i valid
        del members[j]
        del members[i]
        members.extend([a & b, a | b])
        members.sort()
        steps += 1
        if trace is not None:
            trace.append(SubsetMultiset.from_members(members))

    logger.debug(f"uncross: {steps} rewrite step(s)")
    return SubsetMultiset.from_members(members)
