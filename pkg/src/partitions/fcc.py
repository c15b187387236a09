from typing import Dict

from amoeba_types.types import Partition, SubsetMultiset
from error.errors import EmptyMemberError
from utils.mask_elements import mask_elements


def fcc(S: SubsetMultiset) -> Partition:
    """
    Finest common coarsening of a multiset of subsets.

    This is the ONLY function in this file (following GOLDEN RULE).
    Its parts are the minimal nonempty T such that every member is disjoint
    from T or inside it. Equivalently: start from a member and keep merging
    with any member it meets until nothing changes, which is what the
    union-find below does element by element.

    Args:
        S: multiset of nonempty subsets

    Returns:
        Partition: partition of the union of S

    Raises:
        EmptyMemberError: if the empty set is a member

    Example:
        fcc(SubsetMultiset.from_members([0b011, 0b110, 0b1000]))
        # -> parts {0,1,2}, {3}
    """

    parent: Dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        # Path compression
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for mask, _ in S.items:
        if mask == 0:
            raise EmptyMemberError("the empty set cannot be a member")
        elements = mask_elements(mask)
        for e in elements:
            parent.setdefault(e, e)
        # Merge every element of the member into the class of its first element
        first = find(elements[0])
        for e in elements[1:]:
            root = find(e)
            if root != first:
                parent[root] = first

    classes: Dict[int, int] = {}
    for e in parent:
        root = find(e)
        classes[root] = classes.get(root, 0) | 1 << e

    return Partition.from_parts(list(classes.values()))
