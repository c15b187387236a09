from typing import Union

from amoeba_types.types import Partition, SubsetMultiset
from amoeba_types.rank_oracle import RankOracle
from error.errors import EmptyMemberError


def tilde_r(M: RankOracle, S: Union[SubsetMultiset, Partition]) -> int:
    """
    r̃(S) = sum over members (with multiplicity) of 2r(S_i) - 1.

    Args:
        M: loopless rank oracle
        S: a multiset of nonempty subsets, or a partition

    Returns:
        int: the weight, at least #S on a loopless matroid

    Raises:
        EmptyMemberError: if the empty set is a member
    """
    if isinstance(S, Partition):
        items = [(part, 1) for part in S.parts]
    else:
        items = S.items

    total = 0
    for mask, multiplicity in items:
        if mask == 0:
            raise EmptyMemberError("the empty set cannot be a member")
        total += multiplicity * (2 * M.rank(mask) - 1)
    return total
