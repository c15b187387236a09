from amoeba_types.types import Partition, SubsetMultiset
from partitions.fcc import fcc


def join(P: Partition, Q: Partition) -> Partition:
    """P ∨ Q := fcc(P ∪ Q), a partition of support(P) ∪ support(Q)"""
    return fcc(SubsetMultiset.from_members(list(P.parts) + list(Q.parts)))
