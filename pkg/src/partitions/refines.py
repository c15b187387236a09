from amoeba_types.types import Partition
from error.errors import SupportMismatchError


def refines(P: Partition, Q: Partition) -> bool:
    """True iff every part of P lies inside some part of Q (same support required)"""
    if P.support != Q.support:
        raise SupportMismatchError(f"supports differ: {P.support:#x} vs {Q.support:#x}")
    return all(any(p & ~q == 0 for q in Q.parts) for p in P.parts)
