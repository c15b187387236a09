import logging

from amoeba_types.types import Partition, SubsetMultiset
from amoeba_types.rank_oracle import RankOracle
from error.errors import LoopError
from partitions.fcc import fcc
from utils.mask_elements import mask_elements

logger = logging.getLogger(__name__)


def connected_components(M: RankOracle) -> Partition:
    """
    Partition of E into the connected components of a loopless matroid.

    This is the ONLY function in this file (following GOLDEN RULE).
    Two elements share a component iff a chain of circuits links them, and
    the fundamental circuits with respect to any basis already generate that
    relation. So: grow a greedy basis B, read off each fundamental circuit
    C(x, B) = x + {b in B : B - b + x is a basis}, and take the finest common
    coarsening of all circuits together with the singletons (coloops stay
    alone). Uses n + (n - d) * d rank calls.

    Args:
        M: loopless rank oracle

    Returns:
        Partition: components in canonical order

    Raises:
        LoopError: if some singleton has rank 0
    """

    ground = mask_elements(M.ground)
    for e in ground:
        if M.rank(1 << e) == 0:
            raise LoopError(e)

    # Step 1: greedy basis
    basis = 0
    basis_rank = 0
    for e in ground:
        if M.rank(basis | 1 << e) > basis_rank:
            basis |= 1 << e
            basis_rank += 1

    # Step 2: fundamental circuits of the non-basis elements
    members = [1 << e for e in ground]
    for x in ground:
        if basis >> x & 1:
            continue
        circuit = 1 << x
        for b in mask_elements(basis):
            if M.rank((basis ^ (1 << b)) | (1 << x)) == basis_rank:
                circuit |= 1 << b
        members.append(circuit)

    # Step 3: close "shares a circuit" transitively
    components = fcc(SubsetMultiset.from_members(members))
    logger.debug(f"{M.name}: {len(components)} connected component(s)")
    return components
