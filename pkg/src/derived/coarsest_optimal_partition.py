import logging
from typing import Optional, Sequence

from amoeba_types.types import AmoebaConfig, OptimalPartitionResult, Partition, SubsetMask, SubsetMultiset
from amoeba_types.rank_oracle import RankOracle
from error.errors import InvalidParamsError, LoopError
from partitions.fcc import fcc
from sfm.largest_feasible_j import largest_feasible_j
from utils.load_config import load_config
from utils.mask_elements import mask_elements
from utils.mask_from_elements import mask_from_elements

logger = logging.getLogger(__name__)


def coarsest_optimal_partition(
    M: RankOracle,
    S: SubsetMask,
    order: Optional[Sequence[int]] = None,
    config: Optional[AmoebaConfig] = None,
) -> OptimalPartitionResult:
    """
    Coarsest optimal partition of S and a basis of S in the derived matroid M'.

    This is the ONLY function in this file (following GOLDEN RULE).
    Elements of S are added one at a time, keeping the coarsest optimal
    partition P' and an M'-basis B' of the elements seen so far:

      - if r(Q + e) = r(Q) for a part Q of P' (first in canonical order),
        e joins Q: P := P' ∨ {Q + e}, B := B'
      - otherwise J is the largest subset of B' with 2r(J+e) - 1 = |J+e|,
        P := P' ∨ {J + e}, B := B' + e

    so r'(S) = |B| = r̃(P).

    Args:
        M: loopless rank oracle
        S: subset to evaluate
        order: processing order, a permutation of the elements of S
            (ascending when omitted); the final answer does not depend on it
        config: SFM thresholds and worker count

    Returns:
        OptimalPartitionResult: partition, basis, r'(S) and the number of
        uncached rank evaluations spent

    Raises:
        LoopError: if some element of S has rank 0
        InvalidParamsError: if `order` is not a permutation of S

    Example:
        result = coarsest_optimal_partition(make_uniform_oracle(2, 4), 0b1111)
        result.rprime       # 3
        result.partition    # the single part {1,2,3,4}
    """

    if config is None:
        config = load_config()

    if order is None:
        elements = mask_elements(S)
    else:
        elements = list(order)
        if len(set(elements)) != len(elements) or mask_from_elements(elements) != S:
            raise InvalidParamsError("order must be a permutation of the elements of S")

    start_calls = M.calls

    # Step 1: loops make every partition weight ill-defined
    for e in elements:
        if M.rank(1 << e) == 0:
            raise LoopError(e)

    # Step 2: add elements one at a time
    partition = Partition()
    basis = 0
    for e in elements:
        bit = 1 << e
        absorbing = None
        for part in partition.parts:
            if M.rank(part | bit) == M.rank(part):
                absorbing = part
                break

        if absorbing is not None:
            new_member = absorbing | bit
            logger.debug(f"element {e + 1}: spanned by part {mask_elements(absorbing)}")
        else:
            J = largest_feasible_j(M, basis, e, config)
            new_member = J | bit
            basis |= bit
            logger.debug(f"element {e + 1}: enters the basis, J={mask_elements(J)}")

        partition = fcc(SubsetMultiset.from_members(list(partition.parts) + [new_member]))

    rank_calls = M.calls - start_calls
    rprime = basis.bit_count()
    logger.debug(f"{M.name}: r'={rprime} over {len(elements)} element(s), {rank_calls} rank call(s)")

    return OptimalPartitionResult(partition=partition, basis=basis, rprime=rprime, rank_calls=rank_calls)
