import logging
from typing import List, Optional, Tuple

from amoeba_types.types import AmoebaConfig, Partition, SubsetMask
from amoeba_types.rank_oracle import RankOracle
from error.errors import GroundTooLargeError, LoopError
from utils.load_config import load_config
from utils.mask_elements import mask_elements

logger = logging.getLogger(__name__)


def rprime_bruteforce(
    M: RankOracle,
    S: SubsetMask,
    config: Optional[AmoebaConfig] = None,
) -> Tuple[int, List[Partition]]:
    """
    Minimum of r̃ over all partitions of S, and every partition attaining it.

    This is the ONLY function in this file (following GOLDEN RULE).
    Depth-first search over restricted-growth strings. The weight of the
    blocks built so far never decreases as elements are added (ranks are
    monotone and a new block costs at least 1), so a prefix is abandoned as
    soon as it exceeds the best complete weight. Ties are kept, so the full
    set of optimal partitions is returned.

    Args:
        M: loopless rank oracle
        S: subset with at most config.brute_partition_max elements
        config: size limit

    Returns:
        Tuple[int, List[Partition]]: r'(S) and the optimal partitions, sorted
        by their parts

    Raises:
        GroundTooLargeError: if |S| exceeds the limit
        LoopError: if some element of S is a loop
    """

    if config is None:
        config = load_config()
    elements = mask_elements(S)
    if len(elements) > config.brute_partition_max:
        raise GroundTooLargeError(len(elements), config.brute_partition_max, what="subset")
    for e in elements:
        if M.rank(1 << e) == 0:
            raise LoopError(e)

    # Singletons weigh |S|, an upper bound for the optimum
    best = len(elements)
    optimal: List[Partition] = []
    blocks: List[SubsetMask] = []

    def search(index: int, partial: int) -> None:
        nonlocal best, optimal
        if partial > best:
            return
        if index == len(elements):
            if partial < best:
                best = partial
                optimal = []
            optimal.append(Partition.from_parts(list(blocks)))
            return

        bit = 1 << elements[index]
        for i in range(len(blocks)):
            old = blocks[i]
            grown = old | bit
            blocks[i] = grown
            search(index + 1, partial + 2 * (M.rank(grown) - M.rank(old)))
            blocks[i] = old
        blocks.append(bit)
        search(index + 1, partial + 1)
        blocks.pop()

    search(0, 0)

    optimal.sort(key=lambda P: P.parts)
    logger.debug(f"rprime_bruteforce: |S|={len(elements)}, min={best}, {len(optimal)} optimal partition(s)")
    return best, optimal
