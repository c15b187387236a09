from typing import List, Optional

from amoeba_types.types import AmoebaConfig, MAX_GROUND_SIZE
from amoeba_types.rank_oracle import RankOracle
from error.errors import GroundTooLargeError, InvalidParamsError
from utils.load_config import load_config


def direct_sum(Ms: List[RankOracle], config: Optional[AmoebaConfig] = None) -> RankOracle:
    """
    Direct sum of matroids on the concatenated ground set.

    Summand i occupies the bit range starting at the total size of the
    summands before it; rank(S) = sum of r_i(S ∩ E_i).

    Raises:
        InvalidParamsError: for an empty list
        GroundTooLargeError: if the total ground size exceeds 64
    """
    if not Ms:
        raise InvalidParamsError("direct sum of an empty list")
    if len(Ms) == 1:
        return Ms[0]

    total = sum(M.ground_size for M in Ms)
    if total > MAX_GROUND_SIZE:
        raise GroundTooLargeError(total, MAX_GROUND_SIZE)
    if config is None:
        config = load_config()

    blocks = []
    offset = 0
    for M in Ms:
        blocks.append((M, offset, M.ground))
        offset += M.ground_size

    def rank(S):
        return sum(M.rank((S >> shift) & block) for M, shift, block in blocks)

    return RankOracle(total, rank, name="+".join(M.name for M in Ms), max_cache=config.max_cache_entries)
