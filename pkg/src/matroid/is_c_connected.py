import logging
from typing import List, Optional, Tuple

from amoeba_types.types import AmoebaConfig, SubsetMask
from amoeba_types.rank_oracle import RankOracle
from error.errors import GroundTooLargeError
from utils.load_config import load_config

logger = logging.getLogger(__name__)


def is_c_connected(M: RankOracle, c: int, config: Optional[AmoebaConfig] = None) -> bool:
    """
    True iff no S with |S| >= c, |E - S| >= c has r(S) + r(E - S) - r(E) < c.

    This is the ONLY function in this file (following GOLDEN RULE).
    Exhaustive search, for verification only. The connectivity
    lam(S) = r(S) + r(E - S) - r(E) is symmetric under S <-> E - S, so only
    sets with c <= |S| <= n // 2 need checking. Sets are grown in increasing
    element order and a branch is cut once none of its supersets T can
    reach lam(T) < c:
      - adding one element changes lam by at most 1, and T has at most
        n // 2 elements
      - T keeps the skipped elements L (below the last added one, not in S)
        outside, so lam(T) >= r(S) + r(L) - r(E)

    Args:
        M: rank oracle (memo bypassed)
        c: connectivity threshold
        config: size limit (c_connected_max)

    Returns:
        bool: whether M is c-connected

    Raises:
        GroundTooLargeError: above config.c_connected_max elements
    """
    if config is None:
        config = load_config()
    n = M.ground_size
    if n > config.c_connected_max:
        raise GroundTooLargeError(n, config.c_connected_max)

    limit = n // 2
    if c > limit:
        # no S has both |S| >= c and |E - S| >= c
        return True

    rank = M.rank_uncached
    ground = M.ground
    total = rank(ground)

    # (S, |S|, first candidate element)
    stack: List[Tuple[SubsetMask, int, int]] = [(0, 0, 0)]
    while stack:
        S, size, start = stack.pop()
        for j in range(start, n):
            T = S | 1 << j
            r_T = rank(T)
            lam = r_T + rank(ground ^ T) - total
            if size + 1 >= c and lam < c:
                logger.debug(f"{M.name} is not {c}-connected: lam({T:#x}) = {lam}")
                return False

            # Cut when no superset of T can fall below c
            if size + 1 == limit or lam - (limit - size - 1) >= c:
                continue
            skipped = ((1 << (j + 1)) - 1) ^ T
            if r_T + rank(skipped) - total >= c:
                continue
            stack.append((T, size + 1, j + 1))
    return True
