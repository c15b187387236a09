import logging
from typing import Optional

from amoeba_types.rank_oracle import RankOracle
from amoeba_types.types import AmoebaConfig, ScaledCunninghamFn, SubsetMask
from error.errors import NotSubsetOfBError
from sfm.minimize_brute import minimize_brute
from sfm.minimize_mnp import minimize_mnp
from utils.load_config import load_config

logger = logging.getLogger(__name__)


def largest_feasible_j(
    M: RankOracle,
    B: SubsetMask,
    e: int,
    config: Optional[AmoebaConfig] = None,
) -> SubsetMask:
    """
    Largest J ⊆ B with 2r(J+e) - 1 = |J+e|.

    This is the ONLY function in this file (following GOLDEN RULE).
    Minimizes the scaled function F for (M, B, e): exhaustively while
    |B| <= config.sfm_dispatch_k, by min-norm point above that.

    Args:
        M: loopless rank oracle
        B: current basis of the derived matroid, with B+e independent in it
        e: the element being added, not in B
        config: dispatch threshold and worker count

    Returns:
        SubsetMask: the unique largest feasible J (0 when B is empty)

    Raises:
        NotSubsetOfBError: if e lies in B
    """

    if config is None:
        config = load_config()
    if B >> e & 1:
        raise NotSubsetOfBError(f"element {e + 1} already lies in B")

    k = B.bit_count()
    if k == 0:
        return 0

    F = ScaledCunninghamFn(oracle=M, e=e, B=B, k=k)
    if k <= config.sfm_dispatch_k:
        J = minimize_brute(F, config)
    else:
        logger.info(f"|B|={k} above brute-force threshold, using min-norm point")
        J = minimize_mnp(F)
    return J
