import logging
from typing import Optional

import numpy as np

from amoeba_types.types import AmoebaConfig, GRMatrix
from error.errors import RankDeficientInputError, ZeroColumnError
from matroid.linear_rank import linear_rank
from utils.load_config import load_config
from verify.draw_jacobian_sample import draw_jacobian_sample

logger = logging.getLogger(__name__)


def amoeba_dim_numeric(
    A: GRMatrix,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    config: Optional[AmoebaConfig] = None,
) -> int:
    """
    Amoeba dimension from the rank of the logarithmic map's differential.

    This is the ONLY function in this file (following GOLDEN RULE).
    The rank of d_p Log is maximal on an open dense set of points, so the
    maximum over random samples is a certified lower bound that equals the
    dimension for generic draws. Everything is exact; no tolerance enters.

    Args:
        A: d x n matrix, no zero column, linearly independent rows
        samples: number of points (config.samples when omitted)
        seed: PRNG seed (config.seed when omitted)
        config: sampling parameters

    Returns:
        int: the largest rank found, at most min(n, 2d - 1)

    Raises:
        ZeroColumnError: if some column is zero
        RankDeficientInputError: if the rows of A are dependent
        SamplingError: if a sample cannot avoid the coordinate hyperplanes
    """

    if config is None:
        config = load_config()
    if samples is None:
        samples = config.samples
    if seed is None:
        seed = config.seed

    # Step 1: validate the presentation
    for j in range(A.n):
        if all(x.is_zero() for x in A.column(j)):
            raise ZeroColumnError(j)
    row_rank = linear_rank(A, (1 << A.n) - 1)
    if row_rank != A.d:
        raise RankDeficientInputError(f"rows are dependent: rank {row_rank} < {A.d} rows")

    # Step 2: maximum rank over seeded samples
    rng = np.random.default_rng(seed)
    ceiling = min(A.n, 2 * A.d - 1)
    best = 0
    for index in range(samples):
        sample = draw_jacobian_sample(A, rng, config)
        logger.debug(f"sample {index + 1}/{samples}: rank {sample.rank_found}")
        best = max(best, sample.rank_found)
        if best == ceiling:
            break

    logger.info(f"🎲 numeric amoeba dimension {best} from up to {samples} sample(s)")
    return best
