import logging
from typing import List, Optional

import numpy as np

from amoeba_types.types import AmoebaConfig, GRMatrix, SubsetMask
from error.errors import SamplingError
from matroid.column_subset_rank import column_subset_rank
from matroid.domain_columns import domain_columns
from utils.load_config import load_config

logger = logging.getLogger(__name__)

# Columns 1,2,5,6 (0-based 0,1,4,5) live in the span of the first two unit vectors
_PLANE = 0b0110011
_UNITS = 0b0001100
_LAST = 1 << 6


def _generic_rank(S: SubsetMask) -> int:
    """Rank of S for a generic choice of the starred entries"""
    plane = min(2, (S & _PLANE).bit_count())
    units = (S & _UNITS).bit_count()
    if S & _LAST:
        return min(4, plane + units + 1)
    return plane + units


def nisse_matrix(seed: int = 0, config: Optional[AmoebaConfig] = None) -> GRMatrix:
    """
    The connected 4 x 7 example whose amoeba has dimension 6 < min(7, 2*4-1).

    This is the ONLY public function in this file (following GOLDEN RULE).
    Zero pattern (stars are free entries):

        1 0 0 0 * * *
        0 1 0 0 * * *
        0 0 1 0 0 0 *
        0 0 0 1 0 0 *

    Stars are integers drawn uniformly from [-B, B] under the seed. A draw is
    accepted only if every one of the 128 column subsets has the rank the
    zero pattern predicts for generic stars; otherwise it is redrawn.

    Args:
        seed: PRNG seed
        config: coefficient bound and retry limit

    Returns:
        GRMatrix: the certified matrix

    Raises:
        SamplingError: if no generic draw was found within the retry limit
    """

    if config is None:
        config = load_config()
    rng = np.random.default_rng(seed)
    bound = config.coefficient_bound

    for attempt in range(config.max_sample_retries):
        stars = [int(x) for x in rng.integers(-bound, bound + 1, size=8)]
        rows: List[List[int]] = [
            [1, 0, 0, 0, stars[0], stars[1], stars[2]],
            [0, 1, 0, 0, stars[3], stars[4], stars[5]],
            [0, 0, 1, 0, 0, 0, stars[6]],
            [0, 0, 0, 1, 0, 0, stars[7]],
        ]
        A = GRMatrix.from_rows(rows)
        columns = domain_columns(A)
        mismatch = next((S for S in range(1, 1 << 7) if column_subset_rank(columns, S) != _generic_rank(S)), None)
        if mismatch is None:
            logger.debug(f"nisse stars certified generic on draw {attempt + 1}")
            return A
        logger.warning(f"⚠️  nisse draw {attempt + 1} is not generic (subset mask {mismatch:#x}), resampling")

    raise SamplingError(f"no generic nisse matrix after {config.max_sample_retries} draws")
