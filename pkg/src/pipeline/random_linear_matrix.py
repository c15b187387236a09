import logging
from typing import Optional

import numpy as np

from amoeba_types.types import AmoebaConfig, GaussianRational, GRMatrix
from error.errors import InvalidParamsError, SamplingError
from matroid.linear_rank import linear_rank
from utils.load_config import load_config

logger = logging.getLogger(__name__)


def random_linear_matrix(
    d: int,
    n: int,
    rng: np.random.Generator,
    config: Optional[AmoebaConfig] = None,
) -> GRMatrix:
    """
    Random d x n matrix with Gaussian-integer entries a+bi, a, b in {-1, 0, 1}.

    This is the ONLY function in this file (following GOLDEN RULE).
    Entries are small so that parallel columns, dependent triples and
    disconnected matroids all show up in a random corpus. Draws with a zero
    column or dependent rows are rejected.

    Args:
        d: number of rows, 1 <= d <= n
        n: number of columns, at most 64
        rng: seeded numpy generator
        config: retry limit

    Returns:
        GRMatrix: a full-row-rank matrix without zero columns

    Raises:
        InvalidParamsError: unless 1 <= d <= n <= 64
        SamplingError: if no valid draw was found within the retry limit
    """

    if config is None:
        config = load_config()
    if not 1 <= d <= n <= 64:
        raise InvalidParamsError(f"random needs 1 <= d <= n <= 64, got d={d}, n={n}")

    for attempt in range(config.max_sample_retries):
        parts = rng.integers(-1, 2, size=(d, n, 2))
        rows = [[GaussianRational(int(parts[i, j, 0]), int(parts[i, j, 1])) for j in range(n)] for i in range(d)]
        A = GRMatrix.from_rows(rows)
        if any(all(x.is_zero() for x in A.column(j)) for j in range(n)):
            continue
        if linear_rank(A, (1 << n) - 1) != d:
            continue
        return A

    raise SamplingError(f"no valid random {d}x{n} matrix after {config.max_sample_retries} draws")
