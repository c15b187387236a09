import logging
from typing import Optional

from amoeba_types.types import AmoebaConfig, GRMatrix, MAX_GROUND_SIZE
from amoeba_types.rank_oracle import RankOracle
from error.errors import ZeroColumnError, GroundTooLargeError
from matroid.column_subset_rank import column_subset_rank
from matroid.domain_columns import domain_columns
from utils.load_config import load_config

logger = logging.getLogger(__name__)


def make_linear_oracle(A: GRMatrix, name: str = "linear", config: Optional[AmoebaConfig] = None) -> RankOracle:
    """
    Build the rank oracle of the matroid M_V presented by the row space of A.

    This is the ONLY function in this file (following GOLDEN RULE).
    Entries are converted to QQ_I once; each rank query then runs one
    DomainMatrix rank computation, memoized by the oracle.

    Args:
        A: d x n matrix over Q(i), 1 <= n <= 64
        name: label used in logs and reports
        config: memo cap (max_cache_entries)

    Returns:
        RankOracle: r(S) = linear_rank(A, S)

    Raises:
        ZeroColumnError: if some column of A is zero (M_V would have a loop)
        GroundTooLargeError: if A has more than 64 columns
    """

    if A.n > MAX_GROUND_SIZE:
        raise GroundTooLargeError(A.n, MAX_GROUND_SIZE)
    if config is None:
        config = load_config()

    # Step 1: reject zero columns up front
    for j in range(A.n):
        if all(x.is_zero() for x in A.column(j)):
            raise ZeroColumnError(j)

    # Step 2: convert once for every later rank query
    columns = domain_columns(A)
    logger.debug(f"linear oracle {name}: {A.d}x{A.n} matrix prepared")

    return RankOracle(
        A.n,
        lambda S: column_subset_rank(columns, S),
        name=name,
        max_cache=config.max_cache_entries,
    )
