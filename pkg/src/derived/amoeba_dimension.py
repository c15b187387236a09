import logging
from typing import Optional, Tuple

from amoeba_types.types import AmoebaConfig, GRMatrix, Partition
from derived.coarsest_optimal_partition import coarsest_optimal_partition
from matroid.make_linear_oracle import make_linear_oracle

logger = logging.getLogger(__name__)


def amoeba_dimension(A: GRMatrix, config: Optional[AmoebaConfig] = None) -> Tuple[int, Partition]:
    """
    Real dimension of the amoeba of V ∩ (C*)^n, V the row space of A.

    This is the ONLY function in this file (following GOLDEN RULE).
    The dimension is r'([n]) for the column matroid of A, the minimum over
    partitions of the columns of sum (2 r(P_i) - 1); the minimizing partition
    returned is the coarsest one.

    Args:
        A: d x n matrix over Q(i) without zero columns
        config: SFM thresholds and worker count

    Returns:
        Tuple[int, Partition]: the dimension and the coarsest optimal partition

    Raises:
        ZeroColumnError: if some column of A is zero

    Example:
        dim, partition = amoeba_dimension(GRMatrix.from_rows([[1, 0], [0, 1]]))
        # dim == 2, partition == singletons
    """

    M = make_linear_oracle(A)
    result = coarsest_optimal_partition(M, M.ground, config=config)
    logger.info(f"📐 amoeba dimension {result.rprime} for a {A.d}x{A.n} matrix")
    return result.rprime, result.partition
