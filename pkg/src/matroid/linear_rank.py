from amoeba_types.types import GRMatrix, SubsetMask
from matroid.column_subset_rank import column_subset_rank
from matroid.domain_columns import domain_columns


def linear_rank(A: GRMatrix, S: SubsetMask) -> int:
    """
    Exact rank of the column submatrix A[S] over Q(i).

    This is the ONLY function in this file (following GOLDEN RULE).
    The dimension of the span of the columns labelled by S, computed by
    sympy's DomainMatrix over the Gaussian rationals QQ_I.

    Args:
        A: d x n matrix over Q(i)
        S: subset of column indices as a bit mask (empty allowed)

    Returns:
        int: r_V(S)

    Example:
        identity = GRMatrix.from_rows([[1, 0], [0, 1]])
        linear_rank(identity, 0b11)  # 2
    """
    if S == 0:
        return 0
    return column_subset_rank(domain_columns(A), S)
