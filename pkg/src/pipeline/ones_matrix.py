from amoeba_types.types import GRMatrix
from error.errors import InvalidParamsError


def ones_matrix(n: int) -> GRMatrix:
    """Single all-ones row: the rank-1 matroid on n parallel elements"""
    if not 1 <= n <= 64:
        raise InvalidParamsError(f"ones needs 1 <= n <= 64, got {n}")
    return GRMatrix.from_rows([[1] * n])
