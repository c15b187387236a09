from amoeba_types.types import GRMatrix
from error.errors import InvalidParamsError


def identity_matrix(n: int) -> GRMatrix:
    """n x n identity; its matroid is free and its amoeba is all of R^n"""
    if not 1 <= n <= 64:
        raise InvalidParamsError(f"identity needs 1 <= n <= 64, got {n}")
    return GRMatrix.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])
