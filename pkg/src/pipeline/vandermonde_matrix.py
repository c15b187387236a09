from amoeba_types.types import GRMatrix
from error.errors import InvalidParamsError


def vandermonde_matrix(d: int, n: int) -> GRMatrix:
    """
    d x n Vandermonde matrix on the nodes 1..n, row i holding node**i.

    Distinct nodes make every d columns independent, so this represents the
    uniform matroid U_{d,n}.
    """
    if not 1 <= d <= n <= 64:
        raise InvalidParamsError(f"vandermonde needs 1 <= d <= n <= 64, got d={d}, n={n}")
    return GRMatrix.from_rows([[node ** i for node in range(1, n + 1)] for i in range(d)])
