from typing import Any, List

from amoeba_types.types import GRMatrix


def domain_columns(A: GRMatrix) -> List[List[Any]]:
    """Columns of A as lists of QQ_I elements, converted once per matrix"""
    return [[x.to_domain() for x in A.column(j)] for j in range(A.n)]
