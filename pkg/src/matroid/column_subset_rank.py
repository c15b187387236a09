from typing import Any, List, Sequence

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from amoeba_types.types import SubsetMask
from utils.mask_elements import mask_elements


def column_subset_rank(columns: Sequence[List[Any]], S: SubsetMask) -> int:
    """
    Rank over Q(i) of the columns labelled by S.

    The chosen columns become the rows of an |S| x d DomainMatrix over QQ_I;
    rank(A[S]) = rank(A[S]^T).

    Args:
        columns: output of domain_columns(A)
        S: subset of column indices as a bit mask

    Returns:
        int: r_V(S)
    """
    chosen = [columns[j] for j in mask_elements(S)]
    if not chosen:
        return 0
    return DomainMatrix(chosen, (len(chosen), len(chosen[0])), QQ_I).rank()
