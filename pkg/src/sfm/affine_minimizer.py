from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from error.errors import CertificationFailedError


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def affine_minimizer(points: List[Sequence[Fraction]]) -> Tuple[List[Fraction], List[Fraction]]:
    """
    Minimum-norm point of the affine hull of `points`, in exact arithmetic.

    This is the ONLY public function in this file (following GOLDEN RULE).
    Solves the bordered system

        [ 0  1^T     ] [ mu ]   [ 1 ]
        [ 1  P P^T   ] [ b  ] = [ 0 ]

    with DomainMatrix.lu_solve over QQ.

    Args:
        points: m affinely independent points of equal length

    Returns:
        Tuple[List[Fraction], List[Fraction]]: barycentric coefficients b
        (summing to 1) and the point y = sum b_i p_i

    Raises:
        CertificationFailedError: if the points are affinely dependent
    """

    m = len(points)
    size = m + 1

    # Step 1: bordered Gram system
    rows = [[QQ(0)] + [QQ(1)] * m]
    for i in range(m):
        rows.append([QQ(1)] + [_to_qq(_dot(points[i], points[j])) for j in range(m)])
    system = DomainMatrix(rows, (size, size), QQ)
    rhs = DomainMatrix([[QQ(1)]] + [[QQ(0)] for _ in range(m)], (size, 1), QQ)

    # Step 2: a singular system means a degenerate hull
    if system.rank() < size:
        raise CertificationFailedError("affine hull is degenerate; points are affinely dependent")
    solution = system.lu_solve(rhs)

    # Step 3: read off b and assemble y
    b = []
    for i in range(1, size):
        value = QQ.to_sympy(solution[i, 0].element)
        b.append(Fraction(int(value.p), int(value.q)))
    k = len(points[0]) if points else 0
    y = [sum((b[i] * points[i][c] for i in range(m)), Fraction(0)) for c in range(k)]
    return b, y
