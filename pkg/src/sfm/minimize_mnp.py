import logging
from fractions import Fraction
from typing import List

from amoeba_types.types import ScaledCunninghamFn, SubsetMask
from error.errors import CertificationFailedError, InvalidParamsError
from sfm.affine_minimizer import affine_minimizer
from sfm.eval_scaled import eval_scaled
from sfm.greedy_base_vertex import greedy_base_vertex
from utils.mask_elements import mask_elements

logger = logging.getLogger(__name__)


def _dot(u: List[Fraction], v: List[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _combine(points: List[List[Fraction]], coefficients: List[Fraction]) -> List[Fraction]:
    k = len(points[0])
    return [sum((c * p[i] for c, p in zip(coefficients, points)), Fraction(0)) for i in range(k)]


def minimize_mnp(F: ScaledCunninghamFn) -> SubsetMask:
    """
    Maximal minimizer of F by the Fujishige-Wolfe minimum-norm-point method.

    This is the ONLY public function in this file (following GOLDEN RULE).
    All arithmetic is exact, so the optimality test <x, q> >= <x, x> needs no
    tolerance. The level set {x <= 0} of the min-norm point x is the maximal
    minimizer; it is then closed under additions that leave F unchanged and
    certified before being returned.

    Args:
        F: the scaled function for (M, B, e), k >= 1

    Returns:
        SubsetMask: the largest J ⊆ B with F(J) = min F

    Raises:
        InvalidParamsError: if B is empty
        CertificationFailedError: if the result fails F(J) = -|J| or the
            exchange checks against single-element neighbours
    """

    if F.k < 1:
        raise InvalidParamsError("minimize_mnp needs a nonempty B")

    elements = mask_elements(F.B)
    k = len(elements)

    def to_global(local: int) -> SubsetMask:
        mask = 0
        for i in range(k):
            if local >> i & 1:
                mask |= 1 << elements[i]
        return mask

    def g(local: int) -> int:
        return eval_scaled(F, to_global(local))

    # Step 1: start at the greedy vertex for w = 0
    x = greedy_base_vertex([Fraction(0)] * k, g)
    points = [x]
    weights = [Fraction(1)]

    major = 0
    while True:
        # Step 2: major cycle, linear minimization over the base polytope
        q = greedy_base_vertex(x, g)
        if q in points or _dot(x, q) >= _dot(x, x):
            break
        points.append(q)
        weights.append(Fraction(0))
        major += 1

        # Step 3: minor cycles, move toward the affine minimizer
        while True:
            b, y = affine_minimizer(points)
            if all(coefficient >= 0 for coefficient in b):
                keep = [i for i, coefficient in enumerate(b) if coefficient > 0]
                points = [points[i] for i in keep]
                weights = [b[i] for i in keep]
                x = y
                break
            theta = min(
                weights[i] / (weights[i] - b[i])
                for i in range(len(points))
                if b[i] < 0
            )
            weights = [theta * bi + (1 - theta) * ai for ai, bi in zip(weights, b)]
            keep = [i for i, coefficient in enumerate(weights) if coefficient > 0]
            points = [points[i] for i in keep]
            weights = [weights[i] for i in keep]
            x = _combine(points, weights)

    # Step 4: maximal minimizer from the min-norm point
    J = 0
    for i in range(k):
        if x[i] <= 0:
            J |= 1 << elements[i]

    value = eval_scaled(F, J)
    changed = True
    while changed:
        changed = False
        for element in elements:
            bit = 1 << element
            if J & bit:
                continue
            if eval_scaled(F, J | bit) == value:
                J |= bit
                changed = True

    # Step 5: certify
    size = J.bit_count()
    if value > 0 or value != -size:
        raise CertificationFailedError(f"F(J)={value} violates the feasibility identity for |J|={size}")
    for element in elements:
        bit = 1 << element
        neighbour = J ^ bit
        if eval_scaled(F, neighbour) < value:
            raise CertificationFailedError(f"J={J:#x} is not minimal: F improves at {neighbour:#x}")

    logger.debug(f"minimize_mnp: k={k}, major cycles={major}, J={J:#x}, F(J)={value}")
    return J
