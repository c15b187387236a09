from fractions import Fraction
from typing import Callable, List, Sequence


def greedy_base_vertex(weights: Sequence[Fraction], g: Callable[[int], int]) -> List[Fraction]:
    """
    Vertex of the base polytope B_g minimizing <w, x>, by Edmonds' greedy rule.

    This is the ONLY function in this file (following GOLDEN RULE).

    Args:
        weights: one weight per local coordinate 0..k-1
        g: normalized submodular function on local bit masks (g(0) = 0)

    Returns:
        List[Fraction]: x with x[order[i]] = g(prefix_{i+1}) - g(prefix_i),
        where order sorts the coordinates by ascending weight (ties by index)
    """

    k = len(weights)
    order = sorted(range(k), key=lambda i: (weights[i], i))

    x = [Fraction(0)] * k
    prefix = 0
    previous = g(0)
    for i in order:
        prefix |= 1 << i
        value = g(prefix)
        x[i] = Fraction(value - previous)
        previous = value
    return x
