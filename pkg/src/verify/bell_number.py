from math import comb

_bell_numbers = [1]


def bell_number(n: int) -> int:
    """Number of set partitions of an n-element set, B(n) = sum C(n-1, k) B(k)"""
    if n < 0:
        raise ValueError(f"bell_number needs n >= 0, got {n}")
    while len(_bell_numbers) <= n:
        m = len(_bell_numbers)
        _bell_numbers.append(sum(comb(m - 1, k) * _bell_numbers[k] for k in range(m)))
    return _bell_numbers[n]
