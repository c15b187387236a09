from typing import Iterable

from amoeba_types.types import SubsetMask


def mask_from_elements(elements: Iterable[int]) -> SubsetMask:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask
