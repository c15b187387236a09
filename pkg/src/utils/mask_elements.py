from typing import List

from amoeba_types.types import SubsetMask


def mask_elements(mask: SubsetMask) -> List[int]:
    """0-based elements of a mask in ascending order"""
    elements = []
    while mask:
        low = mask & -mask
        elements.append(low.bit_length() - 1)
        mask ^= low
    return elements
