from typing import Iterator, List

from amoeba_types.types import Partition, SubsetMask
from utils.mask_elements import mask_elements


def enumerate_partitions(S: SubsetMask) -> Iterator[Partition]:
    """
    Yield every set partition of S exactly once.

    Restricted-growth strings: the i-th element goes into one of the blocks
    already opened by the elements before it, or opens the next block. The
    generator's suspended state is the cursor over those strings, so the
    total count is the Bell number of |S|.

    Example:
        sum(1 for _ in enumerate_partitions(0b111))  # 5
    """
    elements = mask_elements(S)
    blocks: List[SubsetMask] = []

    def place(index: int) -> Iterator[Partition]:
        if index == len(elements):
            yield Partition.from_parts(list(blocks))
            return
        bit = 1 << elements[index]
        for i in range(len(blocks)):
            blocks[i] |= bit
            yield from place(index + 1)
            blocks[i] ^= bit
        blocks.append(bit)
        yield from place(index + 1)
        blocks.pop()

    yield from place(0)
