from amoeba_types.types import ScaledCunninghamFn, SubsetMask
from error.errors import NotSubsetOfBError


def eval_scaled(F: ScaledCunninghamFn, I: SubsetMask) -> int:
    """
    F(I) = 2k * (2r(I+e) - 2 - |I|) - |I|, exactly 2k times f(I) where
    f(I) = 2r(I+e) - 1 - |I+e| - |I|/(2k).

    One rank evaluation per call (memoized by the oracle).

    Raises:
        NotSubsetOfBError: if I is not a subset of B
    """
    if I & ~F.B:
        raise NotSubsetOfBError(f"{I:#x} is not a subset of B={F.B:#x}")
    size = I.bit_count()
    r = F.oracle.rank(I | 1 << F.e)
    return 2 * F.k * (2 * r - 2 - size) - size
