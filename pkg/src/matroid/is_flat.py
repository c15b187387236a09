from amoeba_types.types import SubsetMask
from amoeba_types.rank_oracle import RankOracle
from utils.mask_elements import mask_elements


def is_flat(M: RankOracle, S: SubsetMask) -> bool:
    """S is a flat iff adding any outside element raises the rank"""
    base = M.rank(S)
    for e in mask_elements(M.ground & ~S):
        if M.rank(S | 1 << e) == base:
            return False
    return True
