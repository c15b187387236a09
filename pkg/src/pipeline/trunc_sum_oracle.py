from typing import Optional

from amoeba_types.types import AmoebaConfig, MAX_GROUND_SIZE
from amoeba_types.rank_oracle import RankOracle
from error.errors import InvalidParamsError
from matroid.direct_sum import direct_sum
from matroid.make_uniform_oracle import make_uniform_oracle
from matroid.truncate import truncate
from utils.load_config import load_config


def trunc_sum_oracle(c: int, k: int, config: Optional[AmoebaConfig] = None) -> RankOracle:
    """
    k copies of U_{c,2c} summed directly, then truncated c times.

    rank(S) = min(ck - c, sum_i min(c, |S ∩ E_i|)). For k > 2c + 1 the
    result is c-connected and its derived matroid has rank 2ck - k,
    attained by the block partition.

    Raises:
        InvalidParamsError: unless c >= 1, k >= 2 and 2ck <= 64
    """
    if c < 1 or k < 2:
        raise InvalidParamsError(f"trunc-sum needs c >= 1 and k >= 2, got c={c}, k={k}")
    if 2 * c * k > MAX_GROUND_SIZE:
        raise InvalidParamsError(f"trunc-sum {c} {k} has {2 * c * k} elements, limit is {MAX_GROUND_SIZE}")
    if config is None:
        config = load_config()

    M = direct_sum([make_uniform_oracle(c, 2 * c, config) for _ in range(k)], config)
    for _ in range(c):
        M = truncate(M, config)
    M.name = f"trunc-sum({c},{k})"
    return M
