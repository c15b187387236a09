from typing import Optional

from amoeba_types.types import AmoebaConfig
from amoeba_types.rank_oracle import RankOracle
from error.errors import RankZeroError
from utils.load_config import load_config


def truncate(M: RankOracle, config: Optional[AmoebaConfig] = None) -> RankOracle:
    """
    Truncation of M: r_N(S) = min(r(S), d - 1) where d = r(E).

    Raises:
        RankZeroError: if M has rank 0
    """
    d = M.rank(M.ground)
    if d == 0:
        raise RankZeroError(f"cannot truncate {M.name}: rank is 0")
    if config is None:
        config = load_config()
    return RankOracle(
        M.ground_size,
        lambda S: min(M.rank(S), d - 1),
        name=f"T({M.name})",
        max_cache=config.max_cache_entries,
    )
