from typing import Optional

from amoeba_types.types import AmoebaConfig, MAX_GROUND_SIZE
from amoeba_types.rank_oracle import RankOracle
from error.errors import InvalidParamsError
from utils.load_config import load_config


def make_uniform_oracle(d: int, n: int, config: Optional[AmoebaConfig] = None) -> RankOracle:
    """Uniform matroid U_{d,n}: rank(S) = min(d, |S|)"""
    if d < 1:
        raise InvalidParamsError(f"U_{{{d},{n}}} has loops; need d >= 1")
    if d > n or n > MAX_GROUND_SIZE:
        raise InvalidParamsError(f"U_{{{d},{n}}} needs d <= n <= {MAX_GROUND_SIZE}")
    if config is None:
        config = load_config()
    return RankOracle(n, lambda S: min(d, S.bit_count()), name=f"U_{d},{n}", max_cache=config.max_cache_entries)
