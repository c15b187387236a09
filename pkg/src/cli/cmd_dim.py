import logging
from typing import Any, Dict, Optional, Tuple

from amoeba_types.types import AmoebaConfig, InstanceSpec, ResultDocument
from derived.coarsest_optimal_partition import coarsest_optimal_partition
from pipeline.build_instance import build_instance
from utils.load_config import load_config
from utils.mask_elements import mask_elements

logger = logging.getLogger(__name__)


def cmd_dim(spec: InstanceSpec, config: Optional[AmoebaConfig] = None) -> Tuple[Dict[str, Any], int]:
    """
    `amoeba dim`: the amoeba dimension r'(E) of an instance.

    This is the ONLY function in this file (following GOLDEN RULE).

    Args:
        spec: matrix file or generator
        config: tunables

    Returns:
        (document, exit code): {"dim", "partition", "basis", "rank_calls"}
        with 1-based elements, and 0

    Example:
        document, code = cmd_dim(InstanceSpec(generator="identity", params=(5,)))
        # document["dim"] == 5
    """

    if config is None:
        config = load_config()

    instance = build_instance(spec, config)
    M = instance.oracle
    result = coarsest_optimal_partition(M, M.ground, config=config)
    logger.info(f"✅ {instance.label}: dim={result.rprime}, {result.rank_calls} rank call(s)")

    document = ResultDocument(
        value_key="dim",
        value=result.rprime,
        partition=result.partition.to_lists(),
        basis=[e + 1 for e in mask_elements(result.basis)],
        rank_calls=result.rank_calls,
    )
    return document.to_dict(), 0
