import logging
from typing import Any, Dict, Optional, Tuple

from amoeba_types.types import AmoebaConfig, InstanceSpec, ResultDocument
from derived.coarsest_optimal_partition import coarsest_optimal_partition
from pipeline.build_instance import build_instance
from pipeline.parse_subset import parse_subset
from utils.load_config import load_config
from utils.mask_elements import mask_elements

logger = logging.getLogger(__name__)


def cmd_rank(spec: InstanceSpec, subset: str, config: Optional[AmoebaConfig] = None) -> Tuple[Dict[str, Any], int]:
    """
    `amoeba rank --subset LIST`: r'(S) with its coarsest optimal partition and basis.

    Raises:
        ParseError: if the subset list is malformed or out of range
    """
    if config is None:
        config = load_config()

    instance = build_instance(spec, config)
    M = instance.oracle
    S = parse_subset(subset, M.ground_size)
    result = coarsest_optimal_partition(M, S, config=config)
    logger.info(f"✅ {instance.label}: r'({mask_elements(S)})={result.rprime}")

    document = ResultDocument(
        value_key="rprime",
        value=result.rprime,
        subset=[e + 1 for e in mask_elements(S)],
        partition=result.partition.to_lists(),
        basis=[e + 1 for e in mask_elements(result.basis)],
        rank_calls=result.rank_calls,
    )
    return document.to_dict(), 0
