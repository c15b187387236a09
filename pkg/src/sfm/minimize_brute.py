import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Tuple

from amoeba_types.types import AmoebaConfig, ScaledCunninghamFn, SubsetMask
from error.errors import BTooLargeError
from sfm.eval_scaled import eval_scaled
from utils.load_config import load_config
from utils.mask_elements import mask_elements

logger = logging.getLogger(__name__)


def _scan_shard(F: ScaledCunninghamFn, free: SubsetMask, fixed: SubsetMask) -> Tuple[int, SubsetMask]:
    """Minimum over {fixed | sub : sub ⊆ free} and the union of its minimizers"""
    best = None
    union = 0
    sub = 0
    while True:
        I = fixed | sub
        value = eval_scaled(F, I)
        if best is None or value < best:
            best, union = value, I
        elif value == best:
            union |= I
        if sub == free:
            break
        # next submask of `free` in increasing order
        sub = (sub - free) & free
    return best, union


def minimize_brute(F: ScaledCunninghamFn, config: Optional[AmoebaConfig] = None) -> SubsetMask:
    """
    Maximal minimizer of F over all subsets of B by exhaustive enumeration.

    This is the ONLY public function in this file (following GOLDEN RULE).
    Minimizers of a submodular function are closed under union, so the union
    of all minimizers is the unique maximal one. The 2^k subsets are split
    into shards by fixing the top elements of B; shards may run on
    config.threads workers and are combined in shard order, so the result
    does not depend on scheduling.

    Args:
        F: the scaled function for (M, B, e)
        config: thresholds and worker count

    Returns:
        SubsetMask: the union of all minimizers

    Raises:
        BTooLargeError: if |B| exceeds config.brute_force_max_k
    """

    if config is None:
        config = load_config()
    if F.k > config.brute_force_max_k:
        raise BTooLargeError(f"|B|={F.k} exceeds brute-force limit {config.brute_force_max_k}")

    # Step 1: shard on the top `split` elements of B
    elements = mask_elements(F.B)
    split = 0
    while (1 << split) < config.threads and split < min(len(elements), 6):
        split += 1
    top = elements[len(elements) - split:] if split else []
    free = F.B
    for t in top:
        free &= ~(1 << t)

    shards = []
    for pattern in range(1 << split):
        fixed = 0
        for bit, t in enumerate(top):
            if pattern >> bit & 1:
                fixed |= 1 << t
        shards.append(fixed)

    # Step 2: scan shards, in parallel when allowed
    if config.threads > 1 and len(shards) > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            results = list(pool.map(lambda fixed: _scan_shard(F, free, fixed), shards))
    else:
        results = [_scan_shard(F, free, fixed) for fixed in shards]

    # Step 3: combine deterministically
    best = min(value for value, _ in results)
    union = 0
    for value, minimizers in results:
        if value == best:
            union |= minimizers

    logger.debug(f"minimize_brute: k={F.k}, min={best}, maximal minimizer={union:#x}")
    return union
