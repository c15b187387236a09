import dataclasses
import logging
import math
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from amoeba_types.types import AmoebaConfig, InstanceSpec, Partition
from derived.coarsest_optimal_partition import coarsest_optimal_partition
from error.errors import VerificationFailedError
from pipeline.build_instance import build_instance
from utils.load_config import load_config
from verify.amoeba_dim_numeric import amoeba_dim_numeric
from verify.axiom_suite import axiom_suite
from verify.coarsest_bruteforce import coarsest_bruteforce
from verify.structure_suite import structure_suite

logger = logging.getLogger(__name__)

# rank_calls <= C * (n*k + k^3 * log2(k+2)) on the min-norm-point path, every corpus instance
BUDGET_CONSTANT = 4
RANDOM_INSTANCES = 20
ORDERS_PER_INSTANCE = 5


def _rank_call_budget(n: int, k: int) -> int:
    return math.floor(BUDGET_CONSTANT * (n * k + k ** 3 * math.log2(k + 2)))


def _block_partition(c: int, k: int) -> Partition:
    size = 2 * c
    return Partition.from_parts([((1 << size) - 1) << (i * size) for i in range(k)])


def _corpus() -> List[Tuple[InstanceSpec, Optional[int], Optional[Partition]]]:
    """(instance, expected r'(E), expected coarsest partition) triples"""
    corpus = [
        (InstanceSpec(generator="nisse", seed=7), 6, Partition.from_parts([0b0110011, 0b0000100, 0b0001000, 0b1000000])),
        (InstanceSpec(generator="uniform", params=(2, 4)), 3, Partition.from_parts([0b1111])),
        (InstanceSpec(generator="identity", params=(5,)), 5, Partition.singletons(0b11111)),
        (InstanceSpec(generator="ones", params=(3,)), 1, Partition.from_parts([0b111])),
    ]
    for c, k in ((1, 4), (1, 5), (2, 6)):
        corpus.append((InstanceSpec(generator="trunc-sum", params=(c, k)), 2 * c * k - k, _block_partition(c, k)))

    rng = np.random.default_rng(0)
    for seed in range(RANDOM_INSTANCES):
        d = int(rng.integers(1, 5))
        n = int(rng.integers(d, 9))
        corpus.append((InstanceSpec(generator="random", params=(d, n), seed=seed), None, None))
    return corpus


def cmd_selftest(config: Optional[AmoebaConfig] = None) -> Tuple[Dict[str, Any], int]:
    """
    `amoeba selftest`: run the built-in regression corpus.

    This is the ONLY public function in this file (following GOLDEN RULE).
    The corpus is the 4 x 7 connected example, the truncated sums of
    uniform matroids for (c, k) in (1,4), (1,5), (2,6), a few named
    matroids and seeded random linear matroids. Per instance:
      - r'(E) and the coarsest partition against known values
      - enumeration of all partitions of E (n <= 12)
      - rank axioms and structural checks on M' (n <= 8)
      - the numeric Jacobian rank (when a matrix exists)
      - invariance under random element orders
      - rank calls of a fresh run on the min-norm-point path against the
        budget, with the same r'(E) and partition

    Args:
        config: tunables and size limits

    Returns:
        (document, exit code): {"selftest": {"passed", "instances",
        "rank_calls"}}; exit code 0 when everything passed, 4 otherwise
    """

    if config is None:
        config = load_config()

    instances = []
    total_calls = 0
    total_budget = 0
    passed = True
    order_rng = np.random.default_rng(config.seed)
    budget_config = dataclasses.replace(config, sfm_dispatch_k=0)

    for spec, expected_value, expected_partition in _corpus():
        instance = build_instance(spec, config)
        M = instance.oracle
        n = M.ground_size
        result = coarsest_optimal_partition(M, M.ground, config=config)
        k = result.rprime
        failures: List[str] = []
        checks: List[str] = ["algorithm"]

        # Step 1: known values
        if expected_value is not None and result.rprime != expected_value:
            failures.append(f"rprime {result.rprime} != expected {expected_value}")
        if expected_partition is not None and result.partition != expected_partition:
            failures.append(f"partition {result.partition.to_lists()} != expected {expected_partition.to_lists()}")

        # Step 2: enumeration
        if n <= config.brute_partition_max:
            checks.append("bruteforce")
            coarsest = coarsest_bruteforce(M, M.ground, config)
            if coarsest != result.partition:
                failures.append(f"bruteforce coarsest {coarsest.to_lists()} differs")

        # Step 3: axioms and structure of M'
        if n <= config.axiom_max:
            checks.extend(["axioms", "structure"])
            for report in (axiom_suite(M, derived=True, config=config), structure_suite(M, config)):
                failures.extend(f"{report.suite}: {f['axiom']}" for f in report.failures)

        # Step 4: numeric agreement
        if instance.matrix is not None and n <= config.brute_partition_max:
            checks.append("numeric")
            numeric = amoeba_dim_numeric(instance.matrix, config.samples, config.seed, config)
            if numeric != result.rprime:
                failures.append(f"numeric {numeric} != rprime {result.rprime}")

        # Step 5: order invariance
        if n <= config.brute_partition_max:
            checks.append("orders")
            for _ in range(ORDERS_PER_INSTANCE):
                order = [int(e) for e in order_rng.permutation(n)]
                permuted = coarsest_optimal_partition(M, M.ground, order=order, config=config)
                if permuted.partition != result.partition or permuted.rprime != result.rprime:
                    failures.append(f"order {[e + 1 for e in order]} changes the result")
                    break

        # Step 6: rank-call budget, fresh oracle so every call is a real evaluation
        checks.append("budget")
        fresh = build_instance(spec, config).oracle
        budgeted = coarsest_optimal_partition(fresh, fresh.ground, config=budget_config)
        budget = _rank_call_budget(n, k)
        total_calls += budgeted.rank_calls
        total_budget += budget
        if budgeted.rprime != result.rprime or budgeted.partition != result.partition:
            failures.append("min-norm-point path disagrees with the default path")
        if budgeted.rank_calls > budget:
            failures.append(f"rank calls {budgeted.rank_calls} exceed budget {budget}")

        if failures:
            passed = False
            logger.error(f"❌ {instance.label}: {'; '.join(failures)}")
        else:
            logger.info(f"✅ {instance.label}: r'={result.rprime}, {budgeted.rank_calls}/{budget} rank call(s) on the budget path")

        instances.append({
            "instance": instance.label,
            "seed": spec.seed,
            "n": n,
            "rprime": result.rprime,
            "rank_calls": result.rank_calls,
            "budget_rank_calls": budgeted.rank_calls,
            "budget": budget,
            "checks": checks,
            "failures": failures,
        })

    document = {
        "selftest": {
            "passed": passed,
            "instances": instances,
            "rank_calls": {"total": total_calls, "budget": total_budget, "constant": BUDGET_CONSTANT},
        }
    }
    return document, 0 if passed else VerificationFailedError.exit_code
