import logging
from typing import Any, Dict, Optional, Tuple

from amoeba_types.types import AmoebaConfig, Instance, InstanceSpec, OptimalPartitionResult, ResultDocument, SuiteReport
from derived.coarsest_optimal_partition import coarsest_optimal_partition
from error.errors import GroundTooLargeError, InvalidParamsError, ParseError, VerificationFailedError
from partitions.tilde_r import tilde_r
from pipeline.build_instance import build_instance
from utils.load_config import load_config
from utils.mask_elements import mask_elements
from verify.amoeba_dim_numeric import amoeba_dim_numeric
from verify.axiom_suite import axiom_suite
from verify.bell_number import bell_number
from verify.coarsest_bruteforce import coarsest_bruteforce
from verify.structure_suite import structure_suite

logger = logging.getLogger(__name__)

MODES = ("brute", "numeric", "axioms", "all")


def _brute_suite(instance: Instance, config: AmoebaConfig) -> SuiteReport:
    """The coarsest-partition algorithm against partition enumeration: every subset for n <= axiom_max, else E only"""
    M = instance.oracle
    n = M.ground_size
    if n > config.brute_partition_max:
        raise GroundTooLargeError(n, config.brute_partition_max)

    subsets = range(1 << n) if n <= config.axiom_max else [M.ground]
    report = SuiteReport(suite="brute", bell_counts={str(n): bell_number(n)})
    for S in subsets:
        algorithm = coarsest_optimal_partition(M, S, config=config)
        coarsest = coarsest_bruteforce(M, S, config)
        best = tilde_r(M, coarsest)

        report.checks_run += 1
        if algorithm.rprime != best:
            report.fail("formula", S, None, [algorithm.rprime, best])
        report.checks_run += 1
        if algorithm.partition != coarsest:
            report.fail("coarsest", S, None, [len(algorithm.partition), len(coarsest)])
        if S == M.ground:
            report.extra["bruteforce"] = best

    report.extra["subsets"] = len(subsets)
    return report


def _numeric_suite(
    instance: Instance,
    result: OptimalPartitionResult,
    samples: int,
    seed: int,
    config: AmoebaConfig,
) -> SuiteReport:
    """Jacobian rank at sampled points against r'(E)"""
    if instance.matrix is None:
        raise InvalidParamsError(f"{instance.label} has no matrix representation; numeric mode needs one")
    value = amoeba_dim_numeric(instance.matrix, samples, seed, config)
    report = SuiteReport(suite="numeric", checks_run=1)
    if value != result.rprime:
        report.fail("dimension_agreement", instance.oracle.ground, None, [value, result.rprime])
    report.extra["numeric"] = value
    report.extra["samples"] = samples
    return report


def cmd_verify(
    spec: InstanceSpec,
    mode: str = "all",
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    config: Optional[AmoebaConfig] = None,
) -> Tuple[Dict[str, Any], int]:
    """
    `amoeba verify`: compute r'(E) and cross-check it.

    This is the ONLY public function in this file (following GOLDEN RULE).
    Suites:
      brute    r' and the coarsest optimal partition against enumeration
               of all partitions (n <= 12; every subset when n <= 8)
      numeric  r'(E) against the exact Jacobian rank at sampled points
               (needs a matrix)
      axioms   rank axioms for r' and the structural checks relative to M
               (n <= 8)
      all      every suite that applies; the others are reported as skipped

    Args:
        spec: matrix file or generator
        mode: one of brute, numeric, axioms, all
        samples: points for the numeric suite (config.samples when omitted)
        seed: numeric sampling seed (config.seed when omitted)
        config: tunables and size limits

    Returns:
        (document, exit code): the dim document with a "verifications"
        object; exit code 0, or 4 when any check failed

    Raises:
        ParseError: on an unknown mode
        GroundTooLargeError: when an explicitly requested suite exceeds its
            size limit
        InvalidParamsError: numeric mode on an instance without a matrix
    """

    if config is None:
        config = load_config()
    if mode not in MODES:
        raise ParseError(f"unknown verify mode {mode!r}; choose from {', '.join(MODES)}")
    if samples is None:
        samples = config.samples
    if seed is None:
        seed = config.seed

    # Step 1: the value under test
    instance = build_instance(spec, config)
    M = instance.oracle
    result = coarsest_optimal_partition(M, M.ground, config=config)

    # Step 2: the requested suites
    suites = {
        "brute": lambda: [_brute_suite(instance, config)],
        "numeric": lambda: [_numeric_suite(instance, result, samples, seed, config)],
        "axioms": lambda: [axiom_suite(M, derived=True, config=config), structure_suite(M, config)],
    }
    selected = list(suites) if mode == "all" else [mode]

    verifications: Dict[str, Any] = {}
    failed = False
    for name in selected:
        logger.info(f"🔍 running {name} suite on {instance.label}")
        try:
            reports = suites[name]()
        except (GroundTooLargeError, InvalidParamsError) as e:
            if mode != "all":
                raise
            logger.warning(f"⚠️  skipping {name} suite: {e}")
            verifications[name] = {"skipped": str(e)}
            continue
        for report in reports:
            key = "structure" if report.suite == "structure" else name
            verifications[key] = report.to_dict()
            failed = failed or not report.passed

    # Step 3: three-way agreement summary
    agreement = {"algorithm": result.rprime}
    if "bruteforce" in verifications.get("brute", {}):
        agreement["bruteforce"] = verifications["brute"]["bruteforce"]
    if "numeric" in verifications.get("numeric", {}):
        agreement["numeric"] = verifications["numeric"]["numeric"]
    verifications["agreement"] = agreement

    document = ResultDocument(
        value_key="dim",
        value=result.rprime,
        partition=result.partition.to_lists(),
        basis=[e + 1 for e in mask_elements(result.basis)],
        rank_calls=result.rank_calls,
        verifications=verifications,
    )

    if failed:
        logger.error(f"❌ verification failed on {instance.label}")
        return document.to_dict(), VerificationFailedError.exit_code
    logger.info(f"✅ all requested suites passed on {instance.label}")
    return document.to_dict(), 0
