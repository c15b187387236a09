import logging
from typing import Optional

from amoeba_types.types import AmoebaConfig, SuiteReport
from amoeba_types.rank_oracle import RankOracle
from derived.derived_oracle import derived_oracle
from error.errors import GroundTooLargeError
from matroid.connected_components import connected_components
from matroid.is_flat import is_flat
from matroid.truncate import truncate
from utils.load_config import load_config
from verify.bell_number import bell_number

logger = logging.getLogger(__name__)


def structure_suite(M: RankOracle, config: Optional[AmoebaConfig] = None) -> SuiteReport:
    """
    Exhaustively check how M' sits relative to M.

    This is the ONLY function in this file (following GOLDEN RULE).
    For every subset S of E (d = r(E)):
      - quotient: a flat of M is a flat of M'
      - bounds: r'(S) <= min(|S|, 2r(S) - 1) for nonempty S
      - truncation: r'_N(S) = min(r'(S), 2d - 3) for the truncation N of M,
        when d > 1
    and once: r'(E) <= 2d - (number of connected components of M).

    Args:
        M: loopless rank oracle with at most config.axiom_max elements
        config: size limit

    Returns:
        SuiteReport: checks run, failures, Bell counts, r'(E) and the
        component count

    Raises:
        GroundTooLargeError: above config.axiom_max elements
    """

    if config is None:
        config = load_config()
    n = M.ground_size
    if n > config.axiom_max:
        raise GroundTooLargeError(n, config.axiom_max)

    derived = derived_oracle(M, config)
    d = M.rank(M.ground)
    report = SuiteReport(suite="structure", bell_counts={str(n): bell_number(n)})

    def check(name, ok, S, values):
        report.checks_run += 1
        if not ok:
            report.fail(name, S, None, values)

    # Step 1: quotient and the two obvious upper bounds
    for S in range(1 << n):
        if is_flat(M, S):
            check("quotient", is_flat(derived, S), S, [M.rank(S), derived.rank(S)])
        if S:
            bound = min(S.bit_count(), 2 * M.rank(S) - 1)
            check("upper_bound", derived.rank(S) <= bound, S, [derived.rank(S), bound])

    # Step 2: component bound on E
    components = len(connected_components(M))
    total = derived.rank(M.ground)
    check("component_bound", total <= 2 * d - components, M.ground, [total, 2 * d - components])

    # Step 3: truncation identity
    if d > 1:
        truncated = derived_oracle(truncate(M, config), config)
        for S in range(1 << n):
            expected = min(derived.rank(S), 2 * d - 3)
            check("truncation", truncated.rank(S) == expected, S, [truncated.rank(S), expected])

    report.extra["rprime"] = total
    report.extra["components"] = components
    logger.info(f"structure suite on {M.name}: {report.checks_run} checks, {len(report.failures)} failure(s)")
    return report
