import logging
from typing import Optional

from amoeba_types.types import AmoebaConfig, SuiteReport
from amoeba_types.rank_oracle import RankOracle
from derived.derived_oracle import derived_oracle
from error.errors import GroundTooLargeError
from utils.load_config import load_config
from verify.bell_number import bell_number

logger = logging.getLogger(__name__)


def axiom_suite(M: RankOracle, derived: bool = True, config: Optional[AmoebaConfig] = None) -> SuiteReport:
    """
    Exhaustively check the matroid rank axioms.

    This is the ONLY function in this file (following GOLDEN RULE).
    With derived=True the function under test is r' of M, otherwise r itself.
    Checks, over all subsets S and all pairs (S, T):
      - nonnegativity: r(S) >= 0
      - unit bound: r(S) <= |S|
      - monotonicity: r(S) <= r(T) whenever S ⊆ T
      - submodularity: r(S) + r(T) >= r(S ∪ T) + r(S ∩ T)
    Only the first violation of each axiom is recorded.

    Args:
        M: loopless rank oracle with at most config.axiom_max elements
        derived: test r' (True) or r (False)
        config: size limit

    Returns:
        SuiteReport: checks run, failures and Bell counts

    Raises:
        GroundTooLargeError: above config.axiom_max elements
    """

    if config is None:
        config = load_config()
    n = M.ground_size
    if n > config.axiom_max:
        raise GroundTooLargeError(n, config.axiom_max)

    # Step 1: tabulate the function under test
    R = derived_oracle(M, config) if derived else M
    size = 1 << n
    values = [R.rank(S) for S in range(size)]

    report = SuiteReport(suite="axioms", bell_counts={str(n): bell_number(n)})
    seen = set()

    def check(axiom, ok, S, T, observed):
        report.checks_run += 1
        if not ok and axiom not in seen:
            seen.add(axiom)
            report.fail(axiom, S, T, observed)

    # Step 2: single-set axioms
    for S in range(size):
        check("nonnegativity", values[S] >= 0, S, None, [values[S]])
        check("unit_bound", values[S] <= S.bit_count(), S, None, [values[S], S.bit_count()])

    # Step 3: pair axioms
    for S in range(size):
        for T in range(size):
            if S & ~T == 0:
                check("monotonicity", values[S] <= values[T], S, T, [values[S], values[T]])
            union, intersection = S | T, S & T
            check(
                "submodularity",
                values[S] + values[T] >= values[union] + values[intersection],
                S,
                T,
                [values[S], values[T], values[union], values[intersection]],
            )

    report.extra["function"] = "rprime" if derived else "rank"
    logger.info(f"axiom suite on {R.name}: {report.checks_run} checks, {len(report.failures)} failure(s)")
    return report
