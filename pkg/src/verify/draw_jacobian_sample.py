import logging
from typing import Any, List, Optional

import numpy as np
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from amoeba_types.types import AmoebaConfig, GaussianRational, GRMatrix, JacobianSample
from error.errors import SamplingError
from matroid.domain_columns import domain_columns
from utils.load_config import load_config

logger = logging.getLogger(__name__)


def draw_jacobian_sample(
    A: GRMatrix,
    rng: np.random.Generator,
    config: Optional[AmoebaConfig] = None,
) -> JacobianSample:
    """
    Sample a point p of X = rowspace(A) ∩ (C*)^n and the real rank of d_p Log.

    This is the ONLY function in this file (following GOLDEN RULE).
    p = sum c_j * row_j with c_j = a + bi, a and b uniform integers in
    [-B, B]. A point with a zero coordinate lies outside the torus and is
    redrawn. The differential of Log at p sends v in V to Re(v/p), so its
    image is spanned by Re(row_j/p) and Re(i*row_j/p) = -Im(row_j/p); the
    rank of these 2d real vectors is taken exactly over QQ.

    Args:
        A: d x n matrix with linearly independent rows
        rng: seeded numpy generator
        config: coefficient bound and retry limit

    Returns:
        JacobianSample: coefficients, the point and the rank found

    Raises:
        SamplingError: if no point with all coordinates nonzero was found
    """

    if config is None:
        config = load_config()
    bound = config.coefficient_bound
    columns = domain_columns(A)

    # Step 1: draw a point in the torus
    for attempt in range(config.max_sample_retries):
        draws = rng.integers(-bound, bound + 1, size=(A.d, 2))
        coefficients = [QQ_I(int(re), int(im)) for re, im in draws]
        point: List[Any] = [sum((c * x for c, x in zip(coefficients, column)), QQ_I.zero) for column in columns]
        if not any(x == QQ_I.zero for x in point):
            break
        logger.debug(f"sample {attempt + 1} hit a coordinate hyperplane, redrawing")
    else:
        raise SamplingError(f"no point off the coordinate hyperplanes after {config.max_sample_retries} draws")

    # Step 2: real rank of the 2d x n Jacobian image
    rows: List[List[Any]] = []
    for i in range(A.d):
        quotients = [column[i] / p for column, p in zip(columns, point)]
        rows.append([q.x for q in quotients])
        rows.append([-q.y for q in quotients])
    rank = DomainMatrix(rows, (2 * A.d, A.n), QQ).rank()

    return JacobianSample(
        coefficients=[GaussianRational.from_domain(c) for c in coefficients],
        point=[GaussianRational.from_domain(x) for x in point],
        rank_found=rank,
    )
