import logging
import os
from typing import Optional

import numpy as np

from amoeba_types.types import AmoebaConfig, Instance, InstanceSpec
from error.errors import ParseError
from matroid.make_linear_oracle import make_linear_oracle
from matroid.make_uniform_oracle import make_uniform_oracle
from pipeline.identity_matrix import identity_matrix
from pipeline.nisse_matrix import nisse_matrix
from pipeline.ones_matrix import ones_matrix
from pipeline.parse_matrix import parse_matrix
from pipeline.parse_matrix_json import parse_matrix_json
from pipeline.random_linear_matrix import random_linear_matrix
from pipeline.trunc_sum_oracle import trunc_sum_oracle
from pipeline.vandermonde_matrix import vandermonde_matrix
from utils.load_config import load_config

logger = logging.getLogger(__name__)

# generator name -> number of integer parameters
GENERATOR_ARITY = {
    "uniform": 2,
    "nisse": 0,
    "trunc-sum": 2,
    "identity": 1,
    "ones": 1,
    "random": 2,
}


def build_instance(spec: InstanceSpec, config: Optional[AmoebaConfig] = None) -> Instance:
    """
    Resolve an instance description into a loopless rank oracle.

    This is the ONLY function in this file (following GOLDEN RULE).
    Matrix files are read in the text or JSON format; generators are
      uniform d n      U_{d,n}, with a Vandermonde representation
      nisse            the 4 x 7 example, stars drawn from the seed
      trunc-sum c k    k copies of U_{c,2c} truncated c times (no matrix)
      identity n       the free matroid
      ones n           n parallel elements of rank 1
      random d n       random small Gaussian-integer matrix from the seed

    Args:
        spec: file path or generator name with parameters and seed
        config: sampling parameters

    Returns:
        Instance: label, oracle and (when available) the matrix

    Raises:
        FileNotFoundError: if the matrix file does not exist
        ParseError: on malformed files, unknown generators or wrong arity
        ZeroColumnError: if a matrix has a zero column
        InvalidParamsError: on out-of-range generator parameters
    """

    if config is None:
        config = load_config()

    # Step 1: matrix files
    if spec.matrix_path is not None:
        if not os.path.isfile(spec.matrix_path):
            raise FileNotFoundError(2, "No such file", spec.matrix_path)
        with open(spec.matrix_path, "r", encoding="utf-8") as handle:
            text = handle.read()
        if spec.matrix_format == "json":
            A = parse_matrix_json(text)
        elif spec.matrix_format == "text":
            A = parse_matrix(text)
        else:
            raise ParseError(f"unknown matrix format {spec.matrix_format!r}")
        label = os.path.basename(spec.matrix_path)
        logger.info(f"📄 loaded {A.d}x{A.n} matrix from {spec.matrix_path}")
        return Instance(label=label, oracle=make_linear_oracle(A, name=label, config=config), matrix=A)

    # Step 2: generators
    name = spec.generator
    if name not in GENERATOR_ARITY:
        raise ParseError(f"unknown generator {name!r}; choose from {', '.join(GENERATOR_ARITY)}")
    if len(spec.params) != GENERATOR_ARITY[name]:
        raise ParseError(f"generator {name} takes {GENERATOR_ARITY[name]} integer argument(s), got {len(spec.params)}")

    params = spec.params
    label = " ".join([name] + [str(p) for p in params])
    if name == "uniform":
        d, n = params
        oracle = make_uniform_oracle(d, n, config)
        instance = Instance(label=label, oracle=oracle, matrix=vandermonde_matrix(d, n))
    elif name == "nisse":
        A = nisse_matrix(spec.seed, config)
        instance = Instance(label=label, oracle=make_linear_oracle(A, name="nisse", config=config), matrix=A)
    elif name == "trunc-sum":
        instance = Instance(label=label, oracle=trunc_sum_oracle(*params, config=config))
    elif name == "identity":
        A = identity_matrix(params[0])
        instance = Instance(label=label, oracle=make_linear_oracle(A, name=label, config=config), matrix=A)
    elif name == "ones":
        A = ones_matrix(params[0])
        instance = Instance(label=label, oracle=make_linear_oracle(A, name=label, config=config), matrix=A)
    else:
        d, n = params
        A = random_linear_matrix(d, n, np.random.default_rng(spec.seed), config)
        instance = Instance(label=label, oracle=make_linear_oracle(A, name=label, config=config), matrix=A)

    logger.info(f"🧩 built instance {label} (n={instance.oracle.ground_size})")
    return instance
