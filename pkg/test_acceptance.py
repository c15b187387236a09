#!/usr/bin/env python3
"""
End-to-end checks on the regression corpus and on 200 seeded random linear
matroids over Q(i) with d <= 4, n <= 8.
"""

import math
import os
import sys
import time

import numpy as np

# Add src directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))

from amoeba_types.types import InstanceSpec, Partition
from cli.cmd_dim import cmd_dim
from cli.cmd_selftest import BUDGET_CONSTANT, cmd_selftest
from derived.coarsest_optimal_partition import coarsest_optimal_partition
from derived.derived_oracle import derived_oracle
from matroid.connected_components import connected_components
from matroid.make_linear_oracle import make_linear_oracle
from pipeline.nisse_matrix import nisse_matrix
from pipeline.random_linear_matrix import random_linear_matrix
from pipeline.trunc_sum_oracle import trunc_sum_oracle
from utils.load_config import load_config
from verify.amoeba_dim_numeric import amoeba_dim_numeric
from verify.axiom_suite import axiom_suite
from verify.coarsest_bruteforce import coarsest_bruteforce
from verify.rprime_bruteforce import rprime_bruteforce
from verify.structure_suite import structure_suite

RANDOM_INSTANCES = 200


def random_instances():
    """(seed, matrix) for the seeded random corpus"""
    for seed in range(RANDOM_INSTANCES):
        rng = np.random.default_rng(seed)
        d = int(rng.integers(1, 5))
        n = int(rng.integers(d, 9))
        yield seed, random_linear_matrix(d, n, rng)


def block_partition(c, k):
    size = 2 * c
    return Partition.from_parts([((1 << size) - 1) << (i * size) for i in range(k)])


def budget(n, k):
    return BUDGET_CONSTANT * (n * k + k ** 3 * math.log2(k + 2))


def test_connected_example():
    start = time.time()
    document, code = cmd_dim(InstanceSpec(generator="nisse", seed=7))
    assert code == 0
    assert document["dim"] == 6
    assert document["partition"] == [[1, 2, 5, 6], [3], [4], [7]]
    assert time.time() - start < 1.0


def test_truncated_sum_family():
    start = time.time()
    for c, k in ((1, 4), (1, 5), (2, 6)):
        M = trunc_sum_oracle(c, k)
        result = coarsest_optimal_partition(M, M.ground)
        assert result.rprime == 2 * c * k - k
        assert result.partition == block_partition(c, k)
        if M.ground_size <= 10:
            assert coarsest_bruteforce(M, M.ground) == result.partition
    assert time.time() - start < 30.0


def test_agrees_with_bruteforce_on_every_subset():
    for seed, A in random_instances():
        M = make_linear_oracle(A)
        for S in range(1 << A.n):
            result = coarsest_optimal_partition(M, S)
            best, _ = rprime_bruteforce(M, S)
            assert result.rprime == best, (seed, S)
            assert result.partition == coarsest_bruteforce(M, S), (seed, S)


def test_agrees_with_jacobian_rank():
    for seed, A in random_instances():
        M = make_linear_oracle(A)
        expected = coarsest_optimal_partition(M, M.ground).rprime
        assert amoeba_dim_numeric(A, samples=5, seed=seed) == expected, seed


def test_axioms_and_structure_on_small_instances():
    oracles = [make_linear_oracle(nisse_matrix(seed=7)), trunc_sum_oracle(1, 4)]
    oracles += [make_linear_oracle(A) for seed, A in random_instances() if seed % 10 == 0]
    for M in oracles:
        for report in (axiom_suite(M), structure_suite(M)):
            assert report.passed, (M.name, report.to_dict()["failures"])


def test_bounds_and_order_invariance():
    rng = np.random.default_rng(2)
    oracles = [make_linear_oracle(nisse_matrix(seed=7)), trunc_sum_oracle(1, 4), trunc_sum_oracle(1, 5)]
    oracles += [make_linear_oracle(A) for seed, A in random_instances() if seed % 20 == 0]
    for M in oracles:
        derived = derived_oracle(M)
        reference = derived.result(M.ground)
        d = M.rank(M.ground)
        assert reference.rprime <= 2 * d - len(connected_components(M))
        if M.ground_size <= 8:
            for S in range(1, 1 << M.ground_size):
                assert derived.rank(S) <= min(S.bit_count(), 2 * M.rank(S) - 1)
        for _ in range(20):
            order = [int(e) for e in rng.permutation(M.ground_size)]
            permuted = coarsest_optimal_partition(M, M.ground, order=order)
            assert permuted.partition == reference.partition
            assert permuted.rprime == reference.rprime


def test_rank_call_budget():
    # one constant for the whole corpus, measured on the min-norm-point path
    config = load_config(sfm_dispatch_k=0)
    oracles = [lambda: make_linear_oracle(nisse_matrix(seed=7))]
    oracles += [lambda c=c, k=k: trunc_sum_oracle(c, k) for c, k in ((1, 4), (1, 5), (2, 6))]
    oracles += [lambda A=A: make_linear_oracle(A) for _, A in random_instances()]
    for build in oracles:
        # fresh oracle: every counted call is an uncached evaluation
        M = build()
        result = coarsest_optimal_partition(M, M.ground, config=config)
        assert result.rank_calls == M.calls
        assert result.rank_calls <= budget(M.ground_size, result.rprime), (M.name, result.rank_calls)


def test_truncated_sum_on_min_norm_point_path():
    M = trunc_sum_oracle(2, 6)
    result = coarsest_optimal_partition(M, M.ground, config=load_config(sfm_dispatch_k=0))
    assert result.rprime == 18
    assert result.partition == block_partition(2, 6)
    assert result.rank_calls <= budget(24, 18)


def test_selftest_passes():
    document, code = cmd_selftest()
    assert code == 0
    assert document["selftest"]["passed"] is True
    assert document["selftest"]["rank_calls"]["constant"] == BUDGET_CONSTANT
    assert document["selftest"]["rank_calls"]["total"] <= document["selftest"]["rank_calls"]["budget"]
    for entry in document["selftest"]["instances"]:
        assert entry["budget_rank_calls"] <= entry["budget"], entry["instance"]
    assert "trunc-sum 2 6" in [entry["instance"] for entry in document["selftest"]["instances"]]


if __name__ == "__main__":
    for name, test in list(globals().items()):
        if name.startswith("test_") and callable(test):
            test()
            print(f"✅ {name}")
