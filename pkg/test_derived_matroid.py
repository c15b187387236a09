#!/usr/bin/env python3
"""
Tests for the coarsest-optimal-partition algorithm and the derived matroid
M' built on it.
"""

import os
import sys

import numpy as np
import pytest

# Add src directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))

from amoeba_types.rank_oracle import RankOracle
from amoeba_types.types import GRMatrix, Partition
from derived.amoeba_dimension import amoeba_dimension
from derived.coarsest_optimal_partition import coarsest_optimal_partition
from derived.derived_oracle import derived_oracle
from derived.independent_in_mprime import independent_in_mprime
from derived.rprime import rprime
from error.errors import InvalidParamsError, LoopError, ZeroColumnError
from matroid.connected_components import connected_components
from matroid.direct_sum import direct_sum
from matroid.make_linear_oracle import make_linear_oracle
from matroid.make_uniform_oracle import make_uniform_oracle
from matroid.truncate import truncate
from partitions.refines import refines
from partitions.tilde_r import tilde_r
from pipeline.identity_matrix import identity_matrix
from pipeline.nisse_matrix import nisse_matrix
from pipeline.ones_matrix import ones_matrix
from pipeline.random_linear_matrix import random_linear_matrix
from pipeline.trunc_sum_oracle import trunc_sum_oracle
from pipeline.vandermonde_matrix import vandermonde_matrix
from utils.mask_elements import mask_elements
from verify.rprime_bruteforce import rprime_bruteforce

NISSE_PARTITION = [[1, 2, 5, 6], [3], [4], [7]]


def test_empty_set():
    result = coarsest_optimal_partition(make_uniform_oracle(2, 4), 0)
    assert result.partition == Partition()
    assert result.basis == 0
    assert result.rprime == 0
    assert result.rank_calls == 0


def test_nisse_example():
    M = make_linear_oracle(nisse_matrix(seed=7))
    result = coarsest_optimal_partition(M, M.ground)
    assert result.rprime == 6
    assert result.partition.to_lists() == NISSE_PARTITION
    assert tilde_r(M, result.partition) == 6
    assert result.basis.bit_count() == 6
    assert result.basis & ~M.ground == 0


def test_uniform_example():
    M = make_uniform_oracle(2, 4)
    result = coarsest_optimal_partition(M, M.ground)
    assert result.rprime == 3
    assert result.partition.to_lists() == [[1, 2, 3, 4]]


def test_rprime_examples():
    assert rprime(make_linear_oracle(identity_matrix(6)), 0b111111) == 6
    assert rprime(make_linear_oracle(ones_matrix(5)), 0b11111) == 1
    M = trunc_sum_oracle(1, 4)
    assert rprime(M, M.ground) == 4


def test_loop_detection():
    with_loop = RankOracle(3, lambda S: (S & 0b011).bit_count() and 1, name="loop")
    with pytest.raises(LoopError) as info:
        coarsest_optimal_partition(with_loop, 0b111)
    assert info.value.element == 2
    with pytest.raises(LoopError):
        derived_oracle(with_loop)


def test_order_must_be_permutation():
    M = make_uniform_oracle(2, 4)
    with pytest.raises(InvalidParamsError):
        coarsest_optimal_partition(M, 0b0111, order=[0, 1])
    with pytest.raises(InvalidParamsError):
        coarsest_optimal_partition(M, 0b0011, order=[0, 0])


def test_derived_oracle():
    assert derived_oracle(make_uniform_oracle(2, 4)).rank(0b1111) == 3

    free = derived_oracle(make_linear_oracle(identity_matrix(5)))
    for S in range(1 << 5):
        assert free.rank(S) == S.bit_count()

    nisse = derived_oracle(make_linear_oracle(nisse_matrix(seed=7)))
    assert nisse.rank(nisse.ground) == 6
    assert nisse.result(nisse.ground).partition.to_lists() == NISSE_PARTITION


def test_derived_oracle_composes():
    # M'' of U_{2,4}: M' = U_{3,4}, whose derived matroid is U_{4,4}
    twice = derived_oracle(derived_oracle(make_uniform_oracle(2, 4)))
    assert twice.rank(0b1111) == 4


def test_independent_in_mprime():
    free = make_linear_oracle(identity_matrix(4))
    for S in range(1 << 4):
        assert independent_in_mprime(free, S)

    rank_one = make_linear_oracle(ones_matrix(4))
    for S in range(1 << 4):
        assert independent_in_mprime(rank_one, S) == (S.bit_count() <= 1)

    U24 = make_uniform_oracle(2, 4)
    assert independent_in_mprime(U24, 0b0111)
    assert not independent_in_mprime(U24, 0b1111)


def test_amoeba_dimension():
    dim, partition = amoeba_dimension(nisse_matrix(seed=7))
    assert dim == 6
    assert partition.to_lists() == NISSE_PARTITION

    dim, partition = amoeba_dimension(identity_matrix(4))
    assert dim == 4
    assert partition == Partition.singletons(0b1111)

    dim, partition = amoeba_dimension(vandermonde_matrix(2, 4))
    assert dim == 3
    assert partition.to_lists() == [[1, 2, 3, 4]]


def test_amoeba_dimension_zero_column():
    with pytest.raises(ZeroColumnError):
        amoeba_dimension(GRMatrix.from_rows([[1, 0], [1, 0]]))


def test_agrees_with_bruteforce_on_random_matroids():
    rng = np.random.default_rng(77)
    for _ in range(25):
        d = int(rng.integers(1, 5))
        n = int(rng.integers(d, 8))
        M = make_linear_oracle(random_linear_matrix(d, n, rng))
        for S in range(1 << n):
            result = coarsest_optimal_partition(M, S)
            best, optimal = rprime_bruteforce(M, S)
            assert result.rprime == best
            assert tilde_r(M, result.partition) == result.rprime
            assert result.partition.support == S
            assert result.basis & ~S == 0
            for P in optimal:
                assert refines(P, result.partition)


def test_parts_are_maximal_tight_sets():
    rng = np.random.default_rng(31)
    for _ in range(10):
        M = make_linear_oracle(random_linear_matrix(3, 7, rng))
        derived = derived_oracle(M)
        partition = derived.result(M.ground).partition
        tight = [Q for Q in range(1, 1 << 7) if derived.rank(Q) == 2 * M.rank(Q) - 1]
        maximal = [Q for Q in tight if not any(Q != R and Q & ~R == 0 for R in tight)]
        assert sorted(partition.parts) == sorted(maximal)


def test_order_independence():
    rng = np.random.default_rng(9)
    instances = [make_linear_oracle(nisse_matrix(seed=7)), trunc_sum_oracle(1, 4)]
    instances += [make_linear_oracle(random_linear_matrix(3, 7, rng)) for _ in range(5)]
    for M in instances:
        reference = coarsest_optimal_partition(M, M.ground)
        for _ in range(20):
            order = [int(e) for e in rng.permutation(M.ground_size)]
            permuted = coarsest_optimal_partition(M, M.ground, order=order)
            assert permuted.partition == reference.partition
            assert permuted.rprime == reference.rprime
            assert permuted.basis.bit_count() == reference.rprime


def test_bounds():
    rng = np.random.default_rng(17)
    instances = [make_linear_oracle(random_linear_matrix(3, 7, rng)) for _ in range(5)]
    instances.append(direct_sum([make_uniform_oracle(1, 2), make_uniform_oracle(2, 3)]))
    for M in instances:
        derived = derived_oracle(M)
        for S in range(1, 1 << M.ground_size):
            assert derived.rank(S) <= min(S.bit_count(), 2 * M.rank(S) - 1)
        d = M.rank(M.ground)
        components = len(connected_components(M))
        assert derived.rank(M.ground) <= 2 * d - components


def test_truncation_identity():
    M = make_linear_oracle(nisse_matrix(seed=7))
    d = M.rank(M.ground)
    derived = derived_oracle(M)
    truncated = derived_oracle(truncate(M))
    for S in range(1 << 7):
        assert truncated.rank(S) == min(derived.rank(S), 2 * d - 3)


def test_truncated_sum_family():
    for c, k in ((1, 4), (1, 5)):
        M = trunc_sum_oracle(c, k)
        result = coarsest_optimal_partition(M, M.ground)
        assert result.rprime == 2 * c * k - k
        blocks = [list(range(2 * c * i + 1, 2 * c * (i + 1) + 1)) for i in range(k)]
        assert result.partition.to_lists() == blocks


def test_rank_calls_counted():
    M = make_uniform_oracle(2, 4)
    before = M.calls
    result = coarsest_optimal_partition(M, M.ground)
    assert result.rank_calls == M.calls - before
    assert result.rank_calls > 0
    # cached oracle: a second run costs nothing
    again = coarsest_optimal_partition(M, M.ground)
    assert again.rank_calls == 0
    assert again.partition == result.partition


def test_basis_elements_are_in_s():
    M = make_linear_oracle(nisse_matrix(seed=7))
    S = 0b1010111
    result = coarsest_optimal_partition(M, S)
    assert set(mask_elements(result.basis)) <= set(mask_elements(S))
    assert result.partition.support == S


if __name__ == "__main__":
    for name, test in list(globals().items()):
        if name.startswith("test_") and callable(test):
            test()
            print(f"✅ {name}")
