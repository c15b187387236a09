#!/usr/bin/env python3
"""
Tests for the partition calculus: fcc, join, meet, uncrossing, r̃ and
refinement.
"""

import os
import sys

import numpy as np
import pytest

# Add src directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))

from amoeba_types.types import Partition, SubsetMultiset
from error.errors import EmptyMemberError, SupportMismatchError
from matroid.make_linear_oracle import make_linear_oracle
from matroid.make_uniform_oracle import make_uniform_oracle
from partitions.fcc import fcc
from partitions.join import join
from partitions.meet import meet
from partitions.refines import refines
from partitions.tilde_r import tilde_r
from partitions.uncross import uncross
from pipeline.nisse_matrix import nisse_matrix
from pipeline.random_linear_matrix import random_linear_matrix


def mask(*elements):
    """1-based elements to a bit mask"""
    result = 0
    for e in elements:
        result |= 1 << (e - 1)
    return result


def crosses(a, b):
    return bool(a & b and a & ~b and b & ~a)


def random_multiset(rng, n, size):
    members = []
    while len(members) < size:
        member = int(rng.integers(1, 1 << n))
        members.append(member)
    return SubsetMultiset.from_members(members)


def test_fcc_examples():
    S = SubsetMultiset.from_members([mask(1, 2), mask(2, 3), mask(4)])
    assert fcc(S) == Partition.from_parts([mask(1, 2, 3), mask(4)])

    P = Partition.from_parts([mask(1, 3), mask(2), mask(4, 5)])
    assert fcc(SubsetMultiset.from_members(P.parts)) == P

    chain = SubsetMultiset.from_members([mask(1, 2), mask(3, 4), mask(2, 3)])
    assert fcc(chain) == Partition.from_parts([mask(1, 2, 3, 4)])


def test_fcc_empty_member():
    with pytest.raises(EmptyMemberError):
        fcc(SubsetMultiset.from_members([mask(1), 0]))


def test_partition_canonical_order():
    P = Partition.from_parts([mask(4, 7), mask(3), mask(1, 2, 5, 6)])
    assert P.to_lists() == [[1, 2, 5, 6], [3], [4, 7]]
    assert P.support == mask(1, 2, 3, 4, 5, 6, 7)
    assert P.parts[1] == mask(3)
    with pytest.raises(ValueError):
        Partition.from_parts([mask(1, 2), mask(2, 3)])


def test_join_examples():
    singletons = Partition.from_parts([mask(1), mask(2)])
    whole = Partition.from_parts([mask(1, 2)])
    assert join(singletons, whole) == whole

    P = Partition.from_parts([mask(1, 2), mask(3)])
    Q = Partition.from_parts([mask(2, 3)])
    assert join(P, Q) == Partition.from_parts([mask(1, 2, 3)])

    assert join(P, P) == P


def test_meet_examples():
    P = Partition.from_parts([mask(1, 2, 3)])
    Q = Partition.from_parts([mask(1, 2), mask(3, 4)])
    assert meet(P, Q) == Partition.from_parts([mask(1, 2), mask(3)])

    R = Partition.from_parts([mask(1, 4), mask(2, 3, 5)])
    assert meet(R, Partition.singletons(mask(1, 2, 3))) == Partition.singletons(mask(1, 2, 3))

    assert meet(R, R) == R


def test_join_and_meet_bound_their_arguments():
    rng = np.random.default_rng(8)

    def random_partition():
        parts = {}
        for e, label in enumerate(rng.integers(0, 3, size=6)):
            parts[int(label)] = parts.get(int(label), 0) | 1 << e
        return Partition.from_parts(list(parts.values()))

    for _ in range(100):
        P, Q = random_partition(), random_partition()
        joined = join(P, Q)
        for part in P.parts + Q.parts:
            assert any(part & ~big == 0 for big in joined.parts)
        met = meet(P, Q)
        assert refines(met, P) and refines(met, Q)


def test_uncross_examples():
    S = SubsetMultiset.from_members([mask(1, 2), mask(2, 3)])
    assert uncross(S) == SubsetMultiset.from_members([mask(2), mask(1, 2, 3)])

    P = Partition.from_parts([mask(1, 2), mask(3), mask(4, 5)])
    as_multiset = SubsetMultiset.from_members(P.parts)
    assert uncross(as_multiset) == as_multiset


def test_uncross_conserves_counts_on_chain():
    S = SubsetMultiset.from_members([mask(1, 2), mask(2, 3), mask(3, 4)])
    trace = []
    T = uncross(S, trace)
    assert trace[0] == S and trace[-1] == T
    for e in range(4):
        assert T.coverage(e) == S.coverage(e)
    assert T.n_value() > S.n_value()
    members = T.members()
    assert not any(crosses(a, b) for i, a in enumerate(members) for b in members[i + 1:])


def test_uncross_random_multisets():
    rng = np.random.default_rng(1)
    for _ in range(500):
        n = int(rng.integers(1, 11))
        S = random_multiset(rng, n, int(rng.integers(1, 7)))
        trace = []
        T = uncross(S, trace)

        # per-element counts preserved, n strictly increasing per step
        for e in range(n):
            assert T.coverage(e) == S.coverage(e)
        for before, after in zip(trace, trace[1:]):
            assert after.n_value() > before.n_value()
            assert after.count() == before.count()

        members = T.members()
        assert not any(crosses(a, b) for i, a in enumerate(members) for b in members[i + 1:])
        assert fcc(T) == fcc(S)

        # fcc of a cross-free multiset is a sub-multiset of it
        for part in fcc(T).parts:
            assert part in members


def test_uncross_empty_member():
    with pytest.raises(EmptyMemberError):
        uncross(SubsetMultiset.from_members([0, mask(1)]))


def test_tilde_r_examples():
    free = make_uniform_oracle(5, 5)
    assert tilde_r(free, Partition.singletons(mask(1, 2, 3, 4, 5))) == 5

    nisse = make_linear_oracle(nisse_matrix(seed=7))
    P = Partition.from_parts([mask(1, 2, 5, 6), mask(3), mask(4), mask(7)])
    assert tilde_r(nisse, P) == 6

    U24 = make_uniform_oracle(2, 4)
    assert tilde_r(U24, Partition.from_parts([mask(1, 2, 3, 4)])) == 3

    # multiplicities count
    assert tilde_r(U24, SubsetMultiset.from_members([mask(1), mask(1), mask(1, 2)])) == 1 + 1 + 3


def test_tilde_r_empty_member():
    with pytest.raises(EmptyMemberError):
        tilde_r(make_uniform_oracle(2, 4), SubsetMultiset.from_members([0]))


def test_uncross_does_not_increase_tilde_r():
    rng = np.random.default_rng(4)
    for _ in range(50):
        M = make_linear_oracle(random_linear_matrix(3, 7, rng))
        S = random_multiset(rng, 7, 4)
        assert tilde_r(M, S) >= tilde_r(M, uncross(S))


def test_quadruple_identity():
    rng = np.random.default_rng(12)
    for _ in range(100):
        M = make_linear_oracle(random_linear_matrix(3, 6, rng))

        def random_partition(support):
            labels = rng.integers(0, 3, size=6)
            parts = {}
            for e in range(6):
                if support >> e & 1:
                    parts[int(labels[e])] = parts.get(int(labels[e]), 0) | 1 << e
            return Partition.from_parts(list(parts.values()))

        S, S2 = int(rng.integers(1, 64)), int(rng.integers(1, 64))
        if not S & S2:
            continue
        P, P2 = random_partition(S), random_partition(S2)

        T = uncross(SubsetMultiset.from_members(list(P.parts) + list(P2.parts)))
        joined = join(P, P2)
        assert fcc(T) == joined
        remaining = T.members()
        for part in joined.parts:
            remaining.remove(part)
        Q = Partition.from_parts(remaining)

        assert Q.support == S & S2
        assert refines(meet(P, P2), Q)
        assert tilde_r(M, P) + tilde_r(M, P2) >= tilde_r(M, joined) + tilde_r(M, Q)
        assert len(P) + len(P2) == len(joined) + len(Q)


def test_refines():
    ground = mask(1, 2, 3)
    singletons = Partition.singletons(ground)
    P = Partition.from_parts([mask(1, 2), mask(3)])
    Q = Partition.from_parts([mask(1, 3), mask(2)])
    assert refines(singletons, P)
    assert refines(P, P)
    assert not refines(P, Q)
    with pytest.raises(SupportMismatchError):
        refines(P, Partition.singletons(mask(1, 2)))


if __name__ == "__main__":
    for name, test in list(globals().items()):
        if name.startswith("test_") and callable(test):
            test()
            print(f"✅ {name}")
