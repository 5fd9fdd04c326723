import random
from fractions import Fraction

import pytest

from cubesums import (
    DomainError,
    Z2Set,
    constants,
    hamming_ball_product,
    initial_segment,
    standard_affine_basis,
    sum_auto,
    sum_naive,
    sum_transform,
)
from cubesums.sumsets import xor_representation_counts


def test_sum_basic():
    A = Z2Set.from_members(2, [0, 1])
    B = Z2Set.from_members(2, [0, 2])
    assert sorted(sum_naive(A, B).members()) == [0, 1, 2, 3]


def test_sum_independent_points():
    A = standard_affine_basis(3)
    assert len(sum_naive(A, A)) == 7  # C(3,2) + 3 + 1


def test_sum_ball_absorption():
    A = hamming_ball_product(1, 2, 3)
    B = hamming_ball_product(0, 2, 3)
    assert sum_naive(A, B) == A
    assert len(A) == 6


def test_sum_identities():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 6)
        A = Z2Set(n, rng.getrandbits(1 << n))
        B = Z2Set(n, rng.getrandbits(1 << n))
        C = Z2Set(n, rng.getrandbits(1 << n))
        assert sum_naive(A, B) == sum_naive(B, A)
        assert sum_naive(sum_naive(A, B), C) == sum_naive(A, sum_naive(B, C))
        assert sum_naive(A, Z2Set.from_members(n, [0])) == A
        if A and B:
            assert len(sum_naive(A, B)) >= max(len(A), len(B))


def test_sum_dimension_mismatch():
    with pytest.raises(DomainError):
        sum_naive(Z2Set(2, 1), Z2Set(3, 1))


def test_sum_empty():
    assert not sum_naive(Z2Set(3, 0), Z2Set.full(3))


def test_pigeonhole_covers_cube():
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(1, 6)
        while True:
            A = Z2Set(n, rng.getrandbits(1 << n) | rng.getrandbits(1 << n))
            B = Z2Set(n, rng.getrandbits(1 << n) | rng.getrandbits(1 << n))
            if len(A) + len(B) > 1 << n:
                break
        assert sum_naive(A, B) == Z2Set.full(n)


def test_transform_equals_naive_exhaustive_n2():
    for abits in range(1 << 4):
        for bbits in range(1 << 4):
            A, B = Z2Set(2, abits), Z2Set(2, bbits)
            assert sum_transform(A, B) == sum_naive(A, B)


def test_transform_equals_naive_random():
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randint(1, 12)
        A = Z2Set(n, rng.getrandbits(1 << n))
        B = Z2Set(n, rng.getrandbits(1 << n))
        assert sum_transform(A, B) == sum_naive(A, B)
        assert sum_auto(A, B) == sum_naive(A, B)


def test_packed_path_matches_bigint_path():
    # dimension 13 is the first to take the word-packed route
    rng = random.Random(23)
    n = 13
    A = Z2Set(n, rng.getrandbits(1 << n))
    B = Z2Set(n, rng.getrandbits(1 << n))
    assert sum_naive(A, B) == sum_transform(A, B)


def test_representation_counts():
    rng = random.Random(29)
    for _ in range(10):
        n = rng.randint(1, 8)
        A = Z2Set(n, rng.getrandbits(1 << n) | 1)
        counts = xor_representation_counts(A, A)
        assert counts[0] == len(A)  # a + a = 0 for every a
        assert counts.sum() == len(A) ** 2


def test_transform_cap():
    with pytest.raises(DomainError):
        sum_transform(Z2Set(21, 1), Z2Set(21, 1), cap=20)


def test_constants():
    H = Z2Set.from_members(3, [0, 1, 2, 3])  # subgroup
    st = constants(H)
    assert st.doubling == 1 and st.spanning == 1
    st = constants(standard_affine_basis(4))
    assert st.doubling == Fraction(11, 5)
    assert st.spanning == Fraction(16, 5)
    A = Z2Set.from_members(4, [0, 1, 2, 4, 8, 3, 5])  # basis of Z_2^4 plus e0+e1, e0+e2
    st = constants(A)
    assert st.doubling == 2
    assert st.spanning == Fraction(16, 7)
    with pytest.raises(DomainError):
        constants(Z2Set(3, 0))


def test_segment_sums_are_segments():
    for a in range(1, 17):
        for b in range(1, 17):
            S = sum_naive(initial_segment(a, 5), initial_segment(b, 5))
            assert S == initial_segment(len(S), 5)
