import random

import pytest

from cubesums import (
    DomainError,
    StructureError,
    Z2Set,
    compress,
    e_compress,
    heavy_witness,
    height,
    initial_segment,
    is_basis_preserving_fixpoint,
    is_compressed,
    pair_compress,
    push_down,
    shift,
    standard_affine_basis,
    structure,
    sum_naive,
    unit_cell,
)
from cubesums.compression import is_subgroup


def test_compress_lost_affine_example():
    A = Z2Set.from_members(4, [0, 1, 2, 4, 8])
    C = compress(A, [1, 2, 3])
    assert sorted(C.members()) == [0, 1, 2, 3, 8]
    assert not is_compressed(A, [1, 2, 3])


def test_compress_fixes_initial_segments():
    for a in range(9):
        seg = initial_segment(a, 3)
        for imask in range(8):
            I = [i + 1 for i in range(3) if (imask >> i) & 1]
            assert compress(seg, I) == seg


def test_compress_full_coset_unchanged():
    A = Z2Set.from_members(2, [2, 3])  # the whole coset e2 + H_1
    assert compress(A, [1]) == A
    assert not is_compressed(Z2Set.from_members(2, [1]), [1])


def test_compress_properties_random():
    rng = random.Random(41)
    for _ in range(150):
        n = rng.randint(1, 8)
        A = Z2Set(n, rng.getrandbits(1 << n))
        I = [i for i in range(1, n + 1) if rng.random() < 0.5]
        C = compress(A, I)
        assert len(C) == len(A)
        assert compress(C, I) == C
        assert height(C) <= height(A)
        B = A | Z2Set(n, rng.getrandbits(1 << n))
        assert compress(A, I).issubset(compress(B, I))


def test_compress_index_range():
    with pytest.raises(DomainError):
        compress(Z2Set(3, 1), [4])


def test_sumset_compression_inclusion_random():
    rng = random.Random(43)
    for _ in range(120):
        n = rng.randint(1, 8)
        A = Z2Set(n, rng.getrandbits(1 << n))
        B = Z2Set(n, rng.getrandbits(1 << n))
        I = [i for i in range(1, n + 1) if rng.random() < 0.5]
        lhs = sum_naive(compress(A, I), compress(B, I))
        rhs = compress(sum_naive(A, B), I)
        assert lhs.issubset(rhs)
        # sum of two I-compressed sets is I-compressed
        assert is_compressed(lhs, I)


def test_push_down_and_shift():
    assert sorted(push_down(Z2Set.from_members(2, [1]), 1).members()) == [0]
    blocked = Z2Set.from_members(2, [1, 2])
    assert shift(blocked, 1, 2) == blocked
    moved = shift(Z2Set.from_members(3, [2, 6]), 1, 2)
    assert sorted(moved.members()) == [1, 5]
    with pytest.raises(DomainError):
        shift(blocked, 1, 1)


def test_push_down_preserves_cardinality():
    rng = random.Random(47)
    for _ in range(60):
        n = rng.randint(1, 6)
        A = Z2Set(n, rng.getrandbits(1 << n))
        i = rng.randint(1, n)
        assert len(push_down(A, i)) == len(A)
        j = rng.randint(1, n)
        if i != j:
            assert len(shift(A, i, j)) == len(A)


def test_e_compress_fixes_basis_and_cube():
    A = standard_affine_basis(4)
    assert e_compress(A) == A
    cube = Z2Set.full(3)
    assert e_compress(cube) == cube


def test_e_compress_requires_basis():
    with pytest.raises(DomainError):
        e_compress(Z2Set.from_members(3, [0, 1]))


def test_e_compress_structure_example():
    A = Z2Set.from_members(3, [0, 1, 2, 3, 4])
    F = e_compress(A)
    assert F == A
    rep = structure(F)
    assert (rep.h, rep.m, rep.sizes) == (2, 1, (1,))


def test_e_compress_outputs_are_fixpoints():
    rng = random.Random(53)
    for _ in range(100):
        n = rng.randint(2, 7)
        A = standard_affine_basis(n) | Z2Set(n, rng.getrandbits(1 << n))
        F = e_compress(A)
        assert len(F) == len(A)
        assert standard_affine_basis(n).issubset(F)
        if n <= 5:
            assert is_basis_preserving_fixpoint(F)


def test_structure_examples():
    rep = structure(standard_affine_basis(4))
    assert (rep.h, rep.m, rep.sizes) == (1, 3, (1, 1, 1))
    rep = structure(Z2Set.full(3))
    assert (rep.h, rep.m, rep.sizes) == (3, 0, ())
    A = Z2Set.from_members(3, [0, 1, 2, 3, 4, 5])  # ball product in standard form
    rep = structure(A)
    assert (rep.h, rep.m, rep.sizes) == (2, 1, (2,))


def test_structure_rejects_non_fixpoints():
    with pytest.raises(StructureError):
        structure(Z2Set.from_members(3, [1, 2, 4]))  # 0 missing
    with pytest.raises(StructureError):
        structure(Z2Set.from_members(3, [0, 1, 2, 7]))  # stray member


def test_structure_parts_partition_the_set():
    rng = random.Random(59)
    for _ in range(80):
        n = rng.randint(2, 6)
        A = standard_affine_basis(n) | Z2Set(n, rng.getrandbits(1 << n))
        F = e_compress(A)
        rep = structure(F)
        total = rep.subgroup.bits
        for part in rep.parts:
            assert part.bits & total == 0
            total |= part.bits
        assert total == F.bits
        assert rep.sizes == tuple(sorted(rep.sizes, reverse=True))


def test_pair_compress():
    A = standard_affine_basis(4)
    B = Z2Set.from_members(4, [0])
    assert pair_compress(A, B) == (A, B)
    assert pair_compress(A, A) == (A, A)
    rng = random.Random(61)
    for _ in range(60):
        n = rng.randint(2, 5)
        A = standard_affine_basis(n) | Z2Set(n, rng.getrandbits(1 << n))
        B = Z2Set(n, rng.getrandbits(1 << n) | 1)
        A2, B2 = pair_compress(A, B)
        assert (len(A2), len(B2)) == (len(A), len(B))
        assert len(sum_naive(A2, B2)) <= len(sum_naive(A, B))
        assert standard_affine_basis(n).issubset(A2)
    with pytest.raises(DomainError):
        pair_compress(standard_affine_basis(3), Z2Set(3, 0))


def test_is_subgroup():
    assert is_subgroup(Z2Set.from_members(3, [0, 3, 5, 6]))
    assert not is_subgroup(Z2Set.from_members(3, [0, 3, 5]))
    assert not is_subgroup(Z2Set.from_members(3, [3, 5, 6]))


def test_heavy_witness_examples():
    w = heavy_witness(Z2Set.from_members(2, [0, 3]))
    assert w == 3
    n = 4
    assert heavy_witness(Z2Set.full(n)) == (1 << n) - 1
    H = Z2Set.from_members(3, [0, 0b101, 0b110, 0b011])
    assert bin(heavy_witness(H)).count("1") >= 2


def test_heavy_witness_all_subgroups_of_z2_4():
    # enumerate every subgroup of Z_2^4 and check the weight guarantee
    from itertools import combinations

    subgroups = {Z2Set.from_members(4, [0])}
    for r in range(1, 5):
        for gens in combinations(range(1, 16), r):
            span = {0}
            for g in gens:
                span |= {x ^ g for x in span}
            if len(span) == 1 << r:
                subgroups.add(Z2Set.from_members(4, span))
    assert len(subgroups) == 67  # Gaussian binomials: 1+15+35+15+1
    for H in subgroups:
        dim = len(H).bit_length() - 1
        assert bin(heavy_witness(H)).count("1") >= dim
    with pytest.raises(DomainError):
        heavy_witness(Z2Set.from_members(3, [0, 1, 2]))
