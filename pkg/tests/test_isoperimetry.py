import random
from fractions import Fraction

import pytest

from cubesums import (
    DomainError,
    DownsetFamily,
    Z2Set,
    avg_shadow_bound,
    classify_by_top,
    family_check,
    harper_bound,
    harper_bound_exact,
    is_downset,
    lower_shadow,
    standard_affine_basis,
    upper_shadow,
)
from cubesums.compression import shift
from cubesums.isoperimetry import (
    add_unit_ball,
    is_shift_minimal,
    random_antichain_family,
    random_downset,
)


def test_shadows():
    assert sorted(upper_shadow(Z2Set.from_members(3, [0])).members()) == [1, 2, 4]
    assert sorted(lower_shadow(Z2Set.from_members(2, [3])).members()) == [1, 2]
    ring = Z2Set.from_members(3, [1, 2, 4])  # D_1^3 minus the center
    assert sorted(upper_shadow(ring).members()) == [3, 5, 6]
    assert 0 not in upper_shadow(Z2Set.full(3))


def test_classify_by_top():
    lo, hi = classify_by_top(Z2Set.full(3))
    assert lo == Z2Set.full(2) and hi == Z2Set.full(2)
    lo, hi = classify_by_top(Z2Set.from_members(2, [0, 2]))
    assert sorted(lo.members()) == [0] and sorted(hi.members()) == [0]
    lo, hi = classify_by_top(standard_affine_basis(3))
    assert sorted(lo.members()) == [0, 1, 2] and sorted(hi.members()) == [0]
    with pytest.raises(DomainError):
        classify_by_top(Z2Set(0, 1))


def test_classify_by_top_counts():
    rng = random.Random(73)
    for _ in range(60):
        n = rng.randint(1, 7)
        F = Z2Set(n, rng.getrandbits(1 << n))
        lo, hi = classify_by_top(F)
        assert len(lo) + len(hi) == len(F)
        assert lo.dim == hi.dim == n - 1


def test_shift_shadow_inclusions():
    rng = random.Random(79)
    for _ in range(80):
        n = rng.randint(2, 8)
        F = Z2Set(n, rng.getrandbits(1 << n))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                assert upper_shadow(shift(F, i, j)).issubset(
                    shift(upper_shadow(F), i, j)
                )
                assert lower_shadow(shift(F, i, j)).issubset(
                    shift(lower_shadow(F), i, j)
                )


def test_frankl_lemma_shift_minimal_downsets():
    # delta(C+) is contained in (delta C)+ = C- for shift-minimal downsets,
    # strictly when C is non-empty; exhaustive over Z_2^4
    checked = 0
    for bits in range(1 << 16):
        C = Z2Set(4, bits)
        if not is_downset(C) or not is_shift_minimal(C):
            continue
        checked += 1
        minus, plus = classify_by_top(C)
        dplus = upper_shadow(plus)
        _, dC_plus = classify_by_top(upper_shadow(C))
        assert dplus.issubset(dC_plus)
        assert dC_plus == minus
        if C:
            assert dplus != minus  # 0 is in C- but never in an upper shadow
    assert checked > 10


def test_family_check_examples():
    fam = DownsetFamily(3, (Z2Set.from_members(3, [0]),))
    rep = family_check(fam)
    assert rep.downset_ok and rep.antichain_ok
    assert rep.avg_size == 1 and rep.avg_shadow == 3

    ball = Z2Set.from_members(3, [0, 1, 2, 4])
    fam = DownsetFamily(3, (ball, Z2Set.from_members(3, [0])))
    rep = family_check(fam)
    assert rep.downset_ok and rep.antichain_ok
    assert rep.avg_size == Fraction(5, 2)
    assert rep.avg_shadow == Fraction(9, 2)
    # equality with the averaged bound
    assert rep.avg_shadow == avg_shadow_bound(3, rep.avg_size)


def test_family_check_detects_violations():
    not_down = Z2Set.from_members(2, [1, 3])
    rep = family_check(DownsetFamily(2, (not_down,)))
    assert not rep.downset_ok
    # both are downsets, but the shadow of the square is not inside {0}
    pair = (Z2Set.full(2), Z2Set.from_members(2, [0]))
    rep = family_check(DownsetFamily(2, pair))
    assert rep.downset_ok and not rep.antichain_ok


def test_nested_chain_antichain_ok():
    c1 = Z2Set.from_members(3, [0, 1, 2, 4, 3])
    c2 = Z2Set.from_members(3, [0, 1, 2, 4])
    assert lower_shadow(c1).issubset(c2)
    rep = family_check(DownsetFamily(3, (c1, c2)))
    assert rep.downset_ok and rep.antichain_ok


def test_harper_bound_examples():
    assert harper_bound(4, 5) == 11
    assert harper_bound(3, 7) == 8
    for n in range(1, 8):
        assert harper_bound(n, 1 << n) == 1 << n
    with pytest.raises(DomainError):
        harper_bound(3, 0)
    with pytest.raises(DomainError):
        harper_bound(3, 9)


def test_harper_boundary_conventions_agree():
    # at sizes hitting a binomial boundary, (k, p=1) and (k-1, p=0) give the
    # same value; the exact form must be continuous across them
    from math import comb

    for n in range(1, 8):
        for k in range(1, n + 1):
            size = sum(comb(n, i) for i in range(k, n + 1))
            lo = harper_bound_exact(n, size)
            if size + 1 <= 1 << n:
                hi = harper_bound_exact(n, size + 1)
                assert hi >= lo


def test_harper_exhaustive_n3():
    for bits in range(1, 1 << 8):
        A = Z2Set(3, bits)
        assert len(add_unit_ball(A)) >= harper_bound(3, len(A))


def test_avg_shadow_bound_values():
    assert avg_shadow_bound(3, 1) == 3
    assert avg_shadow_bound(3, Fraction(5, 2)) == Fraction(9, 2)
    assert avg_shadow_bound(4, 0) == 0
    assert avg_shadow_bound(4, Fraction(1, 2)) == 2  # k=0 branch: m * E[C]
    assert avg_shadow_bound(2, 4) == 3  # full cube: shadow is everything but 0
    with pytest.raises(DomainError):
        avg_shadow_bound(3, 9)


def test_random_families_satisfy_bound():
    rng = random.Random(83)
    for _ in range(150):
        m = rng.randint(1, 6)
        fam = random_antichain_family(m, rng.randint(1, 4), rng)
        rep = family_check(fam)
        assert rep.avg_shadow >= avg_shadow_bound(m, rep.avg_size)


def test_random_downset_is_downset():
    rng = random.Random(89)
    for _ in range(50):
        n = rng.randint(1, 6)
        assert is_downset(random_downset(n, rng))
