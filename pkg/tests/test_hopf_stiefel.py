import pytest

from cubesums import DomainError, hs, hs_oracle
from cubesums.exhaustive import hs_oracle_table


def test_spot_values():
    assert hs(1, 9) == 9
    assert hs(3, 3) == 4
    assert hs(5, 3) == 7
    assert hs(3, 2) == 4
    assert hs(4, 3) == 4


def test_oracle_spot_values():
    assert hs_oracle(3, 2) == 4
    for k in range(6):
        assert hs_oracle(1 << k, 1 << k) == 1 << k
    assert hs_oracle(4, 3) == 4


def test_symmetry_and_lower_bound():
    for a in range(1, 40):
        for b in range(1, 40):
            v = hs(a, b)
            assert v == hs(b, a)
            assert v >= max(a, b)


def test_power_of_two_absorption():
    for k in range(7):
        for b in range(1, (1 << k) + 1):
            assert hs(1 << k, b) == 1 << k


def test_recursion_matches_oracle():
    tab = hs_oracle_table(64)
    for a in range(1, 65):
        for b in range(1, 65):
            assert hs(a, b) == tab[a][b]


def test_sub_distributive():
    for a in range(1, 65, 7):
        for b1 in range(1, 65, 5):
            for b2 in range(1, 65, 5):
                assert hs(a, b1 + b2) <= hs(a, b1) + hs(a, b2)


def test_domain():
    with pytest.raises(DomainError):
        hs(0, 3)
    with pytest.raises(DomainError):
        hs_oracle(1 << 17, 1, cap=16)
