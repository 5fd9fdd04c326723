"""Shadows, classification by the top coordinate, downset families with the
antichain condition, Harper's vertex-isoperimetric bound, and its averaged
variant."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .gf2core import DomainError, Z2Set, coord_zero_mask

Rational = Fraction | int


def upper_shadow(F: Z2Set) -> Z2Set:
    """All members with one extra coordinate switched on."""
    out = 0
    for p in range(F.dim):
        m = coord_zero_mask(F.dim, p)
        out |= (F.bits & m) << (1 << p)
    return Z2Set(F.dim, out)


def lower_shadow(F: Z2Set) -> Z2Set:
    """All members with one coordinate switched off."""
    out = 0
    for p in range(F.dim):
        out |= (F.bits >> (1 << p)) & coord_zero_mask(F.dim, p)
    return Z2Set(F.dim, out)


def add_unit_ball(A: Z2Set) -> Z2Set:
    """A + D_1^n: the set together with both its shadows."""
    return A | upper_shadow(A) | lower_shadow(A)


def classify_by_top(F: Z2Set) -> tuple[Z2Set, Z2Set]:
    """Split on the top coordinate: (members avoiding it, members containing
    it with the coordinate dropped), both in dimension n-1."""
    if F.dim < 1:
        raise DomainError("classification needs dimension >= 1")
    half = 1 << (F.dim - 1)
    lo_mask = (1 << half) - 1
    return Z2Set(F.dim - 1, F.bits & lo_mask), Z2Set(F.dim - 1, F.bits >> half)


def is_downset(F: Z2Set) -> bool:
    return lower_shadow(F).bits & ~F.bits == 0


def is_shift_minimal(F: Z2Set) -> bool:
    from .compression import shift

    return all(
        shift(F, i, j) == F
        for i in range(1, F.dim + 1)
        for j in range(i + 1, F.dim + 1)
    )


@dataclass(frozen=True)
class DownsetFamily:
    """Downsets C_1..C_l over Z_2^dim; the antichain condition requires every
    C_j to contain the lower shadow of every C_i."""

    dim: int
    downsets: tuple[Z2Set, ...]

    def __post_init__(self):
        if not self.downsets:
            raise DomainError("family needs at least one downset")
        if any(c.dim != self.dim for c in self.downsets):
            raise DomainError("all downsets must share the family dimension")


@dataclass(frozen=True)
class FamilyReport:
    downset_ok: bool
    antichain_ok: bool
    avg_size: Fraction
    avg_shadow: Fraction


def family_check(fam: DownsetFamily) -> FamilyReport:
    """Exact averages and per-invariant flags; failures are reported, not
    raised."""
    downset_ok = all(is_downset(c) for c in fam.downsets)
    shadows = [lower_shadow(c) for c in fam.downsets]
    antichain_ok = all(
        s.bits & ~c.bits == 0 for s in shadows for c in fam.downsets
    )
    l = len(fam.downsets)
    return FamilyReport(
        downset_ok=downset_ok,
        antichain_ok=antichain_ok,
        avg_size=Fraction(sum(len(c) for c in fam.downsets), l),
        avg_shadow=Fraction(sum(len(upper_shadow(c)) for c in fam.downsets), l),
    )


def harper_bound_exact(n: int, size: int) -> Fraction:
    """Lower bound on |A + D_1^n| given |A| = size, as an exact rational.

    Solves size = sum_{i>k} C(n,i) + p*C(n,k) with the smallest k >= 0
    admitting 0 <= p <= 1 (k = 0 only for sizes above 2^n - 1); the bound is
    sum_{i>=k} C(n,i) + p*C(n,k-1), with C(n,-1) = 0.
    """
    if not 0 < size <= 1 << n:
        raise DomainError(f"size {size} outside (0, 2^{n}]")
    cum = 0  # sum_{i<=k} C(n,i)
    for k in range(n + 1):
        cum += comb(n, k)
        tail = (1 << n) - cum  # sum_{i>k} C(n,i)
        if size >= tail:
            p = Fraction(size - tail, comb(n, k))
            below = comb(n, k - 1) if k >= 1 else 0
            return Fraction(tail + comb(n, k)) + p * below
    raise AssertionError("unreachable: size is within (0, 2^n]")


def harper_bound(n: int, size: int) -> int:
    """Ceiling of the exact bound (the neighborhood size is an integer)."""
    b = harper_bound_exact(n, size)
    return -(-b.numerator // b.denominator)


def avg_shadow_bound(m: int, avg: Rational) -> Fraction:
    """Lower bound on the average upper-shadow size of an antichain-condition
    family with average size avg.

    Solves avg = sum_{i<k} C(m,i) + p*C(m,k) with integer k >= 0 and
    0 <= p < 1 (p = 1 at the full-cube endpoint); the bound is
    sum_{1<=i<=k} C(m,i) + p*C(m,k+1).
    """
    avg = Fraction(avg)
    if not 0 <= avg <= 1 << m:
        raise DomainError(f"average {avg} outside [0, 2^{m}]")
    head = 0  # sum_{i<k} C(m,i)
    for k in range(m + 1):
        if avg < head + comb(m, k) or (k == m and avg <= head + comb(m, k)):
            p = (avg - head) / comb(m, k)
            bound_head = head + comb(m, k) - 1  # sum_{1<=i<=k} C(m,i)
            return bound_head + p * (comb(m, k + 1) if k < m else 0)
        head += comb(m, k)
    raise AssertionError("unreachable: avg is within [0, 2^m]")


# --- random generation for verification sweeps ------------------------------


def random_downset(n: int, rng: random.Random, growth_steps: int | None = None) -> Z2Set:
    """Grow a downset by repeatedly adding a random cell whose lower shadow
    is already present."""
    bits = 0
    steps = growth_steps if growth_steps is not None else rng.randrange(0, 2 << n)
    for _ in range(steps):
        c = rng.randrange(1 << n)
        low = Z2Set(n, 1 << c)
        if lower_shadow(low).bits & ~bits == 0:
            bits |= 1 << c
    return Z2Set(n, bits)


def random_antichain_family(
    n: int, l: int, rng: random.Random
) -> DownsetFamily:
    """A base downset D plus per-member random boundary cells all of whose
    facets lie in D; such families always satisfy the antichain condition,
    which is verified rather than assumed."""
    base = random_downset(n, rng)
    boundary = [
        c
        for c in upper_shadow(base).members()
        if c not in base and lower_shadow(Z2Set(n, 1 << c)).bits & ~base.bits == 0
    ]
    downsets = []
    for _ in range(l):
        extra = [c for c in boundary if rng.random() < 0.5]
        downsets.append(Z2Set.from_members(n, list(base.members()) + extra))
    fam = DownsetFamily(n, tuple(downsets))
    report = family_check(fam)
    assert report.downset_ok and report.antichain_ok
    return fam
