"""Exact closed forms for the headline quantities: the tight spanning-vs-
doubling envelope F(K), the minimal doubling constant at fixed spanning
constant, the two-set sumset lower bound, and the constructions that attain
them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .gf2core import (
    DomainError,
    Z2Set,
    affine_span,
    hamming_ball_product,
    unit_cell,
)
from .sumsets import sum_naive

Rational = Fraction | int


def _ceil(x: Fraction) -> int:
    return -(-x.numerator // x.denominator)


# --- F(K) and Ktilde ---------------------------------------------------------


def _fk_breakpoint(t: int) -> Fraction:
    """Left endpoint of the t-th segment of F's domain partition."""
    return Fraction(comb(t, 2) + t + 1, t + 1)


def F_of_K(K: Rational) -> Fraction:
    """Largest possible spanning constant at doubling constant at most K."""
    K = Fraction(K)
    if K < 1:
        raise DomainError("doubling constants are at least 1")
    t = 1
    while _fk_breakpoint(t + 1) <= K:
        t += 1
    if K < Fraction(t * t + t + 1, 2 * t):
        return Fraction(1 << t, comb(t, 2) + t + 1) * K
    return Fraction(2 << t, t * t + t + 1) * K


def _ktilde_threshold(t: int, s: int) -> Fraction:
    return Fraction(2 << t, 2 * t + 2 - s)


def ktilde_params(F_tilde: Fraction) -> tuple[int, int]:
    """The unique (t, s), 0 <= s < t, locating F_tilde between consecutive
    breakpoints of the minimal-doubling curve."""
    if F_tilde < 1:
        raise DomainError("spanning constants are at least 1")
    t, s = 1, 0
    while True:
        nxt = (t, s + 1) if s + 1 < t else (t + 1, 0)
        if _ktilde_threshold(*nxt) > F_tilde:
            return t, s
        t, s = nxt


def Ktilde(a: int, b: int) -> Fraction:
    """Minimal doubling constant over affinely generating sets of spanning
    constant exactly 2**a / b."""
    if a < 0 or b < 1:
        raise DomainError("need a >= 0 and b >= 1")
    F_tilde = Fraction(1 << a, b)
    if F_tilde < 1:
        raise DomainError(f"2^{a}/{b} < 1 is not a spanning constant")
    t, s = ktilde_params(F_tilde)
    return Fraction(comb(t, 2) + t + 1 - Fraction(comb(s, 2), 2)) * F_tilde / (1 << t)


# --- extremal constructions --------------------------------------------------


def construct_independent_points(t: int) -> Z2Set:
    """{0, e_1, ..., e_t} in Z_2^t."""
    if t < 1:
        raise DomainError("need t >= 1")
    return Z2Set.from_members(t, [0] + [unit_cell(i) for i in range(1, t + 1)])


def construct_augmented_points(t: int, s: int) -> Z2Set:
    """An affine basis of Z_2^(t+1) augmented with t-s pairwise sums through
    a distinguished direction; attains the minimal doubling constant at
    spanning constant 2^(t+1) / (2(t+1) - s)."""
    if not 0 <= s < t:
        raise DomainError(f"need 0 <= s < t, got t={t}, s={s}")
    n = t + 1
    e0 = unit_cell(1)
    members = [0, e0] + [unit_cell(i + 1) for i in range(1, t + 1)]
    members += [e0 ^ unit_cell(i + 1) for i in range(1, t - s + 1)]
    A = Z2Set.from_members(n, members)
    assert len(A) == 2 * (t + 1) - s
    assert len(sum_naive(A, A)) == 2 * (comb(t, 2) + t + 1) - comb(s, 2)
    assert affine_span(A).size == 1 << n
    return A


def construct(kind: str, **kw) -> Z2Set:
    """Dispatch: 'ipe' (t), 'ipe2' (t, s), 'ball' (k, t, n)."""
    if kind == "ipe":
        return construct_independent_points(kw["t"])
    if kind == "ipe2":
        return construct_augmented_points(kw["t"], kw["s"])
    if kind == "ball":
        return hamming_ball_product(kw["k"], kw["t"], kw["n"])
    raise DomainError(f"unknown construction {kind!r}")


# --- two-set lower bound -----------------------------------------------------


@dataclass(frozen=True)
class AbBoundResult:
    t: int
    k: int
    w: Fraction
    bound: Fraction  # fraction of |G|
    bound_count: int


def ab_bound_ratio(
    alpha: Fraction, beta: Fraction, t_override: int | None = None
) -> tuple[int, int, Fraction, Fraction]:
    """Lower bound on |A+B|/|G| from |A|/|G| = alpha and |B|/|G| = beta;
    returns (t, k, w, bound ratio)."""
    if not 0 < alpha <= Fraction(3, 4):
        raise DomainError("first ratio must lie in (0, 3/4]")
    if not 0 < beta <= 1:
        raise DomainError("second ratio must lie in (0, 1]")
    if t_override is None:
        t = 1
        while alpha <= Fraction(t + 2, 2 << t):
            t += 1
    else:
        t = t_override
        if t < 1 or alpha <= Fraction(t + 2, 2 << t):
            raise DomainError(
                f"override t={t} needs (t+2)/2^(t+1) < {alpha}"
            )
    scaled = beta * (1 << t)
    cum = 0
    for k in range(t):
        w = (scaled - cum - comb(t, k)) / comb(t - 1, k)
        if w <= 1:
            if w < -1:
                raise AssertionError("no (k, w) representation found")
            bound = Fraction(
                cum + comb(t, k) + comb(t, k + 1) + w * comb(t - 1, k + 1),
                1 << t,
            )
            return t, k, Fraction(w), bound
        cum += comb(t, k)
    raise AssertionError("no (k, w) representation found")


def ab_lower_bound(
    n: int, sizeA: int, sizeB: int, t_override: int | None = None
) -> AbBoundResult:
    """Exact lower bound on |A+B| for affinely generating A of size sizeA and
    non-empty B of size sizeB in Z_2^n."""
    if sizeB < 1:
        raise DomainError("second set must be non-empty")
    total = 1 << n
    if 4 * sizeA > 3 * total:
        raise DomainError(f"size {sizeA} exceeds (3/4)*2^{n}")
    t, k, w, bound = ab_bound_ratio(
        Fraction(sizeA, total), Fraction(sizeB, total), t_override
    )
    return AbBoundResult(t=t, k=k, w=w, bound=bound, bound_count=_ceil(bound * total))


def repeated_threshold(m: int) -> Fraction:
    """Relative size above which m affinely generating sets must sum to the
    whole group."""
    if m < 1:
        raise DomainError("need m >= 1")
    return Fraction(m + 2, 2 << m)


# --- curve emission ----------------------------------------------------------


def _grid(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    if step <= 0 or hi < lo:
        raise DomainError("malformed range")
    out = []
    x = lo
    while x <= hi:
        out.append(x)
        x += step
    return out


def f_curve(lo: Rational, hi: Rational, step: Rational) -> list[tuple[Fraction, Fraction]]:
    return [(K, F_of_K(K)) for K in _grid(Fraction(lo), Fraction(hi), Fraction(step))]


def ktilde_curve(lo: Rational, hi: Rational) -> list[tuple[Fraction, Fraction, int, int]]:
    """Breakpoint samples (F_tilde, Ktilde, t, s) with F_tilde in [lo, hi].

    The minimal-doubling curve's domain is restricted to rationals whose
    reduced numerator is a power of two, so a uniform grid would mostly fall
    outside it; the breakpoints carry the full piecewise-linear information.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if hi < lo or lo < 1:
        raise DomainError("malformed range")
    rows = []
    t, s = 1, 0
    while _ktilde_threshold(t, s) <= hi:
        ft = _ktilde_threshold(t, s)
        if ft >= lo:
            value = Fraction(comb(t, 2) + t + 1 - Fraction(comb(s, 2), 2)) * ft / (1 << t)
            rows.append((ft, value, t, s))
        t, s = (t, s + 1) if s + 1 < t else (t + 1, 0)
    return rows


def ab_surface(
    lo: Rational, hi: Rational, step: Rational
) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Rows (|A|/|G|, |B|/|G|, bound/|G|) over the grid intersected with the
    bound's domain."""
    grid = _grid(Fraction(lo), Fraction(hi), Fraction(step))
    rows = []
    for alpha in grid:
        if not 0 < alpha <= Fraction(3, 4):
            continue
        for beta in grid:
            if not 0 < beta <= 1:
                continue
            _, _, _, bound = ab_bound_ratio(alpha, beta)
            rows.append((alpha, beta, bound))
    return rows
