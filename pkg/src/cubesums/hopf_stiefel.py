"""The Hopf-Stiefel binary function: the minimum XOR-sumset size at given
cardinalities, computed by the dyadic recursion with the initial-segment
sumset as an independent cross-check oracle."""

from __future__ import annotations

import threading

from .gf2core import DomainError, initial_segment
from .sumsets import sum_naive

_memo: dict[tuple[int, int], int] = {}
_memo_lock = threading.Lock()


def hs(a: int, b: int) -> int:
    """Dyadic recursion: with a >= b, split a = 2^p + a' on the largest power
    of two below a; the value is 2^(p+1) if b also exceeds 2^p, else
    2^p + hs(a', b)."""
    if a < 1 or b < 1:
        raise DomainError("arguments must be positive")
    if a < b:
        a, b = b, a
    if a == 1:
        return 1
    key = (a, b)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    p = (a - 1).bit_length() - 1
    half = 1 << p
    value = half * 2 if b > half else half + hs(a - half, b)
    with _memo_lock:
        _memo[key] = value
    return value


def hs_oracle(a: int, b: int, cap: int = 16) -> int:
    """|IS(a) + IS(b)| computed with the sumset engine."""
    if a < 1 or b < 1:
        raise DomainError("arguments must be positive")
    if a > (1 << cap) or b > (1 << cap):
        raise DomainError(f"arguments exceed 2^{cap}")
    n = max(max(a - 1, b - 1).bit_length() + 1, 1)
    return len(sum_naive(initial_segment(a, n), initial_segment(b, n)))
