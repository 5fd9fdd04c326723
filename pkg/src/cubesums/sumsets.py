"""Minkowski sums over Z_2^n (XOR sumsets), by direct enumeration and by the
+-1 character transform, plus doubling and spanning constants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gf2core import DomainError, Z2Set, affine_span, xor_translate_bits
from .limits import TRANSFORM_CAP

# Below this dimension the per-member bigint translation beats numpy.
_PACKED_MIN_DIM = 13

_WORD_MASKS = [
    np.uint64(0x5555555555555555),
    np.uint64(0x3333333333333333),
    np.uint64(0x0F0F0F0F0F0F0F0F),
    np.uint64(0x00FF00FF00FF00FF),
    np.uint64(0x0000FFFF0000FFFF),
    np.uint64(0x00000000FFFFFFFF),
]


def sum_naive(A: Z2Set, B: Z2Set) -> Z2Set:
    """A+B by enumerating one set and translating the other's bitmap."""
    if A.dim != B.dim:
        raise DomainError(f"dimension mismatch: {A.dim} != {B.dim}")
    if not A or not B:
        return Z2Set(A.dim, 0)
    small, big = (A, B) if len(A) <= len(B) else (B, A)
    n = A.dim
    if n >= _PACKED_MIN_DIM:
        return Z2Set(n, _sum_packed(small, big))
    if len(small) * len(big) <= 1 << 12:
        cells = {a ^ b for a in small.members() for b in big.members()}
        return Z2Set.from_members(n, cells)
    out = 0
    for a in small.members():
        out |= xor_translate_bits(big.bits, a, n)
    return Z2Set(n, out)


def _sum_packed(small: Z2Set, big: Z2Set) -> int:
    """Union of translates with the bitmap packed into 64-bit words."""
    n = small.dim
    nwords = 1 << (n - 6)
    words = np.frombuffer(
        big.bits.to_bytes(nwords * 8, "little"), dtype=np.uint64
    )
    members = np.fromiter(small.members(), dtype=np.int64, count=len(small))
    acc = np.zeros(nwords, dtype=np.uint64)
    idx = np.arange(nwords)
    for lo in range(64):
        group = members[(members & 63) == lo] >> 6
        if group.size == 0:
            continue
        base = words
        for p in range(6):
            if (lo >> p) & 1:
                m = _WORD_MASKS[p]
                s = np.uint64(1 << p)
                base = ((base >> s) & m) | ((base & m) << s)
        for hi in group:
            np.bitwise_or(acc, base[idx ^ hi], out=acc)
    return int.from_bytes(acc.tobytes(), "little")


def _fwht(v: np.ndarray) -> np.ndarray:
    """In-place iterative Walsh-Hadamard transform (unnormalized)."""
    n = v.size
    h = 1
    while h < n:
        v = v.reshape(-1, 2, h)
        a = v[:, 0, :].copy()
        v[:, 0, :] = a + v[:, 1, :]
        v[:, 1, :] = a - v[:, 1, :]
        v = v.reshape(n)
        h *= 2
    return v


def _indicator(A: Z2Set) -> np.ndarray:
    nbytes = max(1, (1 << A.dim) // 8)
    packed = np.frombuffer(A.bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(packed, bitorder="little")[: 1 << A.dim].astype(np.int64)


def xor_representation_counts(
    A: Z2Set, B: Z2Set, cap: int = TRANSFORM_CAP
) -> np.ndarray:
    """Exact count of pairs (a, b) with a+b = x, for every cell x."""
    if A.dim != B.dim:
        raise DomainError(f"dimension mismatch: {A.dim} != {B.dim}")
    if A.dim > cap:
        raise DomainError(f"dimension {A.dim} exceeds transform cap {cap}")
    fa = _fwht(_indicator(A))
    fb = _fwht(_indicator(B))
    counts = _fwht(fa * fb)
    assert not (counts & ((1 << A.dim) - 1)).any()
    return counts >> A.dim


def sum_transform(A: Z2Set, B: Z2Set, cap: int = TRANSFORM_CAP) -> Z2Set:
    """A+B as the support of the XOR representation counts."""
    counts = xor_representation_counts(A, B, cap=cap)
    packed = np.packbits(counts > 0, bitorder="little")
    return Z2Set(A.dim, int.from_bytes(packed.tobytes(), "little"))


def sum_auto(A: Z2Set, B: Z2Set) -> Z2Set:
    """Transform when the pair-enumeration work dominates a cube sweep."""
    n = A.dim
    if n <= TRANSFORM_CAP and len(A) * len(B) > 8 * n * (1 << n):
        return sum_transform(A, B)
    return sum_naive(A, B)


@dataclass(frozen=True)
class SumStats:
    doubling: Fraction
    spanning: Fraction


def constants(A: Z2Set) -> SumStats:
    """Exact doubling |A+A|/|A| and spanning |<A>|/|A| constants."""
    if not A:
        raise DomainError("constants of an empty set are undefined")
    return SumStats(
        doubling=Fraction(len(sum_naive(A, A)), len(A)),
        spanning=Fraction(affine_span(A).size, len(A)),
    )
