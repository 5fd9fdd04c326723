"""Compression machinery: coset-wise initial-segment replacement, push-down
and shift operators, fixpoints preserving the standard affine basis, and the
structural decomposition of compressed sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .gf2core import (
    DomainError,
    Z2Set,
    standard_affine_basis,
    unit_cell,
)
from .limits import FIXPOINT_CAP


class StructureError(ValueError):
    """The set fails a structural invariant of basis-preserving fixpoints."""


def _index_mask(n: int, I: Iterable[int]) -> int:
    mask = 0
    for i in I:
        if not 1 <= i <= n:
            raise DomainError(f"index {i} outside [1, {n}]")
        mask |= 1 << (i - 1)
    return mask


def _subsets_ascending(mask: int):
    """All submasks of mask in increasing integer order."""
    s = 0
    while True:
        yield s
        if s == mask:
            return
        s = (s - mask) & mask


@lru_cache(maxsize=1024)
def _coset_tables(n: int, mask: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Per coset of the subgroup spanned by the coordinates in mask:
    (bitmap of the coset's cells, cumulative bitmaps of its initial segments).

    Within a coset, cells in increasing integer order are the coset's
    lexicographic order, so prefix c of the sorted cell list is its
    initial segment of size c.
    """
    comp = ((1 << n) - 1) & ~mask
    deps = sorted(_subsets_ascending(mask))
    tables = []
    for rep in _subsets_ascending(comp):
        cells = [rep | d for d in deps]
        coset_mask = 0
        prefixes = [0]
        for c in cells:
            coset_mask |= 1 << c
            prefixes.append(coset_mask)
        tables.append((coset_mask, tuple(prefixes)))
    return tuple(tables)


def compress(A: Z2Set, I: Iterable[int]) -> Z2Set:
    """Replace A's intersection with every coset of the subgroup spanned by
    the coordinates in I by a same-size initial segment of that coset."""
    mask = _index_mask(A.dim, I)
    return Z2Set(A.dim, _compress_bits(A.bits, A.dim, mask))


def _compress_bits(bits: int, n: int, mask: int) -> int:
    out = 0
    for coset_mask, prefixes in _coset_tables(n, mask):
        out |= prefixes[(bits & coset_mask).bit_count()]
    return out


def is_compressed(A: Z2Set, I: Iterable[int]) -> bool:
    return compress(A, I) == A


def push_down(F: Z2Set, i: int) -> Z2Set:
    """Drop coordinate i from each member whose lowering is vacant."""
    bit = unit_cell(i)
    if not 1 <= i <= F.dim:
        raise DomainError(f"index {i} outside [1, {F.dim}]")
    out = F.bits
    for x in F.members():
        if x & bit and not (out >> (x ^ bit)) & 1:
            out ^= (1 << x) | (1 << (x ^ bit))
    return Z2Set(F.dim, out)


def shift(F: Z2Set, i: int, j: int) -> Z2Set:
    """Replace coordinate j by i in each member where the swap is vacant."""
    if i == j:
        raise DomainError("shift needs two distinct coordinates")
    bi, bj = unit_cell(i), unit_cell(j)
    if not (1 <= i <= F.dim and 1 <= j <= F.dim):
        raise DomainError(f"indices ({i}, {j}) outside [1, {F.dim}]")
    out = F.bits
    for x in F.members():
        if x & bj and not x & bi:
            y = (x ^ bj) | bi
            if not (out >> y) & 1:
                out ^= (1 << x) | (1 << y)
    return Z2Set(F.dim, out)


def _masks_by_cardinality(n: int) -> list[int]:
    return sorted(range(1 << n), key=lambda m: (m.bit_count(), m))


def basis_preserving_fixpoint(A: Z2Set, cap: int = FIXPOINT_CAP) -> Z2Set:
    """Repeatedly apply compressions whose result still contains the standard
    affine basis, until none applies.  Terminates because the lexicographic
    height strictly decreases at each applied step."""
    n = A.dim
    if n > cap:
        raise DomainError(f"dimension {n} exceeds fixpoint cap {cap}")
    ebits = standard_affine_basis(n).bits
    if ebits & ~A.bits:
        raise DomainError("set must contain the standard affine basis")
    bits = A.bits
    masks = _masks_by_cardinality(n)
    changed = True
    while changed:
        changed = False
        for mask in masks:
            new = _compress_bits(bits, n, mask)
            if new != bits and ebits & ~new == 0:
                bits = new
                changed = True
    return Z2Set(n, bits)


# Spec name: this is the <<E>>-compression fixpoint.
e_compress = basis_preserving_fixpoint


def is_basis_preserving_fixpoint(A: Z2Set) -> bool:
    n = A.dim
    ebits = standard_affine_basis(n).bits
    if ebits & ~A.bits:
        return False
    for mask in range(1 << n):
        new = _compress_bits(A.bits, n, mask)
        if new != A.bits and ebits & ~new == 0:
            return False
    return True


def pair_compress(
    A: Z2Set, B: Z2Set, cap: int = FIXPOINT_CAP
) -> tuple[Z2Set, Z2Set]:
    """Apply each compression that keeps the affine basis inside A to A and B
    simultaneously, until the pair is a joint fixpoint."""
    if A.dim != B.dim:
        raise DomainError(f"dimension mismatch: {A.dim} != {B.dim}")
    if not B:
        raise DomainError("second set must be non-empty")
    n = A.dim
    if n > cap:
        raise DomainError(f"dimension {n} exceeds fixpoint cap {cap}")
    ebits = standard_affine_basis(n).bits
    if ebits & ~A.bits:
        raise DomainError("first set must contain the standard affine basis")
    abits, bbits = A.bits, B.bits
    masks = _masks_by_cardinality(n)
    changed = True
    while changed:
        changed = False
        for mask in masks:
            na = _compress_bits(abits, n, mask)
            if ebits & ~na:
                continue
            nb = _compress_bits(bbits, n, mask)
            if na != abits or nb != bbits:
                abits, bbits = na, nb
                changed = True
    return Z2Set(n, abits), Z2Set(n, bbits)


@dataclass(frozen=True)
class StructureReport:
    """Decomposition of a basis-preserving fixpoint: the maximal standard
    subgroup H of dimension h, and the traces A_i on the cosets e_{h+i}+H."""

    h: int
    m: int
    subgroup: Z2Set
    parts: tuple[Z2Set, ...]
    sizes: tuple[int, ...]


def structure(A: Z2Set) -> StructureReport:
    """Extract (h, H, m, A_1..A_m, a_1..a_m) and verify every invariant;
    a violation signals that the input was not a basis-preserving fixpoint."""
    n = A.dim
    h = 0
    while h < n and A.bits & ((1 << (1 << (h + 1))) - 1) == (1 << (1 << (h + 1))) - 1:
        h += 1
    if not A.bits & 1:
        raise StructureError("0 is missing; the set contains no subgroup")
    m = n - h
    hsize = 1 << h
    subgroup = Z2Set(n, (1 << hsize) - 1)
    parts = []
    covered = subgroup.bits
    for i in range(1, m + 1):
        lo = 1 << (h + i - 1)
        coset_bits = ((1 << hsize) - 1) << lo
        parts.append(Z2Set(n, A.bits & coset_bits))
        covered |= coset_bits
    sizes = tuple(len(p) for p in parts)
    if A.bits & ~covered:
        raise StructureError("members outside H and the basis cosets of H")
    for i, a in enumerate(sizes, start=1):
        if not 0 < a < hsize:
            raise StructureError(f"|A_{i}| = {a} outside (0, |H|)")
    for i in range(m):
        for j in range(i + 1, m):
            if sizes[i] + sizes[j] > hsize:
                raise StructureError(
                    f"|A_{i + 1}| + |A_{j + 1}| exceeds |H| = {hsize}"
                )
    if any(sizes[i] < sizes[i + 1] for i in range(m - 1)):
        raise StructureError("part sizes are not non-increasing")
    if m > 1 and 2 * len(A) > (2 + m) * hsize:
        raise StructureError("total size exceeds (1 + m/2)|H|")
    return StructureReport(h=h, m=m, subgroup=subgroup, parts=tuple(parts), sizes=sizes)


def is_subgroup(H: Z2Set) -> bool:
    if 0 not in H:
        return False
    rank = 0
    echelon: list[int] = []
    for x in H.members():
        v = x
        for r in echelon:
            if (v >> (r.bit_length() - 1)) & 1:
                v ^= r
        if v:
            echelon.append(v)
            echelon.sort(reverse=True)
            rank += 1
    return len(H) == 1 << rank


def heavy_witness(H: Z2Set) -> int:
    """A member of the subgroup H with Hamming weight >= dim H, found by
    projecting out one absent basis direction at a time."""
    if not is_subgroup(H):
        raise DomainError("input is not a subgroup")

    def rec(members: frozenset[int], active: tuple[int, ...]) -> int:
        for p in active:
            if (1 << p) not in members:
                bit = 1 << p
                proj = frozenset(x & ~bit for x in members)
                w = rec(proj, tuple(q for q in active if q != p))
                return w | bit if (w | bit) in members else w
        return sum(1 << p for p in active)

    return rec(frozenset(H.members()), tuple(range(H.dim)))
