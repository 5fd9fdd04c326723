"""Subsets of Z_2^n as indicator bitmaps, lexicographic machinery and GF(2)
linear algebra.

Cell encoding: the vector x = sum x_i e_i corresponds to the integer
x = sum x_i 2**(i-1), so integer order of cell indices coincides with the
lexicographic order 0 < e1 < e2 < e1+e2 < e3 < ...  A set is stored as a
single Python int whose bit c is set iff cell c is a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .limits import MAX_DIM


class DomainError(ValueError):
    """Input violates an operation's precondition."""


@dataclass(frozen=True)
class Z2Set:
    """A finite subset of Z_2^dim, stored as an indicator bitmap."""

    dim: int
    bits: int = 0

    def __post_init__(self):
        if not 0 <= self.dim <= MAX_DIM:
            raise DomainError(f"dimension {self.dim} outside [0, {MAX_DIM}]")
        if self.bits < 0 or self.bits >> (1 << self.dim):
            raise DomainError("member cell index outside [0, 2^n)")

    @classmethod
    def from_members(cls, dim: int, members: Iterable[int]) -> "Z2Set":
        bits = 0
        for c in members:
            bits |= 1 << c
        return cls(dim, bits)

    @classmethod
    def full(cls, dim: int) -> "Z2Set":
        return cls(dim, (1 << (1 << dim)) - 1)

    def members(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, cell: int) -> bool:
        return 0 <= cell < (1 << self.dim) and (self.bits >> cell) & 1 == 1

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: "Z2Set") -> "Z2Set":
        self._check_dim(other)
        return Z2Set(self.dim, self.bits | other.bits)

    def __and__(self, other: "Z2Set") -> "Z2Set":
        self._check_dim(other)
        return Z2Set(self.dim, self.bits & other.bits)

    def __sub__(self, other: "Z2Set") -> "Z2Set":
        self._check_dim(other)
        return Z2Set(self.dim, self.bits & ~other.bits)

    def issubset(self, other: "Z2Set") -> bool:
        self._check_dim(other)
        return self.bits & ~other.bits == 0

    def _check_dim(self, other: "Z2Set") -> None:
        if self.dim != other.dim:
            raise DomainError(f"dimension mismatch: {self.dim} != {other.dim}")

    def __repr__(self) -> str:
        return f"Z2Set(dim={self.dim}, members={sorted(self.members())})"


def unit_cell(i: int) -> int:
    """Cell index of the basis vector e_i (1-based coordinate)."""
    if i < 1:
        raise DomainError("basis coordinates are 1-based")
    return 1 << (i - 1)


def standard_affine_basis(n: int) -> Z2Set:
    """{0, e_1, ..., e_n}."""
    return Z2Set.from_members(n, [0] + [unit_cell(i) for i in range(1, n + 1)])


def weight(cell: int) -> int:
    """Hamming weight of a cell's vector."""
    return cell.bit_count()


def height(A: Z2Set) -> int:
    """Sum over members of their 1-based rank in the lexicographic order.

    Strictly decreases whenever a member is replaced by a smaller one; used
    only as a decreasing potential.
    """
    return len(A) + sum(A.members())


@lru_cache(maxsize=4096)
def coord_zero_mask(n: int, p: int) -> int:
    """Bitmap over 2**n cells selecting the cells whose coordinate p is 0
    (p is a 0-based bit position)."""
    if not 0 <= p < n:
        raise DomainError(f"coordinate position {p} outside [0, {n})")
    block = 1 << p
    mask = (1 << block) - 1
    width = block * 2
    while width < (1 << n):
        mask |= mask << width
        width *= 2
    return mask


def xor_translate_bits(bits: int, c: int, n: int) -> int:
    """Bitmap of {x + c | x in the bitmap}, addition in Z_2^n."""
    p = 0
    while c >> p:
        if (c >> p) & 1:
            m = coord_zero_mask(n, p)
            s = 1 << p
            bits = ((bits >> s) & m) | ((bits & m) << s)
        p += 1
    return bits


def xor_translate(A: Z2Set, c: int) -> Z2Set:
    return Z2Set(A.dim, xor_translate_bits(A.bits, c, A.dim))


@dataclass(frozen=True)
class AffineFlat:
    """A coset of a subgroup of Z_2^dim: basepoint + span(basis).

    The basis is kept in reduced row echelon form (pivots ascending), so two
    equal flats compare equal.
    """

    dim: int
    basepoint: int
    basis: tuple[int, ...]

    @property
    def size(self) -> int:
        return 1 << len(self.basis)

    def members(self) -> list[int]:
        pts = [self.basepoint]
        for b in self.basis:
            pts += [p ^ b for p in pts]
        return sorted(pts)

    def __contains__(self, cell: int) -> bool:
        return _reduce(cell ^ self.basepoint, self.basis) == 0

    def point_set(self) -> Z2Set:
        return Z2Set.from_members(self.dim, self.members())


def _reduce(v: int, basis: tuple[int, ...]) -> int:
    """Reduce v against an echelon basis (distinct leading bits)."""
    for b in sorted(basis, reverse=True):
        if (v >> (b.bit_length() - 1)) & 1:
            v ^= b
    return v


def _rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon basis of the GF(2) span of the given vectors."""
    rows: list[int] = []
    for v in vectors:
        for r in rows:
            if v ^ r < v:
                v ^= r
        if v:
            rows.append(v)
            rows.sort(reverse=True)
    # back-substitute to make it fully reduced
    for i, r in enumerate(rows):
        for j in range(i):
            if rows[j] ^ r < rows[j]:
                rows[j] ^= r
    return tuple(sorted(rows))


def affine_span(A: Z2Set) -> AffineFlat:
    """Smallest coset containing A; basepoint is the lex smallest member."""
    if not A:
        raise DomainError("affine span of an empty set is undefined")
    base = min(A.members())
    basis = _rref(x ^ base for x in A.members())
    return AffineFlat(A.dim, base, basis)


def is_affinely_generating(A: Z2Set) -> bool:
    return bool(A) and len(affine_span(A).basis) == A.dim


def initial_segment(a: int, T) -> Z2Set:
    """The a lexicographically smallest elements of T.

    T is either an ambient dimension (the full cube) or an AffineFlat.
    """
    if isinstance(T, int):
        if not 0 <= a <= (1 << T):
            raise DomainError(f"segment size {a} outside [0, 2^{T}]")
        return Z2Set(T, (1 << a) - 1)
    if not 0 <= a <= T.size:
        raise DomainError(f"segment size {a} exceeds coset size {T.size}")
    return Z2Set.from_members(T.dim, T.members()[:a])


@dataclass(frozen=True)
class AffineMap:
    """Invertible affine map x -> M(x + shift), with M given by rows over
    GF(2): bit j of rows[i] is the matrix entry M[i][j]."""

    dim: int
    shift: int
    rows: tuple[int, ...]

    def apply(self, cell: int) -> int:
        v = cell ^ self.shift
        out = 0
        for i, row in enumerate(self.rows):
            out |= ((row & v).bit_count() & 1) << i
        return out

    def apply_set(self, A: Z2Set) -> Z2Set:
        return Z2Set.from_members(A.dim, (self.apply(x) for x in A.members()))


def _invert_gf2(cols: list[int], n: int) -> tuple[int, ...]:
    """Rows of the inverse of the matrix whose columns are the given vectors."""
    # rows of [B | I] packed as (augmented << n) | row
    rows = []
    for i in range(n):
        row = 0
        for j, c in enumerate(cols):
            row |= ((c >> i) & 1) << j
        rows.append(row | (1 << (n + i)))
    for col in range(n):
        pivot = next(r for r in range(col, n) if (rows[r] >> col) & 1)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(n):
            if r != col and (rows[r] >> col) & 1:
                rows[r] ^= rows[col]
    return tuple(r >> n for r in rows)


def normalize_to_basis(A: Z2Set) -> tuple[Z2Set, AffineMap]:
    """Apply an invertible affine map T so that T(A) contains the standard
    affine basis {0, e_1, ..., e_n}.

    Preserves |A| and |A+A| (affine maps commute with sumsets up to a
    translation).  Requires A to affinely generate the full cube.
    """
    if not A:
        raise DomainError("cannot normalize an empty set")
    n = A.dim
    base = min(A.members())
    cols: list[int] = []
    echelon: list[int] = []
    for x in sorted(A.members()):
        v = x ^ base
        for r in echelon:
            v = min(v, v ^ r)
        if v:
            cols.append(x ^ base)
            echelon.append(v)
            echelon.sort(reverse=True)
        if len(cols) == n:
            break
    if len(cols) < n:
        raise DomainError("set does not affinely generate the full cube")
    tmap = AffineMap(n, base, _invert_gf2(cols, n))
    return tmap.apply_set(A), tmap


def hamming_ball_product(k: int, t: int, n: int) -> Z2Set:
    """Cells whose weight on the first t coordinates is at most k; the
    remaining n-t coordinates are free."""
    if not 0 <= k <= t <= n:
        raise DomainError(f"need 0 <= k <= t <= n, got k={k}, t={t}, n={n}")
    head = (1 << t) - 1
    return Z2Set.from_members(
        n, (c for c in range(1 << n) if (c & head).bit_count() <= k)
    )


# --- z2set v1 file format ---------------------------------------------------

_MAGIC = "# z2set v1"


def write_z2set(A: Z2Set, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{_MAGIC}\nn={A.dim}\n")
        for c in A.members():
            fh.write(f"{c}\n")


def read_z2set(path) -> Z2Set:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or lines[0] != _MAGIC:
        raise DomainError(f"{path}: missing '{_MAGIC}' header")
    if len(lines) < 2 or not lines[1].startswith("n="):
        raise DomainError(f"{path}: missing 'n=<dim>' line")
    dim = int(lines[1][2:])
    bits = 0
    for ln in lines[2:]:
        c = int(ln)
        if not 0 <= c < (1 << dim):
            raise DomainError(f"{path}: cell {c} outside [0, 2^{dim})")
        if (bits >> c) & 1:
            raise DomainError(f"{path}: duplicate cell {c}")
        bits |= 1 << c
    return Z2Set(dim, bits)
