"""Brute-force and pruned exhaustive searches that independently verify the
library's bounds at desk scale, plus machine-readable verification suites.

All [minimum] searches return deterministic witnesses: ties are broken by the
lexicographically smallest set encoding.
"""

from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement
from pathlib import Path
from typing import Iterator, Optional

import numpy as np

from .bounds import Ktilde, ab_lower_bound, construct, f_curve
from .compression import (
    StructureError,
    compress,
    e_compress,
    is_basis_preserving_fixpoint,
    structure,
)
from .gf2core import (
    DomainError,
    Z2Set,
    height,
    initial_segment,
    is_affinely_generating,
    standard_affine_basis,
    write_z2set,
    xor_translate_bits,
)
from .hopf_stiefel import hs
from .isoperimetry import (
    add_unit_ball,
    avg_shadow_bound,
    family_check,
    harper_bound,
    random_antichain_family,
)
from .limits import COMPRESSED_SEARCH_CAP, GEN_SEARCH_CAP
from .partitions import Partition, classify, pair_cost, partitions_of, quasi_fair
from .sumsets import sum_naive

_PC16: Optional[np.ndarray] = None


def _popcount16() -> np.ndarray:
    global _PC16
    if _PC16 is None:
        bits = np.unpackbits(np.arange(1 << 16, dtype="<u2").view(np.uint8))
        _PC16 = bits.reshape(-1, 16).sum(axis=1).astype(np.uint8)
    return _PC16


# --- set enumeration ----------------------------------------------------------


def e_superset_bits(n: int, size: int) -> Iterator[int]:
    """Bitmaps of all size-`size` supersets of the standard affine basis."""
    ebits = standard_affine_basis(n).bits
    extra = size - (n + 1)
    if extra < 0 or size > 1 << n:
        return
    free = [c for c in range(1 << n) if not (ebits >> c) & 1]
    for combo in combinations(free, extra):
        bits = ebits
        for c in combo:
            bits |= 1 << c
        yield bits


def _structure_form_bits(n: int, size: int) -> Iterator[int]:
    """Candidate fixpoint bitmaps: a full standard subgroup plus initial
    segments of its basis cosets with non-increasing positive sizes."""
    for h in range(1, n + 1):
        m = n - h
        hsize = 1 << h
        rest = size - hsize
        if m == 0:
            if rest == 0:
                yield (1 << hsize) - 1
            continue
        if not m <= rest <= m * (hsize - 1):
            continue
        for sizes in partitions_of(rest, m, cap=hsize - 1):
            bits = (1 << hsize) - 1
            for i, a in enumerate(sizes):
                bits |= ((1 << a) - 1) << (1 << (h + i))
            yield bits


def compressed_generating_sets(n: int, size: int) -> list[int]:
    """Bitmaps of every basis-preserving compression fixpoint of the given
    size (each affinely generates, since it contains the affine basis)."""
    if n <= GEN_SEARCH_CAP:
        candidates = e_superset_bits(n, size)
    else:
        candidates = _structure_form_bits(n, size)
    return sorted(
        bits
        for bits in candidates
        if is_basis_preserving_fixpoint(Z2Set(n, bits))
    )


# --- minima -------------------------------------------------------------------


def _subsets_with_zero(n: int, size: int) -> Iterator[int]:
    for combo in combinations(range(1, 1 << n), size - 1):
        bits = 1
        for c in combo:
            bits |= 1 << c
        yield bits


def _min_sumset_free(n: int, size_a: int, size_b: int) -> tuple[int, tuple[Z2Set, Z2Set]]:
    """Minimum |A+B| over all sets of the given sizes; translation lets us
    fix 0 in both sets."""
    best = None
    b_list = list(_subsets_with_zero(n, size_b))
    for abits in _subsets_with_zero(n, size_a):
        A = Z2Set(n, abits)
        for bbits in b_list:
            v = len(sum_naive(A, Z2Set(n, bbits)))
            key = (v, abits, bbits)
            if best is None or key < best:
                best = key
    assert best is not None
    return best[0], (Z2Set(n, best[1]), Z2Set(n, best[2]))


def _sumset_size_table(abits: int, n: int) -> np.ndarray:
    """sizes[mask] = |A + B| for every B bitmap mask over the 2**n cells."""
    size = 1 << n
    g = np.zeros(1 << size, dtype=np.uint32)
    for j in range(size):
        g = g.reshape(-1, 2, 1 << j)
        g[:, 1, :] = g[:, 0, :] | np.uint32(xor_translate_bits(abits, j, n))
        g = g.reshape(-1)
    pc = _popcount16()
    return pc[g & 0xFFFF].astype(np.uint32) + pc[g >> 16]


def generating_sum_minima(
    n: int, size_a: int, compressed: bool = True
) -> dict[int, tuple[int, int, int]]:
    """For every size_b, the minimum |A+B| over affinely generating A of size
    size_a (pruned to compression fixpoints when `compressed`) and arbitrary
    non-empty B of size size_b; values are (minimum, A bitmap, B bitmap)."""
    if n > GEN_SEARCH_CAP:
        raise DomainError(
            f"generating sumset search sweeps all 2^(2^n) second sets; n <= {GEN_SEARCH_CAP}"
        )
    if compressed:
        a_list = compressed_generating_sets(n, size_a)
    else:
        a_list = list(e_superset_bits(n, size_a))
    if not a_list:
        raise DomainError(f"no generating set of size {size_a} in dimension {n}")
    size = 1 << n
    masks = np.arange(1 << size, dtype=np.uint32)
    key = _popcount16()[masks & 0xFFFF] + _popcount16()[masks >> 16]
    order = np.argsort(key, kind="stable").astype(np.uint32)
    starts = np.searchsorted(key[order], np.arange(size + 2))
    best: dict[int, tuple[int, int, int]] = {}
    for abits in a_list:
        sizes = _sumset_size_table(abits, n)
        for size_b in range(1, size + 1):
            group = order[starts[size_b] : starts[size_b + 1]]
            vals = sizes[group]
            v = int(vals.min())
            cur = best.get(size_b)
            if cur is None or v < cur[0] or (v == cur[0] and abits < cur[1]):
                mask = int(group[np.argmax(vals == v)])
                best[size_b] = (v, abits, mask)
    return best


def min_sumset(
    n: int,
    size_a: int,
    size_b: int,
    require_gen_a: bool,
    compressed: bool = True,
    force: bool = False,
) -> tuple[int, tuple[Z2Set, Z2Set]]:
    """Exact minimum of |A+B| at the given sizes, optionally restricted to
    affinely generating A."""
    if not 1 <= size_a <= 1 << n or not 1 <= size_b <= 1 << n:
        raise DomainError("sizes must lie in [1, 2^n]")
    if not require_gen_a:
        if n > 3 and not force:
            raise DomainError("unrestricted search above n = 3 needs force=True")
        return _min_sumset_free(n, size_a, size_b)
    v, abits, bmask = generating_sum_minima(n, size_a, compressed=compressed)[size_b]
    return v, (Z2Set(n, abits), Z2Set(n, bmask))


def min_doubling(
    n: int, size: int, compressed: bool = False, force: bool = False
) -> tuple[int, Z2Set]:
    """Exact minimum of |A+A| over affinely generating A of the given size.

    Normalization lets the search fix the standard affine basis inside A;
    `compressed` further prunes to compression fixpoints (valid because
    compression never raises |A+A| and preserves the basis)."""
    if size < n + 1:
        raise DomainError(f"affine generation of Z_2^{n} needs {n + 1} points")
    if size > 1 << n:
        raise DomainError(f"size {size} exceeds 2^{n}")
    cap = COMPRESSED_SEARCH_CAP if compressed else GEN_SEARCH_CAP
    if n > cap and not force:
        raise DomainError(f"dimension {n} exceeds search cap {cap} (use force)")
    gen = (
        compressed_generating_sets(n, size)
        if compressed
        else e_superset_bits(n, size)
    )
    best = None
    for bits in gen:
        A = Z2Set(n, bits)
        key = (len(sum_naive(A, A)), bits)
        if best is None or key < best:
            best = key
    assert best is not None
    return best[0], Z2Set(n, best[1])


# --- verification suites ------------------------------------------------------


def hs_oracle_table(limit: int) -> list[list[int]]:
    """tab[a][b] = |IS(a)+IS(b)| for 1 <= a, b <= limit, by incremental
    unions of translates (XOR of cells below 2^k stays below 2^k)."""
    n = max((limit - 1).bit_length(), 1)
    tab = [[0] * (limit + 1) for _ in range(limit + 1)]
    for a in range(1, limit + 1):
        isa = (1 << a) - 1
        acc = 0
        for b in range(1, a + 1):
            acc |= xor_translate_bits(isa, b - 1, n)
            tab[a][b] = tab[b][a] = acc.bit_count()
    return tab


class _Recorder:
    """Collects pass/fail cases; failing sets are emitted as z2set files."""

    def __init__(self, suite: str, out_dir) -> None:
        self.suite = suite
        self.out_dir = Path(out_dir) if out_dir is not None else Path(".")
        self.cases = 0
        self.failures: list[dict] = []

    def case(self, ok: bool, expected, got, sets: tuple[Z2Set, ...] = ()) -> None:
        self.cases += 1
        if ok:
            return
        files = []
        for i, s in enumerate(sets):
            path = self.out_dir / f"{self.suite}-fail{len(self.failures)}-{i}.z2set"
            write_z2set(s, path)
            files.append(str(path))
        self.failures.append(
            {"input_files": files, "expected": str(expected), "got": str(got)}
        )


def _random_set(n: int, rng: random.Random, nonempty: bool = False) -> Z2Set:
    bits = rng.getrandbits(1 << n)
    if nonempty and not bits:
        bits = 1 << rng.randrange(1 << n)
    return Z2Set(n, bits)


def _suite_comp(rec: _Recorder, *, n, trials, rng, **_):
    n = n or 8
    trials = trials or 300
    for _i in range(trials):
        nn = rng.randint(1, n)
        A = _random_set(nn, rng)
        I = [i for i in range(1, nn + 1) if rng.random() < 0.5]
        C = compress(A, I)
        rec.case(len(C) == len(A), len(A), len(C), (A,))
        rec.case(compress(C, I) == C, C, compress(C, I), (A,))
        rec.case(height(C) <= height(A), f"<= {height(A)}", height(C), (A,))
        B = A | _random_set(nn, rng)
        rec.case(C.issubset(compress(B, I)), "C_I(A) within C_I(B)", "violation", (A, B))
        seg = initial_segment(rng.randint(0, 1 << nn), nn)
        rec.case(compress(seg, I) == seg, seg, compress(seg, I), (seg,))
    return {"n": n, "trials": trials}


def _suite_sumcomp(rec: _Recorder, *, n, exhaustive, trials, rng, **_):
    n = n or 3
    if exhaustive or trials is None:
        if n > 3:
            raise DomainError("exhaustive sumcomp verification needs n <= 3")
        size = 1 << n
        universe = 1 << size
        # sum_table[a] maps every B bitmap to the A+B bitmap
        sum_table = []
        for abits in range(universe):
            trans = [xor_translate_bits(abits, c, n) for c in range(size)]
            g = [0] * universe
            for bm in range(1, universe):
                low = bm & -bm
                g[bm] = g[bm ^ low] | trans[low.bit_length() - 1]
            sum_table.append(g)
        for imask in range(1 << n):
            I = [i + 1 for i in range(n) if (imask >> i) & 1]
            ctab = [compress(Z2Set(n, b), I).bits for b in range(universe)]
            for abits in range(universe):
                row = sum_table[abits]
                crow = sum_table[ctab[abits]]
                for bbits in range(universe):
                    lhs = crow[ctab[bbits]]
                    rhs = ctab[row[bbits]]
                    rec.case(
                        lhs & ~rhs == 0,
                        f"C_{I}(A)+C_{I}(B) within C_{I}(A+B)",
                        "violation",
                        (Z2Set(n, abits), Z2Set(n, bbits)),
                    )
        return {"n": n, "mode": "exhaustive"}
    for _i in range(trials):
        nn = rng.randint(1, n)
        A, B = _random_set(nn, rng), _random_set(nn, rng)
        I = [i for i in range(1, nn + 1) if rng.random() < 0.5]
        lhs = sum_naive(compress(A, I), compress(B, I))
        rhs = compress(sum_naive(A, B), I)
        rec.case(lhs.issubset(rhs), "inclusion", "violation", (A, B))
    return {"n": n, "trials": trials, "mode": "random"}


def _suite_structure(rec: _Recorder, *, n, trials, rng, **_):
    n = n or 6
    trials = trials or 500
    for _i in range(trials):
        nn = rng.randint(2, n)
        A = standard_affine_basis(nn) | _random_set(nn, rng)
        F = e_compress(A)
        try:
            rep = structure(F)
            rec.case(len(F) == len(A), len(A), len(F), (A,))
            rec.case(
                sum(rep.sizes) + (1 << rep.h) == len(F), len(F), rep.sizes, (A,)
            )
        except StructureError as exc:
            rec.case(False, "structure clauses hold", str(exc), (A, F))
    return {"n": n, "trials": trials}


def _suite_hs(rec: _Recorder, *, n, **_):
    limit = n or 256
    tab = hs_oracle_table(limit)
    for a in range(1, limit + 1):
        for b in range(1, a + 1):
            rec.case(hs(a, b) == tab[a][b], tab[a][b], hs(a, b))
    return {"limit": limit}


def _suite_partitions(rec: _Recorder, *, n, m, **_):
    amax = n or 64
    mmax = m or 6
    for a in range(1, amax + 1):
        for parts in range(1, min(mmax, a) + 1):
            qf = quasi_fair(a, parts)
            qf_cost = pair_cost(qf)
            best = None
            n_quasi_fair = 0
            for cand in partitions_of(a, parts):
                p = Partition(cand)
                flags = classify(p)
                if flags.quasi_fair:
                    n_quasi_fair += 1
                if flags.compressed:
                    c = pair_cost(p)
                    if best is None or c < best:
                        best = c
            rec.case(best == qf_cost, qf_cost, best)
            rec.case(n_quasi_fair == 1, 1, n_quasi_fair)
            if a < amax:
                # monotonicity in the total: componentwise on all parts but
                # the last (the remainder may shrink when the dyadic regime
                # shifts, e.g. (2,2) -> (4,1)), and on every prefix sum
                nxt = quasi_fair(a + 1, parts)
                head_ok = all(
                    x <= y for x, y in zip(qf.parts[:-1], nxt.parts[:-1])
                )
                prefix_ok = all(
                    sum(qf.parts[:i]) <= sum(nxt.parts[:i])
                    for i in range(1, parts + 1)
                )
                rec.case(
                    head_ok and prefix_ok,
                    f"{qf.parts} below {nxt.parts}",
                    "violation",
                )
    return {"a_max": amax, "m_max": mmax}


def _suite_iso(rec: _Recorder, *, m, trials, rng, **_):
    mmax = m or 6
    trials = trials or 200
    for _i in range(trials):
        dim = rng.randint(1, mmax)
        fam = random_antichain_family(dim, rng.randint(1, 4), rng)
        rep = family_check(fam)
        bound = avg_shadow_bound(dim, rep.avg_size)
        rec.case(
            rep.avg_shadow >= bound,
            f">= {bound}",
            rep.avg_shadow,
            fam.downsets,
        )
    return {"m": mmax, "trials": trials}


def _suite_harper(rec: _Recorder, *, n, **_):
    n = n or 4
    if n > 4:
        raise DomainError("exhaustive Harper verification needs n <= 4")
    bound = [0] + [harper_bound(n, s) for s in range(1, (1 << n) + 1)]
    for bits in range(1, 1 << (1 << n)):
        A = Z2Set(n, bits)
        got = len(add_unit_ball(A))
        rec.case(got >= bound[len(A)], f">= {bound[len(A)]}", got, (A,))
    return {"n": n}


def _suite_fk(rec: _Recorder, *, n, **_):
    from fractions import Fraction

    rows = f_curve(1, 4, Fraction(1, 1000))
    for (k1, f1), (k2, f2) in zip(rows, rows[1:]):
        rec.case(f1 <= f2, "monotone", (f1, f2))
        rec.case(f1 / k1 <= f2 / k2, "superlinear", (f1 / k1, f2 / k2))
    # piecewise linear: the second difference vanishes except where a grid
    # step crosses one of the finitely many breakpoints (the curve jumps up
    # at segment boundaries, so it is not convex)
    breaks = sum(
        (f3 - f2) != (f2 - f1)
        for (_, f1), (_, f2), (_, f3) in zip(rows, rows[1:], rows[2:])
    )
    rec.case(breaks <= 20, "<= 20 breakpoints on [1,4]", breaks)
    return {"grid": "[1,4] step 1/1000", "breakpoints": breaks}


def _suite_ab(rec: _Recorder, *, n, **_):
    n = n or 4
    total = 1 << n
    equalities = []
    for size_a in range(n + 1, 3 * total // 4 + 1):
        minima = generating_sum_minima(n, size_a, compressed=True)
        for size_b in range(1, total + 1):
            need = ab_lower_bound(n, size_a, size_b).bound_count
            got = minima[size_b][0]
            rec.case(
                got >= need,
                f">= {need}",
                got,
                (Z2Set(n, minima[size_b][1]), Z2Set(n, minima[size_b][2])),
            )
            if got == need:
                equalities.append((size_a, size_b, got))
    return {"n": n, "equalities": len(equalities)}


def _suite_repeated(rec: _Recorder, *, n, m, trials, rng, **_):
    from .bounds import repeated_threshold

    n = n or 4
    m = m or 3
    trials = trials or 1000
    total = 1 << n
    threshold = repeated_threshold(m) * total
    min_size = int(threshold) + 1
    full = Z2Set.full(n)

    def msum(sets):
        acc = sets[0]
        for s in sets[1:]:
            acc = sum_naive(acc, s)
        return acc

    pool = []
    while len(pool) < min(500, trials):
        size = rng.randint(min_size, total)
        A = Z2Set.from_members(n, rng.sample(range(total), size))
        if is_affinely_generating(A):
            pool.append(A)
    for _i in range(trials):
        sets = [pool[rng.randrange(len(pool))] for _ in range(m)]
        rec.case(msum(sets) == full, "sum covers the cube", "gap", tuple(sets))
    # every m-multiset of generating compression fixpoints above the threshold
    fixpoints = [
        Z2Set(n, bits)
        for size in range(min_size, total + 1)
        for bits in compressed_generating_sets(n, size)
    ]
    for sets in combinations_with_replacement(fixpoints, m):
        rec.case(msum(list(sets)) == full, "sum covers the cube", "gap", sets)
    # sharpness: the ball of relative size exactly (m+2)/2^(m+1) fails
    if n >= m + 1:
        ball = construct("ball", k=1, t=m + 1, n=n)
        rec.case(
            msum([ball] * m) != full,
            "threshold-size construction leaves a gap",
            "covered",
            (ball,),
        )
    return {"n": n, "m": m, "trials": trials, "fixpoints": len(fixpoints)}


_SUITES = {
    "comp": _suite_comp,
    "sumcomp": _suite_sumcomp,
    "structure": _suite_structure,
    "hs": _suite_hs,
    "partitions": _suite_partitions,
    "iso": _suite_iso,
    "harper": _suite_harper,
    "fk": _suite_fk,
    "ab": _suite_ab,
    "repeated": _suite_repeated,
}

SUITE_NAMES = tuple(_SUITES)


def verify_suite(
    suite: str,
    n: Optional[int] = None,
    m: Optional[int] = None,
    exhaustive: bool = False,
    trials: Optional[int] = None,
    seed: int = 0,
    out_dir=None,
) -> dict:
    """Run one verification suite; returns a JSON-ready report."""
    handler = _SUITES.get(suite)
    if handler is None:
        raise DomainError(f"unknown suite {suite!r}")
    rec = _Recorder(suite, out_dir)
    rng = random.Random(seed)
    params = handler(
        rec, n=n, m=m, exhaustive=exhaustive, trials=trials, rng=rng
    )
    params["seed"] = seed
    return {
        "suite": suite,
        "params": params,
        "cases": rec.cases,
        "failures": rec.failures,
    }
