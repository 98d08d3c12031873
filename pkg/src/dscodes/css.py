"""CSS-type data/syndrome codes built from binary cyclic machinery.

A dual-containing binary code with parity-check matrix H' induces a
stabilizer generator matrix with two blocks, X-type rows (H', 0) and Z-type
rows (0, H'), one measured syndrome bit per row.  How well those noisy
measurements locate errors is governed by a classical object: the code with
parity check [H' | I_s], whose minimum distance counts data-error weight
plus the syndrome flips needed to hide it.  For cyclic codes H' can carry
more rows than its rank (consecutive cyclic shifts of a fixed row
polynomial), trading measurement count for distance.
"""

from __future__ import annotations

import functools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .ds_code import ExhaustiveLimitError
from .f2poly import (
    f2_rank,
    is_prime,
    pdeg,
    pdivmod,
    pmod,
    pmul,
    qr_polys,
    reciprocal,
    rotl,
)
from .gf4 import F4Vector, parity

# message-space caps: 2^n sweep for [H'|I] distances, 2^dim for codeword sweeps
TILDE_LIMIT_N = 26
DISTANCE_MESSAGE_LIMIT = 20

# Circulant row used for the p = 23 quadratic-residue construction: the
# weight-8 dual codeword (x^6 + 1) * g(x).  Consecutive-shift prefixes of the
# plain dual generator (x + 1) * g(x) stall at distance 6 even with s = 20
# rows, while this orbit climbs to the full design distance 7; it was found
# by exhaustive search over the weight-8 dual orbits (scripts/qr_row_search.py).
QR23_ROW_POLY = 176675


@dataclass(frozen=True)
class BinaryCode:
    """Binary linear code presented by parity-check rows (bit j = column j).

    Cyclic codes also carry their generator polynomial and the circulant row
    polynomial the check rows are shifts of.  distance is exact when the
    message space was small enough to sweep, otherwise None.
    """

    n: int
    dim: int
    check_rows: tuple[int, ...]
    gen_poly: Optional[int] = None
    row_poly: Optional[int] = None
    distance: Optional[int] = None
    dual_containing: bool = False
    doubly_even_dual: bool = False


def _self_orthogonal(rows: Sequence[int]) -> bool:
    # includes i == j: odd-weight rows fail, as they should
    return all(parity(rows[i] & rows[j]) == 0 for i in range(len(rows)) for j in range(i, len(rows)))


def _doubly_even(rows: Sequence[int]) -> bool:
    # weight(u + v) = weight(u) + weight(v) - 2*overlap(u, v), and overlaps are
    # even for a self-orthogonal span, so checking the basis rows suffices
    return _self_orthogonal(rows) and all(r.bit_count() % 4 == 0 for r in rows)


def _min_weight_from_generators(gen_rows: Sequence[int]) -> int:
    best = None
    word = 0
    for t in range(1, 1 << len(gen_rows)):
        word ^= gen_rows[(t & -t).bit_length() - 1]  # Gray walk flips one row per step
        w = word.bit_count()
        if best is None or w < best:
            best = w
    return best


def cyclic_code(n: int, g: int) -> BinaryCode:
    """Cyclic code of length n with generator polynomial g (packed bits).

    g must divide x^n + 1; the parity-check rows are the first n - dim
    cyclic shifts of the reciprocal check polynomial.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if g <= 0 or pdeg(g) > n:
        raise ValueError("generator polynomial must be nonzero with degree at most n")
    h, rem = pdivmod((1 << n) | 1, g)
    if rem:
        raise ValueError("generator %#x does not divide x^%d + 1" % (g, n))
    dim = n - pdeg(g)
    if dim == n:
        row_poly = None
        check_rows: tuple[int, ...] = ()
    else:
        row_poly = reciprocal(h)
        check_rows = tuple(rotl(row_poly, i, n) for i in range(n - dim))
    if 1 <= dim <= DISTANCE_MESSAGE_LIMIT:
        distance = _min_weight_from_generators([g << i for i in range(dim)])
    elif dim == n:
        distance = 1
    else:
        distance = None
    return BinaryCode(
        n=n,
        dim=dim,
        check_rows=check_rows,
        gen_poly=g,
        row_poly=row_poly,
        distance=distance,
        dual_containing=_self_orthogonal(check_rows),
        doubly_even_dual=_doubly_even(check_rows),
    )


def parity_check_code(rows: Sequence[int], n: int) -> BinaryCode:
    """Code from an explicit parity-check matrix; distance left unknown."""
    rows = tuple(rows)
    if n < 1:
        raise ValueError("need n >= 1")
    for r in rows:
        if r < 0 or r >> n:
            raise ValueError("check row %#x has bits beyond column %d" % (r, n - 1))
    return BinaryCode(
        n=n,
        dim=n - f2_rank(rows),
        check_rows=rows,
        dual_containing=_self_orthogonal(rows),
        doubly_even_dual=_doubly_even(rows),
    )


def qr_code(p: int) -> BinaryCode:
    """Quadratic-residue code of prime length p = 7 mod 8 (dual-containing).

    The generator is the smaller of the two residue factors of x^p + 1.  For
    p <= 31 the doubly-even dual and the distance bound d(d - 1) + 1 >= p
    are re-verified exhaustively, not just inferred from the structure.
    """
    if not is_prime(p) or p % 8 != 7:
        raise ValueError("p must be a prime congruent to 7 mod 8, got %d" % p)
    gen = qr_polys(p)[0]
    code = cyclic_code(p, gen)
    assert code.dim == (p + 1) // 2
    assert code.dual_containing and code.doubly_even_dual
    if p == 23:
        row = pmul(gen, (1 << 6) | 1)  # degree 17, already reduced mod x^23 + 1
        assert row == QR23_ROW_POLY
        rows = tuple(rotl(row, i, p) for i in range(p - code.dim))
        assert f2_rank(rows) == p - code.dim
        code = replace(code, row_poly=row, check_rows=rows)
    if p <= 31:
        dual_dim = p - code.dim
        for mask in range(1, 1 << dual_dim):
            v = 0
            for i in range(dual_dim):
                if (mask >> i) & 1:
                    v ^= code.check_rows[i]
            assert v.bit_count() % 4 == 0
        assert code.distance is not None
        assert code.distance * (code.distance - 1) + 1 >= p
    return code


def tilde_distance(rows: Sequence[int], n: int, *, limit_n: int = TILDE_LIMIT_N, threads: int = 1) -> int:
    """Exact distance of the [n + s, n] code with parity check [rows | I_s].

    Equals the minimum over nonzero v in F2^n of weight(v) + weight(rows * v).
    The scan walks messages in increasing weight and stops once the weight
    alone reaches the best total seen, so the cost tracks the answer rather
    than 2^n.  With threads > 1 the message space is partitioned by lowest
    set bit and min-reduced; the result does not depend on the partition.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n > limit_n:
        raise ExhaustiveLimitError("2^%d messages exceed the exhaustive limit 2^%d" % (n, limit_n))
    cols = [0] * n
    for i, r in enumerate(rows):
        if r < 0 or r >> n:
            raise ValueError("check row %#x has bits beyond column %d" % (r, n - 1))
        for j in range(n):
            if (r >> j) & 1:
                cols[j] |= 1 << i
    bound = n + len(rows) + 1
    if threads <= 1:
        return _tilde_scan(cols, n, 0, 1, bound)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda t: _tilde_scan(cols, n, t, threads, bound), range(threads))
    return min(parts)


def _tilde_scan(cols: list[int], n: int, residue: int, step: int, bound: int) -> int:
    # minimum over messages whose lowest set index is residue mod step
    best = bound

    def rec(start: int, left: int, acc: int) -> None:
        nonlocal best
        if left == 0:
            t = w + acc.bit_count()
            if t < best:
                best = t
            return
        for j in range(start, n - left + 1):
            rec(j + 1, left - 1, acc ^ cols[j])

    for w in range(1, n + 1):
        if w >= best:
            break
        for first in range(residue, n - w + 1, step):
            if w == 1:
                t = 1 + cols[first].bit_count()
                if t < best:
                    best = t
            else:
                rec(first + 1, w - 1, cols[first])
    return best


@dataclass(frozen=True)
class CssDsCode:
    """Two-block stabilizer generator matrix from a dual-containing code.

    The s check rows serve double duty as X-type generators (rows, 0) and
    Z-type generators (0, rows); syndrome bit i < s belongs to X row i and
    bit s + i to Z row i.  Rows may exceed the dual dimension: extra shifts
    are redundant measurements, and m = 2s counts measurements, not rank.
    """

    base: BinaryCode
    s: int
    block_rows: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def k(self) -> int:
        return 2 * self.base.dim - self.base.n

    @property
    def m(self) -> int:
        return 2 * self.s

    @functools.cached_property
    def distance(self) -> int:
        d = tilde_distance(self.block_rows, self.n)
        if self.base.distance is not None:
            assert d <= self.base.distance
        return d

    def params(self) -> tuple[int, int, int, int]:
        """Quantum parameters (n, k, d, m) with d the joint data/syndrome distance."""
        return (self.n, self.k, self.distance, self.m)

    def ds_rows(self) -> list[F4Vector]:
        """The 2s generators as GF(4) vectors, X block before Z block."""
        xs = [F4Vector(self.n, a=r, b=0) for r in self.block_rows]
        zs = [F4Vector(self.n, a=0, b=r) for r in self.block_rows]
        return xs + zs

    def syndrome(self, v: F4Vector) -> int:
        if v.n != self.n:
            raise ValueError("error length %d does not match n=%d" % (v.n, self.n))
        out = 0
        for i, r in enumerate(self.block_rows):
            out |= parity(r & v.b) << i
            out |= parity(r & v.a) << (self.s + i)
        return out

    @functools.cached_property
    def _block_basis(self) -> tuple[int, ...]:
        basis: list[int] = []
        for r in self.block_rows:
            for b in basis:
                r = min(r, r ^ b)
            if r:
                basis.append(r)
                basis.sort(reverse=True)
        return tuple(basis)

    def is_harmless(self, v: F4Vector) -> bool:
        """True when v lies in the stabilizer span (both halves in the row space)."""
        for half in (v.a, v.b):
            for b in self._block_basis:
                half = min(half, half ^ b)
            if half:
                return False
        return True


def build_css_ds(code: BinaryCode, s: int, row_poly: Optional[int] = None) -> CssDsCode:
    """Assemble the two-block generator matrix with s rows per block.

    Cyclic codes take the first s cyclic shifts of the row polynomial
    (pass row_poly to override the stored one); other codes must use their
    check rows as-is, so s has to match.  Rows must span the dual and be
    pairwise orthogonal with even weights, or the blocks would not commute.
    """
    n = code.n
    needed = n - code.dim
    if s > n:
        raise ValueError("s = %d exceeds n = %d; cyclic shifts exhausted" % (s, n))
    if s < needed:
        raise ValueError("s = %d is below the %d rows of a full-rank check set" % (s, needed))
    poly = row_poly if row_poly is not None else code.row_poly
    if poly is not None:
        rows = tuple(rotl(poly, i, n) for i in range(s))
    else:
        if s != len(code.check_rows):
            raise ValueError("code is not cyclic; s must equal its %d stored check rows" % len(code.check_rows))
        rows = code.check_rows
    if not _self_orthogonal(rows):
        raise ValueError("check rows are not self-orthogonal; X and Z blocks would not commute")
    if f2_rank(rows) != needed:
        raise ValueError("the %d rows do not span the %d-dimensional dual" % (s, needed))
    return CssDsCode(base=code, s=s, block_rows=rows)


def qr_table(p: int, s_values: Sequence[int], *, threads: int = 1) -> list[tuple[int, int]]:
    """Rows (s, distance) for the quadratic-residue construction at length p."""
    code = qr_code(p)
    out = []
    for s in s_values:
        css = build_css_ds(code, s)
        out.append((s, tilde_distance(css.block_rows, css.n, threads=threads)))
    return out


def ldpc_distance_floor(rows: Sequence[int], n: int) -> int:
    """Distance guarantee read off column structure alone.

    Let gamma be the minimum column weight.  When every pairwise column
    overlap is at most 1, a w-column data pattern leaves at least
    w*gamma - w*(w - 1) checks unsatisfied, so every word of the code with
    parity check [rows | I] weighs at least

        min over w >= 1 of  w + max(0, w * (gamma - w + 1)),

    which is 3 at gamma = 2, 4 at gamma = 3, 5 at gamma = 4 and gamma + 1
    from there on.  A zero column or an overlap of 2 or more yields the
    trivial floor 1.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    cols = [0] * n
    for i, r in enumerate(rows):
        if r < 0 or r >> n:
            raise ValueError("check row %#x has bits beyond column %d" % (r, n - 1))
        for j in range(n):
            if (r >> j) & 1:
                cols[j] |= 1 << i
    gamma = min(c.bit_count() for c in cols)
    overlap = 0
    for i in range(n):
        for j in range(i + 1, n):
            overlap = max(overlap, (cols[i] & cols[j]).bit_count())
    if gamma == 0 or overlap > 1:
        return 1
    return min(w + max(0, w * (gamma - w + 1)) for w in range(1, gamma + 2))


def rows_from_strings(strings: Sequence[str]) -> tuple[tuple[int, ...], int]:
    """Parse matrix rows given as 0/1 strings, character j = column j."""
    if not strings:
        raise ValueError("need at least one row")
    n = len(strings[0])
    rows = []
    for s in strings:
        if len(s) != n:
            raise ValueError("ragged rows: expected width %d, got %d" % (n, len(s)))
        if n == 0 or any(c not in "01" for c in s):
            raise ValueError("rows are nonempty strings over 0 and 1")
        rows.append(sum(1 << j for j, c in enumerate(s) if c == "1"))
    return tuple(rows), n


def rows_to_strings(rows: Sequence[int], n: int) -> list[str]:
    return ["".join("1" if (r >> j) & 1 else "0" for j in range(n)) for r in rows]
