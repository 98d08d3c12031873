"""Exact Krawtchouk machinery and the split-enumerator MacWilliams transform.

Everything here is big-integer or Fraction arithmetic; no floats.  Tables are
cached per (n, q) since the bound evaluations hit the same rows repeatedly.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .enumerator import SplitEnumerator


@dataclass(frozen=True)
class KrawtchoukTable:
    q: int
    n: int
    values: tuple[tuple[int, ...], ...]  # values[i][x] = K_i(x; n, q)

    def __call__(self, i: int, x: int) -> int:
        return self.values[i][x]


@functools.lru_cache(maxsize=None)
def krawtchouk_table(n: int, q: int) -> KrawtchoukTable:
    """All K_i(x; n, q) for 0 <= i, x <= n by the three-term recurrence in i."""
    if q not in (2, 4):
        raise ValueError("q must be 2 or 4")
    if n < 0:
        raise ValueError("n must be non-negative")
    rows = [[1] * (n + 1)]
    if n >= 0:
        rows.append([(q - 1) * n - q * x for x in range(n + 1)] if n >= 1 else [])
    if n == 0:
        return KrawtchoukTable(q, n, (tuple(rows[0]),))
    for i in range(1, n):
        prev, cur = rows[i - 1], rows[i]
        nxt = []
        for x in range(n + 1):
            num = (i + (q - 1) * (n - i) - q * x) * cur[x] - (q - 1) * (n - i + 1) * prev[x]
            quot, rem = divmod(num, i + 1)
            assert rem == 0, "recurrence produced a non-integer"
            nxt.append(quot)
        rows.append(nxt)
    return KrawtchoukTable(q, n, tuple(tuple(r) for r in rows))


def krawtchouk(i: int, x: int, n: int, q: int) -> int:
    if not (0 <= i <= n and 0 <= x <= n):
        raise ValueError("indices out of range: i=%d, x=%d, n=%d" % (i, x, n))
    return krawtchouk_table(n, q).values[i][x]


@dataclass(frozen=True)
class PolyCoeffs2D:
    """Coefficients f_{i,j} of f(x,y) = sum f_{i,j} K_i(x;n,q1) K_j(y;m,q2)."""

    n: int
    m: int
    q1: int
    q2: int
    coeffs: tuple[tuple[Fraction, ...], ...]  # (n+1) x (m+1)

    def evaluate(self, x: int, y: int) -> Fraction:
        kx = krawtchouk_table(self.n, self.q1)
        ky = krawtchouk_table(self.m, self.q2)
        return sum(
            (
                c * kx.values[i][x] * ky.values[j][y]
                for i, row in enumerate(self.coeffs)
                for j, c in enumerate(row)
                if c
            ),
            Fraction(0),
        )


def expand(samples: Sequence[Sequence], n: int, m: int, q1: int, q2: int) -> PolyCoeffs2D:
    """Invert the two-variable Krawtchouk expansion from a full sample grid.

    f_{i,j} = q1^{-n} q2^{-m} sum_{x,y} f(x,y) K_x(i;n,q1) K_y(j;m,q2); the
    round trip back through evaluate() is exact by self-duality.
    """
    kx = krawtchouk_table(n, q1)
    ky = krawtchouk_table(m, q2)
    norm = Fraction(1, q1**n * q2**m)
    coeffs = []
    for i in range(n + 1):
        row = []
        for j in range(m + 1):
            acc = Fraction(0)
            for x in range(n + 1):
                kxi = kx.values[x][i]
                if kxi == 0:
                    continue
                for y in range(m + 1):
                    val = samples[x][y]
                    if val:
                        acc += Fraction(val) * kxi * ky.values[y][j]
            row.append(acc * norm)
        coeffs.append(tuple(row))
    return PolyCoeffs2D(n, m, q1, q2, tuple(coeffs))


def macwilliams(enum: SplitEnumerator) -> SplitEnumerator:
    """Transform a dual table to the primal one (divide by 4^n) or back (divide by 2^m).

    Outputs must come out as non-negative integers; anything else means the
    input table was not a genuine enumerator and raises.
    """
    n, m = enum.n, enum.m
    k4 = krawtchouk_table(n, 4)
    k2 = krawtchouk_table(m, 2)
    divisor = 4**n if enum.side == "dual" else 2**m
    out_side = "primal" if enum.side == "dual" else "dual"
    out = []
    for l in range(n + 1):
        row = []
        for r in range(m + 1):
            acc = 0
            for i in range(n + 1):
                kl = k4.values[l][i]
                if kl == 0:
                    continue
                for j in range(m + 1):
                    b = enum.table[i][j]
                    if b:
                        acc += b * kl * k2.values[r][j]
            quot, rem = divmod(acc, divisor)
            if rem != 0 or quot < 0:
                raise ValueError(
                    "transform produced a non-enumerator entry at (%d,%d): %s/%s"
                    % (l, r, acc, divisor)
                )
            row.append(quot)
        out.append(tuple(row))
    return SplitEnumerator(out_side, n, m, tuple(out))
