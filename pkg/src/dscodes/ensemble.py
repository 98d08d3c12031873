"""Statistics of random data-syndrome codes.

The ensemble is the set of ordered m-row generator matrices over F4 whose
rows pairwise trace-commute and are F2-independent, i.e. exactly the inputs
build_ds_code accepts.  Closed-form counts and average split enumerators are
validated against brute enumeration at tiny n; the asymptotic pieces are the
Stirling limits of those exact averages.

The average tables here deviate from their printed sources in three spots,
each forced by the brute oracle and the table-sum invariants: the primal
support is {(0,0)} plus i,j >= 1 only, the syndrome binomial is C(m,j), and
the dual constant is 2^(n+k).  See the enumerator docstrings.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Optional, Sequence, Union

from .ds_code import DSCode, build_ds_code
from .gf4 import F4Vector

__all__ = [
    "EnsembleStats",
    "ensemble_size",
    "average_enumerators",
    "iter_ensemble",
    "brute_force_ensemble",
    "expurgated_bound",
    "binary_entropy",
    "asymptotic_exponent",
    "omega_star",
    "sample_code",
    "stats_to_json_obj",
]

BRUTE_LIMIT_N = 3


@dataclass(frozen=True)
class EnsembleStats:
    """Exact ensemble summary: count and average split weight enumerators."""

    n: int
    k: int
    m: int
    size: int
    avg_primal: tuple[tuple[Fraction, ...], ...]  # (n+1) x (m+1)
    avg_dual: tuple[tuple[Fraction, ...], ...]

    def primal_total(self) -> Fraction:
        return sum(c for row in self.avg_primal for c in row)

    def dual_total(self) -> Fraction:
        return sum(c for row in self.avg_dual for c in row)


def ensemble_size(n: int, k: int) -> int:
    """Number of admissible ordered generator matrices for an [[n, k]] code.

    Product form Prod_{r<m} (2^(2(n-r)) - 1)(2^m - 2^r) / (2^(r+1) - 1);
    each matrix counts once, so row reorderings and F2 row mixes of the same
    code are distinct members.  Exactness of the division is checked.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    m = n - k
    total = Fraction(1)
    for r in range(m):
        total *= Fraction(
            ((1 << (2 * (n - r))) - 1) * ((1 << m) - (1 << r)),
            (1 << (r + 1)) - 1,
        )
    if total.denominator != 1:
        raise ArithmeticError(
            "ensemble size product is not an integer at (n, k) = (%d, %d)" % (n, k)
        )
    return total.numerator


def average_enumerators(n: int, k: int) -> EnsembleStats:
    """Exact average primal and dual split enumerators over the ensemble.

    Primal: 1 at (0,0) and C(n,i)3^i C(m,j) / (4^n - 1) for i, j >= 1; the
    rows i >= 1, j = 0 and i = 0, j >= 1 are zero because a code word's
    syndrome part determines whether its data part can vanish.  Dual: 1 at
    (0,0), zero on the rest of the i = 0 column, (2^(n+k) - 1) C(n,i) 3^i
    / (4^n - 1) on the j = 0 column, and 2^(n+k) C(n,i) 3^i C(m,j)
    / (4^n - 1) elsewhere.  Both tables are checked against their totals
    (2^m and 2^(2n)).
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    m = n - k
    denom = (1 << (2 * n)) - 1
    primal = [[Fraction(0)] * (m + 1) for _ in range(n + 1)]
    dual = [[Fraction(0)] * (m + 1) for _ in range(n + 1)]
    primal[0][0] = Fraction(1)
    dual[0][0] = Fraction(1)
    pow_dual = 1 << (n + k)
    for i in range(1, n + 1):
        data_count = comb(n, i) * 3**i
        dual[i][0] = Fraction((pow_dual - 1) * data_count, denom)
        for j in range(1, m + 1):
            cell = data_count * comb(m, j)
            primal[i][j] = Fraction(cell, denom)
            dual[i][j] = Fraction(pow_dual * cell, denom)
    stats = EnsembleStats(
        n=n,
        k=k,
        m=m,
        size=ensemble_size(n, k),
        avg_primal=tuple(tuple(row) for row in primal),
        avg_dual=tuple(tuple(row) for row in dual),
    )
    assert stats.primal_total() == 1 << m
    assert stats.dual_total() == 1 << (2 * n)
    return stats


# ---------------------------------------------------------------------------
# brute enumeration (the oracle at tiny n)


def _trace(a1: int, b1: int, a2: int, b2: int) -> int:
    return (((a1 & b2) ^ (b1 & a2)).bit_count()) & 1


def iter_ensemble(n: int, k: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All admissible ordered generator matrices as ((a, b), ...) bit rows.

    Rows are chosen in order; each must trace-commute with the earlier ones
    and stay outside their F2 span.  Exponential in n and m: keep n small.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    m = n - k
    size = 1 << n
    vectors = [(a, b) for a in range(size) for b in range(size)]

    def extend(rows: tuple, span: frozenset) -> Iterator[tuple]:
        if len(rows) == m:
            yield rows
            return
        for a, b in vectors:
            if (a, b) == (0, 0) or (a, b) in span:
                continue
            if any(_trace(a, b, ra, rb) for ra, rb in rows):
                continue
            new_span = span | {(sa ^ a, sb ^ b) for sa, sb in span}
            yield from extend(rows + ((a, b),), new_span)

    yield from extend((), frozenset([(0, 0)]))


def brute_force_ensemble(n: int, k: int) -> EnsembleStats:
    """Enumerate the whole ensemble and average the exact enumerators.

    Independent of the production enumeration pipeline on purpose: syndrome
    bits and weights are recomputed from plain integer bit operations.
    """
    if n > BRUTE_LIMIT_N:
        raise ValueError("brute force enumeration limited to n <= %d" % BRUTE_LIMIT_N)
    m = n - k
    size = 1 << n
    primal = [[0] * (m + 1) for _ in range(n + 1)]
    dual = [[0] * (m + 1) for _ in range(n + 1)]
    count = 0
    for rows in iter_ensemble(n, k):
        count += 1
        # primal: words (uH, u) over syndrome messages u
        for u in range(1 << m):
            a = b = 0
            for r in range(m):
                if (u >> r) & 1:
                    a ^= rows[r][0]
                    b ^= rows[r][1]
            primal[(a | b).bit_count()][u.bit_count()] += 1
        # dual: every data error with its induced syndrome
        for a in range(size):
            for b in range(size):
                synd = 0
                for r, (ra, rb) in enumerate(rows):
                    synd |= _trace(a, b, ra, rb) << r
                dual[(a | b).bit_count()][synd.bit_count()] += 1
    return EnsembleStats(
        n=n,
        k=k,
        m=m,
        size=count,
        avg_primal=tuple(
            tuple(Fraction(c, count) for c in row) for row in primal
        ),
        avg_dual=tuple(tuple(Fraction(c, count) for c in row) for row in dual),
    )


# ---------------------------------------------------------------------------
# expurgation


def expurgated_bound(
    n: int, k: int, eps: Union[int, Fraction]
) -> tuple[tuple[Fraction, ...], ...]:
    """Per-cell thresholds (n m)^(1+eps) * average dual entry.

    Some code in the ensemble meets every threshold simultaneously, with
    probability at least 1 - (n m)^(-eps) over a uniform draw.  eps must
    keep the factor rational (integer eps, or a fractional exponent whose
    root of n*m is exact).  With m = 0 the factor is zero and the claim is
    vacuous; the zero matrix is returned as honest arithmetic.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    m = n - k
    base = n * m
    exponent = 1 + eps
    if exponent.denominator == 1:
        factor = Fraction(base**exponent.numerator)
    else:
        root = round(base ** (1 / exponent.denominator))
        while root**exponent.denominator > base:
            root -= 1
        if root**exponent.denominator != base:
            raise ValueError(
                "(n*m)^(1+eps) is irrational for n*m=%d, eps=%s" % (base, eps)
            )
        factor = Fraction(root**exponent.numerator)
    stats = average_enumerators(n, k)
    return tuple(tuple(factor * c for c in row) for row in stats.avg_dual)


# ---------------------------------------------------------------------------
# asymptotics


def binary_entropy(x: float) -> float:
    if not 0 <= x <= 1:
        raise ValueError("entropy argument outside [0, 1]")
    if x in (0.0, 1.0):
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def _check_asymptotic_domain(rate: float, omega: float, gamma: float) -> None:
    if not 0 <= rate <= 1:
        raise ValueError("rate outside [0, 1]")
    if not 0 <= omega <= 1:
        raise ValueError("omega outside [0, 1]")
    if gamma < 0 or gamma > (1 - rate) + 1e-15:
        raise ValueError("gamma outside [0, 1 - rate]")


def asymptotic_exponent(rate: float, omega: float, gamma: float) -> float:
    """Growth rate (1/n) log2 of the average dual entry at relative weights.

    H(omega) + omega log2(3) + (1-R) H(gamma/(1-R)) + R - 1: the Stirling
    limit of 2^(n+k) C(n, omega n) 3^(omega n) C(m, gamma n) / (4^n - 1).
    The printed closed form differs in the syndrome term and the constant;
    the exact finite-n averages are what this limit is taken from.
    """
    _check_asymptotic_domain(rate, omega, gamma)
    if rate == 1:
        synd = 0.0
    else:
        synd = (1 - rate) * binary_entropy(min(gamma / (1 - rate), 1.0))
    return binary_entropy(omega) + omega * math.log2(3) + synd + rate - 1


def omega_star(rate: float, gamma: float, tol: float = 1e-12) -> Optional[float]:
    """Root of the exponent in omega, or None when it never goes negative.

    Below omega_star the average count is exponentially small, so expurgated
    codes with those dual cells empty exist.  The exponent is increasing up
    to omega = 3/4 and stays positive beyond it, so the root is unique; it
    exists exactly when the omega-free part is negative (it never exceeds
    zero, cresting at gamma = (1 - R)/2 and at R = 1).
    """
    _check_asymptotic_domain(rate, 0.0, gamma)
    offset = asymptotic_exponent(rate, 0.0, gamma)
    if offset >= 0:
        return None
    lo, hi = 0.0, 0.75
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if asymptotic_exponent(rate, mid, gamma) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


# ---------------------------------------------------------------------------
# heuristic sampling beyond the brute range


def sample_code(n: int, k: int, seed: Union[int, random.Random]) -> DSCode:
    """Random admissible generator matrix by rejection; seeded, heuristic.

    Uniformity over the ensemble is not claimed (rejection order biases
    nothing obvious, but no proof is offered); use for spot checks only.
    """
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n (at least one generator to sample)")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    m = n - k
    mask = (1 << n) - 1
    while True:
        rows: list[tuple[int, int]] = []
        span = {(0, 0)}
        ok = True
        for _ in range(m):
            for _attempt in range(64 * (n + 1)):
                a, b = rng.getrandbits(n) & mask, rng.getrandbits(n) & mask
                if (a, b) in span:
                    continue
                if any(_trace(a, b, ra, rb) for ra, rb in rows):
                    continue
                span |= {(sa ^ a, sb ^ b) for sa, sb in span}
                rows.append((a, b))
                break
            else:
                ok = False
                break
        if ok:
            return build_ds_code([F4Vector(n, a, b) for a, b in rows])


# ---------------------------------------------------------------------------
# export


def stats_to_json_obj(stats: EnsembleStats) -> dict:
    """Sparse JSON form with rationals as "p/q" strings (q omitted when 1)."""

    def table(rows: Sequence[Sequence[Fraction]]) -> list:
        out = []
        for i, row in enumerate(rows):
            for j, c in enumerate(row):
                if c:
                    text = str(c.numerator)
                    if c.denominator != 1:
                        text += "/%d" % c.denominator
                    out.append([i, j, text])
        return out

    return {
        "n": stats.n,
        "k": stats.k,
        "m": stats.m,
        "size": str(stats.size),
        "avg_primal": table(stats.avg_primal),
        "avg_dual": table(stats.avg_dual),
    }
