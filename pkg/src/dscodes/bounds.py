"""Polynomial-method upper bounds on data-syndrome code parameters.

Four bound families live here: the general feasibility checker that drives
them, the Singleton bound, the two Hamming variants (the integer-form bound
for non-degenerate codes and the polynomial-optimized one that also covers
degenerate codes), and the hybrid bound with separate data/syndrome error
budgets.  Everything is exact big-integer or Fraction arithmetic; feasibility
comparisons against 2^(2n) are never floated.

Conventions.  A length-n code with k logical qubits measures m = n - k
syndrome bits.  Weight pairs (x, y) mean (data weight, syndrome weight); a
"shell" below is the set of pairs with fixed data weight and zero syndrome
weight.  The feasibility test for a candidate polynomial f is

    max{ f(0,0)/f_{0,0},  max_{1<=l<=cut-1} f(l,0) / min_{1<=j<=m} f_{l,j} }
        >= 2^(2n)

where cut is the data-distance cutoff; parameters failing it cannot be
attained by any code.  A zero coefficient under a positive numerator makes
the shell ratio infinite and the test vacuously true; such shells are
reported so callers can tell an informative certificate from a vacuous one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Optional, Sequence

from .transforms import PolyCoeffs2D, krawtchouk_table

__all__ = [
    "FeasibilityReport",
    "distance_region",
    "general_bound_feasible",
    "singleton_poly",
    "singleton_bound",
    "singleton_scan",
    "hamming_nondeg",
    "hamming_poly",
    "hamming_eval_closed",
    "hamming_feasibility",
    "hamming_unrestricted",
    "hybrid_poly",
    "hybrid_hamming",
    "sweep",
]


def _binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class FeasibilityReport:
    """Exact certificate of one feasibility evaluation at fixed (n, k)."""

    n: int
    k: int
    data_cut: int
    threshold: int  # 2^(2n)
    base_ratio: Fraction  # f(0,0) / f_{0,0}
    shell_ratios: tuple[tuple[int, Fraction], ...]  # finite shells (l, ratio)
    vacuous_shells: tuple[int, ...]  # zero coefficient under positive f(l,0)
    skipped_shells: tuple[int, ...]  # shells with f(l,0) <= 0
    feasible: bool

    @property
    def max_ratio(self) -> Optional[Fraction]:
        """Largest ratio in the test; None means infinite (vacuous shell)."""
        if self.vacuous_shells:
            return None
        return max([self.base_ratio] + [r for _, r in self.shell_ratios])


def _assemble_report(
    n: int,
    k: int,
    data_cut: int,
    numer00,
    denom00,
    shells: Sequence[tuple[int, object, object]],
) -> FeasibilityReport:
    """shells: (l, f(l,0), min coefficient over syndrome weights 1..m)."""
    if denom00 <= 0:
        if numer00 <= 0:
            raise ValueError("polynomial is identically zero on the test points")
        base = None  # infinite
    else:
        base = Fraction(numer00) / Fraction(denom00)
    threshold = 1 << (2 * n)
    finite: list[tuple[int, Fraction]] = []
    vacuous: list[int] = []
    skipped: list[int] = []
    for l, value, min_coeff in shells:
        if value <= 0:
            skipped.append(l)
            continue
        if min_coeff <= 0:
            vacuous.append(l)
            continue
        finite.append((l, Fraction(value) / Fraction(min_coeff)))
    if base is None:
        feasible = True
        base = Fraction(0)
        vacuous.insert(0, 0)
    else:
        best = max([base] + [r for _, r in finite])
        feasible = bool(vacuous) or best >= threshold
    return FeasibilityReport(
        n=n,
        k=k,
        data_cut=data_cut,
        threshold=threshold,
        base_ratio=base,
        shell_ratios=tuple(finite),
        vacuous_shells=tuple(vacuous),
        skipped_shells=tuple(skipped),
        feasible=feasible,
    )


def distance_region(n: int, m: int, d: int) -> frozenset[tuple[int, int]]:
    """Weight pairs where a distance-d feasibility polynomial may be positive.

    Syndrome weight at least 1 and total weight at most d - 1: exactly the
    error patterns a distance-d code is not required to flag.
    """
    return frozenset(
        (i, j) for j in range(1, m + 1) for i in range(0, n + 1) if i + j <= d - 1
    )


def general_bound_feasible(
    poly: PolyCoeffs2D,
    data_cut: int,
    allowed_region: Optional[Iterable[tuple[int, int]]] = None,
    *,
    verify_regions: bool = True,
) -> FeasibilityReport:
    """Evaluate the feasibility test for an arbitrary candidate polynomial.

    `data_cut` is the data-distance cutoff: f(l,0) must be non-positive for
    l >= data_cut, and shells 1..data_cut-1 enter the max.  `allowed_region`
    is the set of (data weight, syndrome weight >= 1) pairs where f may be
    positive; everywhere else with syndrome weight >= 1 it must be <= 0.
    With verify_regions the preconditions are checked exactly (quadratic in
    the grid size); callers scanning well-understood families can skip them.
    """
    n, m = poly.n, poly.m
    if poly.q1 != 4 or poly.q2 != 2:
        raise ValueError("expected a (q1, q2) = (4, 2) weight polynomial")
    if not 1 <= data_cut <= n + 1:
        raise ValueError("data_cut out of range")
    if verify_regions:
        region = frozenset() if allowed_region is None else frozenset(allowed_region)
        for i, row in enumerate(poly.coeffs):
            for j, c in enumerate(row):
                if c < 0:
                    raise ValueError("coefficient at (%d, %d) is negative" % (i, j))
        for l in range(data_cut, n + 1):
            if poly.evaluate(l, 0) > 0:
                raise ValueError(
                    "polynomial is positive at (%d, 0) beyond the data cutoff" % l
                )
        for x in range(n + 1):
            for y in range(1, m + 1):
                if (x, y) not in region and poly.evaluate(x, y) > 0:
                    raise ValueError(
                        "polynomial is positive at (%d, %d) outside the allowed region"
                        % (x, y)
                    )
    shells: list[tuple[int, object, object]] = []
    if m > 0:
        for l in range(1, min(data_cut - 1, n) + 1):
            value = poly.evaluate(l, 0)
            min_coeff = min(poly.coeffs[l][j] for j in range(1, m + 1))
            shells.append((l, value, min_coeff))
    return _assemble_report(
        n, n - m, data_cut, poly.evaluate(0, 0), poly.coeffs[0][0], shells
    )


# ---------------------------------------------------------------------------
# Singleton bound


def singleton_poly(n: int, m: int, d: int) -> PolyCoeffs2D:
    """Candidate polynomial behind the Singleton bound.

    Coefficients C(n-i, d-1)/C(n, d-1), constant across syndrome weight; the
    polynomial itself is supported on syndrome weight 0 and data weight < d.
    """
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    denom = comb(n, d - 1)
    coeffs = tuple(
        tuple(Fraction(_binom(n - i, d - 1), denom) for _ in range(m + 1))
        for i in range(n + 1)
    )
    return PolyCoeffs2D(n=n, m=m, q1=4, q2=2, coeffs=coeffs)


def singleton_bound(n: int, d: int) -> int:
    """k <= n - 2(d-1); returns -1 when no k >= 0 satisfies it."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    return max(n - 2 * (d - 1), -1)


def singleton_scan(n: int, d: int, *, verify_regions: bool = False) -> int:
    """Largest k the Singleton polynomial cannot rule out, by downward scan.

    Matches singleton_bound whenever n >= 2(d-1).  Below that the polynomial
    has zero-coefficient shells under a positive numerator for every m >= 1,
    so each k <= n-1 passes vacuously and the scan returns n - 1; the closed
    form is the informative answer there.
    """
    for k in range(n, -1, -1):
        poly = singleton_poly(n, n - k, d)
        report = general_bound_feasible(
            poly,
            d,
            distance_region(n, n - k, d),
            verify_regions=verify_regions,
        )
        if report.feasible:
            return k
    return -1


# ---------------------------------------------------------------------------
# Hamming bound, non-degenerate integer form


def hamming_nondeg(n: int, d: int) -> int:
    """Largest k with the sphere-packing inequality for distance d = 2t+1.

    Counts error patterns with data weight i <= t and syndrome weight
    j <= t - i against the 2^m cosets; exact integers, scanned downward.
    Returns -1 if no k >= 0 works.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError("distance must be odd, got %d" % d)
    t = (d - 1) // 2
    for k in range(n, -1, -1):
        m = n - k
        total = 0
        for i in range(min(t, n) + 1):
            ball = sum(_binom(m, j) for j in range(t - i + 1))
            total += comb(n, i) * 3**i * ball
        if total <= 1 << m:
            return k
    return -1


# ---------------------------------------------------------------------------
# Hamming bound, polynomial family for unrestricted codes


def _syndrome_partial_sums(m: int, t: int, lam: int) -> list[list[int]]:
    """S[h][j] = sum of binary Krawtchouk values K_s(j; m) for s <= (t-h)//lam."""
    k2 = krawtchouk_table(m, 2)
    return [
        [
            sum(k2.values[s][j] for s in range(min((t - h) // lam, m) + 1))
            for j in range(m + 1)
        ]
        for h in range(t + 1)
    ]


def hamming_poly(n: int, m: int, t: int, lam: int) -> PolyCoeffs2D:
    """Distance-(2t+1) candidate polynomial with mixing parameter lam.

    Coefficient at (i, j) is the square of
    sum_h K_h(i; n, 4) * sum_{s <= (t-h)//lam} K_s(j; m, 2), so coefficients
    are non-negative by construction and the polynomial vanishes on total
    weight >= 2t+1.
    """
    if not 1 <= lam <= t + 1:
        raise ValueError("mixing parameter must lie in 1..t+1")
    k4 = krawtchouk_table(n, 4)
    S = _syndrome_partial_sums(m, t, lam)
    hs = range(min(t, n) + 1)
    coeffs = tuple(
        tuple(
            sum(k4.values[h][i] * S[h][j] for h in hs) ** 2 for j in range(m + 1)
        )
        for i in range(n + 1)
    )
    return PolyCoeffs2D(n=n, m=m, q1=4, q2=2, coeffs=coeffs)


def _alpha(n: int, l: int, u: int, v: int, h: int) -> int:
    """Triple-product kernel for quaternary Krawtchouk degrees u, v onto l."""
    a = 2 * l + 2 * h - u - v
    if a < 0 or a > l:
        return 0
    c = _binom(l, a) * _binom(n - l, h) * _binom(a, l + h - v)
    if not c:
        return 0
    return c * (1 << (u + v - 2 * h - l)) * 3**h


def _beta(m: int, r: int, u: int, v: int) -> int:
    """Triple-product kernel for binary Krawtchouk degrees u, v onto r."""
    s, dd = u + v - r, u - v + r
    if s < 0 or dd < 0 or s % 2 or dd % 2:
        return 0
    return _binom(m - r, s // 2) * _binom(r, dd // 2)


def hamming_eval_closed(n: int, m: int, t: int, lam: int, l: int, r: int) -> int:
    """Closed-form value of the hamming_poly polynomial at (l, r).

    Fast cross-check path; the coefficient grid plus Krawtchouk expansion is
    the authoritative definition and the two are tested equal.
    """
    if not 1 <= lam <= t + 1:
        raise ValueError("mixing parameter must lie in 1..t+1")
    total = 0
    for h1 in range(t + 1):
        for h2 in range(t + 1):
            a = sum(_alpha(n, l, h1, h2, h) for h in range(n - l + 1))
            if not a:
                continue
            total += a * sum(
                _beta(m, r, s1, s2)
                for s1 in range(min((t - h1) // lam, m) + 1)
                for s2 in range(min((t - h2) // lam, m) + 1)
            )
    return 4**n * 2**m * total


def hamming_feasibility(n: int, k: int, t: int, lam: int) -> FeasibilityReport:
    """Feasibility test for hamming_poly at (n, k) without the full grid.

    Builds only the shell coefficient rows (data weight < 2t+1) plus row
    sums against C(m, j), which give every f(l, 0) through the expansion.
    Exactly equal to running general_bound_feasible on hamming_poly; regions
    hold by construction (squares, and total weight >= 2t+1 evaluates to 0).
    """
    m = n - k
    d = 2 * t + 1
    k4 = krawtchouk_table(n, 4)
    S = _syndrome_partial_sums(m, t, lam)
    hs = range(min(t, n) + 1)
    # T[h1][h2] = sum_j S[h1][j] S[h2][j] C(m, j) collapses the row sums
    # R_i = sum_j f_{i,j} C(m, j) to a quadratic form in the degree pair.
    T = [
        [
            sum(S[h1][j] * S[h2][j] * comb(m, j) for j in range(m + 1))
            for h2 in hs
        ]
        for h1 in hs
    ]
    R = [
        sum(k4.values[h1][i] * k4.values[h2][i] * T[h1][h2] for h1 in hs for h2 in hs)
        for i in range(n + 1)
    ]

    def value_at(l: int) -> int:
        return sum(k4.values[i][l] * R[i] for i in range(n + 1))

    def coeff_row(i: int) -> list[int]:
        return [sum(k4.values[h][i] * S[h][j] for h in hs) ** 2 for j in range(m + 1)]

    shells: list[tuple[int, object, object]] = []
    if m > 0:
        for l in range(1, min(d - 1, n) + 1):
            row = coeff_row(l)
            shells.append((l, value_at(l), min(row[1:])))
    f00 = coeff_row(0)[0]
    return _assemble_report(n, k, d, value_at(0), f00, shells)


def hamming_unrestricted(n: int, d: int) -> tuple[int, Optional[int]]:
    """Hamming-type bound valid for degenerate codes too: (k_max, lam_opt).

    k is ruled out as soon as one mixing parameter fails the test, so k_max
    is the largest k where every lam in 1..t+1 passes.  lam_opt is the
    parameter that rules out k_max + 1 (smallest max-ratio there, ties to
    the smaller lam); None when nothing above k_max was scanned.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError("distance must be odd, got %d" % d)
    t = (d - 1) // 2
    lams = list(range(1, t + 2))
    witness: Optional[int] = None
    k_max = -1
    for k in range(n, -1, -1):
        order = [witness] + [x for x in lams if x != witness] if witness else lams
        ruled_out = None
        for lam in order:
            if not hamming_feasibility(n, k, t, lam).feasible:
                ruled_out = lam
                break
        if ruled_out is None:
            k_max = k
            break
        witness = ruled_out
    if k_max == n:
        return k_max, None
    probe = k_max + 1
    best_lam, best_ratio = None, None
    for lam in lams:
        ratio = hamming_feasibility(n, probe, t, lam).max_ratio
        if ratio is None:
            continue
        if best_ratio is None or ratio < best_ratio:
            best_lam, best_ratio = lam, ratio
    return k_max, best_lam


# ---------------------------------------------------------------------------
# Hybrid bound: separate data and syndrome correction radii


def hybrid_hamming(n: int, t_data: int, t_synd: int) -> int:
    """Largest k packing balls of t_data data and t_synd syndrome errors.

    Exact integer form; returns -1 when even k = 0 fails.
    """
    if t_data < 0 or t_synd < 0:
        raise ValueError("correction radii must be non-negative")
    data_ball = sum(comb(n, i) * 3**i for i in range(min(t_data, n) + 1))
    for k in range(n, -1, -1):
        m = n - k
        synd_ball = sum(_binom(m, j) for j in range(t_synd + 1))
        if data_ball * synd_ball <= 1 << m:
            return k
    return -1


def hybrid_poly(n: int, m: int, t_data: int, t_synd: int) -> PolyCoeffs2D:
    """Product-form candidate polynomial for the hybrid bound.

    Coefficient at (i, j) is (sum_{h<=t_data} K_h(i; n, 4))^2 times
    (sum_{s<=t_synd} K_s(j; m, 2))^2.  Vanishes for data weight > 2 t_data
    or syndrome weight > 2 t_synd, but has zero shells below the data cutoff,
    which is why it certifies only the non-degenerate hybrid bound.
    """
    if t_data < 0 or t_synd < 0:
        raise ValueError("correction radii must be non-negative")
    k4 = krawtchouk_table(n, 4)
    k2 = krawtchouk_table(m, 2)
    data_part = [
        sum(k4.values[h][i] for h in range(min(t_data, n) + 1)) ** 2
        for i in range(n + 1)
    ]
    synd_part = [
        sum(k2.values[s][j] for s in range(min(t_synd, m) + 1)) ** 2
        for j in range(m + 1)
    ]
    coeffs = tuple(tuple(di * sj for sj in synd_part) for di in data_part)
    return PolyCoeffs2D(n=n, m=m, q1=4, q2=2, coeffs=coeffs)


# ---------------------------------------------------------------------------
# Sweeps


def sweep(
    variant: str,
    n_range: Iterable[int],
    *,
    d: Optional[int] = None,
    t_data: Optional[int] = None,
    t_synd: Optional[int] = None,
) -> list[dict]:
    """Bound values over a range of lengths, one row per (n, variant).

    variant: singleton | hamming_nondeg | hamming_unrestricted | hybrid |
    both (the two Hamming variants side by side).  Rows are dicts matching
    the CSV columns n, d_or_tDtS, variant, k_max, lambda_opt, rate.
    """
    names = {"singleton", "hamming_nondeg", "hamming_unrestricted", "hybrid", "both"}
    if variant not in names:
        raise ValueError("unknown variant %r" % variant)
    if variant == "hybrid":
        if t_data is None or t_synd is None:
            raise ValueError("hybrid sweep needs both correction radii")
        label = "%d+%d" % (t_data, t_synd)
    else:
        if d is None:
            raise ValueError("distance sweep needs d")
        label = str(d)
    rows: list[dict] = []

    def emit(n: int, name: str, k_max: int, lam: Optional[int]) -> None:
        rows.append(
            {
                "n": n,
                "d_or_tDtS": label,
                "variant": name,
                "k_max": k_max,
                "lambda_opt": "" if lam is None else lam,
                "rate": ("%.6f" % (k_max / n)) if k_max >= 0 else "",
            }
        )

    for n in n_range:
        if variant == "singleton":
            emit(n, variant, singleton_bound(n, d), None)
        elif variant == "hamming_nondeg":
            emit(n, variant, hamming_nondeg(n, d), None)
        elif variant == "hamming_unrestricted":
            k_max, lam = hamming_unrestricted(n, d)
            emit(n, variant, k_max, lam)
        elif variant == "hybrid":
            emit(n, variant, hybrid_hamming(n, t_data, t_synd), None)
        else:
            emit(n, "hamming_nondeg", hamming_nondeg(n, d), None)
            k_max, lam = hamming_unrestricted(n, d)
            emit(n, "hamming_unrestricted", k_max, lam)
    return rows
