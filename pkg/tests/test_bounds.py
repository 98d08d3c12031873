"""Bound-module tests.

The integer-form bounds are checked against independent loop oracles written
before the implementations; polynomial feasibility is cross-validated three
ways (coefficient grid + expansion, the closed-form evaluator, and the fast
shell path).  Frozen regression values were produced by those oracles and
then pinned.
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dscodes.bounds import (
    FeasibilityReport,
    distance_region,
    general_bound_feasible,
    hamming_eval_closed,
    hamming_feasibility,
    hamming_nondeg,
    hamming_poly,
    hamming_unrestricted,
    hybrid_hamming,
    hybrid_poly,
    singleton_bound,
    singleton_poly,
    singleton_scan,
    sweep,
)
from dscodes.ds_code import build_ds_code, five_qubit_code, min_distance, steane_code
from dscodes.enumerator import is_degenerate, split_enumerator
from dscodes.transforms import PolyCoeffs2D

from oracles import krawtchouk_direct


# ---------------------------------------------------------------------------
# oracles


def nondeg_k_oracle(n, d):
    """Direct downward scan of the sphere-packing inequality, no shortcuts."""
    t = (d - 1) // 2
    for k in range(n, -1, -1):
        m = n - k
        total = 0
        for i in range(t + 1):
            if i > n:
                continue
            inner = 0
            for j in range(t - i + 1):
                if j <= m:
                    inner += math.comb(m, j)
            total += math.comb(n, i) * 3**i * inner
        if total <= 2**m:
            return k
    return -1


def hamming_coeff_oracle(n, m, t, lam, i, j):
    """Coefficient from the sum-formula Krawtchouk values only."""
    inner = 0
    for h in range(min(t, n) + 1):
        s_part = sum(
            krawtchouk_direct(s, j, m, 2) for s in range(min((t - h) // lam, m) + 1)
        )
        inner += krawtchouk_direct(h, i, n, 4) * s_part
    return inner * inner


# ---------------------------------------------------------------------------
# Singleton


def test_singleton_closed_form():
    assert singleton_bound(7, 3) == 3
    assert singleton_bound(23, 7) == 11
    assert singleton_bound(5, 3) == 1
    assert singleton_bound(3, 3) == -1  # clamped
    with pytest.raises(ValueError):
        singleton_bound(5, 6)
    with pytest.raises(ValueError):
        singleton_bound(5, 0)


def test_singleton_poly_threshold_values():
    # at k = n - 2(d-1) the max equals 4^(n-d+1) 2^m, exactly the threshold
    n, d = 7, 3
    for k, expect_feasible in ((3, True), (4, False)):
        m = n - k
        report = general_bound_feasible(
            singleton_poly(n, m, d), d, distance_region(n, m, d)
        )
        assert report.feasible is expect_feasible
        assert not report.vacuous_shells
        assert report.base_ratio == Fraction(4 ** (n - d + 1) * 2**m)
        assert report.max_ratio == report.base_ratio  # shells never dominate here
    assert general_bound_feasible(
        singleton_poly(7, 4, 3), 3, distance_region(7, 4, 3)
    ).threshold == 4**7


def test_singleton_scan_matches_closed_form_on_informative_region():
    for n in range(1, 13):
        for d in range(1, n + 1):
            if n >= 2 * (d - 1):
                assert singleton_scan(n, d) == n - 2 * (d - 1) == singleton_bound(n, d)


def test_singleton_scan_dead_cells_are_vacuous():
    # below n = 2(d-1) the shell coefficients vanish under a positive
    # numerator for every m >= 1, so the scan saturates at k = n-1 while the
    # closed form reports -1; the certificate must expose the vacuity
    for n, d in ((3, 3), (5, 5), (5, 4), (7, 6)):
        assert n < 2 * (d - 1)
        assert singleton_bound(n, d) == -1
        assert singleton_scan(n, d) == n - 1
        report = general_bound_feasible(
            singleton_poly(n, 1, d), d, distance_region(n, 1, d)
        )
        assert report.feasible and report.vacuous_shells
        at_n = general_bound_feasible(
            singleton_poly(n, 0, d), d, distance_region(n, 0, d)
        )
        assert not at_n.feasible  # no syndrome bits, no vacuous shells


def test_constant_one_polynomial_is_infeasible():
    for n in (1, 3):
        coeffs = tuple(
            tuple(Fraction(1 if (i, j) == (0, 0) else 0) for j in range(n + 1))
            for i in range(n + 1)
        )
        poly = PolyCoeffs2D(n=n, m=n, q1=4, q2=2, coeffs=coeffs)
        report = general_bound_feasible(poly, 1, verify_regions=False)
        assert report.base_ratio == 1
        assert not report.feasible


def test_region_preconditions_are_enforced():
    neg = tuple(
        tuple(Fraction(-1 if (i, j) == (1, 0) else 1) for j in range(3))
        for i in range(3)
    )
    with pytest.raises(ValueError, match="negative"):
        general_bound_feasible(PolyCoeffs2D(2, 2, 4, 2, neg), 2)
    # constant 1 is positive at (l, 0) beyond any cutoff
    ones = tuple(
        tuple(Fraction(1 if (i, j) == (0, 0) else 0) for j in range(3))
        for i in range(3)
    )
    with pytest.raises(ValueError, match="beyond the data cutoff"):
        general_bound_feasible(PolyCoeffs2D(2, 2, 4, 2, ones), 1)
    # a polynomial positive at syndrome weight 1 needs that cell allowed
    bump = hamming_poly(4, 2, 1, 1)
    assert bump.evaluate(0, 1) > 0
    with pytest.raises(ValueError, match="outside the allowed region"):
        general_bound_feasible(bump, 3, allowed_region=())
    # and is accepted with the matching distance region
    general_bound_feasible(bump, 3, distance_region(4, 2, 3))
    # the singleton polynomial vanishes off the syndrome-zero row, so even an
    # empty allowed region is consistent with it
    general_bound_feasible(singleton_poly(4, 2, 2), 2, allowed_region=())


# ---------------------------------------------------------------------------
# Hamming, integer form


def test_hamming_nondeg_examples():
    assert hamming_nondeg(7, 3) == 2
    for n in range(1, 11):
        assert hamming_nondeg(n, 1) == n
    assert hamming_nondeg(23, 7) == 6  # frozen from the loop oracle
    with pytest.raises(ValueError):
        hamming_nondeg(9, 4)


def test_hamming_nondeg_matches_loop_oracle():
    for n in range(1, 17):
        for d in (3, 5, 7):
            assert hamming_nondeg(n, d) == nondeg_k_oracle(n, d)


# ---------------------------------------------------------------------------
# Hamming, polynomial family


@pytest.mark.parametrize("n,m", [(4, 2), (5, 0), (6, 4)])
def test_hamming_poly_coeffs_match_oracle(n, m):
    for t in range(4):
        for lam in range(1, t + 2):
            poly = hamming_poly(n, m, t, lam)
            for i in range(n + 1):
                for j in range(m + 1):
                    c = poly.coeffs[i][j]
                    assert c == hamming_coeff_oracle(n, m, t, lam, i, j)
                    assert c >= 0


def test_hamming_poly_rejects_bad_mixing():
    with pytest.raises(ValueError):
        hamming_poly(5, 3, 2, 0)
    with pytest.raises(ValueError):
        hamming_poly(5, 3, 2, 4)


def test_vanishing_above_distance_small():
    # exact zeros at total weight >= 2t+1 (the acceptance suite sweeps wider)
    for n, m in ((5, 3), (7, 2), (6, 6)):
        for t in range(1, 4):
            for lam in range(1, t + 2):
                poly = hamming_poly(n, m, t, lam)
                for x in range(n + 1):
                    for y in range(m + 1):
                        if x + y >= 2 * t + 1:
                            assert poly.evaluate(x, y) == 0


def test_lambda_one_base_ratio_is_the_sphere_packing_ratio():
    for n in (4, 7, 10):
        for k in range(0, n + 1, 2):
            m = n - k
            for t in (1, 2, 3):
                denom = sum(
                    math.comb(n, i)
                    * 3**i
                    * sum(math.comb(m, j) for j in range(min(t - i, m) + 1))
                    for i in range(min(t, n) + 1)
                )
                report = hamming_feasibility(n, k, t, 1)
                assert report.base_ratio == Fraction(4**n * 2**m, denom)


def test_closed_form_evaluator_matches_expansion():
    for n, m in ((4, 3), (6, 2), (5, 5)):
        for t in (1, 2, 3):
            for lam in range(1, t + 2):
                poly = hamming_poly(n, m, t, lam)
                for l in range(n + 1):
                    for r in range(m + 1):
                        assert poly.evaluate(l, r) == hamming_eval_closed(
                            n, m, t, lam, l, r
                        )


def test_fast_feasibility_equals_general_checker():
    for n in (4, 6, 8):
        for k in range(n + 1):
            m = n - k
            for t in (1, 2):
                for lam in range(1, t + 2):
                    d = 2 * t + 1
                    fast = hamming_feasibility(n, k, t, lam)
                    slow = general_bound_feasible(
                        hamming_poly(n, m, t, lam), d, distance_region(n, m, d)
                    )
                    assert fast == slow


def test_unrestricted_never_stronger_than_nondeg():
    # weaker bound, never a smaller k_max
    for d in (3, 5):
        for n in range(d, 15):
            u, lam = hamming_unrestricted(n, d)
            assert u >= hamming_nondeg(n, d)
            if lam is not None:
                assert 1 <= lam <= (d - 1) // 2 + 1


def test_unrestricted_frozen_values():
    assert hamming_unrestricted(23, 7) == (7, 2)
    assert hamming_nondeg(23, 7) == 6  # strictly stronger here
    with pytest.raises(ValueError):
        hamming_unrestricted(10, 4)


def test_d3_coincidence_threshold_regression():
    # the two bounds agree from n = 6 on (checked through 30 when frozen)
    for n in (3, 4, 5):
        assert hamming_unrestricted(n, 3)[0] > hamming_nondeg(n, 3)
    for n in range(6, 21):
        assert hamming_unrestricted(n, 3)[0] == hamming_nondeg(n, 3)


# ---------------------------------------------------------------------------
# hybrid bound


def test_hybrid_examples():
    assert hybrid_hamming(10, 1, 1) == 1
    assert hybrid_hamming(7, 1, 1) == -1
    for n in (1, 4, 8):
        assert hybrid_hamming(n, 0, 0) == n
    with pytest.raises(ValueError):
        hybrid_hamming(5, -1, 0)


def test_hybrid_loop_oracle():
    def oracle(n, td, ts):
        for k in range(n, -1, -1):
            m = n - k
            total = 0
            for i in range(min(td, n) + 1):
                for j in range(min(ts, m) + 1):
                    total += math.comb(n, i) * 3**i * math.comb(m, j)
            if total <= 2**m:
                return k
        return -1

    for n in range(1, 13):
        for td in range(3):
            for ts in range(3):
                assert hybrid_hamming(n, td, ts) == oracle(n, td, ts)


def test_hybrid_poly_support_and_base_ratio():
    for n, k, td, ts in ((6, 2, 1, 1), (7, 3, 1, 2), (5, 1, 2, 1)):
        m = n - k
        poly = hybrid_poly(n, m, td, ts)
        for i in range(n + 1):
            for j in range(m + 1):
                assert poly.coeffs[i][j] >= 0
        for x in range(n + 1):
            for y in range(m + 1):
                if x > 2 * td or y > 2 * ts:
                    assert poly.evaluate(x, y) == 0
        denom = sum(
            math.comb(n, i) * 3**i * math.comb(m, j)
            for i in range(td + 1)
            for j in range(min(ts, m) + 1)
        )
        report = general_bound_feasible(
            poly,
            2 * td + 1,
            frozenset(
                (i, j)
                for i in range(0, 2 * td + 1)
                for j in range(1, min(2 * ts, m) + 1)
            ),
        )
        assert report.base_ratio == Fraction(4**n * 2**m, denom)


# ---------------------------------------------------------------------------
# real codes never violate the bounds


def test_corpus_codes_respect_bounds():
    # k = 0 codes carry no message, so packing arguments say nothing about
    # them (the single-generator n=1 code has d=2 yet n-2(d-1) < 0)
    corpus = [
        five_qubit_code(),
        steane_code(),
        build_ds_code(["XYZ"]),
        build_ds_code(["XIX", "IZI"]),
        build_ds_code(["XXII", "ZZII"]),
    ]
    for code in corpus:
        assert code.k >= 1
        d = min_distance(code).d
        assert code.k <= code.n - 2 * (d - 1)
        if 1 <= d <= code.n:
            assert code.k <= singleton_bound(code.n, d)
        primal = split_enumerator(code, "primal")
        if d % 2 == 1 and not is_degenerate(primal, d):
            assert code.k <= hamming_nondeg(code.n, d)


# ---------------------------------------------------------------------------
# sweeps


def test_sweep_singleton_row_shape():
    rows = sweep("singleton", range(5, 10), d=3)
    assert [r["k_max"] for r in rows] == [1, 2, 3, 4, 5]
    assert all(r["variant"] == "singleton" and r["d_or_tDtS"] == "3" for r in rows)
    assert rows[0]["rate"] == "%.6f" % (1 / 5)


def test_sweep_hybrid_monotone():
    rows = sweep("hybrid", range(7, 13), t_data=1, t_synd=1)
    ks = [r["k_max"] for r in rows]
    assert ks == sorted(ks)
    assert rows[0]["d_or_tDtS"] == "1+1"


def test_sweep_both_coincide_at_the_crossover():
    rows = sweep("both", range(34, 38), d=7)
    by_n = {}
    for r in rows:
        by_n.setdefault(r["n"], {})[r["variant"]] = r["k_max"]
    assert by_n[34]["hamming_unrestricted"] > by_n[34]["hamming_nondeg"]
    assert by_n[35]["hamming_unrestricted"] > by_n[35]["hamming_nondeg"]
    for n in (36, 37):
        assert by_n[n]["hamming_unrestricted"] == by_n[n]["hamming_nondeg"]


def test_sweep_rejects_bad_requests():
    with pytest.raises(ValueError):
        sweep("nope", range(3), d=3)
    with pytest.raises(ValueError):
        sweep("hybrid", range(3), d=3)
    with pytest.raises(ValueError):
        sweep("singleton", range(3))


# ---------------------------------------------------------------------------
# property checks


@given(
    n=st.integers(min_value=1, max_value=10),
    d=st.integers(min_value=1, max_value=7),
)
@settings(max_examples=40, deadline=None)
def test_feasibility_fails_just_above_the_scan_result(n, d):
    if d % 2 == 0 or d > n:
        return
    t = (d - 1) // 2
    k_max, _ = hamming_unrestricted(n, d)
    if k_max < n:
        probe = k_max + 1
        assert any(
            not hamming_feasibility(n, probe, t, lam).feasible
            for lam in range(1, t + 2)
        )
    if k_max >= 0:
        assert all(
            hamming_feasibility(n, k_max, t, lam).feasible for lam in range(1, t + 2)
        )
