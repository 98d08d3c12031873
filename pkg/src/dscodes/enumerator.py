"""Exact split weight enumerators and their structural relations.

The primal table counts {(uH, u)} by (data weight, syndrome weight); the dual
table counts {(v, Hv)} over all v in F4^n.  Both are exact big-integer
matrices.  The relation checks and the degeneracy test are reports about a
computed pair of tables, not validations of inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .ds_code import DSCode, ExhaustiveLimitError, EXHAUSTIVE_LIMIT_N, dual_split_table
from .gf4 import popcount


@dataclass(frozen=True)
class SplitEnumerator:
    side: str  # "primal" or "dual"
    n: int
    m: int
    table: tuple[tuple[int, ...], ...]  # (n+1) x (m+1)

    def __post_init__(self):
        if self.side not in ("primal", "dual"):
            raise ValueError("side must be primal or dual")

    def total(self) -> int:
        return sum(map(sum, self.table))

    def entry(self, i: int, j: int) -> int:
        return self.table[i][j]


def _primal_table(code: DSCode) -> tuple[tuple[int, ...], ...]:
    n, m = code.n, code.m
    table = [[0] * (m + 1) for _ in range(n + 1)]
    a = b = 0
    table[0][0] = 1
    gray_prev = 0
    for u in range(1, 1 << m):
        gray = u ^ (u >> 1)
        j = (gray ^ gray_prev).bit_length() - 1
        gray_prev = gray
        a ^= code.rows[j].a
        b ^= code.rows[j].b
        table[popcount(a | b)][popcount(gray)] += 1
    return tuple(tuple(row) for row in table)


def split_enumerator(code: DSCode, side: str, limit_n: int = EXHAUSTIVE_LIMIT_N) -> SplitEnumerator:
    if side == "primal":
        if code.m > 2 * limit_n:
            raise ExhaustiveLimitError("primal enumeration infeasible: m=%d" % code.m)
        table = _primal_table(code)
        assert sum(map(sum, table)) == 1 << code.m
    elif side == "dual":
        table = dual_split_table(code, limit_n)
    else:
        raise ValueError("side must be primal or dual")
    return SplitEnumerator(side, code.n, code.m, table)


@dataclass(frozen=True)
class RelationReport:
    """Outcome of the three structural checks tying primal and dual tables to d."""

    sums_match_below_d: bool          # dual (i,0) equals the full primal row sum, i = 1..d-1
    dominance_at_d_and_above: bool    # dual (i,0) >= primal row sum over j >= 1, i = d..n
    normalization: bool               # both (0,0) entries are 1; primal (i,0) = 0 for i >= 1
    first_sum_violation: Optional[int] = None
    first_dominance_violation: Optional[int] = None

    @property
    def all_hold(self) -> bool:
        return self.sums_match_below_d and self.dominance_at_d_and_above and self.normalization


def check_relations(primal: SplitEnumerator, dual: SplitEnumerator, d: int) -> RelationReport:
    if (primal.n, primal.m) != (dual.n, dual.m):
        raise ValueError("tables are for different code shapes")
    n, m = primal.n, primal.m
    sums_ok, first_sum = True, None
    for i in range(1, min(d, n + 1)):
        if dual.table[i][0] != sum(primal.table[i]):
            sums_ok, first_sum = False, i
            break
    dom_ok, first_dom = True, None
    for i in range(d, n + 1):
        if dual.table[i][0] < sum(primal.table[i][1:]):
            dom_ok, first_dom = False, i
            break
    norm_ok = (
        primal.table[0][0] == 1
        and dual.table[0][0] == 1
        and all(primal.table[i][0] == 0 for i in range(1, n + 1))
    )
    return RelationReport(sums_ok, dom_ok, norm_ok, first_sum, first_dom)


def is_degenerate(primal: SplitEnumerator, d: int) -> bool:
    """True iff the row span contains a nonzero element of data weight below d."""
    if primal.side != "primal":
        raise ValueError("degeneracy is read off the primal table")
    return any(
        primal.table[i][j] > 0 for i in range(1, min(d, primal.n + 1)) for j in range(primal.m + 1)
    )


def to_json_obj(enum: SplitEnumerator) -> dict:
    entries = [
        [i, j, str(enum.table[i][j])]
        for i in range(enum.n + 1)
        for j in range(enum.m + 1)
        if enum.table[i][j]
    ]
    return {"n": enum.n, "m": enum.m, "side": enum.side, "entries": entries}


def from_json_obj(obj: dict) -> SplitEnumerator:
    n, m = obj["n"], obj["m"]
    table = [[0] * (m + 1) for _ in range(n + 1)]
    for i, j, count in obj["entries"]:
        table[i][j] = int(count)
    return SplitEnumerator(obj["side"], n, m, tuple(tuple(r) for r in table))
