"""Stabilizer generator matrices, joint data/syndrome codes, and exact distance.

A code here is an m x n generator matrix H over GF(4) whose rows pairwise
vanish under the trace inner product and are independent over F2 (additive
span of size 2^m).  The derived block matrix [H | I_m] defines two classical
objects: the small code {(uH, u) : u in F2^m} and its star-dual
{(v, Hv) : v in F4^n} of size 4^n.  The distance of interest is the minimum
total weight over dual words that are not of the harmless form (g, 0) with
g in the row span.
"""

from __future__ import annotations

import functools
import itertools
import json
import random
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .gf4 import DSVector, F4Vector, pauli_decode, pauli_encode, popcount, trace_inner

EXHAUSTIVE_LIMIT_N = 14


class ExhaustiveLimitError(Exception):
    """Raised when an exact enumeration would exceed the configured size limit."""


@dataclass(frozen=True)
class DSCode:
    """Immutable stabilizer generator choice; n qubits, m = n - k generators."""

    n: int
    rows: tuple[F4Vector, ...]

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def k(self) -> int:
        return self.n - self.m

    def pauli_rows(self) -> list[str]:
        return [pauli_decode(g) for g in self.rows]


@dataclass(frozen=True)
class DistanceReport:
    d: int
    witness: DSVector
    profile: tuple[Optional[int], ...]  # d(r) for r = 0..m; d(0) may not exist


GeneratorLike = Union[str, F4Vector]


def _as_vector(g: GeneratorLike) -> F4Vector:
    return pauli_encode(g) if isinstance(g, str) else g


def build_ds_code(generators: Sequence[GeneratorLike]) -> DSCode:
    """Validate pairwise commutation and F2-independence, then freeze the code."""
    if not generators:
        raise ValueError("generator list is empty")
    rows = tuple(_as_vector(g) for g in generators)
    n = rows[0].n
    for g in rows:
        if g.n != n:
            raise ValueError("generators have mixed lengths")
    for i in range(len(rows)):
        for j in range(i, len(rows)):
            if trace_inner(rows[i], rows[j]) != 0:
                raise ValueError(
                    "non-commuting generators at positions %d and %d (%s, %s)"
                    % (i, j, pauli_decode(rows[i]), pauli_decode(rows[j]))
                )
    basis: list[int] = []
    for idx, g in enumerate(rows):
        v = (g.a << n) | g.b  # 2n-bit packing for F2 rank
        for bv in basis:
            v = min(v, v ^ bv)
        if v == 0:
            raise ValueError("generator %d is F2-dependent on earlier ones" % idx)
        basis.append(v)
        basis.sort(reverse=True)
    if len(rows) > n:
        raise ValueError("more independent commuting generators (%d) than qubits (%d)" % (len(rows), n))
    return DSCode(n, rows)


def syndrome(code: DSCode, e: GeneratorLike) -> int:
    """Syndrome bits s_j = trace_inner(g_j, e), packed with generator j at bit j."""
    v = _as_vector(e)
    if v.n != code.n:
        raise ValueError("error length %d does not match n=%d" % (v.n, code.n))
    s = 0
    for j, g in enumerate(code.rows):
        s |= trace_inner(g, v) << j
    return s


def dual_basis(code: DSCode) -> list[DSVector]:
    """2n independent spanning elements (v, Hv) of the star-dual code."""
    out = []
    for i in range(code.n):
        for c in (1, 2):  # X_i and Z_i generate F4^n over F2
            v = F4Vector(code.n, a=(c & 1) << i, b=((c >> 1) & 1) << i)
            out.append(DSVector(v, syndrome(code, v), code.m))
    return out


# --- row-span machinery (F2-linear span of the GF(4) rows) ---


def _span_basis(rows: Sequence[F4Vector], n: int) -> list[int]:
    basis: list[int] = []
    for g in rows:
        v = (g.a << n) | g.b
        for bv in basis:
            v = min(v, v ^ bv)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def _in_span(basis: list[int], v: F4Vector, n: int) -> bool:
    x = (v.a << n) | v.b
    for bv in basis:
        x = min(x, x ^ bv)
    return x == 0


@functools.lru_cache(maxsize=None)
def _codeword_weight_counts(code: DSCode) -> tuple[int, ...]:
    """A_i = number of row-span elements of data weight i, by Gray walk over u."""
    counts = [0] * (code.n + 1)
    a = b = 0
    counts[0] = 1
    gray_prev = 0
    for u in range(1, 1 << code.m):
        gray = u ^ (u >> 1)
        j = (gray ^ gray_prev).bit_length() - 1
        gray_prev = gray
        a ^= code.rows[j].a
        b ^= code.rows[j].b
        counts[popcount(a | b)] += 1
    return tuple(counts)


# --- exhaustive dual sweep (vectorized over the Z-plane) ---


def _doubling_table(cols: list[int], size_log: int) -> np.ndarray:
    """tab[x] = XOR of cols[i] over set bits i of x, built by block doubling."""
    tab = np.zeros(1 << size_log, dtype=np.uint32)
    for i in range(size_log):
        half = 1 << i
        tab[half : 2 * half] = tab[:half] ^ np.uint32(cols[i])
    return tab


@functools.lru_cache(maxsize=None)
def _pop_table(bits: int) -> np.ndarray:
    tab = np.zeros(1 << bits, dtype=np.uint8)
    for i in range(bits):
        half = 1 << i
        tab[half : 2 * half] = tab[:half] + 1
    return tab


def _syndrome_tables(code: DSCode) -> tuple[np.ndarray, np.ndarray]:
    """Per-plane syndrome maps: s(v) = from_a[v.a] ^ from_b[v.b]."""
    n, m = code.n, code.m
    cols_a = []  # syndrome mask of Z on qubit i (detected by the a-plane of generators)
    cols_b = []
    for i in range(n):
        sa = sb = 0
        for j, g in enumerate(code.rows):
            sa |= ((g.a >> i) & 1) << j
            sb |= ((g.b >> i) & 1) << j
        cols_a.append(sa)
        cols_b.append(sb)
    # error a-plane couples to generator b-plane and vice versa
    from_a = _doubling_table(cols_b, n)
    from_b = _doubling_table(cols_a, n)
    return from_a, from_b


def _pop32(arr: np.ndarray, pop16: np.ndarray) -> np.ndarray:
    return pop16[arr & np.uint32(0xFFFF)] + pop16[arr >> np.uint32(16)]


@functools.lru_cache(maxsize=None)
def dual_split_table(code: DSCode, limit_n: int = EXHAUSTIVE_LIMIT_N) -> tuple[tuple[int, ...], ...]:
    """Exact (n+1)x(m+1) dual split enumerator by full 4^n sweep."""
    n, m = code.n, code.m
    if n > limit_n:
        raise ExhaustiveLimitError("exhaustive mode infeasible: n=%d exceeds limit %d" % (n, limit_n))
    from_a, from_b = _syndrome_tables(code)
    popn = _pop_table(n)
    pop16 = _pop_table(16)
    all_b = np.arange(1 << n, dtype=np.int64)
    table = np.zeros((n + 1) * (m + 1), dtype=np.int64)
    for a in range(1 << n):
        s_arr = from_b ^ from_a[a]
        wt = popn[a | all_b].astype(np.int64) * (m + 1) + _pop32(s_arr, pop16)
        table += np.bincount(wt, minlength=(n + 1) * (m + 1))
    out = table.reshape(n + 1, m + 1)
    assert int(out.sum()) == 1 << (2 * n)
    return tuple(tuple(int(x) for x in row) for row in out)


def _distance_profile(code: DSCode, table) -> tuple[Optional[int], ...]:
    n, m = code.n, code.m
    harmless = _codeword_weight_counts(code)
    profile: list[Optional[int]] = []
    for r in range(m + 1):
        dr: Optional[int] = None
        for i in range(n + 1):
            excess = table[i][r] - (harmless[i] if r == 0 else 0)
            if excess > 0 and (i, r) != (0, 0):
                dr = i
                break
        profile.append(dr)
    return tuple(profile)


@functools.lru_cache(maxsize=None)
def min_distance(code: DSCode, limit_n: int = EXHAUSTIVE_LIMIT_N) -> DistanceReport:
    """Exact distance, deterministic witness, and the per-syndrome-weight profile."""
    n, m = code.n, code.m
    table = dual_split_table(code, limit_n)
    profile = _distance_profile(code, table)
    d = min(dr + r for r, dr in enumerate(profile) if dr is not None)

    # collect the lexicographically smallest weight-d harmful witness
    from_a, from_b = _syndrome_tables(code)
    popn = _pop_table(n)
    pop16 = _pop_table(16)
    all_b = np.arange(1 << n, dtype=np.int64)
    span = _span_basis(code.rows, n)
    best: Optional[DSVector] = None
    for a in range(1 << n):
        s_arr = from_b ^ from_a[a]
        total = popn[a | all_b].astype(np.int64) + _pop32(s_arr, pop16)
        for b in np.nonzero(total == d)[0]:
            v = F4Vector(n, a, int(b))
            s = int(s_arr[b])
            if s == 0 and _in_span(span, v, n):
                continue
            cand = DSVector(v, s, m)
            if best is None or cand.sort_key() < best.sort_key():
                best = cand
    assert best is not None and best.weight == d
    return DistanceReport(d, best, profile)


def correctable(code: DSCode, t_data: int, t_synd: int) -> bool:
    """True iff every pattern with t_data data errors and t_synd syndrome flips is within the distance guarantee."""
    d = min_distance(code).d
    return t_data + t_synd < d / 2


def _low_weight_ok(rows: Sequence[F4Vector], n: int, target_d: int) -> bool:
    """Check that no harmful dual word has total weight < target_d.

    Complete because a dual word (v, Hv) has total weight >= wt(v): only data
    parts of weight < target_d need scanning.
    """
    m = len(rows)
    syn_masks = [[0] * 4 for _ in range(n)]
    for i in range(n):
        for c in (1, 2, 3):
            e = F4Vector(n, (c & 1) << i, ((c >> 1) & 1) << i)
            s = 0
            for j, g in enumerate(rows):
                s |= trace_inner(g, e) << j
            syn_masks[i][c] = s
    span = _span_basis(rows, n)
    for w in range(1, target_d):
        for positions in itertools.combinations(range(n), w):
            for symbols in itertools.product((1, 2, 3), repeat=w):
                s = 0
                for pos, c in zip(positions, symbols):
                    s ^= syn_masks[pos][c]
                if w + popcount(s) >= target_d:
                    continue
                if s == 0:
                    a = b = 0
                    for pos, c in zip(positions, symbols):
                        a |= (c & 1) << pos
                        b |= ((c >> 1) & 1) << pos
                    if _in_span(span, F4Vector(n, a, b), n):
                        continue
                return False
    return True


def search_generators(code: DSCode, target_d: int, budget: int, seed: int) -> Optional[list[F4Vector]]:
    """Seeded random walk over alternative generating sets of the same group.

    Each candidate is M @ H for a random invertible F2 matrix M (row span
    preserved), accepted when no harmful dual word of weight < target_d
    exists.  Returns the first accepted generator list, or None.
    """
    rng = random.Random(seed)
    n, m = code.n, code.m
    for _ in range(budget):
        mat_rows: list[int] = []
        basis: list[int] = []
        while len(mat_rows) < m:
            r = rng.getrandbits(m)
            v = r
            for bv in basis:
                v = min(v, v ^ bv)
            if v == 0:
                continue
            basis.append(v)
            basis.sort(reverse=True)
            mat_rows.append(r)
        new_rows = []
        for r in mat_rows:
            acc = F4Vector(n)
            for j in range(m):
                if (r >> j) & 1:
                    acc = acc + code.rows[j]
            new_rows.append(acc)
        if _low_weight_ok(new_rows, n, target_d):
            return new_rows
    return None


# --- code files ---


def code_to_dict(code: DSCode, redundant: Sequence[F4Vector] = ()) -> dict:
    out = {"n": code.n, "k": code.k, "stabilizers": code.pauli_rows()}
    if redundant:
        out["redundant"] = [pauli_decode(g) for g in redundant]
    return out


def code_from_dict(obj: dict) -> tuple[DSCode, list[F4Vector]]:
    code = build_ds_code(obj["stabilizers"])
    if code.n != obj["n"] or code.k != obj["k"]:
        raise ValueError(
            "declared parameters [[%d,%d]] disagree with stabilizer list [[%d,%d]]"
            % (obj["n"], obj["k"], code.n, code.k)
        )
    extras = [pauli_encode(s) for s in obj.get("redundant", [])]
    return code, extras


def load_code(path: str) -> tuple[DSCode, list[F4Vector]]:
    with open(path, "r", encoding="utf-8") as fh:
        return code_from_dict(json.load(fh))


def save_code(path: str, code: DSCode, redundant: Sequence[F4Vector] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(code_to_dict(code, redundant), fh, indent=1)
        fh.write("\n")


FIVE_QUBIT_GENERATORS = ("XZZXI", "IXZZX", "XIXZZ", "ZXIXZ")

# X- and Z-type rows read off the [7,4] Hamming parity-check matrix
STEANE_GENERATORS = (
    "IIIXXXX", "IXXIIXX", "XIXIXIX",
    "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ",
)


def five_qubit_code() -> DSCode:
    return build_ds_code(FIVE_QUBIT_GENERATORS)


def steane_code() -> DSCode:
    return build_ds_code(STEANE_GENERATORS)
