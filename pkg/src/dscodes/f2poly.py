"""Polynomials over GF(2) packed into Python ints, plus bit-matrix rank.

Bit i of an int holds the coefficient of x^i.  Everything is exact integer
work: carry-less products, euclidean division, Rabin irreducibility, the
quadratic-residue factor split of x^p + 1, and the rank of a list of
bit-packed rows.  These are the raw ingredients for the cyclic-code
constructions; nothing here knows about codes.
"""

from __future__ import annotations

import math

__all__ = [
    "pdeg",
    "pmul",
    "pdivmod",
    "pmod",
    "pgcd",
    "pmulmod",
    "reciprocal",
    "rotl",
    "is_irreducible",
    "irreducible_poly",
    "multiplicative_order",
    "is_prime",
    "qr_polys",
    "f2_rank",
    "poly_from_string",
    "poly_to_string",
]


def pdeg(a: int) -> int:
    """Degree of a packed polynomial; the zero polynomial gets -1."""
    return a.bit_length() - 1


def pmul(a: int, b: int) -> int:
    """Carry-less product."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def pdivmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = pdeg(b)
    q = 0
    while pdeg(a) >= db:
        shift = pdeg(a) - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def pmod(a: int, b: int) -> int:
    return pdivmod(a, b)[1]


def pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, pmod(a, b)
    return a


def pmulmod(a: int, b: int, f: int) -> int:
    return pmod(pmul(a, b), f)


def reciprocal(a: int) -> int:
    """Coefficient reversal x^deg(a) * a(1/x); a must be nonzero."""
    if a == 0:
        raise ValueError("the zero polynomial has no reciprocal")
    d = pdeg(a)
    r = 0
    for i in range(d + 1):
        if (a >> i) & 1:
            r |= 1 << (d - i)
    return r


def rotl(v: int, k: int, n: int) -> int:
    """v * x^k mod (x^n + 1): cyclic left shift of n packed coordinates."""
    if n <= 0:
        raise ValueError("need at least one coordinate")
    if v >> n:
        raise ValueError("value has bits beyond coordinate %d" % (n - 1))
    k %= n
    if k == 0:
        return v
    return ((v << k) | (v >> (n - k))) & ((1 << n) - 1)


def _frobenius(x0: int, steps: int, f: int) -> int:
    # x0^(2^steps) mod f, by repeated squaring
    for _ in range(steps):
        x0 = pmulmod(x0, x0, f)
    return x0


def is_irreducible(f: int) -> bool:
    """Rabin's test: x^(2^d) = x mod f, and no proper Frobenius fixed step."""
    d = pdeg(f)
    if d <= 0:
        return False
    x0 = pmod(2, f)
    if _frobenius(x0, d, f) != x0:
        return False
    for r in _prime_divisors(d):
        y = _frobenius(x0, d // r, f)
        if pgcd(y ^ x0, f) != 1:
            return False
    return True


def _prime_divisors(d: int) -> list[int]:
    out = []
    t = 2
    while t * t <= d:
        if d % t == 0:
            out.append(t)
            while d % t == 0:
                d //= t
        t += 1
    if d > 1:
        out.append(d)
    return out


def irreducible_poly(d: int) -> int:
    """Smallest (as packed integer) irreducible polynomial of degree d."""
    if d < 1:
        raise ValueError("need degree >= 1")
    for c in range(1 << d, 1 << (d + 1)):
        if is_irreducible(c):
            return c
    raise AssertionError("no irreducible polynomial of degree %d found" % d)


def multiplicative_order(a: int, n: int) -> int:
    if n < 2 or math.gcd(a, n) != 1:
        raise ValueError("order needs gcd(a, n) = 1 and n >= 2")
    order, v = 1, a % n
    while v != 1:
        v = v * a % n
        order += 1
    return order


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    t = 2
    while t * t <= p:
        if p % t == 0:
            return False
        t += 1
    return True


def _field_pow(a: int, e: int, f: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = pmulmod(r, a, f)
        a = pmulmod(a, a, f)
        e >>= 1
    return r


def qr_polys(p: int) -> tuple[int, int]:
    """The two quadratic-residue factors of x^p + 1 over GF(2), sorted.

    Needs p prime with 2 a square mod p (p = 1 or 7 mod 8), which makes the
    residue set a union of 2-cyclotomic cosets and forces both factors to
    have binary coefficients.  Returns (q1, q2) with q1 < q2 as packed ints
    and (x + 1) * q1 * q2 = x^p + 1.
    """
    if not is_prime(p):
        raise ValueError("p = %d is not prime" % p)
    if p % 8 not in (1, 7):
        raise ValueError("2 is not a quadratic residue mod %d (need p = 1 or 7 mod 8)" % p)
    m = multiplicative_order(2, p)
    f = irreducible_poly(m)
    unit_order = (1 << m) - 1
    alpha = 0
    for c in range(2, 1 << m):
        a = _field_pow(c, unit_order // p, f)
        if a != 1:
            alpha = a
            break
    assert alpha and _field_pow(alpha, p, f) == 1
    residues = {pow(r, 2, p) for r in range(1, p)}
    halves = []
    for roots in (residues, set(range(1, p)) - residues):
        coeffs = [1]
        for r in roots:
            root = _field_pow(alpha, r, f)
            nxt = [0] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i] ^= pmulmod(c, root, f)
                nxt[i + 1] ^= c
            coeffs = nxt
        assert all(c in (0, 1) for c in coeffs)
        halves.append(sum(c << i for i, c in enumerate(coeffs)))
    lo, hi = sorted(halves)
    assert pmul(3, pmul(lo, hi)) == (1 << p) | 1
    return lo, hi


def f2_rank(rows) -> int:
    """Rank over GF(2) of an iterable of bit-packed rows."""
    basis: list[int] = []
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def poly_from_string(s: str) -> int:
    """Parse a coefficient string, lowest power first ("11" is x + 1)."""
    if not s or any(c not in "01" for c in s):
        raise ValueError("coefficient strings use only 0 and 1 and are nonempty")
    return sum(1 << i for i, c in enumerate(s) if c == "1")


def poly_to_string(a: int, width: int = 0) -> str:
    """Inverse of poly_from_string, zero-padded on the high end to width."""
    if a < 0:
        raise ValueError("packed polynomials are nonnegative")
    width = max(width, a.bit_length(), 1)
    return "".join("1" if (a >> i) & 1 else "0" for i in range(width))
