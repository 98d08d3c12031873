"""Exact GF(4)/GF(2) arithmetic on packed bit-planes, and the Pauli encoding.

A length-n vector over GF(4) = {0, 1, w, w^2} (w^2 = w + 1) is stored as two
Python ints `a`, `b` where coordinate i holds the element a_i + w*b_i.  Under
the Pauli correspondence I<->0, X<->1, Z<->w, Y<->w^2 this makes the X-plane
and Z-plane of an error directly addressable, addition a pair of XORs, and the
trace inner product a popcount of the symplectic form.

Single coordinates travel as 2-bit ints a_i + 2*b_i, so the symbol order is
I=0 < X=1 < Z=2 < Y=3; that order is also the tie-breaking order used for
deterministic witnesses elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

PAULI_CHARS = "IXZY"
GF4_CHARS = "01wW"

_SYMBOL_OF_CHAR = {c: i for i, c in enumerate(PAULI_CHARS)}
_SYMBOL_OF_CHAR.update({c: i for i, c in enumerate(GF4_CHARS)})


def parity(x: int) -> int:
    return x.bit_count() & 1


def popcount(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True)
class F4Vector:
    """Vector in F4^n as packed planes; immutable and hashable."""

    n: int
    a: int = 0
    b: int = 0

    def __post_init__(self):
        mask = (1 << self.n) - 1
        if self.a & ~mask or self.b & ~mask:
            raise ValueError("plane bits outside length %d" % self.n)

    def __add__(self, other: "F4Vector") -> "F4Vector":
        if self.n != other.n:
            raise ValueError("length mismatch: %d vs %d" % (self.n, other.n))
        return F4Vector(self.n, self.a ^ other.a, self.b ^ other.b)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return ((self.a >> i) & 1) | (((self.b >> i) & 1) << 1)

    def symbols(self) -> tuple[int, ...]:
        return tuple(self[i] for i in range(self.n))

    @property
    def weight(self) -> int:
        return popcount(self.a | self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def conj(self) -> "F4Vector":
        # conjugation swaps w and w^2: a + wb -> (a+b) + wb
        return F4Vector(self.n, self.a ^ self.b, self.b)

    def scale(self, c: int) -> "F4Vector":
        """Multiply every coordinate by the GF(4) element c (2-bit encoding)."""
        if c == 0:
            return F4Vector(self.n)
        if c == 1:
            return self
        if c == 2:  # w * (a + wb) = b + w(a+b)
            return F4Vector(self.n, self.b, self.a ^ self.b)
        if c == 3:  # w^2 * (a + wb) = (a+b) + wa
            return F4Vector(self.n, self.a ^ self.b, self.a)
        raise ValueError("not a GF(4) element: %r" % (c,))

    @classmethod
    def from_symbols(cls, syms) -> "F4Vector":
        a = b = 0
        count = 0
        for i, s in enumerate(syms):
            a |= (s & 1) << i
            b |= ((s >> 1) & 1) << i
            count += 1
        return cls(count, a, b)


def trace_inner(x: F4Vector, y: F4Vector) -> int:
    """Tr(sum_i x_i * conj(y_i)) in {0,1}; 0 iff the Pauli operators commute."""
    if x.n != y.n:
        raise ValueError("length mismatch: %d vs %d" % (x.n, y.n))
    return parity((x.a & y.b) ^ (x.b & y.a))


@dataclass(frozen=True)
class DSVector:
    """Joint data/syndrome word: an element of F4^n x F2^m."""

    data: F4Vector
    synd: int
    m: int

    def __post_init__(self):
        if self.synd & ~((1 << self.m) - 1):
            raise ValueError("syndrome bits outside length %d" % self.m)

    @property
    def n(self) -> int:
        return self.data.n

    @property
    def weight(self) -> int:
        return self.data.weight + popcount(self.synd)

    def __add__(self, other: "DSVector") -> "DSVector":
        if self.m != other.m:
            raise ValueError("syndrome length mismatch: %d vs %d" % (self.m, other.m))
        return DSVector(self.data + other.data, self.synd ^ other.synd, self.m)

    def sort_key(self) -> tuple:
        """Deterministic ordering: weight, then data symbols (I<X<Z<Y), then syndrome bits."""
        synd_bits = tuple((self.synd >> j) & 1 for j in range(self.m))
        return (self.weight, self.data.symbols(), synd_bits)


def star_inner(x: DSVector, y: DSVector) -> int:
    """Trace inner product on the data part plus the F2 dot product on the syndrome part."""
    if x.m != y.m:
        raise ValueError("syndrome length mismatch: %d vs %d" % (x.m, y.m))
    return trace_inner(x.data, y.data) ^ parity(x.synd & y.synd)


def pauli_encode(s: str) -> F4Vector:
    """Parse a string over {I,X,Y,Z} or {0,1,w,W} into an F4Vector."""
    a = b = 0
    for i, ch in enumerate(s):
        try:
            sym = _SYMBOL_OF_CHAR[ch]
        except KeyError:
            raise ValueError("invalid symbol %r at position %d" % (ch, i)) from None
        a |= (sym & 1) << i
        b |= ((sym >> 1) & 1) << i
    return F4Vector(len(s), a, b)


def pauli_decode(v: F4Vector, alphabet: str = PAULI_CHARS) -> str:
    return "".join(alphabet[v[i]] for i in range(v.n))
