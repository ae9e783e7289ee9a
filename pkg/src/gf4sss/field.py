"""Arithmetic in GF(2) and GF(4), plus bit-packed GF(4) vectors.

Elements of GF(4) are stored as two bits ``b1 b0`` with the element equal to
``b1*w + b0``::

    0 -> 00    1 -> 01    w -> 10    W (= w^2 = w + 1) -> 11

so field addition is XOR.  A vector of length ``n`` is packed into a single
integer with coordinate ``i`` occupying bits ``2i`` and ``2i+1``.  GF(2)
elements are plain ints ``0``/``1``.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, Sequence

import numpy as np

SYMBOLS = "01wW"


class F4(IntEnum):
    ZERO = 0
    ONE = 1
    OMEGA = 2
    OMEGABAR = 3

    def __add__(self, other):
        if isinstance(other, int):
            return F4(int(self) ^ (int(other) & 3))
        return NotImplemented

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            return F4(_MUL[int(self)][int(other) & 3])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            return self * F4(other).inverse()
        return NotImplemented

    def inverse(self) -> F4:
        if self is F4.ZERO:
            raise ZeroDivisionError("0 has no inverse in GF(4)")
        return F4(_INV[int(self)])

    def conj(self) -> F4:
        """Frobenius conjugate, ``a -> a**2``."""
        return F4(_MUL[int(self)][int(self)])

    def trace(self) -> int:
        """``Tr(a) = a + a**2`` as a GF(2) bit."""
        return int(self) >> 1

    @property
    def symbol(self) -> str:
        return SYMBOLS[int(self)]

    @classmethod
    def from_symbol(cls, ch: str) -> F4:
        try:
            return cls(SYMBOLS.index(ch))
        except ValueError:
            raise ValueError(f"not a GF(4) symbol: {ch!r} (expected one of {SYMBOLS!r})") from None

    def __str__(self) -> str:
        return self.symbol

    def __repr__(self) -> str:
        return f"F4.{self.name}"


# log/exp over the cyclic group {1, w, W}
_EXP = (1, 2, 3)
_LOG = {1: 0, 2: 1, 3: 2}
_MUL = tuple(
    tuple(0 if a == 0 or b == 0 else _EXP[(_LOG[a] + _LOG[b]) % 3] for b in range(4))
    for a in range(4)
)
_INV = (0, 1, 3, 2)

ZERO, ONE, OMEGA, OMEGABAR = F4.ZERO, F4.ONE, F4.OMEGA, F4.OMEGABAR
ELEMENTS = (ZERO, ONE, OMEGA, OMEGABAR)
NONZERO = (ONE, OMEGA, OMEGABAR)


def f4_add(a: F4, b: F4) -> F4:
    return F4(int(a) ^ int(b))


def f4_mul(a: F4, b: F4) -> F4:
    return F4(_MUL[int(a)][int(b)])


def f4_conj(a: F4) -> F4:
    return F4(a).conj()


def f4_trace(a: F4) -> int:
    return int(a) >> 1


def as_f4(x) -> F4:
    """Coerce an int 0..3, symbol character, or F4 into an :class:`F4`."""
    if isinstance(x, F4):
        return x
    if isinstance(x, str):
        return F4.from_symbol(x)
    return F4(int(x))


# ---------------------------------------------------------------------------
# packed vectors

def low_mask(n: int) -> int:
    """Mask with bit ``2i`` set for every coordinate ``i < n``."""
    return int("01" * n, 2) if n else 0


def full_mask(n: int) -> int:
    return (1 << (2 * n)) - 1


def pack(coords: Iterable) -> int:
    bits = 0
    for i, c in enumerate(coords):
        bits |= int(as_f4(c)) << (2 * i)
    return bits


def pack_symbols(text: str) -> int:
    return pack(F4.from_symbol(ch) for ch in text)


def unpack(bits: int, n: int) -> tuple[F4, ...]:
    return tuple(F4((bits >> (2 * i)) & 3) for i in range(n))


def to_symbols(bits: int, n: int) -> str:
    return "".join(SYMBOLS[(bits >> (2 * i)) & 3] for i in range(n))


def coord(bits: int, i: int) -> F4:
    return F4((bits >> (2 * i)) & 3)


def nonzero_low(bits: int, n: int) -> int:
    """Low bit of each coordinate set iff that coordinate is nonzero."""
    return (bits | (bits >> 1)) & low_mask(n)


def weight(bits: int) -> int:
    n = (bits.bit_length() + 1) // 2
    return nonzero_low(bits, n).bit_count()


def support_mask(bits: int, n: int) -> int:
    """Support as an ``n``-bit mask (bit ``i`` set iff coordinate ``i`` nonzero)."""
    nz = nonzero_low(bits, n)
    mask = 0
    i = 0
    while nz:
        if nz & 1:
            mask |= 1 << i
        nz >>= 2
        i += 1
    return mask


def support(bits: int, n: int) -> frozenset[int]:
    return frozenset(i for i in range(n) if (bits >> (2 * i)) & 3)


def omega_times(bits: int, n: int) -> int:
    """Multiply every coordinate by w: 1 -> w -> W -> 1."""
    lo = bits & low_mask(n)
    hi = (bits >> 1) & low_mask(n)
    return ((lo ^ hi) << 1) | hi


def scale(bits: int, a: F4, n: int) -> int:
    a = int(a)
    if a == 0:
        return 0
    if a == 1:
        return bits
    w = omega_times(bits, n)
    return w if a == 2 else omega_times(w, n)


def conj_vector(bits: int, n: int) -> int:
    """Coordinatewise conjugation (swaps w and W)."""
    return bits ^ ((bits >> 1) & low_mask(n))


def swap_pairs(bits: int, n: int) -> int:
    lo = bits & low_mask(n)
    hi = (bits >> 1) & low_mask(n)
    return (lo << 1) | hi


def trace_pairing(x: int, y: int, n: int) -> int:
    """``sum_i Tr(x_i * conj(y_i))`` computed on packed vectors.

    On the bit pairs this is the symplectic form ``x1*y0 + x0*y1``.
    """
    return (x & swap_pairs(y, n)).bit_count() & 1


# ---------------------------------------------------------------------------
# numpy helpers over arrays of packed vectors (uint64, n <= 32)

def np_weights(arr: np.ndarray, n: int) -> np.ndarray:
    lm = np.uint64(low_mask(n))
    nz = (arr | (arr >> np.uint64(1))) & lm
    return np.bitwise_count(nz).astype(np.int64)


def np_nonzero_pairs(arr: np.ndarray, n: int) -> np.ndarray:
    """Both bits of each nonzero coordinate set; used for c-cover tests."""
    lm = np.uint64(low_mask(n))
    nz = (arr | (arr >> np.uint64(1))) & lm
    return nz | (nz << np.uint64(1))


def np_support_masks(arr: np.ndarray, n: int) -> np.ndarray:
    """Compress packed vectors to ``n``-bit support masks."""
    out = np.zeros(arr.shape, dtype=np.uint64)
    for i in range(n):
        c = (arr >> np.uint64(2 * i)) & np.uint64(3)
        out |= (c != 0).astype(np.uint64) << np.uint64(i)
    return out


def np_coord(arr: np.ndarray, i: int) -> np.ndarray:
    return ((arr >> np.uint64(2 * i)) & np.uint64(3)).astype(np.int64)


def np_span(generators: Sequence[int]) -> np.ndarray:
    """All GF(2)-combinations of ``generators``, indexed by combination.

    Entry ``j`` is the XOR of the generators selected by the bits of ``j``.
    """
    words = np.zeros(1, dtype=np.uint64)
    for g in generators:
        words = np.concatenate([words, words ^ np.uint64(g)])
    return words
