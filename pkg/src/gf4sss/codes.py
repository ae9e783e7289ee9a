"""Additive and linear codes over GF(2)/GF(4).

Every code is reduced to a set of GF(2) generators of packed vectors: an
additive code uses its rows as they are, a GF(4)-linear code uses its rows
together with ``w * row``.  Codeword enumeration, weight statistics and
covering relations all run on that single representation, vectorised with
numpy (coordinate ``i`` of a word lives in bits ``2i, 2i+1`` of a uint64).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from dataclasses import field as dc_field
from functools import cached_property
from typing import Iterator, Literal, Sequence

import numpy as np

from . import field as f4
from .errors import (
    BudgetExceeded,
    CodeFormatError,
    DependentRows,
    LengthMismatch,
    ZeroCode,
)
from .field import F4
from .linalg import gf2_nullspace, gf2_rank, gf4_nullspace

MAX_ENUM_DIM = 26
MAX_LENGTH = 32

Kind = Literal["additive", "linear"]
FieldName = Literal["gf2", "gf4"]


@dataclass(frozen=True)
class Codeword:
    """A vector of ``n`` GF(4) symbols, stored packed in ``bits``."""

    bits: int
    n: int

    @classmethod
    def from_coords(cls, coords: Sequence) -> Codeword:
        return cls(f4.pack(coords), len(coords))

    @classmethod
    def from_symbols(cls, text: str) -> Codeword:
        return cls(f4.pack_symbols(text), len(text))

    @property
    def coords(self) -> tuple[F4, ...]:
        return f4.unpack(self.bits, self.n)

    @property
    def weight(self) -> int:
        return f4.nonzero_low(self.bits, self.n).bit_count()

    @property
    def support(self) -> frozenset[int]:
        return f4.support(self.bits, self.n)

    def __getitem__(self, i: int) -> F4:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return f4.coord(self.bits, i)

    def __add__(self, other: Codeword) -> Codeword:
        _check_len(self, other)
        return Codeword(self.bits ^ other.bits, self.n)

    def scaled(self, a) -> Codeword:
        return Codeword(f4.scale(self.bits, f4.as_f4(a), self.n), self.n)

    def __str__(self) -> str:
        return f4.to_symbols(self.bits, self.n)


@dataclass(frozen=True)
class WeightDistribution:
    """Counts ``A_0, ..., A_n``."""

    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if 0 <= i < len(self.counts) else 0

    def nonzero_weights(self) -> list[int]:
        return [i for i, a in enumerate(self.counts) if a and i > 0]

    @property
    def minimum_distance(self) -> int:
        ws = self.nonzero_weights()
        if not ws:
            raise ZeroCode("code has no nonzero codewords")
        return ws[0]

    def as_dict(self) -> dict[int, int]:
        return {i: a for i, a in enumerate(self.counts) if a}

    @classmethod
    def from_dict(cls, n: int, counts: dict[int, int]) -> WeightDistribution:
        return cls(tuple(counts.get(i, 0) for i in range(n + 1)))

    def polynomial(self, var: str = "y") -> str:
        terms = []
        for i, a in enumerate(self.counts):
            if not a:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                coef = "" if a == 1 else str(a)
                terms.append(f"{coef}{var}" + (f"^{i}" if i > 1 else ""))
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class Code:
    """A code given by generator rows (packed vectors).

    ``kind='additive'`` means rows are combined over GF(2); ``'linear'``
    means over the code's own field.
    """

    kind: Kind
    field: FieldName
    n: int
    rows: tuple[int, ...]
    name: str | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in ("additive", "linear"):
            raise CodeFormatError(f"unknown kind {self.kind!r}")
        if self.field not in ("gf2", "gf4"):
            raise CodeFormatError(f"unknown field {self.field!r}")
        if self.kind == "additive" and self.field != "gf4":
            raise CodeFormatError("additive codes are defined over gf4")
        if not 0 < self.n <= MAX_LENGTH:
            raise CodeFormatError(f"length must be in 1..{MAX_LENGTH}, got {self.n}")
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        full = f4.full_mask(self.n)
        for r in self.rows:
            if r < 0 or r & ~full:
                raise CodeFormatError("row longer than code length")
            if self.field == "gf2" and r & ~f4.low_mask(self.n):
                raise CodeFormatError("gf2 code row contains w or W")
        if gf2_rank(self.generators) != len(self.generators):
            raise DependentRows(
                f"rows of {self.name or 'code'} are not independent over "
                f"{'GF(2)' if self.kind == 'additive' or self.field == 'gf2' else 'GF(4)'}"
            )

    @classmethod
    def from_symbol_rows(
        cls, rows: Sequence[str], kind: Kind = "additive", field: FieldName = "gf4", name: str | None = None
    ) -> Code:
        rows = [r.replace(" ", "") for r in rows]
        if not rows:
            raise CodeFormatError("need at least one row; use Code(..., rows=()) for the zero code")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise CodeFormatError("rows have different lengths")
        return cls(kind, field, n, tuple(f4.pack_symbols(r) for r in rows), name)

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def q(self) -> int:
        return 2 if self.field == "gf2" else 4

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """GF(2) generators of the codeword set."""
        if self.kind == "linear" and self.field == "gf4":
            return self.rows + tuple(f4.omega_times(r, self.n) for r in self.rows)
        return self.rows

    @property
    def size(self) -> int:
        return 1 << len(self.generators)

    def as_additive(self) -> Code:
        """Same codeword set viewed as an additive code over GF(4)."""
        return Code("additive", "gf4", self.n, self.generators, self.name)

    def row_coords(self) -> list[tuple[F4, ...]]:
        return [f4.unpack(r, self.n) for r in self.rows]

    def column(self, i: int) -> tuple[F4, ...]:
        return tuple(f4.coord(r, i) for r in self.rows)

    def codeword_array(self) -> np.ndarray:
        """All codewords as packed uint64, in combination-index order."""
        return self._codewords

    @cached_property
    def _codewords(self) -> np.ndarray:
        if len(self.generators) > MAX_ENUM_DIM:
            raise BudgetExceeded(
                f"{self.name or 'code'} has 2^{len(self.generators)} codewords; "
                f"enumeration budget is 2^{MAX_ENUM_DIM}"
            )
        arr = f4.np_span(self.generators)
        arr.setflags(write=False)
        return arr

    @cached_property
    def _weights(self) -> np.ndarray:
        w = f4.np_weights(self._codewords, self.n)
        w.setflags(write=False)
        return w

    def codeword_weights(self) -> np.ndarray:
        return self._weights

    def codeword_set(self) -> frozenset[int]:
        return frozenset(int(x) for x in self._codewords)

    def encode(self, coeffs: Sequence) -> Codeword:
        """``sum_j coeffs[j] * rows[j]``; coefficients in GF(2) or GF(4)."""
        if len(coeffs) != self.k:
            raise LengthMismatch(f"expected {self.k} coefficients, got {len(coeffs)}")
        bits = 0
        for c, r in zip(coeffs, self.rows):
            bits ^= f4.scale(r, f4.as_f4(c), self.n)
        return Codeword(bits, self.n)

    def __contains__(self, word: Codeword) -> bool:
        if word.n != self.n:
            return False
        # membership: word is in the GF(2)-span of the generators
        return gf2_rank(self.generators + (word.bits,)) == len(self.generators)

    def __str__(self) -> str:
        return self.name or f"({self.n}, 2^{len(self.generators)}) {self.kind} code"


def _check_len(a: Codeword, b: Codeword) -> None:
    if a.n != b.n:
        raise LengthMismatch(f"lengths differ: {a.n} vs {b.n}")


def enumerate_codewords(code: Code) -> Iterator[Codeword]:
    for bits in code.codeword_array():
        yield Codeword(int(bits), code.n)


def weight_distribution(code: Code) -> WeightDistribution:
    counts = np.bincount(code.codeword_weights(), minlength=code.n + 1)
    return WeightDistribution(tuple(int(c) for c in counts))


def minimum_distance(code: Code) -> int:
    w = code.codeword_weights()
    nz = w[w > 0]
    if nz.size == 0:
        raise ZeroCode(f"{code} has no nonzero codewords")
    return int(nz.min())


def trace_inner_product(x: Codeword, y: Codeword) -> int:
    """``sum_i Tr(x_i * conj(y_i))`` in GF(2)."""
    _check_len(x, y)
    acc = 0
    for a, b in zip(x.coords, y.coords):
        acc ^= (a * b.conj()).trace()
    return acc


def euclidean_inner_product(x: Codeword, y: Codeword) -> F4:
    _check_len(x, y)
    acc = F4.ZERO
    for a, b in zip(x.coords, y.coords):
        acc = acc + a * b
    return acc


def dual_code(code: Code) -> Code:
    """Trace dual for additive codes, Euclidean dual for linear codes."""
    n = code.n
    name = f"{code.name}^perp" if code.name else None
    if code.kind == "additive":
        # x is in the dual iff parity(x & swap(g)) = 0 for each generator g
        eqs = [f4.swap_pairs(g, n) for g in code.generators]
        basis = gf2_nullspace(eqs, 2 * n)
        return Code("additive", "gf4", n, tuple(sorted(basis)), name)
    basis = gf4_nullspace(code.row_coords(), n)
    return Code("linear", code.field, n, tuple(f4.pack(v) for v in basis), name)


def is_self_dual(code: Code) -> bool:
    dual = dual_code(code)
    if dual.size != code.size:
        return False
    return code.codeword_set() == dual.codeword_set()


def c_cover(a: Codeword, b: Codeword) -> bool:
    """True iff ``a`` is c-covered by ``b``: every nonzero ``a_i`` equals ``b_i``."""
    _check_len(a, b)
    nz = f4.nonzero_low(a.bits, a.n)
    nz |= nz << 1
    return not ((a.bits ^ b.bits) & nz)


def support_cover(a: Codeword, b: Codeword) -> bool:
    """True iff ``a`` covers ``b``: ``supp(b)`` is a subset of ``supp(a)``."""
    _check_len(a, b)
    sa = f4.nonzero_low(a.bits, a.n)
    sb = f4.nonzero_low(b.bits, b.n)
    return not (sb & ~sa)


def minimal_codewords(code: Code, notion: Literal["support", "c_cover"] = "support") -> list[Codeword]:
    """Nonzero codewords that are minimal under the given covering notion.

    ``support``: the word covers (by support) only its scalar multiples.
    ``c_cover``: the word c-covers no other nonzero codeword.
    """
    arr = code.codeword_array()
    n = code.n
    words = arr[arr != 0]
    if notion == "support":
        masks = f4.np_support_masks(words, n)
        out = []
        for w, m in zip(words.tolist(), masks.tolist()):
            inside = words[(masks & np.uint64(~m & ((1 << n) - 1))) == 0]
            multiples = {f4.scale(w, a, n) for a in f4.NONZERO}
            if all(int(v) in multiples for v in inside):
                out.append(Codeword(w, n))
        return out
    if notion == "c_cover":
        nzp = f4.np_nonzero_pairs(words, n)
        out = []
        for w in words.tolist():
            covered = ((words ^ np.uint64(w)) & nzp) == 0
            if int(covered.sum()) == 1:  # only itself
                out.append(Codeword(w, n))
        return out
    raise ValueError(f"unknown notion {notion!r}")


# ---------------------------------------------------------------------------
# code file format

def parse_code(text: str, name: str | None = None) -> Code:
    header: dict[str, str] = {}
    rows: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line:
            key, _, value = line.partition(":")
            key = key.strip().lower()
            if key not in ("kind", "field", "n", "name"):
                raise CodeFormatError(f"line {lineno}: unknown header {key!r}")
            header[key] = value.strip()
            continue
        if any(ch not in f4.SYMBOLS for ch in line):
            raise CodeFormatError(f"line {lineno}: row has symbols outside {{0,1,w,W}}: {line!r}")
        rows.append(line)
    missing = {"kind", "field", "n"} - header.keys()
    if missing:
        raise CodeFormatError(f"missing header field(s): {', '.join(sorted(missing))}")
    try:
        n = int(header["n"])
    except ValueError:
        raise CodeFormatError(f"n is not an integer: {header['n']!r}") from None
    for r in rows:
        if len(r) != n:
            raise CodeFormatError(f"row {r!r} has length {len(r)}, expected {n}")
    return Code(
        header["kind"], header["field"], n,  # type: ignore[arg-type]
        tuple(f4.pack_symbols(r) for r in rows),
        header.get("name", name),
    )


def format_code(code: Code) -> str:
    lines = []
    if code.name:
        lines.append(f"# {code.name}")
    lines += [f"kind: {code.kind}", f"field: {code.field}", f"n: {code.n}"]
    lines += [f4.to_symbols(r, code.n) for r in code.rows]
    return "\n".join(lines) + "\n"


def read_code(path: str | os.PathLike) -> Code:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_code(text, name=os.path.basename(os.fspath(path)))


def write_code(code: Code, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_code(code))
