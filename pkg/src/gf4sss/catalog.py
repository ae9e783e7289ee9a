"""Named codes and published weight enumerators."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .codes import Code, WeightDistribution, format_code, weight_distribution
from .errors import UnknownName


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    code: Code | None
    enumerator: WeightDistribution | None
    provenance: str

    def __post_init__(self):
        if self.code is None and self.enumerator is None:
            raise ValueError(f"catalog entry {self.name} has neither code nor enumerator")

    @property
    def n(self) -> int:
        return self.code.n if self.code is not None else self.enumerator.n

    def weights(self) -> WeightDistribution:
        """Stored enumerator, or the computed one when only a matrix is known."""
        if self.enumerator is not None:
            return self.enumerator
        return weight_distribution(self.code)


HEXACODE_LINEAR_ROWS = (
    "1001ww",
    "010w1w",
    "001ww1",
)

# rows interleaved with their w-multiples
HEXACODE_ADDITIVE_ROWS = (
    "1001ww",
    "w00wWW",
    "010w1w",
    "0w0WwW",
    "001ww1",
    "00wWWw",
)

E12_ROWS = (
    "111100000000",
    "001111000000",
    "000011110000",
    "000000111100",
    "000000001111",
    "101010101010",
)

QC12_ROWS = (
    "000000111111",
    "000000wwwwww",
    "111111000000",
    "wwwwww000000",
    "0001wW0001wW",
    "000wW1000wW1",
    "1Ww0001Ww000",
    "w1W000w1W000",
    "0001WwwW1000",
    "000w1W1wW000",
    "1wW000000Ww1",
    "W1w0000001Ww",
)

# x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, generator of the cyclic [23,12,7] code
_GOLAY23_POLY = (0, 2, 4, 5, 6, 10, 11)


def _golay24_rows() -> tuple[str, ...]:
    rows = []
    for shift in range(12):
        bits = [0] * 24
        for e in _GOLAY23_POLY:
            bits[shift + e] = 1
        bits[23] = sum(bits[:23]) % 2  # overall parity
        rows.append("".join(map(str, bits)))
    return tuple(rows)


HEXACODE_ENUM = {0: 1, 4: 45, 6: 18}
QC12_ENUM = {0: 1, 6: 396, 8: 1485, 10: 1980, 12: 234}
E12_ENUM = {0: 1, 4: 45, 6: 216, 8: 1755, 10: 1800, 12: 279}
GOLAY24_ENUM = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
S18_ENUM = {0: 1, 8: 2754, 10: 18360, 12: 77112, 14: 110160, 16: 50949, 18: 2808}


@lru_cache(maxsize=None)
def _build(name: str) -> CatalogEntry:
    if name == "hexacode_linear":
        code = Code.from_symbol_rows(HEXACODE_LINEAR_ROWS, "linear", "gf4", name)
        return CatalogEntry(name, code, WeightDistribution.from_dict(6, HEXACODE_ENUM),
                            "[6,3,4] hexacode over GF(4), systematic generator")
    if name == "hexacode_additive":
        code = Code.from_symbol_rows(HEXACODE_ADDITIVE_ROWS, "additive", "gf4", name)
        return CatalogEntry(name, code, WeightDistribution.from_dict(6, HEXACODE_ENUM),
                            "(6,2^6) additive form of the hexacode: rows and their w-multiples")
    if name == "e12":
        code = Code.from_symbol_rows(E12_ROWS, "linear", "gf4", name)
        return CatalogEntry(name, code, WeightDistribution.from_dict(12, E12_ENUM),
                            "[12,6,4] self-dual code E12 (binary generator, GF(4) span)")
    if name == "qc12":
        code = Code.from_symbol_rows(QC12_ROWS, "additive", "gf4", name)
        return CatalogEntry(name, code, WeightDistribution.from_dict(12, QC12_ENUM),
                            "(12,2^12,6) extremal even additive self-dual dodecacode")
    if name == "golay24":
        code = Code.from_symbol_rows(_golay24_rows(), "linear", "gf2", name)
        return CatalogEntry(name, code, WeightDistribution.from_dict(24, GOLAY24_ENUM),
                            "[24,12,8] extended binary Golay code: cyclic [23,12,7] code plus parity")
    if name == "s18":
        return CatalogEntry(name, None, WeightDistribution.from_dict(18, S18_ENUM),
                            "(18,2^18,8) extremal even additive self-dual code; enumerator only")
    raise UnknownName(f"unknown catalog code {name!r}; known: {', '.join(NAMES)}")


NAMES = ("hexacode_linear", "hexacode_additive", "e12", "qc12", "golay24", "s18")


def get(name: str) -> CatalogEntry:
    if name not in NAMES:
        raise UnknownName(f"unknown catalog code {name!r}; known: {', '.join(NAMES)}")
    return _build(name)


def export(name: str) -> str:
    """Catalog entry in the code file format."""
    entry = get(name)
    if entry.code is None:
        raise UnknownName(f"{name} has no generator matrix to export")
    return format_code(entry.code)

