"""t-designs with repeated blocks, generalized designs of type 3, and
Assmus-Mattson style checks on codes.

Blocks built from a code are taken per codeword, so a support shared by
several codewords appears with that multiplicity.  :func:`verify_t_design`
reports the raw lambda and the lambda after dividing out the g.c.d. of the
block multiplicities.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import field as f4
from .codes import (
    Code,
    Codeword,
    WeightDistribution,
    dual_code,
    minimum_distance,
    weight_distribution,
)
from .errors import (
    EmptyBlockSet,
    MixedWeights,
    NonIntegral,
    PreconditionError,
    UnsupportedLength,
)

_CHUNK = 1024


@dataclass(frozen=True)
class BlockMultiset:
    v: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))
        sizes = {len(b) for b in self.blocks}
        if len(sizes) > 1:
            raise MixedWeights(f"blocks have different sizes {sorted(sizes)}")
        for b in self.blocks:
            if any(not 0 <= p < self.v for p in b):
                raise ValueError(f"block {sorted(b)} has points outside 0..{self.v - 1}")

    @property
    def kb(self) -> int:
        return len(self.blocks[0]) if self.blocks else 0

    def multiplicities(self) -> Counter:
        return Counter(self.blocks)

    def masks(self) -> np.ndarray:
        return np.array([sum(1 << p for p in b) for b in self.blocks], dtype=np.uint64)

    @classmethod
    def from_codewords(cls, words: Iterable[Codeword], n: int | None = None) -> BlockMultiset:
        words = list(words)
        if n is None:
            n = words[0].n if words else 0
        return cls(n, tuple(w.support for w in words))

    @classmethod
    def from_code_weight(cls, code: Code, w: int) -> BlockMultiset:
        arr = code.codeword_array()[code.codeword_weights() == w]
        return cls(code.n, tuple(f4.support(int(x), code.n) for x in arr))


@dataclass(frozen=True)
class DesignParams:
    t: int
    v: int
    kb: int
    lam: int

    def __post_init__(self):
        if not 0 <= self.t <= self.kb <= self.v:
            raise ValueError(f"need 0 <= t <= k <= v, got t={self.t} k={self.kb} v={self.v}")
        if self.lam < 1:
            raise ValueError("lambda must be positive")


@dataclass(frozen=True)
class DesignCheck:
    """Outcome of a successful t-design verification."""

    t: int
    v: int
    kb: int
    lam: int                 # per block, repeats counted
    num_blocks: int
    distinct_blocks: int
    multiplicity_gcd: int

    @property
    def reduced_lam(self) -> int:
        return self.lam // self.multiplicity_gcd

    @property
    def params(self) -> DesignParams:
        return DesignParams(self.t, self.v, self.kb, self.lam)


def _subset_masks(v: int, t: int) -> Iterable[np.ndarray]:
    combos = itertools.combinations(range(v), t)
    while True:
        chunk = list(itertools.islice(combos, _CHUNK))
        if not chunk:
            return
        yield np.array([sum(1 << p for p in c) for c in chunk], dtype=np.uint64)


def verify_t_design(blocks: BlockMultiset, t: int) -> DesignCheck | None:
    """Return the design parameters if every t-subset lies in the same number
    of blocks (with multiplicity), else ``None``."""
    if not blocks.blocks:
        raise EmptyBlockSet("no blocks")
    if not 0 <= t <= blocks.kb:
        raise PreconditionError(f"t={t} outside 0..{blocks.kb}")
    mult = blocks.multiplicities()
    distinct = list(mult)
    bmasks = np.array([sum(1 << p for p in b) for b in distinct], dtype=np.uint64)
    bmult = np.array([mult[b] for b in distinct], dtype=np.int64)
    lam = None
    for tmasks in _subset_masks(blocks.v, t):
        inside = (bmasks[None, :] & tmasks[:, None]) == tmasks[:, None]
        counts = inside.astype(np.int64) @ bmult
        if lam is None:
            lam = int(counts[0])
        if np.any(counts != lam):
            return None
    g = 0
    for m in mult.values():
        g = math.gcd(g, m)
    return DesignCheck(t, blocks.v, blocks.kb, lam, len(blocks.blocks), len(distinct), g)


def _exact_div(num: int, den: int, what: str) -> int:
    if den == 0 or num % den:
        raise NonIntegral(f"{what}: {num}/{den} is not an integer")
    return num // den


def lambda_convert(p: DesignParams, i: int) -> int:
    """``lambda_i = lambda * C(v-i, t-i) / C(k-i, t-i)`` for ``0 <= i <= t``."""
    if not 0 <= i <= p.t:
        raise PreconditionError(f"i={i} outside 0..{p.t}")
    return _exact_div(
        p.lam * math.comb(p.v - i, p.t - i), math.comb(p.kb - i, p.t - i),
        f"lambda_{i} of {p.t}-({p.v},{p.kb},{p.lam})",
    )


def lambda_from_block_count(num_blocks: int, t: int, v: int, kb: int) -> int:
    """Invert ``b = lambda_t * C(v,t) / C(k,t)`` for lambda_t."""
    return _exact_div(num_blocks * math.comb(kb, t), math.comb(v, t), f"lambda_{t} from b={num_blocks}")


def lambda1_from_enumerator(count: int, w: int, n: int) -> int:
    """Point-block double counting: ``lambda_1 = A_w * w / n``."""
    return _exact_div(count * w, n, f"lambda_1 for A_{w}={count}, n={n}")


def verify_generalized_design(words: Sequence[Codeword], t: int, n: int | None = None) -> int | None:
    """``mu_t`` if every weight-t vector of GF(4)^n is c-covered by the same
    number of ``words``, else ``None``."""
    words = list(words)
    if not words:
        raise EmptyBlockSet("no words")
    n = words[0].n if n is None else n
    ws = {w.weight for w in words}
    if len(ws) > 1:
        raise MixedWeights(f"words have weights {sorted(ws)}")
    if not 0 <= t <= n:
        raise PreconditionError(f"t={t} outside 0..{n}")
    arr = np.array([w.bits for w in words], dtype=np.uint64)
    coords = np.stack([f4.np_coord(arr, i) for i in range(n)], axis=1)
    mu = None
    # a weight-t vector e is c-covered by w iff w agrees with e on supp(e);
    # so for each t-set of positions count the words per value pattern
    for pos in itertools.combinations(range(n), t):
        key = np.zeros(len(words), dtype=np.int64)
        for p in pos:
            key = key * 4 + coords[:, p]
        hist = np.bincount(key, minlength=4 ** t)
        for vals in itertools.product((1, 2, 3), repeat=t):
            idx = 0
            for x in vals:
                idx = idx * 4 + x
            c = int(hist[idx])
            if mu is None:
                mu = c
            elif c != mu:
                return None
    return mu


def support_multiplicities(words: Iterable[Codeword]) -> Counter:
    """Map repetition number -> how many distinct supports repeat that often."""
    return Counter(Counter(w.support for w in words).values())


def _classic_w(n: int, q: int, d: int) -> int:
    # largest w <= n with w - floor((w + q - 2) / (q - 1)) < d
    for w in range(n, -1, -1):
        if w - (w + q - 2) // (q - 1) < d:
            return w
    return 0


def words_of_weight(code: Code, w: int) -> list[Codeword]:
    arr = code.codeword_array()[code.codeword_weights() == w]
    return [Codeword(int(x), code.n) for x in arr]


@dataclass(frozen=True)
class AMReport:
    t: int
    n: int
    d: int
    d_dual: int
    s: int
    hypothesis: bool
    guaranteed_code: tuple[int, ...]
    guaranteed_dual: tuple[int, ...]
    verified_code: dict[int, DesignCheck | None] = field(default_factory=dict)
    verified_dual: dict[int, DesignCheck | None] = field(default_factory=dict)
    w: int | None = None
    w_dual: int | None = None
    min_weight_repetitions: dict[int, int] | None = None

    @property
    def all_verified(self) -> bool:
        checks = list(self.verified_code.values()) + list(self.verified_dual.values())
        return all(c is not None for c in checks)


def _count_weights_in(dist: WeightDistribution, lo: int, hi: int) -> int:
    return sum(1 for i in range(max(lo, 1), hi + 1) if dist[i])


def _verify(code: Code, weights: Iterable[int], t: int) -> dict[int, DesignCheck | None]:
    return {w: verify_t_design(BlockMultiset.from_code_weight(code, w), t) for w in weights}


def am_linear_report(code: Code, t: int, verify: bool = True) -> AMReport:
    """Assmus-Mattson for a linear code over GF(q) (Euclidean dual)."""
    if code.kind != "linear":
        raise PreconditionError("am_linear_report needs a linear code")
    d = minimum_distance(code)
    if not 0 < t < d:
        raise PreconditionError(f"need 0 < t < d = {d}, got t={t}")
    dual = dual_code(code)
    a, b = weight_distribution(code), weight_distribution(dual)
    n, q = code.n, code.q
    d_dual = b.minimum_distance
    w, w_dual = _classic_w(n, q, d), _classic_w(n, q, d_dual)
    s = _count_weights_in(b, 1, n - t)
    ok = s <= d - t
    gc = tuple(i for i in range(d, w + 1) if a[i]) if ok else ()
    gd = tuple(i for i in range(d_dual, min(n - t, w_dual) + 1) if b[i]) if ok else ()
    return AMReport(
        t, n, d, d_dual, s, ok, gc, gd,
        _verify(code, gc, t) if verify else {},
        _verify(dual, gd, t) if verify else {},
        w=w, w_dual=w_dual,
    )


def am_additive_report(code: Code, t: int, verify: bool = True) -> AMReport:
    """Assmus-Mattson for an additive code over GF(4) (trace dual); blocks
    may repeat."""
    if code.kind != "additive":
        code = code.as_additive()
    d = minimum_distance(code)
    if not 0 < t < d:
        raise PreconditionError(f"need 0 < t < d = {d}, got t={t}")
    dual = dual_code(code)
    a, b = weight_distribution(code), weight_distribution(dual)
    n = code.n
    d_dual = b.minimum_distance
    s = _count_weights_in(b, 1, n - t)
    ok = s <= d - t
    gc = tuple(u for u in range(d, n + 1) if a[u]) if ok else ()
    gd = tuple(u for u in range(d_dual, n - t + 1) if b[u]) if ok else ()
    reps = dict(sorted(support_multiplicities(words_of_weight(code, d)).items()))
    return AMReport(
        t, n, d, d_dual, s, ok, gc, gd,
        _verify(code, gc, t) if verify else {},
        _verify(dual, gd, t) if verify else {},
        min_weight_repetitions=reps,
    )


def extremal_strengths(n: int) -> tuple[int, int | None]:
    """Design strengths of an extremal even additive self-dual code of length n:
    (classical t with repeated blocks, generalized t of type 3 or None)."""
    if n <= 0:
        raise UnsupportedLength(f"length must be positive, got {n}")
    r = n % 6
    if r == 0:
        return 5, 2
    if r == 2:
        return 3, 1
    if r == 4:
        return 1, None
    raise UnsupportedLength(f"n={n} is odd; extremal strengths defined for n = 0, 2, 4 mod 6")


def one_design_condition(n: int, d: int) -> bool:
    """``d >= (n + 2) / 3``: all nontrivial weights of an even additive
    self-dual code then hold 1-designs."""
    return 3 * d >= n + 2
