"""Two-step secret sharing on an additive (n, 2^k) code over GF(4).

Shares are ``t = uG`` for ``u`` in GF(2)^k with ``t_0 = s``.  A dual
codeword ``x`` (trace dual) with ``x_0 != 0`` lets its group compute the
bit ``alpha = Tr(s * conj(x_0))``; two such bits from different classes
(``x_0 = 1, w, W``) pin down ``s``.

Recovery classes ``H_1, H_2, H_3`` are kept per dual codeword, not per
distinct support, so a support shared by several dual codewords counts once
for each of them.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import field as f4
from .codes import Code, Codeword, WeightDistribution, dual_code, minimal_codewords
from .designs import (
    DesignParams,
    extremal_strengths,
    lambda1_from_enumerator,
    lambda_convert,
    lambda_from_block_count,
)
from .errors import (
    HypothesisFailed,
    MissingShare,
    NonIntegral,
    PreconditionError,
    SameClass,
    UnreachableSecret,
)
from .field import F4
from .linalg import gf2_solve
from .linear_sss import make_rng
from .shares import ShareVector

CLASS_LEAD = {1: F4.ONE, 2: F4.OMEGA, 3: F4.OMEGABAR}
LEAD_CLASS = {v: k for k, v in CLASS_LEAD.items()}

# secret -> (alpha_1, alpha_2, alpha_3) with alpha_i = Tr(s * conj(lead_i))
ALPHA_TABLE: dict[F4, tuple[int, int, int]] = {
    F4.ZERO: (0, 0, 0),
    F4.ONE: (0, 1, 1),
    F4.OMEGA: (1, 0, 1),
    F4.OMEGABAR: (1, 1, 0),
}


@dataclass(frozen=True)
class RecoveryVector:
    word: Codeword
    klass: int

    def __post_init__(self):
        lead = self.word[0]
        if lead == F4.ZERO:
            raise PreconditionError("recovery vector needs a nonzero coordinate 0")
        if LEAD_CLASS[lead] != self.klass:
            raise PreconditionError(f"coordinate 0 is {lead}, not class {self.klass}")

    @property
    def group(self) -> frozenset[int]:
        return self.word.support - {0}

    @property
    def weight(self) -> int:
        return self.word.weight

    def __str__(self) -> str:
        return f"H{self.klass} {self.weight} {self.word}"


@dataclass(frozen=True)
class AdditiveScheme:
    code: Code

    def __post_init__(self):
        if self.code.kind != "additive":
            if self.code.field != "gf4":
                raise PreconditionError("an additive scheme needs a code over GF(4)")
            object.__setattr__(self, "code", self.code.as_additive())
        if not any(self.code.column(0)):
            raise PreconditionError("column g_0 of the generator matrix is zero")

    @cached_property
    def dual(self) -> Code:
        return dual_code(self.code)

    @cached_property
    def classes(self) -> tuple[list[RecoveryVector], list[RecoveryVector], list[RecoveryVector]]:
        return extract_H(self.dual)

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def m(self) -> int:
        return self.code.n - 1

    @property
    def participants(self) -> range:
        return range(1, self.code.n)


# ---------------------------------------------------------------------------
# dealing

def _dealing_system(code: Code, s: F4):
    g0 = [int(x) for x in code.column(0)]
    eqs = []
    for b in range(2):
        row = sum(((g >> b) & 1) << j for j, g in enumerate(g0))
        eqs.append((row, (int(s) >> b) & 1))
    return gf2_solve(eqs, code.k)


def dealing_solutions(scheme: AdditiveScheme, s) -> int:
    """Number of ``u`` in GF(2)^k with ``u . g_0 = s``."""
    sol = _dealing_system(scheme.code, f4.as_f4(s))
    return 0 if sol is None else 2 ** len(sol[1])


def deal_additive(scheme: AdditiveScheme, s, rng=None) -> tuple[ShareVector, tuple[int, ...]]:
    s = f4.as_f4(s)
    code = scheme.code
    sol = _dealing_system(code, s)
    if sol is None:
        raise UnreachableSecret(f"secret {s} is not in the GF(2)-span of column g_0 {code.column(0)}")
    base, kernel = sol
    rng = make_rng(rng)
    u = base
    for b, pick in zip(kernel, rng.integers(0, 2, size=len(kernel))):
        if pick:
            u ^= b
    bits = tuple((u >> j) & 1 for j in range(code.k))
    word = code.encode(bits)
    assert word[0] == s
    return {i: word[i] for i in scheme.participants}, bits


# ---------------------------------------------------------------------------
# recovery

def extract_H(dual: Code) -> tuple[list[RecoveryVector], list[RecoveryVector], list[RecoveryVector]]:
    """Split dual codewords with nonzero coordinate 0 (and weight >= 2) by
    the value of that coordinate."""
    arr = dual.codeword_array()
    lead = f4.np_coord(arr, 0)
    w = dual.codeword_weights()
    out = []
    for klass in (1, 2, 3):
        sel = arr[(lead == int(CLASS_LEAD[klass])) & (w >= 2)]
        out.append([RecoveryVector(Codeword(int(x), dual.n), klass) for x in sel])
    return tuple(out)  # type: ignore[return-value]


def alpha_from_recovery(x: RecoveryVector, shares: Mapping[int, F4]) -> int:
    """``sum_{i in group} Tr(t_i * conj(x_i))``, which equals ``Tr(s * conj(x_0))``."""
    acc = 0
    for i in sorted(x.group):
        if i not in shares:
            raise MissingShare(f"share of P{i} is needed by {x}")
        acc ^= (f4.as_f4(shares[i]) * x.word[i].conj()).trace()
    return acc


def secret_from_alphas(alphas: Mapping[int, int]) -> F4:
    """Look up the secret consistent with two or more known alpha bits."""
    if len(alphas) < 2:
        raise SameClass("need alpha values from two distinct classes")
    hits = [s for s, row in ALPHA_TABLE.items() if all(row[k - 1] == a for k, a in alphas.items())]
    if len(hits) != 1:
        raise PreconditionError(f"alpha values {dict(alphas)} match {len(hits)} secrets")
    return hits[0]


def recover_additive(x: RecoveryVector, y: RecoveryVector, shares: Mapping[int, F4]) -> F4:
    if x.klass == y.klass:
        raise SameClass(f"both recovery vectors are in H{x.klass}")
    return secret_from_alphas({x.klass: alpha_from_recovery(x, shares), y.klass: alpha_from_recovery(y, shares)})


def usable_recovery(
    classes: Sequence[Sequence[RecoveryVector]], available: Iterable[int]
) -> dict[int, RecoveryVector]:
    """Lowest-weight recovery vector per class whose group lies in ``available``
    (ties broken by enumeration order)."""
    avail = set(available)
    out = {}
    for h in classes:
        best = None
        for x in h:
            if x.group <= avail and (best is None or x.weight < best.weight):
                best = x
        if best is not None:
            out[best.klass] = best
    return out


def can_recover_additive(scheme: AdditiveScheme, subset: Iterable[int]) -> bool:
    return len(usable_recovery(scheme.classes, subset)) >= 2


# ---------------------------------------------------------------------------
# counting

def mu_count(h: Sequence[RecoveryVector], p: int) -> int:
    """Weight-p members of a class, i.e. those c-covering the class's weight-1
    anchor at coordinate 0."""
    return sum(1 for x in h if x.weight == p)


def mu_table(h: Sequence[RecoveryVector]) -> dict[int, int]:
    return dict(sorted(Counter(x.weight for x in h).items()))


def _klass(h: Sequence[RecoveryVector]) -> int | None:
    return h[0].klass if h else None


def pair_generating_function(h_i: Sequence[RecoveryVector], h_j: Sequence[RecoveryVector]) -> dict[tuple[int, int], int]:
    """``{(p-1, q-1): mu_i(p) * mu_j(q)}`` for one ordered pair of classes."""
    if h_i is h_j or (_klass(h_i) is not None and _klass(h_i) == _klass(h_j)):
        raise SameClass("pair generating function needs two distinct classes")
    return pair_table(mu_table(h_i), mu_table(h_j))


def pair_table(mu_i: Mapping[int, int], mu_j: Mapping[int, int]) -> dict[tuple[int, int], int]:
    return {(p - 1, q - 1): a * b for p, a in sorted(mu_i.items()) for q, b in sorted(mu_j.items())}


def ordered_pair_sum(mus: Mapping[int, Mapping[int, int]]) -> dict[tuple[int, int], int]:
    """Sum of the pair tables over all six ordered pairs ``i != j``."""
    total: Counter = Counter()
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i != j:
                total.update(pair_table(mus.get(i, {}), mus.get(j, {})))
    return dict(sorted(total.items()))


def accessibility_additive(gamma_pair_count: int, m: int) -> Fraction:
    """``|Gamma| / 2^(2m)``."""
    if m < 1:
        raise PreconditionError("need at least one participant")
    return Fraction(gamma_pair_count, 2 ** (2 * m))


def _class_minimal(h: Sequence[RecoveryVector]) -> list[RecoveryVector]:
    if not h:
        return []
    n = h[0].word.n
    arr = np.array([x.word.bits for x in h], dtype=np.uint64)
    nzp = f4.np_nonzero_pairs(arr, n)
    out = []
    for x, bits in zip(h, arr):
        # members of the class that x c-covers; x itself always counts
        covered = ((arr ^ bits) & nzp) == 0
        if int(covered.sum()) == 1:
            out.append(x)
    return out


@dataclass(frozen=True)
class MinimalPairs:
    """Minimal access pairs for one ordered pair of classes: every
    combination of a minimal member of each."""

    classes: tuple[int, int]
    first: tuple[RecoveryVector, ...]
    second: tuple[RecoveryVector, ...]

    def __len__(self) -> int:
        return len(self.first) * len(self.second)

    def __iter__(self):
        for x in self.first:
            for y in self.second:
                yield x, y

    def __contains__(self, pair) -> bool:
        x, y = pair
        return x in self.first and y in self.second

    def size_distribution(self) -> dict[tuple[int, int], int]:
        a = Counter(len(x.group) for x in self.first)
        b = Counter(len(y.group) for y in self.second)
        return {(p, q): a[p] * b[q] for p in sorted(a) for q in sorted(b)}

    def component_sizes(self) -> set[int]:
        return {len(x.group) for x in self.first} | {len(y.group) for y in self.second}


def minimal_pairs(classes: Sequence[Sequence[RecoveryVector]], pair: tuple[int, int] = (1, 2)) -> MinimalPairs:
    i, j = pair
    if i == j:
        raise SameClass("minimal pairs need two distinct classes")
    return MinimalPairs(pair, tuple(_class_minimal(classes[i - 1])), tuple(_class_minimal(classes[j - 1])))


@dataclass(frozen=True)
class PairAccessStructure:
    n: int
    mu: dict[int, dict[int, int]]                  # class -> weight -> count
    pair_counts: dict[tuple[int, int], int]        # canonical classes (1, 2)
    ordered_sum: dict[tuple[int, int], int]        # all six ordered class pairs
    minimal: MinimalPairs | None

    @property
    def m(self) -> int:
        return self.n - 1

    @property
    def total(self) -> int:
        return sum(self.pair_counts.values())

    @property
    def accessibility(self) -> Fraction:
        return accessibility_additive(self.total, self.m)


def pair_access_structure(scheme: AdditiveScheme, with_minimal: bool = True) -> PairAccessStructure:
    h = scheme.classes
    mus = {k: mu_table(h[k - 1]) for k in (1, 2, 3)}
    return PairAccessStructure(
        scheme.n, mus, pair_generating_function(h[0], h[1]), ordered_pair_sum(mus),
        minimal_pairs(h) if with_minimal else None,
    )


@dataclass(frozen=True)
class MinimalCountReport:
    k: int
    hypothesis: bool
    formula_total: int              # 3 * 2^(2k-4)
    example_total: int              # (2^(k-2))^2: one class pair, as in the worked examples
    brute_canonical: int            # minimal pairs for classes (1, 2)
    brute_unordered: int            # summed over the three unordered class pairs
    brute_ordered: int              # summed over the six ordered class pairs
    class_sizes: tuple[int, int, int]
    formula_per_participant: int    # 3^3 * 2^(2k-8)
    brute_per_participant: dict[int, int]
    dictatorial: tuple[int, ...]
    dictatorial_brute: tuple[int, ...]
    flags: tuple[str, ...]


def count_minimal_additive(code: Code, strict: bool = True) -> MinimalCountReport:
    """Compare the closed-form count of minimal access pairs for the scheme
    based on ``C^perp`` with brute force.  Disagreements go into ``flags``;
    they are never resolved silently."""
    code = code if code.kind == "additive" else code.as_additive()
    hyp = len(minimal_codewords(code, "c_cover")) == code.size - 1
    if strict and not hyp:
        raise HypothesisFailed(f"{code} has nonzero codewords that c-cover others")
    k, n = code.k, code.n
    scheme = AdditiveScheme(dual_code(code))
    h = scheme.classes  # taken from (C^perp)^perp = C
    mins = [tuple(_class_minimal(c)) for c in h]
    sizes = tuple(len(c) for c in h)
    unordered = [(1, 2), (1, 3), (2, 3)]
    brute_un = sum(len(mins[i - 1]) * len(mins[j - 1]) for i, j in unordered)
    per = {}
    for p in range(1, n):
        cnt = [sum(1 for x in m if p in x.group) for m in mins]
        # participant needed by both halves of the pair
        per[p] = sum(cnt[i - 1] * cnt[j - 1] for i, j in unordered)
    g0 = code.column(0)
    dictatorial = tuple(p for p in range(1, n) if code.column(p) == g0)
    dict_brute = tuple(p for p in range(1, n) if all(p in x.group for c in h for x in c) and any(h))
    formula_total = 3 * 2 ** (2 * k - 4) if k >= 2 else 0
    example_total = (2 ** (k - 2)) ** 2 if k >= 2 else 0
    formula_pp = 27 * 2 ** (2 * k - 8) if k >= 4 else 0
    flags = []
    canon = len(mins[0]) * len(mins[1])
    if formula_total != canon:
        flags.append(
            f"closed-form total {formula_total} differs from the single-class-pair count "
            f"{canon} (brute force); it equals the sum over unordered class pairs ({brute_un})"
            if formula_total == brute_un else
            f"closed-form total {formula_total} differs from brute force "
            f"(single pair {canon}, unordered pairs {brute_un})"
        )
    if formula_total != example_total:
        flags.append(f"closed-form total {formula_total} differs from the example convention {example_total}")
    bad_pp = {p: c for p, c in per.items() if p not in dictatorial and c != formula_pp}
    if bad_pp:
        flags.append(f"per-participant formula {formula_pp} differs from brute force for {sorted(bad_pp)}")
    if dictatorial != dict_brute:
        flags.append(f"dictatorial columns {dictatorial} vs brute force {dict_brute}")
    return MinimalCountReport(
        k, hyp, formula_total, example_total, canon, brute_un, 2 * brute_un, sizes,
        formula_pp, per, dictatorial, dict_brute, tuple(flags),
    )


# ---------------------------------------------------------------------------
# analytic path (weight enumerator only)

@dataclass(frozen=True)
class AnalyticAccess:
    n: int
    t: int                          # classical design strength used for the lambda chain
    lambda_t: dict[int, int]
    lambda1: dict[int, int]
    mu: dict[int, int]              # same for each class
    pair_counts: dict[tuple[int, int], int]

    @property
    def m(self) -> int:
        return self.n - 1

    @property
    def total(self) -> int:
        return sum(self.pair_counts.values())

    @property
    def accessibility(self) -> Fraction:
        return accessibility_additive(self.total, self.m)

    def ordered_sum(self) -> dict[tuple[int, int], int]:
        return {k: 6 * v for k, v in self.pair_counts.items()}


def analytic_access_from_enumerator(weights: WeightDistribution, n: int | None = None) -> AnalyticAccess:
    """Access-structure counts of an extremal even additive self-dual code
    from its weight enumerator alone.

    Each nonzero weight class holds a t-design with repeated blocks (t from
    the length); lambda_t comes from the block count, lambda_1 from the
    lambda conversion, and mu = lambda_1 / 3 since the class is a generalized
    1-design of type 3.  The direct count A_w * w / n must agree.
    """
    n = weights.n if n is None else n
    t, _ = extremal_strengths(n)
    lam_t, lam1, mu = {}, {}, {}
    for w in weights.nonzero_weights():
        a = weights[w]
        lt = lambda_from_block_count(a, t, n, w) if w >= t else None
        l1 = lambda_convert(DesignParams(t, n, w, lt), 1) if lt else lambda1_from_enumerator(a, w, n)
        direct = lambda1_from_enumerator(a, w, n)
        if l1 != direct:
            raise NonIntegral(f"weight {w}: lambda_1 chain {l1} != direct count {direct}")
        if l1 % 3:
            raise NonIntegral(f"weight {w}: lambda_1={l1} not divisible by 3")
        if lt is not None:
            lam_t[w] = lt
        lam1[w], mu[w] = l1, l1 // 3
    return AnalyticAccess(n, t, lam_t, lam1, mu, pair_table(mu, mu))


# ---------------------------------------------------------------------------
# cheater detection

class CheaterStatus(enum.Enum):
    CLEAN = "clean"
    CORRECTED = "corrected"
    DETECTED_ONLY = "detected"
    UNDECIDABLE = "undecidable"


@dataclass(frozen=True)
class CheaterReport:
    status: CheaterStatus
    cheaters: frozenset[int]
    distance: int
    effective_distance: int
    nearest: Codeword | None


def detect_cheaters(scheme, claimed: Mapping[int, F4], secret=None) -> CheaterReport:
    """Exhaustive nearest-codeword search over the dealt code.

    Without ``secret`` coordinate 0 is free, so the effective minimum
    distance is that of the code punctured at 0.  Up to
    ``(d_eff - 1) // 2`` changed shares are located; a vector that is not a
    codeword but too far for unique decoding is reported as detected only.
    """
    code = scheme.code
    n = code.n
    missing = [i for i in range(1, n) if i not in claimed]
    if missing:
        raise MissingShare(f"cheater detection needs every share; missing P{missing[0]}")
    vec = sum(int(f4.as_f4(claimed[i])) << (2 * i) for i in range(1, n))
    mask = f4.full_mask(n)
    if secret is None:
        mask &= ~3
    else:
        vec |= int(f4.as_f4(secret))
    arr = code.codeword_array()
    m64 = np.uint64(mask)
    nonzero = arr[arr != 0]
    d_eff = int(f4.np_weights(nonzero & m64, n).min()) if nonzero.size else 0
    dist = f4.np_weights((arr ^ np.uint64(vec)) & m64, n)
    best = int(dist.min())
    radius = (d_eff - 1) // 2
    if best == 0:
        status = CheaterStatus.CLEAN
    elif best <= radius:
        status = CheaterStatus.CORRECTED
    elif best <= d_eff - 1:
        status = CheaterStatus.DETECTED_ONLY
    else:
        status = CheaterStatus.UNDECIDABLE
    if status in (CheaterStatus.CLEAN, CheaterStatus.CORRECTED):
        word = int(arr[int(np.argmin(dist))])
        diff = (word ^ vec) & mask
        cheaters = frozenset(i for i in range(1, n) if (diff >> (2 * i)) & 3)
        return CheaterReport(status, cheaters, best, d_eff, Codeword(word, n))
    return CheaterReport(status, frozenset(), best, d_eff, None)


def format_recovery_vectors(classes: Sequence[Sequence[RecoveryVector]]) -> str:
    """Listing format: ``H<k> <weight> <codeword symbols>``, one per line."""
    return "".join(f"{x}\n" for h in classes for x in h)
