"""Massey-style secret sharing on a linear code over GF(2) or GF(4).

The dealer is coordinate 0, participant ``P_i`` holds coordinate ``i``.
A group recovers the secret with a dual codeword whose coordinate 0 is 1
and whose other nonzero coordinates lie in the group.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from . import field as f4
from .codes import Code, dual_code, minimal_codewords
from .designs import BlockMultiset, verify_t_design
from .errors import HypothesisFailed, NotOneDesign, PreconditionError
from .field import F4
from .shares import ShareVector


def make_rng(seed: int | np.random.Generator | None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


@dataclass(frozen=True)
class LinearScheme:
    code: Code

    def __post_init__(self):
        if self.code.kind != "linear":
            raise PreconditionError("a linear scheme needs a linear code")
        if not any(self.code.column(0)):
            raise PreconditionError("column g_0 of the generator matrix is zero")

    @cached_property
    def dual(self) -> Code:
        return dual_code(self.code)

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def m(self) -> int:
        return self.code.n - 1

    @property
    def participants(self) -> range:
        return range(1, self.code.n)


def deal_linear(scheme: LinearScheme, s, rng=None) -> tuple[ShareVector, tuple[F4, ...]]:
    """Pick ``u`` uniformly with ``u . g_0 = s`` and hand out ``uG``.

    ``k - 1`` coordinates of ``u`` are drawn freely; the pivot coordinate is
    then solved for, so every valid ``u`` is equally likely.
    """
    code = scheme.code
    s = f4.as_f4(s)
    if code.field == "gf2" and int(s) > 1:
        raise PreconditionError(f"secret {s} is not in GF(2)")
    rng = make_rng(rng)
    g0 = code.column(0)
    pivot = next(j for j, g in enumerate(g0) if g)
    u = [F4(int(x)) for x in rng.integers(0, code.q, size=code.k)]
    rest = F4.ZERO
    for j, (uj, gj) in enumerate(zip(u, g0)):
        if j != pivot:
            rest = rest + uj * gj
    u[pivot] = (s + rest) / g0[pivot]
    word = code.encode(u)
    assert word[0] == s
    return {i: word[i] for i in scheme.participants}, tuple(u)


def _normalized_recovery_words(dual: Code) -> np.ndarray:
    """Dual codewords with coordinate 0 equal to 1 and some other nonzero coordinate."""
    arr = dual.codeword_array()
    c0 = f4.np_coord(arr, 0)
    w = dual.codeword_weights()
    return arr[(c0 == 1) & (w >= 2)]


def find_recovery_linear(dual: Code, subset: Iterable[int]) -> dict[int, F4] | None:
    """Coefficients ``x_i`` with ``s = sum x_i t_i`` for a group, or ``None``.

    Picks the lowest-weight usable dual codeword, ties broken by enumeration
    order.
    """
    subset = set(subset)
    allowed = sum(1 << i for i in subset | {0})
    cand = _normalized_recovery_words(dual)
    if cand.size == 0:
        return None
    masks = f4.np_support_masks(cand, dual.n)
    ok = (masks & np.uint64(~allowed & ((1 << dual.n) - 1))) == 0
    if not ok.any():
        return None
    usable = cand[ok]
    weights = f4.np_weights(usable, dual.n)
    best = int(usable[int(np.argmin(weights))])
    # t . c = 0 and c_0 = 1 give t_0 = sum_{i>0} c_i t_i (characteristic 2)
    return {i: f4.coord(best, i) for i in sorted(subset) if f4.coord(best, i)}


def recover_linear(shares: Mapping[int, F4], coeffs: Mapping[int, F4]) -> F4:
    acc = F4.ZERO
    for i, x in coeffs.items():
        acc = acc + x * f4.as_f4(shares[i])
    return acc


@dataclass(frozen=True)
class LinearAccessStructure:
    """``groups`` holds one entry per dual codeword normalised to c_0 = 1,
    so a support reached by several such codewords appears that many times."""

    groups: tuple[frozenset[int], ...]
    minimal: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.groups)

    def size_distribution(self) -> dict[int, int]:
        return dict(sorted(Counter(len(g) for g in self.groups).items()))

    def minimal_size_distribution(self) -> dict[int, int]:
        return dict(sorted(Counter(len(g) for g in self.minimal).items()))

    def distinct_groups(self) -> frozenset[frozenset[int]]:
        return frozenset(self.groups)


def _inclusion_minimal(groups: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    distinct = sorted(set(groups), key=lambda g: (len(g), sorted(g)))
    masks = np.array([sum(1 << i for i in g) for g in distinct], dtype=np.uint64)
    out = []
    for g, m in zip(distinct, masks):
        # any other group that is a proper subset of g?
        sub = ((masks & ~m) == 0) & (masks != m)
        if not sub.any():
            out.append(g)
    return out


def access_structure_linear(scheme: LinearScheme) -> LinearAccessStructure:
    words = _normalized_recovery_words(scheme.dual)
    n = scheme.n
    groups = tuple(frozenset(f4.support(int(x), n) - {0}) for x in words)
    return LinearAccessStructure(groups, tuple(_inclusion_minimal(groups)))


def can_recover_linear(scheme: LinearScheme, subset: Iterable[int]) -> bool:
    return find_recovery_linear(scheme.dual, subset) is not None


@dataclass(frozen=True)
class MinimalGroupReport:
    q: int
    k: int
    hypothesis: bool            # every nonzero codeword of C is minimal
    formula_groups: int         # q^(k-1)
    formula_membership: int     # (q-1) q^(k-2)
    brute_groups: int
    dictatorial: tuple[int, ...]
    dictatorial_brute: tuple[int, ...]
    membership_brute: dict[int, int]

    @property
    def agrees(self) -> bool:
        non_dict = [i for i in self.membership_brute if i not in self.dictatorial]
        return (
            self.brute_groups == self.formula_groups
            and self.dictatorial == self.dictatorial_brute
            and all(self.membership_brute[i] == self.formula_membership for i in non_dict)
        )


def minimal_group_counts(code: Code, strict: bool = True) -> MinimalGroupReport:
    """Minimal access groups of the scheme based on ``C^perp`` when every
    nonzero codeword of ``C`` is minimal.

    Formula values are checked against a brute-force enumeration of the
    scheme built on ``dual_code(code)``.  With ``strict`` a failed
    hypothesis raises :class:`HypothesisFailed`; otherwise it is reported.
    """
    if code.kind != "linear":
        raise PreconditionError("minimal_group_counts needs a linear code")
    nonzero = code.size - 1
    hyp = len(minimal_codewords(code, "support")) == nonzero
    if strict and not hyp:
        raise HypothesisFailed(f"{code} has non-minimal nonzero codewords")
    q, k, n = code.q, code.k, code.n
    g0 = code.column(0)
    dictatorial = tuple(
        i for i in range(1, n)
        if any(tuple(a * x for x in g0) == code.column(i) for a in f4.NONZERO)
    )
    scheme = LinearScheme(dual_code(code))
    acc = access_structure_linear(scheme)
    minimal = acc.minimal
    membership = {i: sum(1 for g in minimal if i in g) for i in range(1, n)}
    dict_brute = tuple(i for i, c in membership.items() if c == len(minimal) and minimal)
    return MinimalGroupReport(
        q, k, hyp, q ** (k - 1), (q - 1) * q ** (k - 2) if k >= 2 else 0,
        len(minimal), dictatorial, dict_brute, membership,
    )


def size_distribution_linear(code: Code) -> dict[int, int]:
    """Group-size generating function ``sum_i lambda_1(D_i) y^(i-1)`` from the
    1-designs held by the weight classes of ``code`` (the side whose codewords
    give the access groups).

    For GF(4) codes lambda_1 counts every scalar multiple, so it is divided by
    q - 1 = 3 to count codewords normalised to coordinate 0 equal to 1.
    """
    out = {}
    weights = np.unique(code.codeword_weights())
    for w in (int(x) for x in weights if x > 0):
        check = verify_t_design(BlockMultiset.from_code_weight(code, w), 1)
        if check is None:
            raise NotOneDesign(f"weight-{w} supports of {code} do not form a 1-design")
        lam1 = check.lam
        if code.field == "gf4":
            if lam1 % 3:
                raise NotOneDesign(f"lambda_1={lam1} for weight {w} not divisible by 3")
            lam1 //= 3
        out[w - 1] = lam1
    return out


def accessibility_linear(gamma_size: int, m: int) -> Fraction:
    """``|Gamma| / 2^m``."""
    if m < 1:
        raise PreconditionError("need at least one participant")
    return Fraction(gamma_size, 2 ** m)
