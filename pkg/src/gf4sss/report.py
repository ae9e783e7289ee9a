"""Access-structure reports and their text / JSON-lines rendering.

Both renderings are pure functions of the report, so identical inputs give
byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import Decimal, getcontext
from fractions import Fraction
from typing import Literal

from .additive_sss import (
    AdditiveScheme,
    analytic_access_from_enumerator,
    count_minimal_additive,
    pair_access_structure,
)
from .codes import Code, WeightDistribution, minimal_codewords, weight_distribution
from .designs import extremal_strengths, one_design_condition
from .errors import DomainError, UnsupportedLength
from .linear_sss import LinearScheme, access_structure_linear, accessibility_linear

Format = Literal["text", "jsonl"]


def fraction_decimal(fr: Fraction) -> str:
    """Decimal expansion; exact whenever the denominator is 2^a 5^b."""
    den = fr.denominator
    for p in (2, 5):
        while den % p == 0:
            den //= p
    getcontext().prec = 60
    value = Decimal(fr.numerator) / Decimal(fr.denominator)
    if den != 1:
        value = round(value, 12)
    text = format(value.normalize(), "f")
    return text if "." in text or text != "-0" else "0"


@dataclass
class AccessReport:
    code: str
    scheme: Literal["linear", "additive"]
    method: Literal["enumeration", "analytic"]
    n: int
    enumerator: WeightDistribution
    min_distance: int
    participants: int
    gamma_size: int
    denominator: int
    # linear: group size -> count; additive: (p-1, q-1) -> count for classes (1, 2)
    terms: dict = field(default_factory=dict)
    mu: dict[int, dict[int, int]] = field(default_factory=dict)
    ordered_sum_total: int | None = None
    minimal: dict = field(default_factory=dict)
    minimal_total: int | None = None
    design_strengths: tuple[int, int | None] | None = None
    one_design: bool | None = None
    conventions: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    @property
    def accessibility(self) -> Fraction:
        return Fraction(self.gamma_size, self.denominator)


def _strengths(n: int) -> tuple[int, int | None] | None:
    try:
        return extremal_strengths(n)
    except UnsupportedLength:
        return None


def linear_access_report(code: Code, name: str | None = None) -> AccessReport:
    scheme = LinearScheme(code)
    acc = access_structure_linear(scheme)
    wd = weight_distribution(code)
    frac = accessibility_linear(len(acc), scheme.m)
    rep = AccessReport(
        code=name or str(code), scheme="linear", method="enumeration", n=code.n,
        enumerator=wd, min_distance=wd.minimum_distance, participants=scheme.m,
        gamma_size=len(acc), denominator=2 ** scheme.m,
        terms=acc.size_distribution(), minimal=acc.minimal_size_distribution(),
        minimal_total=len(acc.minimal),
    )
    rep.conventions.append("groups counted once per dual codeword with coordinate 0 equal to 1")
    if len(acc.distinct_groups()) != len(acc):
        rep.conventions.append(f"distinct supports: {len(acc.distinct_groups())}")
    assert frac == rep.accessibility
    return rep


def additive_access_report(code: Code, name: str | None = None) -> AccessReport:
    scheme = AdditiveScheme(code)
    pa = pair_access_structure(scheme)
    wd = weight_distribution(scheme.code)
    rep = AccessReport(
        code=name or str(code), scheme="additive", method="enumeration", n=code.n,
        enumerator=wd, min_distance=wd.minimum_distance, participants=scheme.m,
        gamma_size=pa.total, denominator=2 ** (2 * scheme.m),
        terms=pa.pair_counts, mu=pa.mu, ordered_sum_total=sum(pa.ordered_sum.values()),
        minimal=pa.minimal.size_distribution(), minimal_total=len(pa.minimal),
        design_strengths=_strengths(code.n),
        one_design=one_design_condition(code.n, wd.minimum_distance),
    )
    rep.conventions.append("pairs counted for class pair (H1, H2); ordered_pair_sum adds all six ordered pairs")
    if len({tuple(sorted(m.items())) for m in pa.mu.values()}) > 1:
        rep.flags.append("classes H1, H2, H3 have different weight profiles")
    if len(minimal_codewords(scheme.code, "c_cover")) == scheme.code.size - 1:
        try:
            rep.flags.extend(count_minimal_additive(scheme.dual, strict=True).flags)
        except DomainError:
            pass
    return rep


def analytic_access_report(enumerator: WeightDistribution, name: str) -> AccessReport:
    an = analytic_access_from_enumerator(enumerator)
    m = an.m
    rep = AccessReport(
        code=name, scheme="additive", method="analytic", n=an.n,
        enumerator=enumerator, min_distance=enumerator.minimum_distance, participants=m,
        gamma_size=an.total, denominator=2 ** (2 * m), terms=an.pair_counts,
        mu={k: dict(an.mu) for k in (1, 2, 3)}, ordered_sum_total=sum(an.ordered_sum().values()),
        design_strengths=_strengths(an.n),
        one_design=one_design_condition(an.n, enumerator.minimum_distance),
    )
    rep.conventions.append(
        f"mu = lambda_1 / 3 with lambda_1 from the {an.t}-design lambda chain; "
        "assumes an extremal even additive self-dual code"
    )
    return rep


# ---------------------------------------------------------------------------
# rendering

def _pairs_line(terms: dict) -> str:
    return "  ".join(f"{c} ({p},{q})" for (p, q), c in sorted(terms.items()))


def _text_lines(rep: AccessReport) -> list[str]:
    lines = [
        f"code {rep.code}",
        f"scheme {rep.scheme}",
        f"method {rep.method}",
        f"n {rep.n}",
        f"participants {rep.participants}",
        f"weight_enumerator {rep.enumerator.polynomial()}",
        f"min_distance {rep.min_distance}",
    ]
    if rep.design_strengths is not None:
        t, g = rep.design_strengths
        lines.append(f"extremal_design_strengths t={t} generalized={g if g is not None else '-'}")
    if rep.one_design is not None:
        lines.append(f"one_design_condition {'yes' if rep.one_design else 'no'}")
    if rep.scheme == "linear":
        lines.append("sizes " + "  ".join(f"{c} ({s})" for s, c in sorted(rep.terms.items())))
        lines.append("generating_function " + " + ".join(f"{c}y^{s}" for s, c in sorted(rep.terms.items())))
        lines.append("gamma " + str(rep.gamma_size))
        if rep.minimal_total is not None:
            lines.append("minimal " + "  ".join(f"{c} ({s})" for s, c in sorted(rep.minimal.items())))
            lines.append(f"minimal_total {rep.minimal_total}")
    else:
        for k in sorted(rep.mu):
            lines.append(f"mu H{k} " + "  ".join(f"{c} (w{w})" for w, c in sorted(rep.mu[k].items())))
        lines.append("pairs " + _pairs_line(rep.terms))
        lines.append("gamma " + str(rep.gamma_size))
        if rep.ordered_sum_total is not None:
            lines.append(f"ordered_pair_sum {rep.ordered_sum_total}")
        if rep.minimal_total is not None:
            lines.append("minimal_pairs " + _pairs_line(rep.minimal))
            lines.append(f"minimal_total {rep.minimal_total}")
    acc = rep.accessibility
    if rep.gamma_size == 0:
        lines.append(f"accessibility 0/{rep.denominator} = 0")
    else:
        lines.append(f"accessibility {rep.gamma_size}/{rep.denominator} = {fraction_decimal(acc)}")
    lines += [f"convention {c}" for c in rep.conventions]
    lines += [f"flag {f}" for f in rep.flags]
    return lines


def _records(rep: AccessReport) -> list[dict]:
    recs: list[dict] = [{
        "record": "header", "code": rep.code, "scheme": rep.scheme, "method": rep.method,
        "n": rep.n, "participants": rep.participants, "min_distance": rep.min_distance,
    }]
    recs.append({"record": "weight_enumerator", "counts": list(rep.enumerator.counts)})
    if rep.design_strengths is not None:
        recs.append({"record": "design_strengths", "t": rep.design_strengths[0],
                     "generalized": rep.design_strengths[1]})
    if rep.one_design is not None:
        recs.append({"record": "one_design_condition", "holds": rep.one_design})
    for k in sorted(rep.mu):
        for w, c in sorted(rep.mu[k].items()):
            recs.append({"record": "mu", "class": k, "weight": w, "count": c})
    if rep.scheme == "linear":
        for s, c in sorted(rep.terms.items()):
            recs.append({"record": "size", "size": s, "count": c})
        for s, c in sorted(rep.minimal.items()):
            recs.append({"record": "minimal_size", "size": s, "count": c})
    else:
        for (p, q), c in sorted(rep.terms.items()):
            recs.append({"record": "pair", "p": p, "q": q, "count": c})
        for (p, q), c in sorted(rep.minimal.items()):
            recs.append({"record": "minimal_pair", "p": p, "q": q, "count": c})
    recs.append({"record": "totals", "gamma": rep.gamma_size, "ordered_pair_sum": rep.ordered_sum_total,
                 "minimal": rep.minimal_total})
    acc = rep.accessibility
    recs.append({"record": "accessibility", "count": rep.gamma_size, "denominator": rep.denominator,
                 "fraction": f"{acc.numerator}/{acc.denominator}", "decimal": fraction_decimal(acc)})
    recs += [{"record": "convention", "text": c} for c in rep.conventions]
    recs += [{"record": "flag", "text": f} for f in rep.flags]
    return recs


def render(rep: AccessReport, fmt: Format = "text") -> bytes:
    if fmt == "text":
        return ("\n".join(_text_lines(rep)) + "\n").encode()
    if fmt == "jsonl":
        return render_records(_records(rep))
    raise ValueError(f"unknown format {fmt!r}")


def render_records(records: list[dict]) -> bytes:
    return "".join(json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n" for r in records).encode()
