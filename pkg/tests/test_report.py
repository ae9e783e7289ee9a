import json
from fractions import Fraction
from pathlib import Path

import pytest

from gf4sss import catalog
from gf4sss.codes import Code, WeightDistribution
from gf4sss.report import (
    AccessReport,
    additive_access_report,
    analytic_access_report,
    fraction_decimal,
    linear_access_report,
    render,
)

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def hexa_report():
    return additive_access_report(catalog.get("hexacode_additive").code, "hexacode_additive")


def test_hexacode_text(hexa_report):
    text = render(hexa_report, "text").decode()
    assert "accessibility 256/1024 = 0.25" in text.splitlines()
    assert "pairs 100 (3,3)  60 (3,5)  60 (5,3)  36 (5,5)" in text.splitlines()
    assert sum(1 for line in text.splitlines() if line.startswith("flag ")) == 2


@pytest.mark.parametrize("name", ["hexacode_additive", "hexacode_linear"])
@pytest.mark.parametrize("fmt,suffix", [("text", "txt"), ("jsonl", "jsonl")])
def test_golden(name, fmt, suffix):
    code = catalog.get(name).code
    build = additive_access_report if code.kind == "additive" else linear_access_report
    assert render(build(code, name), fmt) == (GOLDEN / f"access_{name}.{suffix}").read_bytes()


def test_s18_golden_and_coefficients():
    rep = analytic_access_report(catalog.get("s18").enumerator, "s18")
    out = render(rep, "text")
    assert out == (GOLDEN / "access_s18_analytic.txt").read_bytes()
    pairs = next(line for line in out.decode().splitlines() if line.startswith("pairs "))
    assert len(pairs.split("  ")) == 36
    assert "166464 (7,7)" in pairs and "876096 (17,17)" in pairs
    assert "accessibility 4294967296/17179869184 = 0.25" in out.decode()


def test_render_is_deterministic(hexa_report):
    again = additive_access_report(catalog.get("hexacode_additive").code, "hexacode_additive")
    for fmt in ("text", "jsonl"):
        assert render(hexa_report, fmt) == render(again, fmt)


def test_jsonl_records(hexa_report):
    recs = [json.loads(line) for line in render(hexa_report, "jsonl").decode().splitlines()]
    pairs = [(r["p"], r["q"]) for r in recs if r["record"] == "pair"]
    assert pairs == sorted(pairs)
    acc = next(r for r in recs if r["record"] == "accessibility")
    assert acc == {"record": "accessibility", "count": 256, "denominator": 1024,
                   "fraction": "1/4", "decimal": "0.25"}
    assert sum(1 for r in recs if r["record"] == "flag") == 2


def test_empty_gamma_renders_zero():
    rep = AccessReport(
        code="empty", scheme="linear", method="enumeration", n=3,
        enumerator=WeightDistribution.from_dict(3, {0: 1}), min_distance=0,
        participants=2, gamma_size=0, denominator=4,
    )
    assert "accessibility 0/4 = 0" in render(rep, "text").decode().splitlines()
    rec = json.loads(render(rep, "jsonl").decode().splitlines()[-1])
    assert rec["decimal"] == "0" and rec["fraction"] == "0/1"


def test_empty_gamma_from_a_code():
    # dual is {0}: no participant group can recover anything
    code = Code.from_symbol_rows(["100", "010", "001"], "linear", "gf2")
    rep = linear_access_report(code, "full")
    assert rep.gamma_size == 0
    assert "accessibility 0/4 = 0" in render(rep).decode()


def test_fraction_decimal():
    assert fraction_decimal(Fraction(1, 4)) == "0.25"
    assert fraction_decimal(Fraction(1, 4096)) == "0.000244140625"
    assert fraction_decimal(Fraction(1, 1)) == "1"
    assert fraction_decimal(Fraction(0)) == "0"
    assert fraction_decimal(Fraction(1, 3)) == "0.333333333333"


def test_unknown_format(hexa_report):
    with pytest.raises(ValueError):
        render(hexa_report, "xml")
