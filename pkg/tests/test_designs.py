import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gf4sss.codes import Code, Codeword
from gf4sss.designs import (
    BlockMultiset,
    DesignParams,
    am_additive_report,
    am_linear_report,
    extremal_strengths,
    lambda1_from_enumerator,
    lambda_convert,
    lambda_from_block_count,
    one_design_condition,
    support_multiplicities,
    verify_generalized_design,
    verify_t_design,
    words_of_weight,
)
from gf4sss.errors import (
    EmptyBlockSet,
    MixedWeights,
    NonIntegral,
    PreconditionError,
    UnsupportedLength,
)

FANO = [{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}]


def test_fano_plane_is_2_7_3_1():
    check = verify_t_design(BlockMultiset(7, tuple(FANO)), 2)
    assert (check.t, check.v, check.kb, check.lam) == (2, 7, 3, 1)
    assert check.multiplicity_gcd == 1


def test_repeated_blocks_keep_multiplicity():
    doubled = BlockMultiset(7, tuple(FANO) * 2)
    check = verify_t_design(doubled, 2)
    assert check.lam == 2
    assert check.reduced_lam == 1
    assert check.distinct_blocks == 7


def test_non_design_returns_none():
    assert verify_t_design(BlockMultiset(7, tuple(FANO[:-1])), 2) is None


def test_design_errors():
    with pytest.raises(EmptyBlockSet):
        verify_t_design(BlockMultiset(5, ()), 1)
    with pytest.raises(MixedWeights):
        BlockMultiset(5, ({0, 1}, {0, 1, 2}))
    with pytest.raises(PreconditionError):
        verify_t_design(BlockMultiset(7, tuple(FANO)), 4)


@given(st.integers(2, 9).flatmap(lambda v: st.tuples(st.just(v), st.integers(1, v))).flatmap(
    lambda vk: st.tuples(st.just(vk[0]), st.just(vk[1]), st.integers(0, vk[1]))))
def test_complete_design_lambdas(vkt):
    v, k, t = vkt
    blocks = BlockMultiset(v, tuple(itertools.combinations(range(v), k)))
    check = verify_t_design(blocks, t)
    assert check.lam == math.comb(v - t, k - t)
    for i in range(t + 1):
        assert lambda_convert(check.params, i) == math.comb(v - i, k - i)


def test_lambda_arithmetic():
    p = DesignParams(5, 24, 8, 1)
    assert [lambda_convert(p, i) for i in range(6)] == [759, 253, 77, 21, 5, 1]
    assert lambda_from_block_count(759, 5, 24, 8) == 1
    assert lambda1_from_enumerator(759, 8, 24) == 253
    with pytest.raises(NonIntegral):
        lambda_from_block_count(10, 2, 7, 3)
    with pytest.raises(PreconditionError):
        lambda_convert(p, 6)
    with pytest.raises(ValueError):
        DesignParams(4, 3, 3, 1)


def test_golay_octads_are_steiner_system(golay24):
    check = verify_t_design(BlockMultiset.from_code_weight(golay24, 8), 5)
    assert (check.lam, check.num_blocks, check.distinct_blocks) == (1, 759, 759)


def test_hexacode_weight4_is_2_design(hexacode_additive):
    check = verify_t_design(BlockMultiset.from_code_weight(hexacode_additive, 4), 2)
    assert check.lam == 18
    assert check.multiplicity_gcd == 3
    assert check.reduced_lam == 6


def test_hexacode_generalized_designs(hexacode_additive):
    four = words_of_weight(hexacode_additive, 4)
    six = words_of_weight(hexacode_additive, 6)
    assert verify_generalized_design(four, 1) == 10
    assert verify_generalized_design(four, 2) == 2
    assert verify_generalized_design(six, 1) == 6
    assert verify_generalized_design(four, 3) is None


def test_generalized_design_errors():
    with pytest.raises(EmptyBlockSet):
        verify_generalized_design([], 1)
    with pytest.raises(MixedWeights):
        verify_generalized_design([Codeword.from_symbols("1w0"), Codeword.from_symbols("100")], 1)


def test_qc12_designs(qc12):
    rep = am_additive_report(qc12, 5)
    assert rep.hypothesis
    assert rep.guaranteed_code == (6, 8, 10, 12)
    lam = {w: c.lam for w, c in rep.verified_code.items()}
    assert lam == {6: 3, 8: 105, 10: 630, 12: 234}
    assert rep.min_weight_repetitions == {1: 378, 3: 6}
    six = words_of_weight(qc12, 6)
    assert verify_generalized_design(six, 1) == 66
    assert verify_generalized_design(six, 2) == 10
    assert support_multiplicities(six) == {1: 378, 3: 6}


def test_golay_assmus_mattson(golay24):
    rep = am_linear_report(golay24, 5, verify=False)
    assert rep.hypothesis
    assert rep.guaranteed_code == (8, 12, 16, 24)
    rep = am_linear_report(golay24, 5, verify=True)
    assert rep.verified_code[8].lam == 1
    assert rep.all_verified


def test_am_precondition(hexacode_additive, golay24):
    with pytest.raises(PreconditionError):
        am_additive_report(hexacode_additive, 4)
    with pytest.raises(PreconditionError):
        am_linear_report(golay24, 0)
    with pytest.raises(PreconditionError):
        am_linear_report(hexacode_additive, 1)


def test_am_hypothesis_can_fail():
    # dual weights 2 and 4 both lie in 1..n-t, but d - t = 1
    code = Code.from_symbol_rows(["11000", "00111"], "linear", "gf2")
    rep = am_linear_report(code, 1, verify=False)
    assert rep.s == 2
    assert not rep.hypothesis
    assert rep.guaranteed_code == ()


def test_extremal_strengths():
    assert extremal_strengths(12) == (5, 2)
    assert extremal_strengths(18) == (5, 2)
    assert extremal_strengths(14) == (3, 1)
    assert extremal_strengths(10) == (1, None)
    for bad in (0, 7, -6):
        with pytest.raises(UnsupportedLength):
            extremal_strengths(bad)


def test_one_design_condition():
    assert one_design_condition(6, 4)
    assert one_design_condition(12, 6)
    assert not one_design_condition(30, 8)
