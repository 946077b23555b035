import math

import pytest
import gsidon.core.bounds
from tests.util import *


def test_c_upper_bound_small():
    assert c_upper_bound(2, 7) == 3
    assert c_upper_bound_parts(2, 7) == {'trivial': 7, 'binomial': 3}
    assert set(c_upper_bound_parts(3, 20)) == {'trivial', 'binomial', 'closed-form'}
    assert set(c_upper_bound_parts(4, 20)) == {'trivial', 'even', 'closed-form'}
    assert set(c_upper_bound_parts(5, 20)) == {'trivial', 'odd'}
    assert c_upper_bound(6, 1) == 1
    with pytest.raises(InvalidInputError):
        c_upper_bound(1, 10)
    with pytest.raises(InvalidInputError):
        c_upper_bound(2, 0)


@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
def test_c_upper_bound_is_sound(g):
    for n in range(1, 15):
        assert naive_max_cyclic(g, n) <= c_upper_bound(g, n)


@pytest.mark.slow
@pytest.mark.parametrize("g", [2, 3, 4])
def test_c_upper_bound_is_sound_larger_n(g):
    for n in range(15, 19):
        assert naive_max_cyclic(g, n) <= c_upper_bound(g, n)


@pytest.mark.slow
@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
def test_c_upper_bound_against_uncapped_search(g):
    search = CyclicSearch(g, budget=10 ** 9, use_upper_bound=False)
    for n in range(1, 26):
        certificate = search.max_size(n)
        assert certificate.exhausted
        assert certificate.value <= c_upper_bound(g, n)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_c_upper_bound_tight_for_singer(q):
    S = singer(make_field(q, 3), [(1, 0)])
    assert S.modulus == q * q + q + 1
    assert g_value(S) <= 2
    assert c_upper_bound(2, S.modulus) == len(S) == q + 1


def test_sigma_lower_from_witness():
    bound = sigma_lower_from_witness(2, 7, IntegerSet([1, 2, 5, 7]))
    assert bound.bound == Fraction(8, 7)
    assert bound.g_target == 4
    with pytest.raises(WitnessError) as error:
        sigma_lower_from_witness(2, 6, IntegerSet([1, 2, 5, 7]))
    assert error.value.constraint == "container"
    with pytest.raises(WitnessError) as error:
        sigma_lower_from_witness(2, 7, IntegerSet([1, 2, 3]))
    assert error.value.constraint == "g-value"


def test_verify_witness_table():
    report = verify_witness_table()
    assert report.ok
    assert report.failures == []
    ratios = [check.bound.bound for check in report.checks]
    assert ratios == [Fraction(8, 7), Fraction(16, 15), Fraction(36, 31), Fraction(49, 45), Fraction(6, 5),
                      Fraction(121, 105), Fraction(289, 240), Fraction(32, 27), Fraction(40, 33),
                      Fraction(324, 275)]
    assert report.to_json()['ok']


def test_verify_witness_table_reports_bad_rows(monkeypatch):
    rows = [WitnessRow(2, 7, 4, IntegerSet([1, 2, 5, 7]), Fraction(8, 7)),
            WitnessRow(2, 7, 4, IntegerSet([1, 2, 3, 7]), Fraction(8, 7)),
            WitnessRow(3, 5, 5, IntegerSet([1, 2, 3, 5]), Fraction(1, 1))]
    monkeypatch.setattr(gsidon.core.bounds, "load_table4", lambda: rows)
    report = verify_witness_table()
    assert not report.ok
    assert [check.ok for check in report.checks] == [True, False, False]
    assert report.checks[1].failures[0].startswith("g-value")
    assert len(report.checks[2].failures) == 2


def test_thm4_parameters():
    assert thm4_parameters(6) == (17, 11)
    assert thm4_parameters(1) == (4, 1)
    assert sigma_lower_thm4(1).bound == Fraction(1, 4)
    with pytest.raises(InvalidInputError):
        thm4_parameters(0)


def test_thm4_formula_matches_block_sets():
    for g in range(1, 61):
        assert sigma_lower_thm4(g) == sigma_lower_thm4(g, constructive=False)


def test_thm4_limit():
    assert sigma_limit() == Fraction(121, 96)
    value = sigma_lower_thm4(6000, constructive=False).float_value
    assert abs(value - 11 / math.sqrt(96)) < 1e-3


def test_theorem3_values():
    values = theorem3_values()
    assert sorted(values) == list(range(4, 23, 2))
    # the stated value for sigma(8) is weaker than the g = 4 witness row
    assert values[8] == Fraction(8, 7)
    assert sigma_table([8])[0].ratio == Fraction(36, 31)


def test_sigma_table():
    rows = sigma_table([2, 4, 5, 24])
    assert [row.ratio for row in rows] == [Fraction(1, 4), Fraction(8, 7), Fraction(8, 7), Fraction(11, 9)]
    assert [row.source for row in rows] == [BoundSource.THM4_FORMULA, BoundSource.THM3_WITNESS,
                                            BoundSource.THM3_WITNESS, BoundSource.THM4_FORMULA]
    assert rows[1].csv_header() == "g,lower_bound_rational,lower_bound_float,source"
    assert rows[1].csv_row() == "4,8/7,1.0690449676,thm3-witness"
    assert rows[3].to_json()['source'] == "thm4-formula"
    with pytest.raises(InvalidInputError):
        sigma_table([1])


@pytest.mark.parametrize("t,prime", [(2, 2), (11, 11), (12, 11), (100, 97)])
def test_largest_prime_at_most(t, prime):
    assert largest_prime_at_most(t) == prime


def test_largest_prime_at_most_error():
    with pytest.raises(InvalidInputError):
        largest_prime_at_most(1)
