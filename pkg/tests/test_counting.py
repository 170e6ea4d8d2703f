import logging
from math import comb

import pytest

from bimatch import (
    KSequence,
    LimitError,
    characteristic_form,
    closed_form,
    d_k,
    d_sum,
    disjoint_count,
    equal_split_count,
    recurrence_eval,
    total_count,
)
from bimatch.counting import MAX_COUNT, _checked


# ------------------------------------------------------------------ d_sum

def test_d_sum_appendix_spot_values():
    assert d_sum(3, (3, 2, 1, 0)) == 3
    assert d_sum(6, (3, 2, 1, 0)) == 16
    assert d_sum(5, (4, 2, 1, 0)) == 17


def test_d_sum_requires_four_terms():
    with pytest.raises(ValueError):
        d_sum(5, (2, 1, 0))
    with pytest.raises(ValueError):
        d_sum(-1, (3, 2, 1, 0))


def test_d_sum_small_n_edge_cases():
    assert d_sum(0, (3, 2, 1, 0)) == 0
    assert d_sum(1, (3, 2, 1, 0)) == 0
    assert d_sum(2, (3, 2, 1, 0)) == 1


# ------------------------------------------------------------ recurrences

def test_recurrence_initial_values():
    assert [recurrence_eval((3, 2, 1, 0), n) for n in range(7)] == [0, 0, 1, 3, 6, 10, 16]
    assert [recurrence_eval((4, 2, 1, 0), n) for n in range(1, 6)] == [0, 1, 4, 9, 17]
    assert [recurrence_eval((4, 3, 2, 1, 0), n) for n in range(1, 12)] == [
        0, 1, 3, 7, 12, 20, 30, 44, 61, 83, 109,
    ]


def test_recurrence_matches_nested_sums():
    for key, start in [((3, 2, 1, 0), 0), ((4, 2, 1, 0), 1), ((4, 3, 2, 1, 0), 1)]:
        for n in range(start, 61):
            assert recurrence_eval(key, n) == d_sum(n, key)


def test_recurrence_validation():
    with pytest.raises(ValueError):
        recurrence_eval((5, 2, 1, 0), 3)
    with pytest.raises(ValueError):
        recurrence_eval((4, 2, 1, 0), 0)


def test_characteristic_forms_track_recurrences():
    for key, start in [((3, 2, 1, 0), 0), ((4, 2, 1, 0), 1), ((4, 3, 2, 1, 0), 1)]:
        for n in range(start, 201):
            exact = recurrence_eval(key, n)
            approx = characteristic_form(key, n)
            assert abs(approx - exact) < 1e-6
            assert round(approx) == exact


def test_characteristic_form_unknown_sequence():
    with pytest.raises(ValueError):
        characteristic_form((5, 3, 1, 0), 4)


# -------------------------------------------------------------------- d_k

def test_d_k_zero_when_third_terms_differ():
    pair = [KSequence((6, 3, 2, 1, 0)), KSequence((6, 3, 1, 0))]
    assert all(d_k(n, pair) == 0 for n in range(0, 30))


def test_d_k_worked_example():
    pair = [KSequence((6, 4, 2, 1, 0)), KSequence((6, 4, 2, 0))]
    for n in range(2, 101):
        up, down = (n + 1) // 2, n // 2
        expected = up * (up - 1) // 2 + down * (down + 1) // 2
        assert d_k(n, pair) == expected


def test_d_k_singleton_reduces_to_d_sum():
    for n in range(0, 51):
        assert d_k(n, [KSequence((4, 2, 1, 0))]) == d_sum(n, (4, 2, 1, 0))


def test_d_k_is_a_set_function():
    a, b = KSequence((6, 4, 2, 1, 0)), KSequence((6, 4, 2, 0))
    assert d_k(17, [a, b]) == d_k(17, [b, a]) == d_k(17, [a, b, a])


def test_d_k_zero_rule_is_absorbing():
    a, b = KSequence((6, 4, 2, 1, 0)), KSequence((6, 4, 2, 0))
    spoiler = KSequence((6, 4, 3, 2, 1, 0))  # third term 3 breaks the agreement
    assert d_k(11, [a, b]) > 0
    assert d_k(11, [a, b, spoiler]) == 0


def test_d_k_validation():
    with pytest.raises(ValueError):
        d_k(5, [])
    with pytest.raises(ValueError):
        d_k(5, [KSequence((4, 2, 0))])  # only three terms
    with pytest.raises(ValueError):
        d_k(5, [KSequence((4, 2, 1, 0)), KSequence((5, 2, 1, 0))])


# --------------------------------------------------------- disjoint splits

def test_equal_split_closed_forms():
    assert equal_split_count(3) == 1
    assert equal_split_count(4) == 2
    for k in range(2, 51):
        assert equal_split_count(2 * k) == k * k - k
        assert equal_split_count(2 * k + 1) == k * k
    with pytest.raises(ValueError):
        equal_split_count(2)


def test_disjoint_count_branches():
    for n in range(3, 30):
        assert disjoint_count(3, n, 1) == comb(n - 1, 2)
        assert disjoint_count(4, n, 2) == equal_split_count(n)
    assert disjoint_count(2, 3, 1) == 1


def test_disjoint_count_validation():
    with pytest.raises(ValueError):
        disjoint_count(4, 2, 1)
    with pytest.raises(ValueError):
        disjoint_count(4, 5, 3)
    with pytest.raises(ValueError):
        disjoint_count(4, 5, 0)


def test_disjoint_count_logs_reading_divergence(caplog):
    # equal blocks but i_size != n/2: the two printed conditions disagree
    with caplog.at_level(logging.INFO, logger="bimatch.counting"):
        disjoint_count(4, 7, 2)
    assert any("diverge" in record.message for record in caplog.records)


# ------------------------------------------------------------ total counts

def test_total_count_3_3():
    breakdown = total_count(3, 3)
    assert breakdown.total == 4
    assert breakdown.disjoint_terms == ((1, comb(2, 2)),)
    assert len(breakdown.inclusion_exclusion_terms) == 1
    assert breakdown.inclusion_exclusion_terms[0].value == 3


def test_total_count_4_4_term_attribution():
    breakdown = total_count(4, 4)
    assert breakdown.total == 21
    assert breakdown.disjoint_terms == ((1, 3), (2, 2))
    by_seqs = {
        tuple(s.terms for s in term.sequences): (term.sign, term.value)
        for term in breakdown.inclusion_exclusion_terms
    }
    assert by_seqs[((4, 3, 2, 1, 0),)] == (1, 7)
    assert by_seqs[((4, 2, 1, 0),)] == (1, 9)
    assert by_seqs[((4, 3, 2, 1, 0), (4, 2, 1, 0))] == (-1, 0)


def test_total_count_m2_is_equal_split():
    for n in range(3, 40):
        assert total_count(2, n).total == equal_split_count(n)


def test_total_count_breakdown_sums_to_total():
    for m, n in [(2, 5), (3, 7), (4, 9), (5, 8), (6, 7)]:
        breakdown = total_count(m, n)
        total = sum(c for _, c in breakdown.disjoint_terms)
        total += sum(t.sign * t.value for t in breakdown.inclusion_exclusion_terms)
        assert total == breakdown.total


def test_total_count_validation():
    with pytest.raises(ValueError):
        total_count(1, 5)
    with pytest.raises(ValueError):
        total_count(4, 3)
    with pytest.raises(ValueError):
        total_count(2, 2)


# ------------------------------------------------------------- closed form

def test_closed_form_case_table():
    assert closed_form(3, 3) == 3
    assert closed_form(4, 4) == 14
    assert closed_form(4, 5) == comb(4, 2) + 4 + 17 + 12 == 39
    for n in range(3, 30):
        assert closed_form(2, n) == equal_split_count(n)


def test_closed_form_matches_total_count():
    for m in (2, 3, 4):
        for n in range(m + 1, 101):
            if n < 3:
                continue
            assert closed_form(m, n) == total_count(m, n).total


def test_closed_form_validation():
    with pytest.raises(ValueError):
        closed_form(5, 6)
    with pytest.raises(ValueError):
        closed_form(4, 3)
    with pytest.raises(ValueError):
        closed_form(2, 2)


def test_count_guard_is_a_hard_error():
    assert _checked(MAX_COUNT) == MAX_COUNT
    with pytest.raises(OverflowError):
        _checked(MAX_COUNT + 1)


def test_total_count_large_n_stays_exact():
    # degree-3 polynomial growth: value for n = 10**4 has ~12 digits
    value = total_count(4, 10_000).total
    assert value == closed_form(4, 10_000)
    assert value < MAX_COUNT
