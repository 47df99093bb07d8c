from __future__ import annotations

import logging
import math
import random

import pytest

from reshoreval import (
    ConfigError,
    DomainError,
    IndicatorSeries,
    IndustryProfile,
    InputError,
    LocationFactor,
    ScreeningPolicy,
    ScreeningRow,
    SubfactorScore,
    domestic_score,
    evaluate_reshoring_index,
    location_factor_score,
    normalize_indicator,
    offshore_score,
    reshoring_index,
    screen_candidates,
)
from reshoreval.ri import ATTENUATE, LITERAL_DIVIDE

# ---------------------------------------------------------------------------
# normalize_indicator
# ---------------------------------------------------------------------------


def test_normalize_lower_endpoint_is_one() -> None:
    assert normalize_indicator(3.0, 3.0, 11.0) == 1.0
    assert normalize_indicator(-2.0, -2.0, 0.5) == 1.0


def test_normalize_upper_endpoint_is_seven() -> None:
    assert normalize_indicator(11.0, 3.0, 11.0) == 7.0
    assert normalize_indicator(0.5, -2.0, 0.5) == 7.0


def test_normalize_hand_evaluated_midrange() -> None:
    # 6 * (2 - 0) / (6 - 0) + 1 = 3.0
    assert normalize_indicator(2.0, 0.0, 6.0) == pytest.approx(3.0)


def test_normalize_degenerate_range_returns_midpoint_with_warning(caplog) -> None:
    with caplog.at_level(logging.WARNING, logger="reshoreval.ri"):
        assert normalize_indicator(5.0, 5.0, 5.0, indicator_id="flat") == 4.0
    assert any("midpoint" in message for message in caplog.messages)


def test_normalize_out_of_range_names_indicator() -> None:
    with pytest.raises(DomainError, match="wages"):
        normalize_indicator(12.0, 0.0, 10.0, indicator_id="wages")


def test_normalize_bounded_and_monotone_1000_random_cases() -> None:
    rng = random.Random(1234)
    for _ in range(1000):
        lo = rng.uniform(-1000, 1000)
        hi = lo + rng.uniform(1e-6, 2000)
        a = rng.uniform(lo, hi)
        b = rng.uniform(lo, hi)
        na = normalize_indicator(a, lo, hi)
        nb = normalize_indicator(b, lo, hi)
        assert 1.0 <= na <= 7.0
        assert 1.0 <= nb <= 7.0
        if a < b:
            assert na < nb
        elif a > b:
            assert na > nb


def test_indicator_series_validates_range_and_values() -> None:
    with pytest.raises(DomainError, match="exceeds"):
        IndicatorSeries("x", {"USA": 1.0}, observed_min=2.0, observed_max=1.0)
    with pytest.raises(DomainError, match="outside"):
        IndicatorSeries("x", {"USA": 9.0}, observed_min=0.0, observed_max=5.0)


def test_indicator_series_normalized_unknown_country() -> None:
    series = IndicatorSeries("x", {"USA": 3.0}, observed_min=0.0, observed_max=5.0)
    with pytest.raises(ConfigError, match="Atlantis"):
        series.normalized("Atlantis")


# ---------------------------------------------------------------------------
# location_factor_score
# ---------------------------------------------------------------------------


def test_factor_score_singleton_mean() -> None:
    assert location_factor_score([5.0]) == 5.0


def test_factor_score_symmetric_pair() -> None:
    assert location_factor_score([1.0, 7.0]) == 4.0


def test_factor_score_arithmetic_mean() -> None:
    assert location_factor_score([2.0, 3.0, 4.0]) == pytest.approx(3.0)


def test_factor_score_accepts_subfactor_objects() -> None:
    scores = [SubfactorScore("a", 2.0), SubfactorScore("b", 6.0)]
    assert location_factor_score(scores) == 4.0


def test_factor_score_empty_list_rejected() -> None:
    with pytest.raises(DomainError, match="empty"):
        location_factor_score([])


def test_subfactor_score_bounds() -> None:
    with pytest.raises(DomainError):
        SubfactorScore("a", 0.5)
    with pytest.raises(DomainError):
        SubfactorScore("a", 7.5)


# ---------------------------------------------------------------------------
# domestic_score / offshore_score
# ---------------------------------------------------------------------------


def _profile(weights, logistics=0.0, lead_time=0.0) -> IndustryProfile:
    return IndustryProfile(
        naics_code="331523",
        weights=weights,
        logistics_cost_fraction=logistics,
        lead_time_cost_fraction=lead_time,
    )


def test_domestic_score_single_factor_unit_weight() -> None:
    assert domestic_score({"f": 4.0}, _profile({"f": 1.0})) == 4.0


def test_domestic_score_hand_sum_two_factors() -> None:
    # (4*1 + 6*1) / 2 = 5
    profile = _profile({"a": 1.0, "b": 1.0})
    assert domestic_score({"a": 4.0, "b": 6.0}, profile) == pytest.approx(5.0)


def test_domestic_score_zero_weights_annihilate() -> None:
    profile = _profile({"a": 0.0, "b": 0.0})
    assert domestic_score({"a": 4.0, "b": 6.0}, profile) == 0.0


def test_domestic_score_key_mismatch_lists_factors() -> None:
    profile = _profile({"a": 1.0, "b": 1.0})
    with pytest.raises(ConfigError) as excinfo:
        domestic_score({"a": 4.0, "c": 6.0}, profile)
    assert "b" in str(excinfo.value)
    assert "c" in str(excinfo.value)


def test_offshore_score_no_cost_equals_base_in_both_modes() -> None:
    profile = _profile({"f": 1.0}, logistics=0.0, lead_time=0.0)
    means = {"f": 5.0}
    base = domestic_score(means, profile)
    assert offshore_score(means, profile, ATTENUATE) == base
    assert offshore_score(means, profile, LITERAL_DIVIDE) == base


def test_offshore_score_attenuate_hand_value() -> None:
    # base 5.0, combined fraction 0.12 -> 5 * 0.88 = 4.40
    profile = _profile({"f": 1.0}, logistics=0.09, lead_time=0.03)
    assert offshore_score({"f": 5.0}, profile, ATTENUATE) == pytest.approx(4.40)


def test_offshore_score_literal_divide_hand_value() -> None:
    profile = _profile({"f": 1.0}, logistics=0.09, lead_time=0.03)
    assert offshore_score({"f": 5.0}, profile, LITERAL_DIVIDE) == pytest.approx(5.0 / 0.88)


def test_offshore_score_unknown_mode_rejected() -> None:
    profile = _profile({"f": 1.0})
    with pytest.raises(DomainError, match="adjustment"):
        offshore_score({"f": 5.0}, profile, "halve")


def test_profile_rejects_cost_fraction_at_or_above_one() -> None:
    with pytest.raises(DomainError, match="below 1"):
        _profile({"f": 1.0}, logistics=0.98, lead_time=0.03)


def test_offshore_ordering_attenuate_base_literal_divide() -> None:
    rng = random.Random(7)
    for _ in range(200):
        logistics = rng.uniform(0.0, 0.6)
        lead_time = rng.uniform(0.0, 0.35)
        profile = _profile({"f": 1.0}, logistics=logistics, lead_time=lead_time)
        means = {"f": rng.uniform(1.0, 7.0)}
        base = domestic_score(means, profile)
        attenuated = offshore_score(means, profile, ATTENUATE)
        divided = offshore_score(means, profile, LITERAL_DIVIDE)
        assert attenuated <= base + 1e-12
        assert base <= divided + 1e-12
        if logistics + lead_time == 0.0:
            assert attenuated == base == divided


# ---------------------------------------------------------------------------
# reshoring_index
# ---------------------------------------------------------------------------


def test_index_equal_scores_is_zero() -> None:
    assert reshoring_index(5.0, 5.0) == 0.0


def test_index_hand_evaluated() -> None:
    assert reshoring_index(5.0, 4.0) == pytest.approx(25.0)
    assert reshoring_index(4.0, 5.0) == pytest.approx(-20.0)


def test_index_rejects_non_positive_offshore() -> None:
    with pytest.raises(DomainError):
        reshoring_index(5.0, 0.0)
    with pytest.raises(DomainError):
        reshoring_index(5.0, -1.0)


def test_index_zero_iff_equal_and_sign_matches() -> None:
    rng = random.Random(99)
    for _ in range(500):
        a = rng.uniform(0.1, 10.0)
        b = rng.uniform(0.1, 10.0)
        value = reshoring_index(a, b)
        if a == b:
            assert value == 0.0
        else:
            assert (value > 0) == (a > b)
            assert (value == 0.0) == (a == b)


def test_index_monotone_in_cost_fractions_against_closed_forms() -> None:
    # Under attenuate the index rises with the cost fraction; under
    # literal_divide it falls. Checked against the closed forms directly.
    rng = random.Random(2024)
    for _ in range(300):
        us = rng.uniform(1.0, 7.0)
        base = rng.uniform(1.0, 7.0)
        f1 = rng.uniform(0.0, 0.9)
        f2 = rng.uniform(f1, 0.9)

        def index_attenuate(fraction: float) -> float:
            return (us - base * (1 - fraction)) / (base * (1 - fraction)) * 100.0

        def index_divide(fraction: float) -> float:
            return (us - base / (1 - fraction)) / (base / (1 - fraction)) * 100.0

        assert index_attenuate(f2) >= index_attenuate(f1) - 1e-9
        assert index_divide(f2) <= index_divide(f1) + 1e-9

        # the closed forms match the composed operations
        profile = _profile({"f": 1.0}, logistics=f1, lead_time=0.0)
        means = {"f": base}
        assert reshoring_index(us, offshore_score(means, profile, ATTENUATE)) == pytest.approx(
            index_attenuate(f1)
        )
        assert reshoring_index(us, offshore_score(means, profile, LITERAL_DIVIDE)) == pytest.approx(
            index_divide(f1)
        )


# ---------------------------------------------------------------------------
# evaluate_reshoring_index (indicator-to-index composition)
# ---------------------------------------------------------------------------


def test_evaluate_reshoring_index_on_hand_fixture() -> None:
    indicators = {
        "i1": IndicatorSeries("i1", {"USA": 10.0, "China": 0.0}, 0.0, 10.0),  # 7 vs 1
        "i2": IndicatorSeries("i2", {"USA": 5.0, "China": 5.0}, 0.0, 10.0),   # 4 vs 4
    }
    factors = [
        LocationFactor("f1", "first", ("i1",)),
        LocationFactor("f2", "second", ("i2",)),
    ]
    profile = IndustryProfile(
        naics_code="331523",
        weights={"f1": 1.0, "f2": 1.0},
        logistics_cost_fraction=0.10,
        lead_time_cost_fraction=0.03,
    )
    evaluation = evaluate_reshoring_index(indicators, factors, profile, "USA", "China")
    # hand-composed: domestic (7+4)/2 = 5.5; offshore base (1+4)/2 = 2.5,
    # attenuated by 0.87
    assert evaluation.domestic == pytest.approx(5.5)
    assert evaluation.offshore == pytest.approx(2.5 * 0.87)
    assert evaluation.ri_percent == pytest.approx(
        (5.5 - 2.5 * 0.87) / (2.5 * 0.87) * 100.0
    )


def test_evaluate_reshoring_index_missing_factor_definition() -> None:
    indicators = {"i1": IndicatorSeries("i1", {"USA": 5.0, "China": 5.0}, 0.0, 10.0)}
    profile = _profile({"ghost": 1.0})
    with pytest.raises(ConfigError, match="ghost"):
        evaluate_reshoring_index(indicators, [], profile, "USA", "China")


# ---------------------------------------------------------------------------
# screen_candidates
# ---------------------------------------------------------------------------

SCREEN_ROWS = (
    ScreeningRow("Casting", "331523", 25, 55, 9, 41.13),
    ScreeningRow("Stamping", "336370", 30, 14, 12.89, 25.31),
    ScreeningRow("Forming", "331318", 23, 22, 7.24, 16.28),
    ScreeningRow("Mounting", "331210", 26, 0.37, 9.43, 13.92),
    ScreeningRow("Rubber", "325212", 22, -50, 9.16, 1.56),
    ScreeningRow("Mechanical", "332999", 20, 0.009, 5.25, 0.90),
    ScreeningRow("Plastics", "325211", 23, -100, 10.26, 0.27),
)


def test_screen_published_shortlist_and_coverage() -> None:
    report = screen_candidates(SCREEN_ROWS)
    assert [row.label for row in report.shortlist] == [
        "Casting", "Stamping", "Forming", "Mounting",
    ]
    assert report.tariff_coverage_percent == pytest.approx(96.64, abs=0.01)


def test_screen_empty_input_is_vacuous() -> None:
    report = screen_candidates([])
    assert report.shortlist == ()
    assert report.excluded == ()
    assert report.tariff_coverage_percent == 0


def test_screen_negative_deficit_reason() -> None:
    report = screen_candidates(SCREEN_ROWS)
    reasons = {row.label: reason for row, reason in report.excluded}
    assert reasons["Rubber"] == "trade deficit not positive"
    assert reasons["Plastics"] == "trade deficit not positive"
    assert "below threshold" in reasons["Mechanical"]


def test_screen_duplicate_labels_rejected() -> None:
    rows = [SCREEN_ROWS[0], SCREEN_ROWS[0]]
    with pytest.raises(InputError, match="Casting"):
        screen_candidates(rows)


def test_screen_partitions_input() -> None:
    report = screen_candidates(SCREEN_ROWS)
    kept = {row.label for row in report.shortlist}
    dropped = {row.label for row, _ in report.excluded}
    assert kept | dropped == {row.label for row in SCREEN_ROWS}
    assert kept & dropped == set()
    assert len(report.shortlist) + len(report.excluded) == len(SCREEN_ROWS)


def test_screen_coverage_matches_brute_force_sum_on_random_rows() -> None:
    rng = random.Random(55)
    for _ in range(50):
        rows = [
            ScreeningRow(
                label=f"P{i}",
                naics_code="123456",
                ri_percent=rng.uniform(0, 50),
                trade_deficit_100k=rng.uniform(-100, 100),
                logistics_cost_percent=rng.uniform(0, 20),
                tariff_share_percent=rng.uniform(0, 40),
            )
            for i in range(rng.randint(0, 12))
        ]
        report = screen_candidates(rows)
        expected = 0.0
        for row in report.shortlist:
            expected += row.tariff_share_percent
        assert report.tariff_coverage_percent == pytest.approx(expected, rel=1e-12, abs=1e-12)
        assert len(report.shortlist) + len(report.excluded) == len(rows)


def test_screen_rank_keys_and_tie_break() -> None:
    rows = [
        ScreeningRow("B", "111111", 30, 10, 9, 5.0),
        ScreeningRow("A", "222222", 25, 10, 9, 5.0),
        ScreeningRow("C", "333333", 28, 10, 9, 6.0),
    ]
    by_tariff = screen_candidates(rows, ScreeningPolicy(rank_key="tariff_share"))
    # C first on tariff share; A/B tie broken by label
    assert [row.label for row in by_tariff.shortlist] == ["C", "A", "B"]

    by_ri = screen_candidates(rows, ScreeningPolicy(rank_key="ri"))
    assert [row.label for row in by_ri.shortlist] == ["B", "C", "A"]

    by_composite = screen_candidates(rows, ScreeningPolicy(rank_key="composite"))
    # composite = ri + logistics + tariff: B 44, A 39, C 43
    assert [row.label for row in by_composite.shortlist] == ["B", "C", "A"]


def test_policy_rejects_unknown_rank_key_and_nonfinite_threshold() -> None:
    with pytest.raises(DomainError):
        ScreeningPolicy(rank_key="magic")
    with pytest.raises(DomainError):
        ScreeningPolicy(min_ri_percent=math.inf)


def test_screen_ri_threshold_is_inclusive() -> None:
    # A row exactly at the index threshold passes that criterion; the
    # published Rubber row (index 22) must fail on its deficit instead.
    row = ScreeningRow("Edge", "111111", 22, 5, 9, 1.0)
    report = screen_candidates([row], ScreeningPolicy())
    assert [r.label for r in report.shortlist] == ["Edge"]
