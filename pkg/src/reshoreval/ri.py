"""Reshoring-index engine.

Normalizes raw socioeconomic indicators onto a 1-7 scale, rolls them up into
weighted country scores per industry, derives the reshoring index (the
percentage by which the domestic score exceeds the offshore score), and
screens candidate product groups on index, trade deficit, and logistics cost.

Everything here is a pure function over immutable inputs; safe to call
concurrently.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import ConfigError, DomainError, InputError

logger = logging.getLogger(__name__)

SCALE_LOW = 1.0
SCALE_HIGH = 7.0
SCALE_MID = 4.0

# How the offshore score absorbs the logistics cost fraction.
ATTENUATE = "attenuate"
LITERAL_DIVIDE = "literal_divide"
OFFSHORE_ADJUSTMENTS = (ATTENUATE, LITERAL_DIVIDE)

RANK_KEYS = ("tariff_share", "ri", "composite")


def _require_finite(value: float, what: str) -> None:
    if not math.isfinite(value):
        raise DomainError(f"{what} must be finite, got {value!r}")


def _check_naics(code: str, what: str) -> None:
    if len(code) != 6 or not code.isdigit():
        raise DomainError(f"{what} must be a 6-digit NAICS code, got {code!r}")


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndicatorSeries:
    """Raw values of one socioeconomic indicator per country, together with
    the observed range used for min-max normalization."""

    indicator_id: str
    values: Mapping[str, float]
    observed_min: float
    observed_max: float

    def __post_init__(self) -> None:
        _require_finite(self.observed_min, f"indicator {self.indicator_id!r} observed_min")
        _require_finite(self.observed_max, f"indicator {self.indicator_id!r} observed_max")
        if self.observed_min > self.observed_max:
            raise DomainError(
                f"indicator {self.indicator_id!r}: observed_min {self.observed_min} "
                f"exceeds observed_max {self.observed_max}"
            )
        for country, raw in self.values.items():
            if not (self.observed_min <= raw <= self.observed_max):
                raise DomainError(
                    f"indicator {self.indicator_id!r}: value {raw} for {country!r} "
                    f"outside [{self.observed_min}, {self.observed_max}]"
                )

    def normalized(self, country: str) -> float:
        """Normalized 1-7 score for one country."""
        if country not in self.values:
            raise ConfigError(
                f"indicator {self.indicator_id!r} has no value for country {country!r}"
            )
        return normalize_indicator(
            self.values[country],
            self.observed_min,
            self.observed_max,
            indicator_id=self.indicator_id,
        )


@dataclass(frozen=True)
class SubfactorScore:
    """A normalized indicator score on the 1-7 scale."""

    subfactor_id: str
    value: float

    def __post_init__(self) -> None:
        if not (SCALE_LOW <= self.value <= SCALE_HIGH):
            raise DomainError(
                f"subfactor {self.subfactor_id!r} score {self.value} outside "
                f"[{SCALE_LOW}, {SCALE_HIGH}]"
            )


@dataclass(frozen=True)
class LocationFactor:
    """A location factor and the ordered subfactors (indicators) feeding it."""

    factor_id: str
    name: str
    subfactor_ids: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.subfactor_ids:
            raise DomainError(f"location factor {self.factor_id!r} has no subfactors")
        if len(set(self.subfactor_ids)) != len(self.subfactor_ids):
            raise DomainError(f"location factor {self.factor_id!r} lists duplicate subfactors")


@dataclass(frozen=True)
class IndustryProfile:
    """Per-industry factor weights plus the logistics adjustment fractions.

    ``logistics_cost_fraction`` is the customs/insurance/freight share of
    value; ``lead_time_cost_fraction`` is the surcharge for import duties and
    long-lead-time inventory. Their sum must stay below 1 so the offshore
    adjustment never flips sign.
    """

    naics_code: str
    weights: Mapping[str, float]
    logistics_cost_fraction: float
    lead_time_cost_fraction: float = 0.03

    def __post_init__(self) -> None:
        _check_naics(self.naics_code, "profile naics_code")
        if not self.weights:
            raise DomainError(f"profile {self.naics_code}: weight map is empty")
        for factor_id, weight in self.weights.items():
            if not math.isfinite(weight) or weight < 0:
                raise DomainError(
                    f"profile {self.naics_code}: weight for {factor_id!r} must be "
                    f"non-negative, got {weight}"
                )
        for name in ("logistics_cost_fraction", "lead_time_cost_fraction"):
            value = getattr(self, name)
            if not (0.0 <= value < 1.0):
                raise DomainError(
                    f"profile {self.naics_code}: {name} must lie in [0, 1), got {value}"
                )
        if self.cost_fraction >= 1.0:
            raise DomainError(
                f"profile {self.naics_code}: logistics and lead-time fractions sum to "
                f"{self.cost_fraction}; must stay below 1"
            )

    @property
    def cost_fraction(self) -> float:
        return self.logistics_cost_fraction + self.lead_time_cost_fraction


@dataclass(frozen=True)
class ScreeningRow:
    """One product group in the candidate screen.

    ``trade_deficit_100k`` is signed, in units of $100,000; positive means
    imports exceed exports. ``tariff_share_percent`` is the group's share of
    the company's total tariff cost.
    """

    label: str
    naics_code: str
    ri_percent: float
    trade_deficit_100k: float
    logistics_cost_percent: float
    tariff_share_percent: float

    def __post_init__(self) -> None:
        _check_naics(self.naics_code, f"screening row {self.label!r} naics_code")
        for name in ("ri_percent", "trade_deficit_100k", "logistics_cost_percent",
                     "tariff_share_percent"):
            _require_finite(getattr(self, name), f"screening row {self.label!r} {name}")
        if self.tariff_share_percent < 0:
            raise DomainError(
                f"screening row {self.label!r}: tariff_share_percent must be >= 0, "
                f"got {self.tariff_share_percent}"
            )


@dataclass(frozen=True)
class ScreeningPolicy:
    """Thresholds for the three-factor screen.

    Defaults reproduce the published shortlist: index at least 22%, positive
    trade deficit required, logistics cost at least 7%, ranked by tariff
    share. ``composite`` ranks by the plain sum of the three percent columns.
    """

    min_ri_percent: float = 22.0
    min_logistics_percent: float = 7.0
    require_positive_deficit: bool = True
    rank_key: str = "tariff_share"

    def __post_init__(self) -> None:
        _require_finite(self.min_ri_percent, "policy min_ri_percent")
        _require_finite(self.min_logistics_percent, "policy min_logistics_percent")
        if self.rank_key not in RANK_KEYS:
            raise DomainError(
                f"unknown rank_key {self.rank_key!r}; allowed: {', '.join(RANK_KEYS)}"
            )


@dataclass(frozen=True)
class ScreeningReport:
    """Outcome of the candidate screen: the ranked shortlist, the excluded
    rows with the first criterion each one failed, and the shortlist's summed
    tariff share."""

    shortlist: tuple[ScreeningRow, ...]
    excluded: tuple[tuple[ScreeningRow, str], ...]
    tariff_coverage_percent: float


@dataclass(frozen=True)
class RiEvaluation:
    """Scores and index for one industry profile."""

    naics_code: str
    domestic: float
    offshore: float
    ri_percent: float


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def normalize_indicator(
    raw: float, lo: float, hi: float, *, indicator_id: str = ""
) -> float:
    """Min-max normalize ``raw`` from the observed range [lo, hi] onto [1, 7].

    A degenerate range (hi == lo) maps to the scale midpoint 4.0 so that a
    constant indicator contributes neutrally; this is logged as a warning.
    """
    label = f" for indicator {indicator_id!r}" if indicator_id else ""
    if not (lo <= raw <= hi):
        raise DomainError(
            f"raw value {raw}{label} outside observed range [{lo}, {hi}]"
        )
    if hi == lo:
        logger.warning(
            "degenerate observed range [%s, %s]%s: returning scale midpoint %s",
            lo, hi, label, SCALE_MID,
        )
        return SCALE_MID
    return (SCALE_HIGH - SCALE_LOW) * (raw - lo) / (hi - lo) + SCALE_LOW


def location_factor_score(scores: Sequence[SubfactorScore | float]) -> float:
    """Arithmetic mean of the subfactor scores feeding one location factor."""
    if not scores:
        raise DomainError("cannot average an empty list of subfactor scores")
    values = [s.value if isinstance(s, SubfactorScore) else float(s) for s in scores]
    return sum(values) / len(values)


def _check_factor_keys(factor_means: Mapping[str, float], profile: IndustryProfile) -> None:
    missing = sorted(set(profile.weights) - set(factor_means))
    extra = sorted(set(factor_means) - set(profile.weights))
    if missing or extra:
        raise ConfigError(
            f"factor means do not match profile {profile.naics_code} weights; "
            f"missing: {missing or 'none'}, extra: {extra or 'none'}"
        )
    if not factor_means:
        raise ConfigError(f"profile {profile.naics_code}: no location factors to score")


def domestic_score(factor_means: Mapping[str, float], profile: IndustryProfile) -> float:
    """Weighted country score: sum of (factor mean x factor weight), divided
    by the number of location factors."""
    _check_factor_keys(factor_means, profile)
    total = sum(factor_means[fid] * profile.weights[fid] for fid in factor_means)
    return total / len(factor_means)


def offshore_score(
    factor_means: Mapping[str, float],
    profile: IndustryProfile,
    adjustment: str = ATTENUATE,
) -> float:
    """Weighted country score for the offshore country, adjusted for the
    combined logistics and lead-time cost fraction.

    ``attenuate`` multiplies the base score by (1 - fraction), so higher
    logistics cost lowers the offshore score and raises the index.
    ``literal_divide`` divides by (1 - fraction) instead, which moves the
    index the opposite way; both are kept as explicit modes.
    """
    if adjustment not in OFFSHORE_ADJUSTMENTS:
        raise DomainError(
            f"unknown adjustment {adjustment!r}; allowed: {', '.join(OFFSHORE_ADJUSTMENTS)}"
        )
    fraction = profile.cost_fraction
    if fraction >= 1.0:
        raise DomainError(
            f"profile {profile.naics_code}: combined cost fraction {fraction} must stay below 1"
        )
    base = domestic_score(factor_means, profile)
    if adjustment == ATTENUATE:
        return base * (1.0 - fraction)
    return base / (1.0 - fraction)


def reshoring_index(us_score: float, offshore: float) -> float:
    """Percentage by which the domestic score exceeds the offshore score."""
    if not offshore > 0:
        raise DomainError(f"offshore score must be positive, got {offshore}")
    return (us_score - offshore) / offshore * 100.0


def country_factor_means(
    indicators: Mapping[str, IndicatorSeries],
    factors: Sequence[LocationFactor],
    country: str,
) -> dict[str, float]:
    """Normalize each factor's subfactor indicators for one country and
    average them, yielding the per-factor means used for scoring."""
    means: dict[str, float] = {}
    for factor in factors:
        scores = []
        for subfactor_id in factor.subfactor_ids:
            if subfactor_id not in indicators:
                raise ConfigError(
                    f"location factor {factor.factor_id!r} references unknown "
                    f"indicator {subfactor_id!r}"
                )
            scores.append(indicators[subfactor_id].normalized(country))
        means[factor.factor_id] = location_factor_score(scores)
    return means


def evaluate_reshoring_index(
    indicators: Mapping[str, IndicatorSeries],
    factors: Sequence[LocationFactor],
    profile: IndustryProfile,
    domestic_country: str,
    offshore_country: str,
    adjustment: str = ATTENUATE,
) -> RiEvaluation:
    """Full indicator-to-index evaluation for one industry profile."""
    weighted = [f for f in factors if f.factor_id in profile.weights]
    found = {f.factor_id for f in weighted}
    missing = sorted(set(profile.weights) - found)
    if missing:
        raise ConfigError(
            f"profile {profile.naics_code} weights reference undefined "
            f"location factors: {missing}"
        )
    domestic_means = country_factor_means(indicators, weighted, domestic_country)
    offshore_means = country_factor_means(indicators, weighted, offshore_country)
    us = domestic_score(domestic_means, profile)
    off = offshore_score(offshore_means, profile, adjustment)
    return RiEvaluation(profile.naics_code, us, off, reshoring_index(us, off))


_RANK_VALUE = {
    "tariff_share": lambda row: row.tariff_share_percent,
    "ri": lambda row: row.ri_percent,
    "composite": lambda row: (
        row.ri_percent + row.logistics_cost_percent + row.tariff_share_percent
    ),
}


def _failure_reason(row: ScreeningRow, policy: ScreeningPolicy) -> str | None:
    """First failed criterion, checked in the order index, deficit, logistics."""
    if row.ri_percent < policy.min_ri_percent:
        return (
            f"reshoring index {row.ri_percent:g}% below threshold "
            f"{policy.min_ri_percent:g}%"
        )
    if policy.require_positive_deficit and row.trade_deficit_100k <= 0:
        return "trade deficit not positive"
    if row.logistics_cost_percent < policy.min_logistics_percent:
        return (
            f"logistics cost {row.logistics_cost_percent:g}% below threshold "
            f"{policy.min_logistics_percent:g}%"
        )
    return None


def screen_candidates(
    rows: Sequence[ScreeningRow], policy: ScreeningPolicy = ScreeningPolicy()
) -> ScreeningReport:
    """Partition rows into a ranked shortlist and excluded rows.

    The shortlist is ordered by the policy's rank key, descending, with ties
    broken by label ascending. Coverage is the shortlist's summed tariff
    share.
    """
    labels = [row.label for row in rows]
    duplicates = sorted({label for label in labels if labels.count(label) > 1})
    if duplicates:
        raise InputError(f"duplicate screening labels: {duplicates}")

    shortlist: list[ScreeningRow] = []
    excluded: list[tuple[ScreeningRow, str]] = []
    for row in rows:
        reason = _failure_reason(row, policy)
        if reason is None:
            shortlist.append(row)
        else:
            excluded.append((row, reason))

    rank = _RANK_VALUE[policy.rank_key]
    shortlist.sort(key=lambda row: (-rank(row), row.label))
    coverage = sum(row.tariff_share_percent for row in shortlist)
    return ScreeningReport(tuple(shortlist), tuple(excluded), coverage)
