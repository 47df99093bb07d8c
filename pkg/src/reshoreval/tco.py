"""Total-cost-of-ownership engine.

Sums the six cost buckets, adds the freight premium, projects the grand
total over a multi-year horizon with single-rate compound escalation, and
compares a domestic against an offshore sourcing scenario. A calibration
helper back-solves the escalation rate from a (present, future) pair.

Amounts are per-unit in one unspecified currency; computations keep full
precision and reports round for display only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .errors import DomainError, InputError

BUCKET_FIELDS = ("fob_price", "cogs", "other_hard", "risk", "strategic", "green")

# Itemized CoGS components may each carry 2-decimal rounding, so the sum is
# checked to within half a cent.
_COGS_ITEM_TOL = 5e-3


@dataclass(frozen=True)
class CostBuckets:
    """The six per-unit cost buckets: purchase price (FOB), cost-of-goods-sold
    additions (shipping, packaging, duty, insurance), other hard costs, risk,
    strategic, and green costs.

    ``cogs_items`` optionally itemizes the CoGS bucket; when present the
    components must sum to ``cogs``.
    """

    fob_price: float = 0.0
    cogs: float = 0.0
    other_hard: float = 0.0
    risk: float = 0.0
    strategic: float = 0.0
    green: float = 0.0
    cogs_items: Mapping[str, float] | None = None

    def __post_init__(self) -> None:
        for name in BUCKET_FIELDS:
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise DomainError(
                    f"cost bucket {name!r} must be a finite non-negative amount, got {value}"
                )
        if self.cogs_items is not None:
            for item, value in self.cogs_items.items():
                if not math.isfinite(value) or value < 0:
                    raise DomainError(
                        f"cogs item {item!r} must be a finite non-negative amount, got {value}"
                    )
            total = sum(self.cogs_items.values())
            if not math.isclose(total, self.cogs, abs_tol=_COGS_ITEM_TOL):
                raise DomainError(
                    f"itemized cogs components sum to {total}, but the cogs bucket is {self.cogs}"
                )


@dataclass(frozen=True)
class SourcingScenario:
    """Costs for sourcing one product from one region.

    ``freight_premium`` is a flat per-unit surcharge added after the bucket
    total. ``escalation_rate`` is the annual compound rate applied to the
    grand total (premium included) when forecasting.
    """

    region_label: str
    buckets: CostBuckets
    freight_premium: float = 0.0
    escalation_rate: float = 0.0
    product_label: str = ""

    def __post_init__(self) -> None:
        if not math.isfinite(self.freight_premium) or self.freight_premium < 0:
            raise DomainError(
                f"freight premium must be a finite non-negative amount, "
                f"got {self.freight_premium}"
            )
        if not math.isfinite(self.escalation_rate) or self.escalation_rate <= -1.0:
            raise DomainError(
                f"escalation rate must be a finite fraction above -1, "
                f"got {self.escalation_rate}"
            )


@dataclass(frozen=True)
class TcoResult:
    """Totals for one scenario plus its forecast series; ``forecast[t]`` is
    the projected grand total after t years, so ``forecast[0]`` is today."""

    pre_freight_total: float
    grand_total: float
    forecast: tuple[float, ...]


@dataclass(frozen=True)
class TcoComparison:
    """Per-unit advantages from comparing a domestic against an offshore
    scenario: the offshore purchase-price edge today, and the domestic
    ownership-cost edge today and at the horizon."""

    fob_advantage_offshore: float
    tco_advantage_domestic_now: float
    tco_advantage_domestic_horizon: float
    horizon_years: int


@dataclass(frozen=True)
class ProductTco:
    """One product's full cost picture: both scenarios, their results, and
    the comparison between them."""

    product_label: str
    domestic: SourcingScenario
    offshore: SourcingScenario
    domestic_result: TcoResult
    offshore_result: TcoResult
    comparison: TcoComparison


def total_before_freight(buckets: CostBuckets) -> float:
    """Sum of the six cost buckets."""
    return sum(getattr(buckets, name) for name in BUCKET_FIELDS)


def grand_total(scenario: SourcingScenario, years: int = 0) -> TcoResult:
    """Bucket total plus freight premium, forecast out to ``years``.

    With the default ``years=0`` the forecast holds the single present-day
    value.
    """
    pre = total_before_freight(scenario.buckets)
    total = pre + scenario.freight_premium
    return TcoResult(pre, total, forecast_tco(total, scenario.escalation_rate, years))


def forecast_tco(amount: float, rate: float, years: int) -> tuple[float, ...]:
    """Compound-escalation series: value at year t is amount * (1 + rate)^t.

    Returns years + 1 entries, year 0 first.
    """
    if not math.isfinite(rate) or rate <= -1.0:
        raise DomainError(f"escalation rate must be a finite fraction above -1, got {rate}")
    if years < 0:
        raise DomainError(f"forecast horizon must be >= 0 years, got {years}")
    return tuple(amount * (1.0 + rate) ** t for t in range(years + 1))


def back_solve_rate(now: float, future: float, years: int) -> float:
    """Annual compound rate that carries ``now`` to ``future`` in ``years``:
    (future / now)^(1/years) - 1."""
    if not (now > 0 and future > 0):
        raise DomainError(
            f"amounts must be positive to back-solve a rate, got now={now}, future={future}"
        )
    if years < 1:
        raise DomainError(f"back-solving needs at least 1 year, got {years}")
    return (future / now) ** (1.0 / years) - 1.0


def compare_scenarios(
    domestic: SourcingScenario, offshore: SourcingScenario, horizon: int = 5
) -> TcoComparison:
    """Advantage figures for one product: offshore FOB edge today, domestic
    grand-total edge today, and domestic edge at the forecast horizon."""
    if domestic.product_label != offshore.product_label:
        raise InputError(
            f"scenarios describe different products: {domestic.product_label!r} "
            f"vs {offshore.product_label!r}"
        )
    if horizon < 0:
        raise DomainError(f"comparison horizon must be >= 0 years, got {horizon}")
    domestic_result = grand_total(domestic, horizon)
    offshore_result = grand_total(offshore, horizon)
    return TcoComparison(
        fob_advantage_offshore=domestic.buckets.fob_price - offshore.buckets.fob_price,
        tco_advantage_domestic_now=offshore_result.grand_total - domestic_result.grand_total,
        tco_advantage_domestic_horizon=(
            offshore_result.forecast[horizon] - domestic_result.forecast[horizon]
        ),
        horizon_years=horizon,
    )


def product_tco(
    domestic: SourcingScenario, offshore: SourcingScenario, horizon: int = 5
) -> ProductTco:
    """Assemble the per-product report: both scenario forecasts plus the
    comparison."""
    comparison = compare_scenarios(domestic, offshore, horizon)
    return ProductTco(
        product_label=domestic.product_label,
        domestic=domestic,
        offshore=offshore,
        domestic_result=grand_total(domestic, horizon),
        offshore_result=grand_total(offshore, horizon),
        comparison=comparison,
    )
