"""Decision pipeline: candidate screen, then cost comparison, then emission
reduction, joined into one record per product.

Stage sequencing is strict: a product must pass the screen before its costs
are compared, and must show a present-day cost advantage before emissions
are weighed. ``PipelineConfig.evaluate_excluded`` computes the later stages
for excluded products anyway, for reporting completeness, without changing
any recommendation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .errors import DomainError
from .ghg import EmissionFactor, GwpSet, TransportLeg, compare_emissions
from .ri import ScreeningPolicy, ScreeningRow, screen_candidates
from .tco import SourcingScenario, compare_scenarios

TcoPair = tuple[SourcingScenario, SourcingScenario]  # (domestic, offshore)
LegPair = tuple[Sequence[TransportLeg], Sequence[TransportLeg]]  # (offshore, reshore)


class Recommendation(str, Enum):
    RESHORE = "reshore"
    RETAIN_OFFSHORE = "retain_offshore"
    INSUFFICIENT_DATA = "insufficient_data"


@dataclass(frozen=True)
class PipelineConfig:
    """Knobs for the pipeline run.

    ``require_ghg_non_negative`` controls what happens when a product clears
    the cost stage but has no usable emission data: on (the default) the
    verdict is insufficient_data rather than a silent pass; off, the cost
    result alone decides.
    """

    screening_policy: ScreeningPolicy = ScreeningPolicy()
    horizon_years: int = 5
    require_ghg_non_negative: bool = True
    evaluate_excluded: bool = False

    def __post_init__(self) -> None:
        if self.horizon_years < 1:
            raise DomainError(f"horizon_years must be >= 1, got {self.horizon_years}")


@dataclass(frozen=True)
class DecisionRecord:
    """The joined verdict for one product group."""

    product_label: str
    naics_code: str
    screened: bool
    screen_reason: str
    tco_advantage_now: float | None
    tco_advantage_horizon: float | None
    ghg_co2e_reduction_percent: float | None
    recommendation: Recommendation
    detail: str = ""

    def __post_init__(self) -> None:
        if self.recommendation is Recommendation.RESHORE:
            if not self.screened:
                raise DomainError(
                    f"{self.product_label}: reshore recommendation requires a passed screen"
                )
            if self.tco_advantage_now is None or self.tco_advantage_now <= 0:
                raise DomainError(
                    f"{self.product_label}: reshore recommendation requires a positive "
                    f"present-day cost advantage"
                )


def run_pipeline(
    rows: Sequence[ScreeningRow],
    tco_pairs: Mapping[str, TcoPair],
    ghg_pairs: Mapping[str, LegPair],
    factors: Sequence[EmissionFactor],
    gwp: GwpSet,
    config: PipelineConfig = PipelineConfig(),
) -> list[DecisionRecord]:
    """Evaluate every screening row and return one record per product,
    sorted by product label."""
    screen = screen_candidates(rows, config.screening_policy)
    passed = {row.label for row in screen.shortlist}
    reasons = {row.label: reason for row, reason in screen.excluded}
    return [
        _evaluate_product(
            row,
            screened=row.label in passed,
            screen_reason=reasons.get(row.label, "pass"),
            tco_pair=tco_pairs.get(row.label),
            ghg_pair=ghg_pairs.get(row.label),
            factors=factors,
            gwp=gwp,
            config=config,
        )
        for row in sorted(rows, key=lambda r: r.label)
    ]


def _evaluate_product(
    row: ScreeningRow,
    *,
    screened: bool,
    screen_reason: str,
    tco_pair: TcoPair | None,
    ghg_pair: LegPair | None,
    factors: Sequence[EmissionFactor],
    gwp: GwpSet,
    config: PipelineConfig,
) -> DecisionRecord:
    advantage_now: float | None = None
    advantage_horizon: float | None = None
    reduction: float | None = None

    run_tco = (screened or config.evaluate_excluded) and tco_pair is not None
    if run_tco:
        comparison = compare_scenarios(tco_pair[0], tco_pair[1], config.horizon_years)
        advantage_now = comparison.tco_advantage_domestic_now
        advantage_horizon = comparison.tco_advantage_domestic_horizon

    cost_positive = advantage_now is not None and advantage_now > 0
    run_ghg = ghg_pair is not None and (
        (screened and cost_positive) or config.evaluate_excluded
    )
    if run_ghg:
        comparison = compare_emissions(ghg_pair[0], ghg_pair[1], factors, gwp)
        reduction = comparison.reduction.co2e_percent

    if not screened:
        recommendation = Recommendation.RETAIN_OFFSHORE
        detail = f"screen: {screen_reason}"
    elif tco_pair is None:
        recommendation = Recommendation.INSUFFICIENT_DATA
        detail = "no sourcing scenarios supplied for shortlisted product"
    elif not cost_positive:
        recommendation = Recommendation.RETAIN_OFFSHORE
        detail = "no present-day cost advantage"
    elif ghg_pair is None or reduction is None:
        if config.require_ghg_non_negative:
            recommendation = Recommendation.INSUFFICIENT_DATA
            detail = (
                "emission reduction unknown (no usable transport data) and a "
                "non-negative reduction is required"
            )
        else:
            recommendation = Recommendation.RESHORE
            detail = "cost advantage; emission data absent and not required"
    elif reduction < 0:
        recommendation = Recommendation.RETAIN_OFFSHORE
        detail = "reshoring would raise transport emissions"
    else:
        recommendation = Recommendation.RESHORE
        detail = "passes screen with cost advantage and emission reduction"

    return DecisionRecord(
        product_label=row.label,
        naics_code=row.naics_code,
        screened=screened,
        screen_reason=screen_reason,
        tco_advantage_now=advantage_now,
        tco_advantage_horizon=advantage_horizon,
        ghg_co2e_reduction_percent=reduction,
        recommendation=recommendation,
        detail=detail,
    )
