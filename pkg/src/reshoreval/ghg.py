"""Scope-3 transport emission engine (distance-based method).

Per leg and per gas, emission = mass x distance x mode emission factor.
Mode totals add road and sea; CO2-equivalent rolls CH4 and N2O up with
global-warming-potential multipliers. Reduction reports compare an offshore
against a reshored supply chain cell by cell.

The canonical activity unit is the tonne-kilometer; distances declared in
miles are converted at exactly 1.609344 km per mile. Port handling and
idling emissions are out of scope and noted in report footers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Mapping, Sequence

from .errors import ConfigError, DomainError

KM_PER_MILE = 1.609344  # exact by definition
KG_PER_TONNE = 1000.0


class Mode(str, Enum):
    ROAD = "road"
    SEA = "sea"


class Gas(str, Enum):
    CO2 = "CO2"
    CH4 = "CH4"
    N2O = "N2O"


class DistanceUnit(str, Enum):
    KM = "km"
    MILE = "mile"


@dataclass(frozen=True)
class TransportLeg:
    """One shipment segment: a mass moved a distance by one mode."""

    item_id: str
    mode: Mode
    mass_tonnes: float
    distance: float
    distance_unit: DistanceUnit = DistanceUnit.KM

    def __post_init__(self) -> None:
        if not math.isfinite(self.mass_tonnes) or self.mass_tonnes < 0:
            raise DomainError(
                f"leg {self.item_id!r}: mass must be finite and >= 0, got {self.mass_tonnes}"
            )
        if not math.isfinite(self.distance) or self.distance < 0:
            raise DomainError(
                f"leg {self.item_id!r}: distance must be finite and >= 0, got {self.distance}"
            )

    @property
    def distance_km(self) -> float:
        if self.distance_unit is DistanceUnit.MILE:
            return self.distance * KM_PER_MILE
        return self.distance


@dataclass(frozen=True)
class EmissionFactor:
    """Kilograms of one gas emitted per tonne-kilometer by one mode."""

    mode: Mode
    gas: Gas
    kg_per_tonne_km: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.kg_per_tonne_km) or self.kg_per_tonne_km < 0:
            raise DomainError(
                f"emission factor for ({self.mode.value}, {self.gas.value}) must be "
                f"finite and >= 0, got {self.kg_per_tonne_km}"
            )


@dataclass(frozen=True)
class GasVector:
    """Emission totals per gas: CO2 in metric tonnes, CH4 and N2O in kg."""

    co2_tonnes: float = 0.0
    ch4_kg: float = 0.0
    n2o_kg: float = 0.0

    def __post_init__(self) -> None:
        for name in ("co2_tonnes", "ch4_kg", "n2o_kg"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise DomainError(f"gas total {name!r} must be finite and >= 0, got {value}")

    def __add__(self, other: "GasVector") -> "GasVector":
        return GasVector(
            self.co2_tonnes + other.co2_tonnes,
            self.ch4_kg + other.ch4_kg,
            self.n2o_kg + other.n2o_kg,
        )


@dataclass(frozen=True)
class GwpSet:
    """Global-warming-potential multipliers for the CO2e rollup."""

    ch4_gwp: float = 28.0
    n2o_gwp: float = 265.0

    def __post_init__(self) -> None:
        for name in ("ch4_gwp", "n2o_gwp"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 1.0:
                raise DomainError(f"{name} must be a finite multiplier >= 1, got {value}")


@dataclass(frozen=True)
class EmissionReport:
    """Per-mode and total emissions for one supply-chain scenario.

    ``co2e_tonnes`` and ``gwp`` are set once the CO2e rollup has been applied
    (see :func:`with_co2e`); the GWP choice is kept on the report for
    auditability.
    """

    per_mode: Mapping[Mode, GasVector]
    total: GasVector
    co2e_tonnes: float | None = None
    gwp: GwpSet | None = None


@dataclass(frozen=True)
class ReductionReport:
    """Percentage reductions from switching offshore -> reshore, cell by
    cell. ``None`` marks cells where the offshore baseline is zero, so no
    percentage applies."""

    per_mode_percent: Mapping[Mode, Mapping[Gas, float | None]]
    per_gas_percent: Mapping[Gas, float | None]
    co2e_percent: float | None


@dataclass(frozen=True)
class EmissionComparison:
    """Both scenario inventories plus the reduction report between them."""

    offshore: EmissionReport
    reshore: EmissionReport
    reduction: ReductionReport


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def _factor_table(factors: Iterable[EmissionFactor]) -> dict[tuple[Mode, Gas], float]:
    table: dict[tuple[Mode, Gas], float] = {}
    for factor in factors:
        key = (factor.mode, factor.gas)
        if key in table:
            raise ConfigError(
                f"duplicate emission factor for ({factor.mode.value}, {factor.gas.value})"
            )
        table[key] = factor.kg_per_tonne_km
    return table


def _leg_emission(leg: TransportLeg, table: Mapping[tuple[Mode, Gas], float]) -> GasVector:
    tonne_km = leg.mass_tonnes * leg.distance_km

    def factor(gas: Gas) -> float:
        try:
            return table[(leg.mode, gas)]
        except KeyError:
            raise ConfigError(
                f"no emission factor for mode {leg.mode.value!r}, gas {gas.value}"
            ) from None

    return GasVector(
        co2_tonnes=tonne_km * factor(Gas.CO2) / KG_PER_TONNE,
        ch4_kg=tonne_km * factor(Gas.CH4),
        n2o_kg=tonne_km * factor(Gas.N2O),
    )


def leg_emission(leg: TransportLeg, factors: Iterable[EmissionFactor]) -> GasVector:
    """Emissions of one leg, per gas: mass x distance_km x factor."""
    return _leg_emission(leg, _factor_table(factors))


def mode_totals(
    legs: Sequence[TransportLeg], factors: Iterable[EmissionFactor]
) -> EmissionReport:
    """Sum leg emissions per mode and overall.

    Both modes always appear in ``per_mode`` (zero vectors when absent). Legs
    are summed in item_id order so the floating-point result is independent
    of input ordering.
    """
    table = _factor_table(factors)
    per_mode = {mode: GasVector() for mode in Mode}
    for leg in sorted(legs, key=lambda l: l.item_id):
        per_mode[leg.mode] = per_mode[leg.mode] + _leg_emission(leg, table)
    total = per_mode[Mode.ROAD] + per_mode[Mode.SEA]
    return EmissionReport(per_mode=per_mode, total=total)


def co2e_total(gases: GasVector, gwp: GwpSet) -> float:
    """CO2-equivalent tonnes: CO2 plus GWP-weighted CH4 and N2O (kg -> t)."""
    return (
        gases.co2_tonnes
        + gases.ch4_kg / KG_PER_TONNE * gwp.ch4_gwp
        + gases.n2o_kg / KG_PER_TONNE * gwp.n2o_gwp
    )


def with_co2e(report: EmissionReport, gwp: GwpSet) -> EmissionReport:
    """Copy of the report with the CO2e rollup and its GWP choice recorded."""
    return replace(report, co2e_tonnes=co2e_total(report.total, gwp), gwp=gwp)


def _percent(offshore: float, reshore: float) -> float | None:
    if offshore == 0:
        return None
    return (offshore - reshore) / offshore * 100.0


def reduction_report(offshore: EmissionReport, reshore: EmissionReport) -> ReductionReport:
    """Cell-by-cell percentage reductions from offshore to reshore.

    Cells whose offshore baseline is zero report ``None`` (not applicable).
    Both reports must have been finalized with the same GWP set for the CO2e
    cell to be filled.
    """
    if (
        offshore.gwp is not None
        and reshore.gwp is not None
        and offshore.gwp != reshore.gwp
    ):
        raise ConfigError(
            f"reports use different GWP sets: {offshore.gwp} vs {reshore.gwp}"
        )
    per_mode: dict[Mode, dict[Gas, float | None]] = {}
    for mode in Mode:
        off_vec = offshore.per_mode.get(mode, GasVector())
        re_vec = reshore.per_mode.get(mode, GasVector())
        per_mode[mode] = {
            Gas.CO2: _percent(off_vec.co2_tonnes, re_vec.co2_tonnes),
            Gas.CH4: _percent(off_vec.ch4_kg, re_vec.ch4_kg),
            Gas.N2O: _percent(off_vec.n2o_kg, re_vec.n2o_kg),
        }
    per_gas = {
        Gas.CO2: _percent(offshore.total.co2_tonnes, reshore.total.co2_tonnes),
        Gas.CH4: _percent(offshore.total.ch4_kg, reshore.total.ch4_kg),
        Gas.N2O: _percent(offshore.total.n2o_kg, reshore.total.n2o_kg),
    }
    if offshore.co2e_tonnes is not None and reshore.co2e_tonnes is not None:
        co2e = _percent(offshore.co2e_tonnes, reshore.co2e_tonnes)
    else:
        co2e = None
    return ReductionReport(per_mode_percent=per_mode, per_gas_percent=per_gas, co2e_percent=co2e)


def compare_emissions(
    offshore_legs: Sequence[TransportLeg],
    reshore_legs: Sequence[TransportLeg],
    factors: Iterable[EmissionFactor],
    gwp: GwpSet,
) -> EmissionComparison:
    """Full offshore-vs-reshore comparison: both inventories with CO2e plus
    the reduction report."""
    factor_list = list(factors)
    offshore = with_co2e(mode_totals(offshore_legs, factor_list), gwp)
    reshore = with_co2e(mode_totals(reshore_legs, factor_list), gwp)
    return EmissionComparison(offshore, reshore, reduction_report(offshore, reshore))
