"""Dataset ingestion with schema validation.

A dataset is a directory of comma-separated files (UTF-8, header row
mandatory) plus a JSON manifest binding GWP values and policy/config:

    indicators.csv        indicator_id, country, value, observed_min, observed_max
    location_factors.csv  factor_id, name, subfactor_id        (one row per subfactor, ordered)
    profiles.csv          naics_code, factor_id, weight, logistics_cost_fraction,
                          lead_time_cost_fraction              (one row per factor)
    screening.csv         label, naics_code, ri_percent, trade_deficit_100k,
                          logistics_cost_percent, tariff_share_percent
    scenarios.csv         product_label, region_label, role, fob_price, cogs,
                          other_hard, risk, strategic, green, freight_premium,
                          escalation_rate                      (role: domestic | offshore)
    legs.csv              item_id, product_label, scenario, mode, mass_tonnes,
                          distance, distance_unit              (scenario: offshore | reshore)
    emission_factors.csv  mode, gas, kg_per_tonne_km
    manifest.json         gwp, screening_policy, horizon_years, require_ghg_non_negative,
                          optional ri section (domestic_country, offshore_country,
                          offshore_adjustment)

Validation is total: every violation is collected with its file, row, and
column, and the loader raises one :class:`InputError` carrying all of them.
It never returns a partial bundle. Row numbers are physical line numbers,
header = line 1.
"""

from __future__ import annotations

import csv
import json
import math
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Sequence

from .errors import InputError
from .ghg import DistanceUnit, EmissionFactor, Gas, GwpSet, Mode, TransportLeg
from .pipeline import LegPair, PipelineConfig, TcoPair
from .ri import (
    ATTENUATE,
    OFFSHORE_ADJUSTMENTS,
    RANK_KEYS,
    IndicatorSeries,
    IndustryProfile,
    LocationFactor,
    ScreeningPolicy,
    ScreeningRow,
)
from .tco import CostBuckets, SourcingScenario

DATA_DIR_ENV = "RESHOREVAL_DATA"

OFFSHORE = "offshore"
RESHORE = "reshore"
LEG_SCENARIOS = (OFFSHORE, RESHORE)

ROLE_DOMESTIC = "domestic"
ROLE_OFFSHORE = "offshore"
ROLES = (ROLE_DOMESTIC, ROLE_OFFSHORE)

DATASET_FILES = {
    "indicators": "indicators.csv",
    "location_factors": "location_factors.csv",
    "profiles": "profiles.csv",
    "screening": "screening.csv",
    "scenarios": "scenarios.csv",
    "legs": "legs.csv",
    "emission_factors": "emission_factors.csv",
    "manifest": "manifest.json",
}

_COLUMNS = {
    "indicators": ("indicator_id", "country", "value", "observed_min", "observed_max"),
    "location_factors": ("factor_id", "name", "subfactor_id"),
    "profiles": (
        "naics_code", "factor_id", "weight",
        "logistics_cost_fraction", "lead_time_cost_fraction",
    ),
    "screening": (
        "label", "naics_code", "ri_percent", "trade_deficit_100k",
        "logistics_cost_percent", "tariff_share_percent",
    ),
    "scenarios": (
        "product_label", "region_label", "role", "fob_price", "cogs", "other_hard",
        "risk", "strategic", "green", "freight_premium", "escalation_rate",
    ),
    "legs": (
        "item_id", "product_label", "scenario", "mode",
        "mass_tonnes", "distance", "distance_unit",
    ),
    "emission_factors": ("mode", "gas", "kg_per_tonne_km"),
}

_MANIFEST_KEYS = {
    "gwp", "screening_policy", "horizon_years", "require_ghg_non_negative", "ri",
}


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding, located by file, row, and column."""

    file: str
    row: int
    column: str
    message: str

    def __str__(self) -> str:
        return f"{self.file}:{self.row}:{self.column}: {self.message}"


class _Collector:
    def __init__(self) -> None:
        self.items: list[Diagnostic] = []

    def add(self, file: str, row: int, column: str, message: str) -> None:
        self.items.append(Diagnostic(file, row, column, message))

    def raise_if_any(self) -> None:
        if self.items:
            summary = "\n".join(str(item) for item in self.items)
            raise InputError(
                f"dataset validation failed ({len(self.items)} problem(s)):\n{summary}",
                diagnostics=self.items,
            )


@dataclass(frozen=True)
class RiSettings:
    """Countries and adjustment mode for index evaluation."""

    domestic_country: str
    offshore_country: str
    offshore_adjustment: str = ATTENUATE


@dataclass(frozen=True)
class LegAssignment:
    """A transport leg bound to the product and supply-chain scenario it
    belongs to."""

    product_label: str
    scenario: str  # offshore | reshore
    leg: TransportLeg


@dataclass(frozen=True)
class DatasetBundle:
    """A fully validated dataset; construction happens only in the loader."""

    indicators: tuple[IndicatorSeries, ...]
    factors: tuple[LocationFactor, ...]
    profiles: tuple[IndustryProfile, ...]
    screening_rows: tuple[ScreeningRow, ...]
    tco_pairs: Mapping[str, TcoPair]
    leg_assignments: tuple[LegAssignment, ...]
    emission_factors: tuple[EmissionFactor, ...]
    gwp: GwpSet
    config: PipelineConfig
    ri_settings: RiSettings | None = None

    @property
    def scenarios(self) -> tuple[SourcingScenario, ...]:
        out: list[SourcingScenario] = []
        for domestic, offshore in self.tco_pairs.values():
            out.extend((domestic, offshore))
        return tuple(out)

    @property
    def legs(self) -> tuple[TransportLeg, ...]:
        return tuple(assignment.leg for assignment in self.leg_assignments)

    def ghg_pairs(self) -> dict[str, LegPair]:
        """Per-product (offshore legs, reshore legs), for products that have
        any leg data."""
        offshore: dict[str, list[TransportLeg]] = {}
        reshore: dict[str, list[TransportLeg]] = {}
        for assignment in self.leg_assignments:
            target = offshore if assignment.scenario == OFFSHORE else reshore
            target.setdefault(assignment.product_label, []).append(assignment.leg)
        return {
            product: (
                tuple(offshore.get(product, ())),
                tuple(reshore.get(product, ())),
            )
            for product in sorted(set(offshore) | set(reshore))
        }


# ---------------------------------------------------------------------------
# Low-level parsing helpers
# ---------------------------------------------------------------------------


def _read_rows(
    path: Path, kind: str, collector: _Collector
) -> list[tuple[int, dict[str, str]]]:
    """Read a CSV file into (line_number, row dict) pairs, checking the
    header against the fixed schema. Column order is free; missing or unknown
    columns are rejected."""
    columns = _COLUMNS[kind]
    name = path.name
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            raw_rows = list(csv.reader(handle))
    except OSError as exc:
        collector.add(name, 1, "file", f"cannot read file: {exc}")
        return []
    except UnicodeDecodeError as exc:
        collector.add(name, 1, "file", f"file is not valid UTF-8: {exc}")
        return []

    if not raw_rows:
        collector.add(
            name, 1, "header",
            f"file is empty; expected header: {', '.join(columns)}",
        )
        return []

    header = [cell.strip() for cell in raw_rows[0]]
    missing = [c for c in columns if c not in header]
    unknown = [c for c in header if c not in columns]
    if missing or unknown:
        parts = []
        if missing:
            parts.append(f"missing column(s): {', '.join(missing)}")
        if unknown:
            parts.append(f"unknown column(s): {', '.join(unknown)}")
        collector.add(name, 1, "header", "; ".join(parts))
        return []

    rows: list[tuple[int, dict[str, str]]] = []
    for lineno, cells in enumerate(raw_rows[1:], start=2):
        if not cells or all(cell.strip() == "" for cell in cells):
            continue  # ignore blank lines
        if len(cells) != len(header):
            collector.add(
                name, lineno, "row",
                f"expected {len(header)} fields, got {len(cells)}",
            )
            continue
        rows.append((lineno, {col: cell.strip() for col, cell in zip(header, cells)}))
    return rows


class _RowReader:
    """Typed access to one CSV row; parse failures become diagnostics and
    yield None."""

    def __init__(self, file: str, lineno: int, row: Mapping[str, str], collector: _Collector):
        self.file = file
        self.lineno = lineno
        self.row = row
        self.collector = collector

    def error(self, column: str, message: str) -> None:
        self.collector.add(self.file, self.lineno, column, message)

    def text(self, column: str) -> str | None:
        value = self.row[column]
        if value == "":
            self.error(column, "value must not be empty")
            return None
        return value

    def number(
        self,
        column: str,
        *,
        minimum: float | None = None,
        exclusive_minimum: float | None = None,
        below_one: bool = False,
    ) -> float | None:
        raw = self.row[column]
        if raw == "":
            self.error(column, "value must not be empty")
            return None
        try:
            value = float(raw)
        except ValueError:
            self.error(column, f"not a number: {raw!r}")
            return None
        if not math.isfinite(value):
            self.error(column, f"not a finite number: {raw!r}")
            return None
        if minimum is not None and value < minimum:
            self.error(column, f"must be >= {minimum:g}, got {raw}")
            return None
        if exclusive_minimum is not None and value <= exclusive_minimum:
            self.error(column, f"must be > {exclusive_minimum:g}, got {raw}")
            return None
        if below_one and value >= 1.0:
            self.error(column, f"must be < 1, got {raw}")
            return None
        return value

    def choice(self, column: str, allowed: Sequence[str]) -> str | None:
        value = self.row[column]
        if value not in allowed:
            self.error(
                column,
                f"invalid value {value!r}; allowed: {{{', '.join(allowed)}}}",
            )
            return None
        return value

    def naics(self, column: str) -> str | None:
        value = self.row[column]
        if len(value) != 6 or not value.isdigit():
            self.error(column, f"must be a 6-digit NAICS code, got {value!r}")
            return None
        return value


# ---------------------------------------------------------------------------
# Per-file parsers
# ---------------------------------------------------------------------------


def _parse_indicators(path: Path, collector: _Collector) -> dict[str, IndicatorSeries]:
    name = path.name
    grouped: dict[str, dict[str, Any]] = {}
    seen: set[tuple[str, str]] = set()
    for lineno, row in _read_rows(path, "indicators", collector):
        reader = _RowReader(name, lineno, row, collector)
        indicator_id = reader.text("indicator_id")
        country = reader.text("country")
        value = reader.number("value")
        lo = reader.number("observed_min")
        hi = reader.number("observed_max")
        if None in (indicator_id, country, value, lo, hi):
            continue
        if lo > hi:
            reader.error("observed_min", f"observed_min {lo:g} exceeds observed_max {hi:g}")
            continue
        if not (lo <= value <= hi):
            reader.error("value", f"value {value:g} outside observed range [{lo:g}, {hi:g}]")
            continue
        if (indicator_id, country) in seen:
            reader.error("country", f"duplicate value for indicator {indicator_id!r}, country {country!r}")
            continue
        seen.add((indicator_id, country))
        group = grouped.setdefault(indicator_id, {"values": {}, "min": lo, "max": hi})
        if group["min"] != lo or group["max"] != hi:
            reader.error(
                "observed_min",
                f"observed range [{lo:g}, {hi:g}] disagrees with earlier rows of "
                f"indicator {indicator_id!r} ([{group['min']:g}, {group['max']:g}])",
            )
            continue
        group["values"][country] = value
    return {
        indicator_id: IndicatorSeries(
            indicator_id=indicator_id,
            values=group["values"],
            observed_min=group["min"],
            observed_max=group["max"],
        )
        for indicator_id, group in grouped.items()
    }


def _parse_location_factors(path: Path, collector: _Collector) -> dict[str, LocationFactor]:
    name = path.name
    grouped: dict[str, dict[str, Any]] = {}
    for lineno, row in _read_rows(path, "location_factors", collector):
        reader = _RowReader(name, lineno, row, collector)
        factor_id = reader.text("factor_id")
        factor_name = reader.text("name")
        subfactor_id = reader.text("subfactor_id")
        if None in (factor_id, factor_name, subfactor_id):
            continue
        group = grouped.setdefault(factor_id, {"name": factor_name, "subfactors": []})
        if group["name"] != factor_name:
            reader.error("name", f"name {factor_name!r} disagrees with earlier rows of factor {factor_id!r}")
            continue
        if subfactor_id in group["subfactors"]:
            reader.error("subfactor_id", f"duplicate subfactor {subfactor_id!r} for factor {factor_id!r}")
            continue
        group["subfactors"].append(subfactor_id)
    return {
        factor_id: LocationFactor(factor_id, group["name"], tuple(group["subfactors"]))
        for factor_id, group in grouped.items()
    }


def _parse_profiles(path: Path, collector: _Collector) -> dict[str, IndustryProfile]:
    name = path.name
    grouped: dict[str, dict[str, Any]] = {}
    for lineno, row in _read_rows(path, "profiles", collector):
        reader = _RowReader(name, lineno, row, collector)
        naics = reader.naics("naics_code")
        factor_id = reader.text("factor_id")
        weight = reader.number("weight", minimum=0.0)
        logistics = reader.number("logistics_cost_fraction", minimum=0.0, below_one=True)
        lead_time = reader.number("lead_time_cost_fraction", minimum=0.0, below_one=True)
        if None in (naics, factor_id, weight, logistics, lead_time):
            continue
        group = grouped.setdefault(
            naics, {"weights": {}, "logistics": logistics, "lead_time": lead_time}
        )
        if group["logistics"] != logistics or group["lead_time"] != lead_time:
            reader.error(
                "logistics_cost_fraction",
                f"cost fractions disagree with earlier rows of profile {naics}",
            )
            continue
        if factor_id in group["weights"]:
            reader.error("factor_id", f"duplicate factor {factor_id!r} for profile {naics}")
            continue
        if logistics + lead_time >= 1.0:
            reader.error(
                "logistics_cost_fraction",
                f"logistics and lead-time fractions sum to {logistics + lead_time:g}; "
                f"must stay below 1",
            )
            continue
        group["weights"][factor_id] = weight
    return {
        naics: IndustryProfile(
            naics_code=naics,
            weights=group["weights"],
            logistics_cost_fraction=group["logistics"],
            lead_time_cost_fraction=group["lead_time"],
        )
        for naics, group in grouped.items()
        if group["weights"]
    }


def _parse_screening(path: Path, collector: _Collector) -> list[ScreeningRow]:
    name = path.name
    rows: list[ScreeningRow] = []
    seen: dict[str, int] = {}
    for lineno, row in _read_rows(path, "screening", collector):
        reader = _RowReader(name, lineno, row, collector)
        label = reader.text("label")
        naics = reader.naics("naics_code")
        ri = reader.number("ri_percent")
        deficit = reader.number("trade_deficit_100k")
        logistics = reader.number("logistics_cost_percent")
        tariff = reader.number("tariff_share_percent", minimum=0.0)
        if None in (label, naics, ri, deficit, logistics, tariff):
            continue
        if label in seen:
            reader.error("label", f"duplicate label {label!r} (first seen on line {seen[label]})")
            continue
        seen[label] = lineno
        rows.append(ScreeningRow(label, naics, ri, deficit, logistics, tariff))
    return rows


def _parse_scenarios(
    path: Path, collector: _Collector
) -> dict[str, dict[str, tuple[int, SourcingScenario]]]:
    name = path.name
    grouped: dict[str, dict[str, tuple[int, SourcingScenario]]] = {}
    for lineno, row in _read_rows(path, "scenarios", collector):
        reader = _RowReader(name, lineno, row, collector)
        product = reader.text("product_label")
        region = reader.text("region_label")
        role = reader.choice("role", ROLES)
        buckets = {
            field: reader.number(field, minimum=0.0)
            for field in ("fob_price", "cogs", "other_hard", "risk", "strategic", "green")
        }
        freight = reader.number("freight_premium", minimum=0.0)
        escalation = reader.number("escalation_rate", exclusive_minimum=-1.0)
        if None in (product, region, role, freight, escalation) or None in buckets.values():
            continue
        roles = grouped.setdefault(product, {})
        if role in roles:
            reader.error("role", f"duplicate {role!r} scenario for product {product!r}")
            continue
        roles[role] = (
            lineno,
            SourcingScenario(
                region_label=region,
                buckets=CostBuckets(**buckets),
                freight_premium=freight,
                escalation_rate=escalation,
                product_label=product,
            ),
        )
    for product, roles in grouped.items():
        for role in ROLES:
            if role not in roles:
                present_role = next(iter(roles))
                lineno = roles[present_role][0]
                collector.add(
                    name, lineno, "role",
                    f"product {product!r} has a {present_role!r} scenario but no {role!r} partner",
                )
    return grouped


def _parse_legs(path: Path, collector: _Collector) -> list[tuple[int, LegAssignment]]:
    name = path.name
    assignments: list[tuple[int, LegAssignment]] = []
    for lineno, row in _read_rows(path, "legs", collector):
        reader = _RowReader(name, lineno, row, collector)
        item_id = reader.text("item_id")
        product = reader.text("product_label")
        scenario = reader.choice("scenario", LEG_SCENARIOS)
        mode = reader.choice("mode", [m.value for m in Mode])
        mass = reader.number("mass_tonnes", minimum=0.0)
        distance = reader.number("distance", minimum=0.0)
        unit = reader.choice("distance_unit", [u.value for u in DistanceUnit])
        if None in (item_id, product, scenario, mode, mass, distance, unit):
            continue
        assignments.append(
            (
                lineno,
                LegAssignment(
                    product_label=product,
                    scenario=scenario,
                    leg=TransportLeg(
                        item_id=item_id,
                        mode=Mode(mode),
                        mass_tonnes=mass,
                        distance=distance,
                        distance_unit=DistanceUnit(unit),
                    ),
                ),
            )
        )
    return assignments


def _parse_emission_factors(path: Path, collector: _Collector) -> list[EmissionFactor]:
    name = path.name
    factors: list[EmissionFactor] = []
    seen: set[tuple[str, str]] = set()
    for lineno, row in _read_rows(path, "emission_factors", collector):
        reader = _RowReader(name, lineno, row, collector)
        mode = reader.choice("mode", [m.value for m in Mode])
        gas = reader.choice("gas", [g.value for g in Gas])
        value = reader.number("kg_per_tonne_km", minimum=0.0)
        if None in (mode, gas, value):
            continue
        if (mode, gas) in seen:
            reader.error("gas", f"duplicate emission factor for ({mode}, {gas})")
            continue
        seen.add((mode, gas))
        factors.append(EmissionFactor(Mode(mode), Gas(gas), value))
    return factors


# ---------------------------------------------------------------------------
# Manifest
# ---------------------------------------------------------------------------


def _manifest_number(
    data: Mapping[str, Any], key: str, file: str, collector: _Collector,
    *, minimum: float | None = None,
) -> float | None:
    value = data.get(key)
    if not isinstance(value, (int, float)) or isinstance(value, bool) or not math.isfinite(value):
        collector.add(file, 1, key, f"expected a finite number, got {value!r}")
        return None
    if minimum is not None and value < minimum:
        collector.add(file, 1, key, f"must be >= {minimum:g}, got {value!r}")
        return None
    return float(value)


def _parse_manifest(
    path: Path, collector: _Collector
) -> tuple[GwpSet, PipelineConfig, RiSettings | None]:
    name = path.name
    fallback = (GwpSet(), PipelineConfig(), None)
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        collector.add(name, 1, "file", f"cannot read file: {exc}")
        return fallback
    except json.JSONDecodeError as exc:
        collector.add(name, exc.lineno, "json", f"invalid JSON: {exc.msg}")
        return fallback
    if not isinstance(data, dict):
        collector.add(name, 1, "json", "manifest must be a JSON object")
        return fallback

    for key in sorted(set(data) - _MANIFEST_KEYS):
        collector.add(name, 1, key, f"unknown manifest key {key!r}")

    gwp = GwpSet()
    gwp_data = data.get("gwp")
    if not isinstance(gwp_data, dict):
        collector.add(name, 1, "gwp", "manifest must define a 'gwp' object with 'ch4' and 'n2o'")
    else:
        ch4 = _manifest_number(gwp_data, "ch4", name, collector, minimum=1.0)
        n2o = _manifest_number(gwp_data, "n2o", name, collector, minimum=1.0)
        for key in sorted(set(gwp_data) - {"ch4", "n2o"}):
            collector.add(name, 1, f"gwp.{key}", f"unknown gwp key {key!r}")
        if ch4 is not None and n2o is not None:
            gwp = GwpSet(ch4_gwp=ch4, n2o_gwp=n2o)

    policy = ScreeningPolicy()
    policy_data = data.get("screening_policy")
    if policy_data is not None:
        if not isinstance(policy_data, dict):
            collector.add(name, 1, "screening_policy", "must be a JSON object")
        else:
            kwargs: dict[str, Any] = {}
            known = {
                "min_ri_percent", "min_logistics_percent",
                "require_positive_deficit", "rank_key",
            }
            for key in sorted(set(policy_data) - known):
                collector.add(name, 1, f"screening_policy.{key}", f"unknown policy key {key!r}")
            for key in ("min_ri_percent", "min_logistics_percent"):
                if key in policy_data:
                    value = _manifest_number(policy_data, key, name, collector)
                    if value is not None:
                        kwargs[key] = value
            if "require_positive_deficit" in policy_data:
                flag = policy_data["require_positive_deficit"]
                if not isinstance(flag, bool):
                    collector.add(
                        name, 1, "screening_policy.require_positive_deficit",
                        f"expected true/false, got {flag!r}",
                    )
                else:
                    kwargs["require_positive_deficit"] = flag
            if "rank_key" in policy_data:
                rank_key = policy_data["rank_key"]
                if rank_key not in RANK_KEYS:
                    collector.add(
                        name, 1, "screening_policy.rank_key",
                        f"invalid value {rank_key!r}; allowed: {{{', '.join(RANK_KEYS)}}}",
                    )
                else:
                    kwargs["rank_key"] = rank_key
            policy = ScreeningPolicy(**kwargs)

    horizon = 5
    if "horizon_years" in data:
        raw_horizon = data["horizon_years"]
        if not isinstance(raw_horizon, int) or isinstance(raw_horizon, bool) or raw_horizon < 1:
            collector.add(name, 1, "horizon_years", f"expected an integer >= 1, got {raw_horizon!r}")
        else:
            horizon = raw_horizon

    require_ghg = True
    if "require_ghg_non_negative" in data:
        flag = data["require_ghg_non_negative"]
        if not isinstance(flag, bool):
            collector.add(name, 1, "require_ghg_non_negative", f"expected true/false, got {flag!r}")
        else:
            require_ghg = flag

    ri_settings: RiSettings | None = None
    ri_data = data.get("ri")
    if ri_data is not None:
        if not isinstance(ri_data, dict):
            collector.add(name, 1, "ri", "must be a JSON object")
        else:
            known = {"domestic_country", "offshore_country", "offshore_adjustment"}
            for key in sorted(set(ri_data) - known):
                collector.add(name, 1, f"ri.{key}", f"unknown ri key {key!r}")
            domestic = ri_data.get("domestic_country")
            offshore = ri_data.get("offshore_country")
            adjustment = ri_data.get("offshore_adjustment", ATTENUATE)
            ok = True
            for key, value in (("domestic_country", domestic), ("offshore_country", offshore)):
                if not isinstance(value, str) or not value:
                    collector.add(name, 1, f"ri.{key}", f"expected a non-empty string, got {value!r}")
                    ok = False
            if adjustment not in OFFSHORE_ADJUSTMENTS:
                collector.add(
                    name, 1, "ri.offshore_adjustment",
                    f"invalid value {adjustment!r}; allowed: {{{', '.join(OFFSHORE_ADJUSTMENTS)}}}",
                )
                ok = False
            if ok:
                ri_settings = RiSettings(domestic, offshore, adjustment)

    config = PipelineConfig(
        screening_policy=policy,
        horizon_years=horizon,
        require_ghg_non_negative=require_ghg,
    )
    return gwp, config, ri_settings


# ---------------------------------------------------------------------------
# Cross-reference validation and assembly
# ---------------------------------------------------------------------------


def load_dataset(paths: Mapping[str, Path | str]) -> DatasetBundle:
    """Load and validate a dataset from explicit per-kind file paths.

    ``paths`` maps dataset kind (see :data:`DATASET_FILES` keys) to a file
    path. All kinds are required; empty CSV files (header only) express
    absence of rows.
    """
    collector = _Collector()

    missing_kinds = sorted(set(DATASET_FILES) - set(paths))
    unknown_kinds = sorted(set(paths) - set(DATASET_FILES))
    for kind in missing_kinds:
        collector.add(DATASET_FILES[kind], 1, "file", f"dataset kind {kind!r} not supplied")
    for kind in unknown_kinds:
        collector.add(str(paths[kind]), 1, "file", f"unknown dataset kind {kind!r}")
    for kind in DATASET_FILES:
        if kind in paths and not Path(paths[kind]).is_file():
            collector.add(Path(paths[kind]).name, 1, "file", "file does not exist")
    collector.raise_if_any()

    resolved = {kind: Path(paths[kind]) for kind in DATASET_FILES}
    indicators = _parse_indicators(resolved["indicators"], collector)
    factors = _parse_location_factors(resolved["location_factors"], collector)
    profiles = _parse_profiles(resolved["profiles"], collector)
    screening_rows = _parse_screening(resolved["screening"], collector)
    scenario_groups = _parse_scenarios(resolved["scenarios"], collector)
    leg_rows = _parse_legs(resolved["legs"], collector)
    emission_factors = _parse_emission_factors(resolved["emission_factors"], collector)
    gwp, config, ri_settings = _parse_manifest(resolved["manifest"], collector)

    # Cross-references must resolve inside the bundle.
    labels = {row.label for row in screening_rows}
    for product, roles in scenario_groups.items():
        if product not in labels:
            lineno = min(entry[0] for entry in roles.values())
            collector.add(
                resolved["scenarios"].name, lineno, "product_label",
                f"product {product!r} has no screening row",
            )
    for lineno, assignment in leg_rows:
        if assignment.product_label not in labels:
            collector.add(
                resolved["legs"].name, lineno, "product_label",
                f"product {assignment.product_label!r} has no screening row",
            )
    for profile in profiles.values():
        dangling = sorted(set(profile.weights) - set(factors))
        if dangling:
            collector.add(
                resolved["profiles"].name, 1, "factor_id",
                f"profile {profile.naics_code} references undefined location "
                f"factor(s): {', '.join(dangling)}",
            )
    for factor in factors.values():
        dangling = sorted(set(factor.subfactor_ids) - set(indicators))
        if dangling:
            collector.add(
                resolved["location_factors"].name, 1, "subfactor_id",
                f"factor {factor.factor_id!r} references undefined "
                f"indicator(s): {', '.join(dangling)}",
            )
    if ri_settings is not None:
        for country in (ri_settings.domestic_country, ri_settings.offshore_country):
            lacking = sorted(
                indicator_id
                for indicator_id, series in indicators.items()
                if country not in series.values
            )
            if lacking:
                collector.add(
                    resolved["indicators"].name, 1, "country",
                    f"country {country!r} missing from indicator(s): {', '.join(lacking)}",
                )

    collector.raise_if_any()

    tco_pairs = {
        product: (roles[ROLE_DOMESTIC][1], roles[ROLE_OFFSHORE][1])
        for product, roles in scenario_groups.items()
    }
    return DatasetBundle(
        indicators=tuple(indicators.values()),
        factors=tuple(factors.values()),
        profiles=tuple(profiles.values()),
        screening_rows=tuple(screening_rows),
        tco_pairs=tco_pairs,
        leg_assignments=tuple(assignment for _, assignment in leg_rows),
        emission_factors=tuple(emission_factors),
        gwp=gwp,
        config=config,
        ri_settings=ri_settings,
    )


def load_dataset_dir(directory: Path | str) -> DatasetBundle:
    """Load a dataset directory laid out with the standard file names."""
    base = Path(directory)
    if not base.is_dir():
        raise InputError(
            f"dataset directory {str(base)!r} does not exist or is not a directory"
        )
    return load_dataset({kind: base / filename for kind, filename in DATASET_FILES.items()})


def default_data_dir() -> Path | None:
    """Dataset directory from the environment, if configured."""
    value = os.environ.get(DATA_DIR_ENV)
    return Path(value) if value else None
