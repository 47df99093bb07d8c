"""Report rendering: fixed-layout text tables, flat CSV, and JSON.

JSON output round-trips: ``parse_json_report(render_report(x, JSON).content)``
returns a value equal to ``x``. CSV and JSON carry full-precision values plus
a 2-decimal display rendering; text tables show the display values only.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from typing import Any, Sequence

from .errors import InputError
from .ghg import (
    EmissionComparison,
    EmissionReport,
    Gas,
    GasVector,
    GwpSet,
    Mode,
    ReductionReport,
)
from .pipeline import DecisionRecord, Recommendation
from .ri import RiEvaluation, ScreeningReport, ScreeningRow
from .tco import CostBuckets, ProductTco, SourcingScenario, TcoComparison, TcoResult

PORT_NOTE = "Note: port handling and idling emissions are excluded."

# Display names for the emission tables; sea legs render as "Water".
_MODE_LABEL = {Mode.ROAD: "Road", Mode.SEA: "Water"}
_GAS_HEADER = {
    Gas.CO2: "CO2 (metric tonnes)",
    Gas.CH4: "CH4 (kilograms)",
    Gas.N2O: "N2O (kilograms)",
}


class ReportFormat(str, Enum):
    TABLE = "table"
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class RenderedReport:
    format: ReportFormat
    content: bytes

    def text(self) -> str:
        return self.content.decode("utf-8")


def _fmt(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.2f}"


def _display_map(payload: dict[str, Any], fields: Sequence[str]) -> dict[str, str]:
    return {field: _fmt(payload[field]) for field in fields}


# ---------------------------------------------------------------------------
# Payload builders (JSON-serializable dicts) and their inverses
# ---------------------------------------------------------------------------


def _screening_row_payload(row: ScreeningRow) -> dict[str, Any]:
    return {
        "label": row.label,
        "naics_code": row.naics_code,
        "ri_percent": row.ri_percent,
        "trade_deficit_100k": row.trade_deficit_100k,
        "logistics_cost_percent": row.logistics_cost_percent,
        "tariff_share_percent": row.tariff_share_percent,
    }


def _screening_row_from(payload: dict[str, Any]) -> ScreeningRow:
    return ScreeningRow(
        label=payload["label"],
        naics_code=payload["naics_code"],
        ri_percent=payload["ri_percent"],
        trade_deficit_100k=payload["trade_deficit_100k"],
        logistics_cost_percent=payload["logistics_cost_percent"],
        tariff_share_percent=payload["tariff_share_percent"],
    )


def _gas_vector_payload(vector: GasVector) -> dict[str, Any]:
    return {
        "co2_tonnes": vector.co2_tonnes,
        "ch4_kg": vector.ch4_kg,
        "n2o_kg": vector.n2o_kg,
    }


def _gas_vector_from(payload: dict[str, Any]) -> GasVector:
    return GasVector(payload["co2_tonnes"], payload["ch4_kg"], payload["n2o_kg"])


def _scenario_payload(scenario: SourcingScenario) -> dict[str, Any]:
    buckets = scenario.buckets
    return {
        "region_label": scenario.region_label,
        "product_label": scenario.product_label,
        "buckets": {
            "fob_price": buckets.fob_price,
            "cogs": buckets.cogs,
            "other_hard": buckets.other_hard,
            "risk": buckets.risk,
            "strategic": buckets.strategic,
            "green": buckets.green,
            "cogs_items": None if buckets.cogs_items is None else dict(buckets.cogs_items),
        },
        "freight_premium": scenario.freight_premium,
        "escalation_rate": scenario.escalation_rate,
    }


def _scenario_from(payload: dict[str, Any]) -> SourcingScenario:
    bucket_data = dict(payload["buckets"])
    return SourcingScenario(
        region_label=payload["region_label"],
        buckets=CostBuckets(**bucket_data),
        freight_premium=payload["freight_premium"],
        escalation_rate=payload["escalation_rate"],
        product_label=payload["product_label"],
    )


def to_payload(result: Any) -> dict[str, Any]:
    """JSON-serializable payload for any engine report value; carries a
    ``kind`` tag so it can be parsed back."""
    if isinstance(result, ScreeningReport):
        return {
            "kind": "screening_report",
            "shortlist": [_screening_row_payload(row) for row in result.shortlist],
            "excluded": [
                {"row": _screening_row_payload(row), "reason": reason}
                for row, reason in result.excluded
            ],
            "tariff_coverage_percent": result.tariff_coverage_percent,
            "display": {"tariff_coverage_percent": _fmt(result.tariff_coverage_percent)},
        }
    if isinstance(result, TcoResult):
        payload = {
            "kind": "tco_result",
            "pre_freight_total": result.pre_freight_total,
            "grand_total": result.grand_total,
            "forecast": list(result.forecast),
        }
        payload["display"] = {
            "pre_freight_total": _fmt(result.pre_freight_total),
            "grand_total": _fmt(result.grand_total),
            "forecast": [_fmt(value) for value in result.forecast],
        }
        return payload
    if isinstance(result, TcoComparison):
        payload = {
            "kind": "tco_comparison",
            "fob_advantage_offshore": result.fob_advantage_offshore,
            "tco_advantage_domestic_now": result.tco_advantage_domestic_now,
            "tco_advantage_domestic_horizon": result.tco_advantage_domestic_horizon,
            "horizon_years": result.horizon_years,
        }
        payload["display"] = _display_map(
            payload,
            (
                "fob_advantage_offshore",
                "tco_advantage_domestic_now",
                "tco_advantage_domestic_horizon",
            ),
        )
        return payload
    if isinstance(result, ProductTco):
        return {
            "kind": "product_tco",
            "product_label": result.product_label,
            "domestic": _scenario_payload(result.domestic),
            "offshore": _scenario_payload(result.offshore),
            "domestic_result": to_payload(result.domestic_result),
            "offshore_result": to_payload(result.offshore_result),
            "comparison": to_payload(result.comparison),
        }
    if isinstance(result, EmissionReport):
        return {
            "kind": "emission_report",
            "per_mode": {
                mode.value: _gas_vector_payload(vector)
                for mode, vector in sorted(result.per_mode.items(), key=lambda kv: kv[0].value)
            },
            "total": _gas_vector_payload(result.total),
            "co2e_tonnes": result.co2e_tonnes,
            "gwp": (
                None
                if result.gwp is None
                else {"ch4_gwp": result.gwp.ch4_gwp, "n2o_gwp": result.gwp.n2o_gwp}
            ),
            "display": {"co2e_tonnes": _fmt(result.co2e_tonnes)},
        }
    if isinstance(result, ReductionReport):
        return {
            "kind": "reduction_report",
            "per_mode_percent": {
                mode.value: {gas.value: result.per_mode_percent[mode][gas] for gas in Gas}
                for mode in Mode
            },
            "per_gas_percent": {gas.value: result.per_gas_percent[gas] for gas in Gas},
            "co2e_percent": result.co2e_percent,
            "display": {"co2e_percent": _fmt(result.co2e_percent)},
        }
    if isinstance(result, EmissionComparison):
        return {
            "kind": "emission_comparison",
            "offshore": to_payload(result.offshore),
            "reshore": to_payload(result.reshore),
            "reduction": to_payload(result.reduction),
        }
    if isinstance(result, RiEvaluation):
        payload = {
            "kind": "ri_evaluation",
            "naics_code": result.naics_code,
            "domestic": result.domestic,
            "offshore": result.offshore,
            "ri_percent": result.ri_percent,
        }
        payload["display"] = _display_map(payload, ("domestic", "offshore", "ri_percent"))
        return payload
    if isinstance(result, DecisionRecord):
        payload = {
            "kind": "decision_record",
            "product_label": result.product_label,
            "naics_code": result.naics_code,
            "screened": result.screened,
            "screen_reason": result.screen_reason,
            "tco_advantage_now": result.tco_advantage_now,
            "tco_advantage_horizon": result.tco_advantage_horizon,
            "ghg_co2e_reduction_percent": result.ghg_co2e_reduction_percent,
            "recommendation": result.recommendation.value,
            "detail": result.detail,
        }
        payload["display"] = _display_map(
            payload,
            ("tco_advantage_now", "tco_advantage_horizon", "ghg_co2e_reduction_percent"),
        )
        return payload
    if isinstance(result, (list, tuple)):
        items = list(result)
        if all(isinstance(item, DecisionRecord) for item in items) and items:
            return {"kind": "decision_report", "records": [to_payload(r) for r in items]}
        if all(isinstance(item, ProductTco) for item in items) and items:
            return {"kind": "tco_report", "products": [to_payload(p) for p in items]}
        if all(isinstance(item, RiEvaluation) for item in items) and items:
            return {"kind": "ri_report", "evaluations": [to_payload(e) for e in items]}
        if not items:
            return {"kind": "empty_report"}
    raise InputError(f"cannot render a value of type {type(result).__name__}")


def from_payload(payload: dict[str, Any]) -> Any:
    """Inverse of :func:`to_payload`."""
    kind = payload.get("kind")
    if kind == "screening_report":
        return ScreeningReport(
            shortlist=tuple(_screening_row_from(p) for p in payload["shortlist"]),
            excluded=tuple(
                (_screening_row_from(entry["row"]), entry["reason"])
                for entry in payload["excluded"]
            ),
            tariff_coverage_percent=payload["tariff_coverage_percent"],
        )
    if kind == "tco_result":
        return TcoResult(
            pre_freight_total=payload["pre_freight_total"],
            grand_total=payload["grand_total"],
            forecast=tuple(payload["forecast"]),
        )
    if kind == "tco_comparison":
        return TcoComparison(
            fob_advantage_offshore=payload["fob_advantage_offshore"],
            tco_advantage_domestic_now=payload["tco_advantage_domestic_now"],
            tco_advantage_domestic_horizon=payload["tco_advantage_domestic_horizon"],
            horizon_years=payload["horizon_years"],
        )
    if kind == "product_tco":
        return ProductTco(
            product_label=payload["product_label"],
            domestic=_scenario_from(payload["domestic"]),
            offshore=_scenario_from(payload["offshore"]),
            domestic_result=from_payload(payload["domestic_result"]),
            offshore_result=from_payload(payload["offshore_result"]),
            comparison=from_payload(payload["comparison"]),
        )
    if kind == "emission_report":
        gwp = payload["gwp"]
        return EmissionReport(
            per_mode={
                Mode(mode): _gas_vector_from(vector)
                for mode, vector in payload["per_mode"].items()
            },
            total=_gas_vector_from(payload["total"]),
            co2e_tonnes=payload["co2e_tonnes"],
            gwp=None if gwp is None else GwpSet(gwp["ch4_gwp"], gwp["n2o_gwp"]),
        )
    if kind == "reduction_report":
        return ReductionReport(
            per_mode_percent={
                Mode(mode): {Gas(gas): value for gas, value in cells.items()}
                for mode, cells in payload["per_mode_percent"].items()
            },
            per_gas_percent={
                Gas(gas): value for gas, value in payload["per_gas_percent"].items()
            },
            co2e_percent=payload["co2e_percent"],
        )
    if kind == "emission_comparison":
        return EmissionComparison(
            offshore=from_payload(payload["offshore"]),
            reshore=from_payload(payload["reshore"]),
            reduction=from_payload(payload["reduction"]),
        )
    if kind == "ri_evaluation":
        return RiEvaluation(
            naics_code=payload["naics_code"],
            domestic=payload["domestic"],
            offshore=payload["offshore"],
            ri_percent=payload["ri_percent"],
        )
    if kind == "decision_record":
        return DecisionRecord(
            product_label=payload["product_label"],
            naics_code=payload["naics_code"],
            screened=payload["screened"],
            screen_reason=payload["screen_reason"],
            tco_advantage_now=payload["tco_advantage_now"],
            tco_advantage_horizon=payload["tco_advantage_horizon"],
            ghg_co2e_reduction_percent=payload["ghg_co2e_reduction_percent"],
            recommendation=Recommendation(payload["recommendation"]),
            detail=payload["detail"],
        )
    if kind == "decision_report":
        return [from_payload(p) for p in payload["records"]]
    if kind == "tco_report":
        return [from_payload(p) for p in payload["products"]]
    if kind == "ri_report":
        return [from_payload(p) for p in payload["evaluations"]]
    if kind == "empty_report":
        return []
    raise InputError(f"unknown report kind {kind!r}")


def parse_json_report(content: bytes | str) -> Any:
    """Parse a JSON rendering back into the report value it came from."""
    if isinstance(content, bytes):
        content = content.decode("utf-8")
    try:
        payload = json.loads(content)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid report JSON: {exc.msg}") from None
    if not isinstance(payload, dict):
        raise InputError("report JSON must be an object")
    return from_payload(payload)


# ---------------------------------------------------------------------------
# CSV: one row per field, full precision plus display
# ---------------------------------------------------------------------------


def _flatten(prefix: str, value: Any, rows: list[tuple[str, Any]]) -> None:
    if isinstance(value, dict):
        for key, child in value.items():
            if key in ("kind", "display"):
                continue
            _flatten(f"{prefix}.{key}" if prefix else str(key), child, rows)
    elif isinstance(value, list):
        for index, child in enumerate(value):
            _flatten(f"{prefix}[{index}]", child, rows)
    else:
        rows.append((prefix, value))


def _render_csv(payload: dict[str, Any]) -> str:
    rows: list[tuple[str, Any]] = []
    _flatten("", payload, rows)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["field", "value", "display"])
    for field, value in rows:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            display = ""
        else:
            display = _fmt(value)
        writer.writerow([field, "" if value is None else value, display])
    return buffer.getvalue()


# ---------------------------------------------------------------------------
# Text tables
# ---------------------------------------------------------------------------


def _table(rows: list[list[str]], indent: str = "  ") -> list[str]:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [cell.ljust(widths[i]) for i, cell in enumerate(row)]
        lines.append((indent + "  ".join(cells)).rstrip())
    return lines


def _pct(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.2f}%"


def _screening_text(report: ScreeningReport) -> str:
    lines = ["Candidate screen"]
    if report.shortlist:
        rows = [["Item", "NAICS", "RI %", "Deficit (100 K)", "Logistics %", "Tariff %"]]
        for row in report.shortlist:
            rows.append([
                row.label,
                row.naics_code,
                _fmt(row.ri_percent),
                _fmt(row.trade_deficit_100k),
                _fmt(row.logistics_cost_percent),
                _fmt(row.tariff_share_percent),
            ])
        lines.extend(_table(rows))
    else:
        lines.append("  (no rows pass the screen)")
    lines.append(f"Tariff coverage of shortlist: {_fmt(report.tariff_coverage_percent)}%")
    if report.excluded:
        lines.append("Excluded:")
        for row, reason in report.excluded:
            lines.append(f"  {row.label} ({row.naics_code}): {reason}")
    return "\n".join(lines) + "\n"


_BUCKET_ROWS = (
    ("FOB Price", "fob_price"),
    ("Total CoGS", "cogs"),
    ("Total Other Hard Costs", "other_hard"),
    ("Total Risk Cost", "risk"),
    ("Total Strategic Cost", "strategic"),
    ("Total Green Cost", "green"),
)


def _tco_result_text(result: TcoResult, heading: str = "Total cost of ownership") -> str:
    horizon = len(result.forecast) - 1
    rows = [
        ["Cost row", "Amount"],
        ["Total Cost Before Freight Premium", _fmt(result.pre_freight_total)],
        ["Freight Premium", _fmt(result.grand_total - result.pre_freight_total)],
        ["Grand Total Cost of Ownership", _fmt(result.grand_total)],
    ]
    if horizon > 0:
        rows.append([f"Forecast TCO ({horizon} years)", _fmt(result.forecast[horizon])])
    return "\n".join([heading, *_table(rows)]) + "\n"


def _product_tco_text(product: ProductTco) -> str:
    horizon = product.comparison.horizon_years
    domestic, offshore = product.domestic, product.offshore
    lines = [
        f"{product.product_label}: total cost of ownership per unit "
        f"({domestic.region_label} vs {offshore.region_label})"
    ]
    rows = [["Cost factor", domestic.region_label, offshore.region_label]]
    for label, attr in _BUCKET_ROWS:
        rows.append([
            label,
            _fmt(getattr(domestic.buckets, attr)),
            _fmt(getattr(offshore.buckets, attr)),
        ])
    rows.append([
        "Total Cost Before Freight Premium",
        _fmt(product.domestic_result.pre_freight_total),
        _fmt(product.offshore_result.pre_freight_total),
    ])
    rows.append([
        "Freight Premium",
        _fmt(domestic.freight_premium),
        _fmt(offshore.freight_premium),
    ])
    rows.append([
        "Grand Total Cost of Ownership",
        _fmt(product.domestic_result.grand_total),
        _fmt(product.offshore_result.grand_total),
    ])
    if horizon > 0:
        rows.append([
            f"Forecast TCO ({horizon} years)",
            _fmt(product.domestic_result.forecast[horizon]),
            _fmt(product.offshore_result.forecast[horizon]),
        ])
    lines.extend(_table(rows))
    comparison = product.comparison
    lines.append(
        f"  {offshore.region_label} FOB advantage today: "
        f"{_fmt(comparison.fob_advantage_offshore)}; "
        f"{domestic.region_label} TCO advantage today: "
        f"{_fmt(comparison.tco_advantage_domestic_now)}; "
        f"after {horizon} years: {_fmt(comparison.tco_advantage_domestic_horizon)}"
    )
    return "\n".join(lines) + "\n"


def _tco_report_text(products: Sequence[ProductTco]) -> str:
    blocks = [_product_tco_text(product) for product in products]
    horizon = products[0].comparison.horizon_years
    rows = [[
        "Product",
        "Offshore FOB Advantage (now)",
        "Domestic TCO Advantage (now)",
        f"Domestic TCO Advantage ({horizon} years)",
    ]]
    for product in products:
        comparison = product.comparison
        rows.append([
            product.product_label,
            _fmt(comparison.fob_advantage_offshore),
            _fmt(comparison.tco_advantage_domestic_now),
            _fmt(comparison.tco_advantage_domestic_horizon),
        ])
    blocks.append("Per-unit advantage after TCO analysis\n" + "\n".join(_table(rows)) + "\n")
    return "\n".join(blocks)


def _emission_report_text(report: EmissionReport) -> str:
    lines = ["Transport emissions"]
    rows = [["Mode of transport", *(_GAS_HEADER[gas] for gas in Gas)]]
    for mode in Mode:
        vector = report.per_mode.get(mode, GasVector())
        rows.append([
            _MODE_LABEL[mode],
            _fmt(vector.co2_tonnes),
            _fmt(vector.ch4_kg),
            _fmt(vector.n2o_kg),
        ])
    rows.append([
        "Total Emissions",
        _fmt(report.total.co2_tonnes),
        _fmt(report.total.ch4_kg),
        _fmt(report.total.n2o_kg),
    ])
    lines.extend(_table(rows))
    if report.co2e_tonnes is not None and report.gwp is not None:
        lines.append(
            f"Total GHG Emission (metric tonnes CO2e): {_fmt(report.co2e_tonnes)} "
            f"(GWP: CH4={report.gwp.ch4_gwp:g}, N2O={report.gwp.n2o_gwp:g})"
        )
    lines.append(PORT_NOTE)
    return "\n".join(lines) + "\n"


def _reduction_text(report: ReductionReport) -> str:
    lines = ["Greenhouse gas emissions reduced by reshoring"]
    rows = [["Mode of transport", *(_GAS_HEADER[gas] for gas in Gas)]]
    for mode in Mode:
        cells = report.per_mode_percent[mode]
        rows.append([_MODE_LABEL[mode], *(_pct(cells[gas]) for gas in Gas)])
    rows.append(["Total Emissions", *(_pct(report.per_gas_percent[gas]) for gas in Gas)])
    lines.extend(_table(rows))
    lines.append(f"Total GHG Emission (metric tonnes CO2e): {_pct(report.co2e_percent)}")
    lines.append(PORT_NOTE)
    return "\n".join(lines) + "\n"


def _emission_comparison_text(comparison: EmissionComparison) -> str:
    return "\n".join([
        _emission_report_text(comparison.offshore).rstrip("\n").replace(
            "Transport emissions", "Offshore supply chain emissions", 1
        ),
        "",
        _emission_report_text(comparison.reshore).rstrip("\n").replace(
            "Transport emissions", "Reshored supply chain emissions", 1
        ),
        "",
        _reduction_text(comparison.reduction),
    ])


def _decision_text(records: Sequence[DecisionRecord]) -> str:
    lines = ["Reshoring decisions"]
    rows = [[
        "Product", "NAICS", "Screen", "TCO adv. now", "TCO adv. horizon",
        "CO2e red. %", "Recommendation",
    ]]
    for record in records:
        rows.append([
            record.product_label,
            record.naics_code,
            "pass" if record.screened else "fail",
            _fmt(record.tco_advantage_now),
            _fmt(record.tco_advantage_horizon),
            _pct(record.ghg_co2e_reduction_percent),
            record.recommendation.value,
        ])
    lines.extend(_table(rows))
    for record in records:
        lines.append(f"  {record.product_label}: {record.detail}")
    return "\n".join(lines) + "\n"


def _ri_text(evaluations: Sequence[RiEvaluation]) -> str:
    lines = ["Reshoring index by industry"]
    rows = [["NAICS", "Domestic score", "Offshore score", "RI %"]]
    for evaluation in evaluations:
        rows.append([
            evaluation.naics_code,
            _fmt(evaluation.domestic),
            _fmt(evaluation.offshore),
            _fmt(evaluation.ri_percent),
        ])
    lines.extend(_table(rows))
    return "\n".join(lines) + "\n"


def _render_table(result: Any) -> str:
    if isinstance(result, ScreeningReport):
        return _screening_text(result)
    if isinstance(result, TcoResult):
        return _tco_result_text(result)
    if isinstance(result, ProductTco):
        return _product_tco_text(result)
    if isinstance(result, EmissionReport):
        return _emission_report_text(result)
    if isinstance(result, ReductionReport):
        return _reduction_text(result)
    if isinstance(result, EmissionComparison):
        return _emission_comparison_text(result)
    if isinstance(result, TcoComparison):
        rows = [
            ["Metric", "Amount"],
            ["Offshore FOB Advantage (now)", _fmt(result.fob_advantage_offshore)],
            ["Domestic TCO Advantage (now)", _fmt(result.tco_advantage_domestic_now)],
            [
                f"Domestic TCO Advantage ({result.horizon_years} years)",
                _fmt(result.tco_advantage_domestic_horizon),
            ],
        ]
        return "\n".join(["Scenario comparison", *_table(rows)]) + "\n"
    if isinstance(result, RiEvaluation):
        return _ri_text([result])
    if isinstance(result, DecisionRecord):
        return _decision_text([result])
    if isinstance(result, (list, tuple)):
        items = list(result)
        if not items:
            return "(empty report)\n"
        if all(isinstance(item, DecisionRecord) for item in items):
            return _decision_text(items)
        if all(isinstance(item, ProductTco) for item in items):
            return _tco_report_text(items)
        if all(isinstance(item, RiEvaluation) for item in items):
            return _ri_text(items)
    raise InputError(f"cannot render a value of type {type(result).__name__}")


def render_report(result: Any, fmt: ReportFormat = ReportFormat.TABLE) -> RenderedReport:
    """Render an engine report value in the requested format."""
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.JSON:
        text = json.dumps(to_payload(result), indent=2, sort_keys=True) + "\n"
    elif fmt is ReportFormat.CSV:
        text = _render_csv(to_payload(result))
    else:
        text = _render_table(result)
    return RenderedReport(format=fmt, content=text.encode("utf-8"))
