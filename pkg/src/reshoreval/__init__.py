"""Reshoring decision analytics.

Three pure computation engines (index screening, total cost of ownership,
transport emission reductions), a pipeline that joins them into per-product
decisions, and CSV/JSON ingestion plus report rendering around them.
"""

from .errors import ConfigError, DomainError, InputError, ReshorevalError
from .ghg import (
    DistanceUnit,
    EmissionComparison,
    EmissionFactor,
    EmissionReport,
    Gas,
    GasVector,
    GwpSet,
    Mode,
    ReductionReport,
    TransportLeg,
    co2e_total,
    compare_emissions,
    leg_emission,
    mode_totals,
    reduction_report,
    with_co2e,
)
from .loader import DatasetBundle, Diagnostic, LegAssignment, load_dataset, load_dataset_dir
from .pipeline import DecisionRecord, PipelineConfig, Recommendation, run_pipeline
from .report import RenderedReport, ReportFormat, parse_json_report, render_report
from .ri import (
    IndicatorSeries,
    IndustryProfile,
    LocationFactor,
    RiEvaluation,
    ScreeningPolicy,
    ScreeningReport,
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
from .tco import (
    CostBuckets,
    ProductTco,
    SourcingScenario,
    TcoComparison,
    TcoResult,
    back_solve_rate,
    compare_scenarios,
    forecast_tco,
    grand_total,
    product_tco,
    total_before_freight,
)

__version__ = "0.1.0"
