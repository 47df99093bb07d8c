"""Command-line entry point.

Subcommands:
    ri      index scores per industry profile from indicator data
    screen  candidate screen over the screening rows
    tco     cost-of-ownership comparison per product
    ghg     aggregate transport-emission reduction, offshore vs reshore
    decide  the full pipeline, one decision record per product

Every subcommand takes ``--data <dir>`` (or the RESHOREVAL_DATA environment
variable), ``--format {table,csv,json}``, and ``--out <file>``. Exit codes:
0 success, 1 input error, 2 internal error. Diagnostics go to stderr,
reports to stdout or the output file.
"""

from __future__ import annotations

import argparse
import sys
import traceback
from pathlib import Path

from .errors import InputError, ReshorevalError
from .ghg import TransportLeg, compare_emissions
from .loader import DATA_DIR_ENV, DatasetBundle, default_data_dir, load_dataset_dir
from .pipeline import run_pipeline
from .report import ReportFormat, render_report
from .ri import evaluate_reshoring_index, screen_candidates
from .tco import product_tco


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reshoreval",
        description=(
            "Reshoring decision analytics: index screening, total cost of "
            "ownership, and freight emission reductions."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    commands = {
        "ri": "compute index scores per industry profile from indicator data",
        "screen": "screen candidate product groups",
        "tco": "compare domestic vs offshore cost of ownership per product",
        "ghg": "compare transport emissions, offshore vs reshored",
        "decide": "run the full decision pipeline",
    }
    for name, help_text in commands.items():
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument(
            "--data",
            help=f"dataset directory (default: ${DATA_DIR_ENV})",
        )
        sub.add_argument(
            "--format",
            choices=[fmt.value for fmt in ReportFormat],
            default=ReportFormat.TABLE.value,
            help="output format (default: table)",
        )
        sub.add_argument("--out", help="write the report to this file instead of stdout")
    return parser


def _resolve_data_dir(args: argparse.Namespace) -> Path:
    if args.data:
        return Path(args.data)
    env_dir = default_data_dir()
    if env_dir is None:
        raise InputError(
            f"no dataset directory: pass --data or set ${DATA_DIR_ENV}"
        )
    return env_dir


def _run_ri(bundle: DatasetBundle):
    if bundle.ri_settings is None:
        raise InputError(
            "the dataset manifest has no 'ri' section "
            "(domestic_country/offshore_country), so index scores cannot be computed"
        )
    indicators = {series.indicator_id: series for series in bundle.indicators}
    settings = bundle.ri_settings
    return [
        evaluate_reshoring_index(
            indicators,
            bundle.factors,
            profile,
            settings.domestic_country,
            settings.offshore_country,
            settings.offshore_adjustment,
        )
        for profile in sorted(bundle.profiles, key=lambda p: p.naics_code)
    ]


def _run_tco(bundle: DatasetBundle):
    horizon = bundle.config.horizon_years
    return [
        product_tco(domestic, offshore, horizon)
        for product, (domestic, offshore) in sorted(bundle.tco_pairs.items())
    ]


def _run_ghg(bundle: DatasetBundle):
    pairs = bundle.ghg_pairs()
    offshore_legs: list[TransportLeg] = []
    reshore_legs: list[TransportLeg] = []
    for offshore, reshore in pairs.values():
        offshore_legs.extend(offshore)
        reshore_legs.extend(reshore)
    return compare_emissions(offshore_legs, reshore_legs, bundle.emission_factors, bundle.gwp)


def _run_decide(bundle: DatasetBundle):
    return run_pipeline(
        bundle.screening_rows,
        bundle.tco_pairs,
        bundle.ghg_pairs(),
        bundle.emission_factors,
        bundle.gwp,
        bundle.config,
    )


_COMMANDS = {
    "ri": _run_ri,
    "screen": lambda bundle: screen_candidates(
        bundle.screening_rows, bundle.config.screening_policy
    ),
    "tco": _run_tco,
    "ghg": _run_ghg,
    "decide": _run_decide,
}


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, nonzero for usage errors
        return 0 if exc.code in (0, None) else 1

    try:
        bundle = load_dataset_dir(_resolve_data_dir(args))
        result = _COMMANDS[args.command](bundle)
        rendered = render_report(result, ReportFormat(args.format))
        if args.out:
            try:
                Path(args.out).write_bytes(rendered.content)
            except OSError as exc:
                raise InputError(f"cannot write report to {args.out!r}: {exc}") from None
        else:
            sys.stdout.write(rendered.text())
        return 0
    except ReshorevalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception:
        print("internal error:", file=sys.stderr)
        traceback.print_exc(file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
