# ictog/main.py
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, Field

from config.app_config import APP_VERSION, AppConfig, get_config
from config.logging_config import setup_logging
from concordance.coverage import validate_against
from concordance.loader import ConcordanceConfig, load_concordance
from eeioa.coefficients import technical_coefficients, total_output_from_demand
from eeioa.footprint import footprint, group_footprint
from eeioa.solvers import get_solver
from emissions.estimators import CaseResult, run_scenarios
from emissions.scenarios import SHIPPED_SCENARIOS, load_scenario
from flows.analysis import (
    comparison_ratio,
    contributor_series,
    endogenous_flow,
    flow_series,
    group_flow,
    group_share,
    overlay_prices,
    sector_breakdown,
    share_matrix,
    top_contributors,
)
from ingest.cache import TableCache
from ingest.mrio_reader import MrioFileSpec
from ingest.table_set import TableSet, load_table_set
from ingest.vectors import parse_extension, parse_price_series, parse_region_sector_vector
from mrio_core.exceptions import EXIT_IO, EXIT_NUMERIC, EXIT_OK, EXIT_UNEXPECTED, MrioError, YearNotFound
from mrio_core.tables import TransactionTable
from report.charts import render_line_chart
from report.csv_io import CONTRIBUTOR_SCHEMA, FLOW_SCHEMA, FOOTPRINT_SCHEMA, OVERLAY_SCHEMA, write_csv
from report.sankey import render_sankey_svg, to_sankey
from utils.file_utils import ensure_directory, get_file_hash

logger = logging.getLogger(__name__)

MANIFEST_NAME = "run_manifest.json"
DATASET_CONCORDANCE = "concordance.yaml"
FLOW_MODES = ("share", "series", "top", "ratio", "endogenous", "breakdown", "matrix", "contributors")


class RunManifest(BaseModel):
    """Everything needed to reproduce one output set."""

    tool_version: str = APP_VERSION
    command: str
    dataset_dir: Optional[str] = None
    years: Optional[List[int]] = None
    concordance: Optional[str] = None
    output_dir: str
    strict: bool = True
    parameters: Dict[str, Any] = Field(default_factory=dict)
    outputs: Dict[str, str] = Field(default_factory=dict)


def parse_years(text: str) -> List[int]:
    """Parse ``2000-2022`` or ``2000,2011,2020-2022`` into a sorted year list."""
    years = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if "-" in part:
                start, end = (int(p) for p in part.split("-", 1))
                if end < start:
                    raise ValueError
                years.update(range(start, end + 1))
            elif part:
                years.add(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Invalid year list {text!r}; use e.g. 2000-2022 or 2000,2011") from None
    if not years:
        raise argparse.ArgumentTypeError("Empty year list")
    return sorted(years)


class FlowAnalysisApp:
    """Main application class: one instance per command invocation."""

    def __init__(
        self,
        config: Optional[AppConfig] = None,
        dataset_dir: Optional[str] = None,
        years: Optional[Sequence[int]] = None,
        concordance_path: Optional[str] = None,
        output_dir: Optional[str] = None,
        strict: Optional[bool] = None,
        pattern: Optional[str] = None,
        cache_dir: Optional[str] = None,
        use_cache: bool = True,
        show_progress: bool = False,
    ):
        # Allow dependency injection or use global config
        self.config = config or get_config()
        self.dataset_dir = dataset_dir or self.config.dataset_dir
        self.years = list(years) if years else None
        self.output_dir = Path(output_dir or self.config.output_dir)
        self.strict = self.config.strict if strict is None else strict
        self.pattern = pattern or self.config.ingest.file_pattern
        self.cache = TableCache(cache_dir or self.config.cache_dir) if use_cache else None
        self.show_progress = show_progress
        self._concordance_path = concordance_path or self.config.concordance_path
        self._concordance: Optional[ConcordanceConfig] = None
        self.outputs: Dict[str, Path] = {}

    # Inputs

    def _require_dataset_dir(self) -> Path:
        if not self.dataset_dir:
            raise FileNotFoundError("No dataset directory; pass --dataset-dir or set MRIO_DATASET_DIR")
        return Path(self.dataset_dir)

    @property
    def concordance_path(self) -> Optional[Path]:
        """Explicit path, else ``concordance.yaml`` beside the dataset, else the shipped default (None)."""
        if self._concordance_path:
            return Path(self._concordance_path)
        if self.dataset_dir and (Path(self.dataset_dir) / DATASET_CONCORDANCE).is_file():
            return Path(self.dataset_dir) / DATASET_CONCORDANCE
        return None

    @property
    def concordance(self) -> ConcordanceConfig:
        if self._concordance is None:
            self._concordance = load_concordance(self.concordance_path)
        return self._concordance

    def file_spec(self) -> MrioFileSpec:
        return MrioFileSpec.from_config(self._require_dataset_dir(), self.config.ingest, file_pattern=self.pattern)

    def load_tables(self) -> TableSet:
        return load_table_set(
            self._require_dataset_dir(),
            spec=self.file_spec(),
            years=self.years,
            max_workers=self.config.ingest.max_workers,
            cache=self.cache,
            show_progress=self.show_progress,
        )

    def tables(self) -> List[TransactionTable]:
        """Loaded tables; the first per-year failure is raised."""
        table_set = self.load_tables()
        if table_set.errors:
            year, error = next(iter(table_set.errors.items()))
            logger.error(f"Cannot analyse: table {year} failed to load")
            raise error
        return table_set.tables

    # Outputs

    def _write_text(self, name: str, text: str) -> Path:
        path = ensure_directory(self.output_dir) / name
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        self.outputs[name] = path
        return path

    def _write_json(self, name: str, data: Any) -> Path:
        return self._write_text(name, json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n")

    def _write_csv(self, name: str, rows, schema) -> Path:
        path = write_csv(rows, schema, ensure_directory(self.output_dir) / name)
        self.outputs[name] = path
        return path

    def write_manifest(self, command: str, parameters: Dict[str, Any]) -> Path:
        manifest = RunManifest(
            command=command,
            dataset_dir=str(self.dataset_dir) if self.dataset_dir else None,
            years=self.years,
            concordance=str(self.concordance_path) if self.concordance_path else "<shipped default>",
            output_dir=str(self.output_dir),
            strict=self.strict,
            parameters=parameters,
            outputs={name: get_file_hash(path) for name, path in sorted(self.outputs.items())},
        )
        path = ensure_directory(self.output_dir) / MANIFEST_NAME
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(json.dumps(manifest.model_dump(), indent=2, sort_keys=True, ensure_ascii=False) + "\n")
        logger.info(f"Wrote {len(self.outputs)} outputs and {MANIFEST_NAME} to {self.output_dir}")
        return path

    # Commands

    def cmd_ingest(self) -> Dict[str, Any]:
        """
        Parse (or reuse cached) tables of the dataset directory.

        Returns:
            Per-year summaries and per-year errors
        """
        table_set = self.load_tables()
        if table_set.cached:
            logger.info(f"Reused cached tables for {', '.join(map(str, table_set.cached))}")
        summary = {
            "tables": [table.summary() for table in table_set.tables],
            "errors": {str(year): f"{type(e).__name__}: {e}" for year, e in table_set.errors.items()},
        }
        if table_set.tables:
            coverage = validate_against(self.concordance, table_set.tables[-1].index)
            summary["coverage"] = coverage.to_dict()
        self._write_json("ingest_summary.json", summary)
        self.write_manifest("ingest", {"pattern": self.pattern})
        summary["_errors"] = list(table_set.errors.values())
        return summary

    def cmd_flows(
        self,
        mode: str,
        from_group: str,
        to_group: Optional[str] = None,
        vs_group: Optional[str] = None,
        limit: Optional[int] = None,
        granularity: str = "region",
        prices: Optional[str] = None,
    ) -> Dict[str, Any]:
        """
        Group-to-group flow analytics over the loaded years.

        Args:
            mode: One of FLOW_MODES
            from_group: Source group name
            to_group: Target group name (not needed for endogenous and matrix)
            vs_group: Second target group for the ratio mode
            limit: Ranking length for top and contributors
            granularity: ``region`` or ``sector`` for the top mode
            prices: Optional ``year,price`` file joined to the series mode

        Returns:
            Result rows keyed by mode
        """
        if mode not in FLOW_MODES:
            raise ValueError(f"Unknown flows mode {mode!r}; use one of {', '.join(FLOW_MODES)}")
        source = self.concordance.group(from_group)
        needs_target = mode not in ("endogenous", "matrix")
        if needs_target and not to_group:
            raise ValueError(f"flows {mode} needs --to")
        target = self.concordance.group(to_group) if needs_target else None
        if mode == "ratio" and not vs_group:
            raise ValueError("flows ratio needs --vs")
        other = self.concordance.group(vs_group) if mode == "ratio" else None

        tables = self.tables()
        stem = "flows_matrix" if mode == "matrix" else f"flows_{mode}_{from_group}" + (f"_{to_group}" if needs_target else "")
        result: Dict[str, Any] = {"mode": mode, "from": from_group, "to": to_group}

        if mode == "share":
            rows = []
            for table in tables:
                flow = group_flow(table, source, target, self.strict)
                rows.append({**flow.to_dict(), "share": group_share(table, source, target, self.strict)})
            self._write_csv(f"{stem}.csv", rows, FLOW_SCHEMA)
            result["rows"] = rows

        elif mode == "series":
            series = flow_series(tables, source, target, self.strict)
            rows = series.rows()
            self._write_csv(f"{stem}.csv", rows, FLOW_SCHEMA)
            result.update(rows=rows, mean_share=series.mean_share, weighted_mean_share=series.weighted_mean_share)
            if prices:
                overlay = [row.to_dict() for row in overlay_prices(series, parse_price_series(prices))]
                self._write_csv(f"{stem}_prices.csv", overlay, OVERLAY_SCHEMA)
                result["overlay"] = overlay

        elif mode == "top":
            rows = []
            for table in tables:
                rows.extend(top_contributors(table, source, target, granularity, limit, self.strict).to_rows())
            schema = CONTRIBUTOR_SCHEMA if granularity == "region" else (
                ("rank", int), ("year", int), ("sector", str), ("value", float))
            self._write_csv(f"{stem}.csv", rows, schema)
            result.update(rows=rows, granularity=granularity)

        elif mode == "ratio":
            rows = [
                {"year": t.year, "from": from_group, "to": to_group, "vs": vs_group,
                 "ratio": comparison_ratio(t, source, target, other, self.strict)}
                for t in tables
            ]
            schema = (("year", int), ("from", str), ("to", str), ("vs", str), ("ratio", float))
            self._write_csv(f"{stem}_vs_{vs_group}.csv", rows, schema)
            result.update(rows=rows, vs=vs_group)

        elif mode == "endogenous":
            rows = [{**endogenous_flow(t, source, self.strict).to_dict(), "share": None} for t in tables]
            self._write_csv(f"{stem}.csv", rows, FLOW_SCHEMA)
            result["rows"] = rows

        elif mode == "breakdown":
            rows = [{**flow.to_dict(), "share": None}
                    for t in tables for flow in sector_breakdown(t, source, target, self.strict)]
            self._write_csv(f"{stem}.csv", rows, FLOW_SCHEMA)
            result["rows"] = rows

        elif mode == "matrix":
            groups = [self.concordance.group(name) for name in self.concordance.names]
            rows = [
                {"year": t.year, "from": a, "to": b, "share": share}
                for t in tables
                for a, targets in share_matrix(t, groups, self.strict).items()
                for b, share in targets.items()
            ]
            schema = (("year", int), ("from", str), ("to", str), ("share", float))
            self._write_csv(f"{stem}.csv", rows, schema)
            result["rows"] = rows

        elif mode == "contributors":
            series = contributor_series(tables, source, target, limit=limit or 5, strict=self.strict)
            rows = [{"year": p.year, "region": region, "value": p.value}
                    for region, s in series.items() for p in s.points]
            schema = (("year", int), ("region", str), ("value", float))
            self._write_csv(f"{stem}.csv", rows, schema)
            result["rows"] = rows

        self._write_json(f"{stem}.json", result)
        self.write_manifest("flows", {
            "mode": mode, "from": from_group, "to": to_group, "vs": vs_group,
            "limit": limit, "granularity": granularity, "prices": prices,
        })
        return result

    def cmd_footprint(
        self,
        intensity_path: str,
        demand_path: str,
        year: Optional[int] = None,
        total_output_path: Optional[str] = None,
        solver: Optional[str] = None,
        groups: Sequence[str] = (),
    ) -> Dict[str, Any]:
        """
        Consumption-based footprint of a final demand for one year.

        Args:
            intensity_path: ``region,sector,value`` direct intensities (kgCO2e per table unit)
            demand_path: ``region,sector,value`` final demand
            year: Table year (the latest loaded year when None)
            total_output_path: Optional total-output vector; Z 1 + y otherwise
            solver: ``iterative`` or ``direct``
            groups: Concordance groups to attribute the footprint to

        Returns:
            Totals, solver details and group attributions
        """
        tables = self.tables()
        table = tables[-1] if year is None else next((t for t in tables if t.year == year), None)
        if table is None:
            raise YearNotFound(f"No table for {year} in {self.dataset_dir}")
        index = table.index

        intensity = parse_extension(intensity_path, index, strict=self.strict)
        demand = parse_region_sector_vector(demand_path, index, strict=self.strict)
        if total_output_path:
            total_output = parse_region_sector_vector(total_output_path, index, strict=self.strict).values
        else:
            total_output = total_output_from_demand(table, demand.values)

        coefficients = technical_coefficients(table, total_output)
        result = footprint(intensity.values, coefficients, demand.values, get_solver(solver, self.config.solver))

        self._write_csv(f"footprint_{table.year}.csv", result.rows(index), FOOTPRINT_SCHEMA)
        totals = {
            "year": table.year,
            "total_kgco2e": result.total,
            "total_ktco2e": result.total_kt,
            "method": result.method,
            "iterations": int(result.iterations),
            "missing_intensities": intensity.missing,
            "missing_demand": demand.missing,
            "zero_output_columns": len(coefficients.zero_output_columns),
            "groups": {
                name: group_footprint(result, self.concordance.group(name), index, self.strict) for name in groups
            },
        }
        self._write_json(f"footprint_{table.year}.json", totals)
        self.write_manifest("footprint", {
            "year": table.year, "intensity": intensity_path, "demand": demand_path,
            "total_output": total_output_path, "solver": solver or self.config.solver.method,
            "groups": list(groups),
        })
        return totals

    def cmd_case(self, scenarios: Sequence[str] = (), check: bool = False) -> Dict[str, Any]:
        """
        Run case scenarios (all shipped ones when none are named).

        Returns:
            Per-scenario figures, traces, tags and the comparison with published figures
        """
        loaded = [load_scenario(name) for name in (scenarios or SHIPPED_SCENARIOS)]
        results: List[CaseResult] = run_scenarios(loaded)

        report: Dict[str, Any] = {}
        rows = []
        for scenario, result in zip(loaded, results):
            comparison = result.check(scenario.published)
            report[result.name] = {**result.to_dict(), "title": scenario.title, "published": comparison}
            self._write_json(f"case_{result.name}.json", report[result.name])
            for key, figure in result.figures.items():
                expected = scenario.published.get(key)
                rows.append({
                    "scenario": result.name, "figure": key, "value": figure,
                    "published": expected, "matches": None if expected is None else str(figure == expected).lower(),
                })
        schema = (("scenario", str), ("figure", str), ("value", str), ("published", str), ("matches", str))
        self._write_csv("case_figures.csv", rows, schema)
        self.write_manifest("case", {"scenarios": [s.name for s in loaded], "check": check})

        mismatches = [f"{name}.{key}" for name, entry in report.items()
                      for key, item in entry["published"].items() if not item["ok"]]
        report["_mismatches"] = mismatches
        return report

    def cmd_export(
        self,
        kind: str,
        from_group: str,
        to_group: str,
        year: Optional[int] = None,
        prices: Optional[str] = None,
        title: Optional[str] = None,
    ) -> Dict[str, Any]:
        """
        Export a Sankey (per-activity flows of one year) or a line chart (flow series).

        Returns:
            Names of the written files
        """
        source, target = self.concordance.group(from_group), self.concordance.group(to_group)
        tables = self.tables()
        unit = tables[-1].meta.unit if tables else self.config.ingest.unit

        if kind == "sankey":
            table = tables[-1] if year is None else next((t for t in tables if t.year == year), None)
            if table is None:
                raise YearNotFound(f"No table for {year} in {self.dataset_dir}")
            document = to_sankey(sector_breakdown(table, source, target, self.strict), unit=unit)
            stem = f"sankey_{from_group}_{to_group}_{table.year}"
            self._write_text(f"{stem}.json", document.to_json())
            self._write_text(f"{stem}.svg", render_sankey_svg(document, self.config.report, title=title))
            summary = {"kind": kind, "year": table.year, "nodes": len(document.nodes),
                       "links": len(document.links), "total": document.total}
        elif kind == "chart":
            series = flow_series(tables, source, target, self.strict)
            overlay = parse_price_series(prices) if prices else None
            stem = f"chart_{from_group}_{to_group}"
            self._write_text(f"{stem}.svg", render_line_chart(series, overlay, self.config.report, title=title, unit=unit))
            summary = {"kind": kind, "points": len(series), "overlay": overlay.name if overlay else None}
        else:
            raise ValueError(f"Unknown export kind {kind!r}; use sankey or chart")

        summary["files"] = sorted(self.outputs)
        self.write_manifest("export", {"kind": kind, "from": from_group, "to": to_group,
                                       "year": year, "prices": prices, "title": title})
        return summary


def _print_human(command: str, result: Dict[str, Any]) -> None:
    if command == "case":
        for name, entry in result.items():
            if name.startswith("_"):
                continue
            print(f"== {entry['title']} ({name}) ==")
            for step in entry["trace"]:
                print(f"  {step['step']}: {step['expression']} = {step['value']}")
            print(f"  headline: {entry['headline']}")
            for key, item in entry["published"].items():
                mark = "ok" if item["ok"] else "MISMATCH"
                print(f"  {key}: {item['actual']} (published {item['expected']}) {mark}")
            for field_name, tags in entry["tags"].items():
                if tags:
                    print(f"  {field_name}: {', '.join(tags)}")
        return
    if command == "ingest":
        for summary in result["tables"]:
            print(f"{summary['year']}: {summary['dimension']} region-sectors, "
                  f"{summary['nonzeros']} nonzeros, {summary['negative_cells']} negative cells")
        for year, error in result["errors"].items():
            print(f"{year}: FAILED {error}")
        return
    for row in result.get("rows", []):
        print(", ".join(f"{k}={v}" for k, v in row.items()))
    for key in ("mean_share", "weighted_mean_share", "total_kgco2e", "total_ktco2e", "method", "files"):
        if key in result:
            print(f"{key}: {result[key]}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dataset-dir", help="Directory of per-year tables (default: MRIO_DATASET_DIR)")
    common.add_argument("--years", type=parse_years, help="Years to load, e.g. 2000-2022 or 2000,2011")
    common.add_argument("--pattern", help="File name pattern with a {year} placeholder")
    common.add_argument("--concordance", help="Concordance YAML (default: dataset concordance.yaml or shipped)")
    common.add_argument("--output-dir", help="Directory receiving result files")
    common.add_argument("--cache-dir", help="Parsed-table cache directory")
    common.add_argument("--no-cache", action="store_true", help="Do not read or write the table cache")
    matching = common.add_mutually_exclusive_group()
    matching.add_argument("--strict", dest="strict", action="store_true", default=None,
                          help="Fail on concordance selectors without match (default)")
    matching.add_argument("--lenient", dest="strict", action="store_false",
                          help="Warn on concordance selectors without match")
    common.add_argument("--json", action="store_true", help="Print machine-readable JSON")
    common.add_argument("--log-level", help="Console logging level")
    common.add_argument("--progress", action="store_true", help="Show progress bars")

    parser = argparse.ArgumentParser(prog="ictog", description="ICT and oil & gas flows in multi-regional input-output tables")
    parser.add_argument("--version", action="version", version=f"%(prog)s {APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    subparsers.add_parser("ingest", parents=[common], help="Parse and cache the per-year tables")

    flows_parser = subparsers.add_parser("flows", parents=[common], help="Group-to-group flow analytics")
    flows_parser.add_argument("mode", choices=FLOW_MODES, help="Analysis to run")
    flows_parser.add_argument("--from", dest="from_group", required=True, help="Source group")
    flows_parser.add_argument("--to", dest="to_group", help="Target group")
    flows_parser.add_argument("--vs", dest="vs_group", help="Second target group (ratio mode)")
    flows_parser.add_argument("--limit", type=int, help="Ranking length (top, contributors)")
    flows_parser.add_argument("--granularity", choices=("region", "sector"), default="region",
                              help="Ranking key (top mode)")
    flows_parser.add_argument("--prices", help="year,price CSV joined to the series mode")

    footprint_parser = subparsers.add_parser("footprint", parents=[common], help="Consumption-based footprint")
    footprint_parser.add_argument("--intensity", required=True, help="region,sector,value intensity CSV")
    footprint_parser.add_argument("--demand", required=True, help="region,sector,value final demand CSV")
    footprint_parser.add_argument("--total-output", help="region,sector,value total output CSV")
    footprint_parser.add_argument("--year", type=int, help="Table year (default: latest)")
    footprint_parser.add_argument("--solver", choices=("iterative", "direct"), help="Leontief solver")
    footprint_parser.add_argument("--group", dest="groups", action="append", default=[],
                                  help="Attribute the footprint to this group (repeatable)")

    case_parser = subparsers.add_parser("case", parents=[common], help="Case-study added-emissions estimates")
    case_parser.add_argument("scenarios", nargs="*", help=f"Scenario files or shipped names ({', '.join(SHIPPED_SCENARIOS)})")
    case_parser.add_argument("--check", action="store_true", help="Fail when a figure differs from the published one")

    export_parser = subparsers.add_parser("export", parents=[common], help="Sankey JSON/SVG or line-chart SVG")
    export_parser.add_argument("kind", choices=("sankey", "chart"), help="Artifact to export")
    export_parser.add_argument("--from", dest="from_group", required=True, help="Source group")
    export_parser.add_argument("--to", dest="to_group", required=True, help="Target group")
    export_parser.add_argument("--year", type=int, help="Sankey year (default: latest)")
    export_parser.add_argument("--prices", help="year,price CSV drawn on a secondary axis (chart)")
    export_parser.add_argument("--title", help="Title of the figure")
    return parser


def _run(args: argparse.Namespace) -> int:
    app = FlowAnalysisApp(
        dataset_dir=args.dataset_dir,
        years=args.years,
        concordance_path=args.concordance,
        output_dir=args.output_dir,
        strict=args.strict,
        pattern=args.pattern,
        cache_dir=args.cache_dir,
        use_cache=not args.no_cache,
        show_progress=args.progress,
    )
    exit_code = EXIT_OK

    if args.command == "ingest":
        result = app.cmd_ingest()
        errors = result.pop("_errors")
        if errors:
            first = errors[0]
            exit_code = first.exit_code if isinstance(first, MrioError) else EXIT_IO
    elif args.command == "flows":
        result = app.cmd_flows(args.mode, args.from_group, args.to_group, args.vs_group,
                               args.limit, args.granularity, args.prices)
    elif args.command == "footprint":
        result = app.cmd_footprint(args.intensity, args.demand, args.year, args.total_output,
                                   args.solver, args.groups)
    elif args.command == "case":
        result = app.cmd_case(args.scenarios, args.check)
        mismatches = result.pop("_mismatches")
        if mismatches:
            logger.warning(f"Figures differing from published ones: {', '.join(mismatches)}")
            if args.check:
                exit_code = EXIT_NUMERIC
    else:
        result = app.cmd_export(args.kind, args.from_group, args.to_group, args.year, args.prices, args.title)

    if args.json:
        print(json.dumps(result, indent=2, sort_keys=True, ensure_ascii=False, default=str))
    else:
        _print_human(args.command, result)
    return exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_OK

    setup_logging(level=args.log_level)
    try:
        return _run(args)
    except MrioError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        logger.error(f"I/O failure: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except Exception as e:
        logger.exception(f"Unexpected failure: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
