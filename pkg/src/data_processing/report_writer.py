"""
Serialization of sweep reports and comparison summaries
"""
import io
import json
import logging
from dataclasses import asdict, dataclass, field, fields
from datetime import datetime, timezone
from typing import Dict, Iterable, List, Optional, Tuple

import pandas as pd

from .. import __version__
from ..errors import DomainError, ParseError
from ..link import RATE_MAP
from ..scenario import (
    AGGREGATE,
    TOTAL,
    LinkReport,
    PointEvaluation,
    SystemConfig,
    SystemKind,
    jain_fairness,
)

logger = logging.getLogger(__name__)

COLUMNS = [f.name for f in fields(LinkReport)]
FLOAT_COLUMNS = ["position_m", "h", "a_k", "sinr", "sinr_db", "rate_bps"]
FORMATS = ("csv", "jsonl")


def _now() -> str:
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat()


@dataclass(frozen=True)
class RunMetadata:
    """Everything a result file needs to be reproduced. The timestamp is always last."""
    tool_version: str
    config_hash: str
    concentrator_form: str
    allocation_form: str
    interference_mode: str
    rate_map: str = RATE_MAP
    responsivity: str = "per-colour"
    calibrated_bandwidth_hz: Optional[float] = None
    calibration_residual: Optional[float] = None
    timestamp: str = field(default_factory=_now)

    @classmethod
    def for_run(cls, cfg: SystemConfig, config_hash: str, responsivity_assumed: bool = False,
                calibrated_bandwidth_hz: Optional[float] = None,
                calibration_residual: Optional[float] = None,
                timestamp: Optional[str] = None) -> "RunMetadata":
        if cfg.system is SystemKind.WDM_NOMA:
            responsivity = "per-colour"
        else:
            responsivity = f"{cfg.access_point.responsivity!r} A/W"
            if responsivity_assumed:
                responsivity += " (assumed)"
        return cls(
            tool_version=__version__,
            config_hash=config_hash,
            concentrator_form=cfg.concentrator_form.value,
            allocation_form=cfg.allocation_form.value,
            interference_mode=cfg.interference_mode.value,
            responsivity=responsivity,
            calibrated_bandwidth_hz=calibrated_bandwidth_hz,
            calibration_residual=calibration_residual,
            timestamp=timestamp or _now(),
        )

    def items(self) -> List[Tuple[str, str]]:
        return [(k, "" if v is None else (repr(v) if isinstance(v, float) else str(v)))
                for k, v in asdict(self).items()]

    @classmethod
    def from_items(cls, items: Iterable[Tuple[str, str]]) -> "RunMetadata":
        values = dict(items)
        unknown = set(values) - {f.name for f in fields(cls)}
        if unknown:
            raise ParseError(f"unknown metadata keys {sorted(unknown)}")
        for key in ("calibrated_bandwidth_hz", "calibration_residual"):
            raw = values.get(key, "")
            values[key] = float(raw) if raw not in ("", None) else None
        return cls(**values)


def flatten(points: List[PointEvaluation]) -> List[LinkReport]:
    """Output rows of every point, each point closed by its sum-rate row."""
    return [r for p in points for r in p.rows()]


def points_from_reports(reports: List[LinkReport]) -> List[PointEvaluation]:
    """
    Regroup decoded rows into sweep points, the inverse of flatten.

    Raises:
        ParseError: if a position has no sum-rate row or no per-user rows
    """
    grouped: Dict[float, List[LinkReport]] = {}
    for report in reports:
        grouped.setdefault(report.position_m, []).append(report)

    points = []
    for position, rows in grouped.items():
        totals = [r for r in rows if r.colour == TOTAL]
        per_user = tuple(r for r in rows if r.colour != TOTAL)
        aggregates = [r for r in per_user if r.colour == AGGREGATE]
        if len(totals) != 1 or not aggregates:
            raise ParseError(f"position {position!r} needs one sum-rate row and per-user rows")
        points.append(PointEvaluation(
            position_m=position,
            reports=per_user,
            total_rate_bps=totals[0].rate_bps,
            fairness=jain_fairness([r.rate_bps for r in aggregates]),
            total=totals[0],
        ))
    return points


def reports_frame(reports: List[LinkReport]) -> pd.DataFrame:
    """Reports as a DataFrame in output column order."""
    return pd.DataFrame([asdict(r) for r in reports], columns=COLUMNS)


def emit_results(reports: List[LinkReport], meta: RunMetadata, fmt: str = "csv") -> bytes:
    """
    Encode reports with their run metadata.

    CSV gets the metadata as a '#'-prefixed preamble; JSON lines get it as a
    leading {"metadata": ...} object. Floats use their shortest round-trip form.

    Args:
        reports: Rows to write, in order
        meta: Run metadata
        fmt: "csv" or "jsonl"

    Returns:
        Encoded bytes, identical for identical inputs
    """
    if not reports:
        raise DomainError("no reports to emit")
    if fmt == "csv":
        frame = reports_frame(reports)
        for column in FLOAT_COLUMNS:
            frame[column] = [repr(float(v)) for v in frame[column]]
        buffer = io.StringIO()
        for key, value in meta.items():
            buffer.write(f"# {key}: {value}\n")
        frame.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue().encode("utf-8")
    if fmt == "jsonl":
        lines = [json.dumps({"metadata": asdict(meta)})]
        lines.extend(json.dumps(asdict(r)) for r in reports)
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise DomainError(f"unknown output format {fmt!r}; expected one of {FORMATS}")


def _report_from_mapping(row: dict) -> LinkReport:
    values = {name: row[name] for name in COLUMNS}
    for column in FLOAT_COLUMNS:
        values[column] = float(values[column])
    return LinkReport(**values)


def parse_results(data: bytes) -> Tuple[RunMetadata, List[LinkReport]]:
    """
    Decode the output of emit_results, detecting the encoding.

    Raises:
        ParseError: if the bytes are neither encoding
    """
    text = data.decode("utf-8")
    if text.lstrip().startswith("{"):
        records = [json.loads(line) for line in text.splitlines() if line.strip()]
        if "metadata" not in records[0]:
            raise ParseError("first JSON line must hold the run metadata", line=1)
        meta = RunMetadata(**records[0]["metadata"])
        return meta, [_report_from_mapping(r) for r in records[1:]]

    preamble = []
    body = []
    for number, line in enumerate(text.splitlines(keepends=True), start=1):
        if line.startswith("#"):
            key, sep, value = line[1:].strip().partition(":")
            if not sep:
                raise ParseError(f"malformed metadata line {line.strip()!r}", line=number)
            preamble.append((key.strip(), value.strip()))
        else:
            body.append(line)
    frame = pd.read_csv(io.StringIO("".join(body)), dtype=str, keep_default_na=False)
    if list(frame.columns) != COLUMNS:
        raise ParseError(f"unexpected columns {list(frame.columns)}", line=len(preamble) + 1)
    reports = [_report_from_mapping(row) for row in frame.to_dict(orient="records")]
    return RunMetadata.from_items(preamble), reports


def sum_rate_frame(points: List[PointEvaluation]) -> pd.DataFrame:
    return pd.DataFrame({
        "position_m": [p.position_m for p in points],
        "sum_rate_bps": [p.total_rate_bps for p in points],
        "fairness": [p.fairness for p in points],
    })


def compare_sweeps(points_a: List[PointEvaluation],
                   points_b: List[PointEvaluation]) -> Tuple[pd.DataFrame, pd.DataFrame]:
    """
    Per-position comparison of two sweeps over the same grid.

    Returns:
        (per-position frame with sum rates, delta b - a and fairness for both runs,
         per-run frame with the min and max per-user aggregate rate)

    Raises:
        DomainError: if the two sweeps do not share their grid
    """
    a, b = sum_rate_frame(points_a), sum_rate_frame(points_b)
    if a["position_m"].tolist() != b["position_m"].tolist():
        raise DomainError("compared sweeps must use the same positions")
    merged = a.merge(b, on="position_m", suffixes=("_a", "_b"))
    merged["delta_bps"] = merged["sum_rate_bps_b"] - merged["sum_rate_bps_a"]
    merged = merged[["position_m", "sum_rate_bps_a", "sum_rate_bps_b", "delta_bps",
                     "fairness_a", "fairness_b"]]

    extrema = []
    for run, points in (("a", points_a), ("b", points_b)):
        rates = reports_frame([r for p in points for r in p.aggregates()])
        per_user = rates.groupby("user_id")["rate_bps"]
        extrema.append({
            "run": run,
            "min_user_rate_bps": float(rates["rate_bps"].min()),
            "max_user_rate_bps": float(rates["rate_bps"].max()),
            "mean_user_rates": ";".join(f"{u}={v!r}" for u, v in per_user.mean().items()),
        })
    logger.info(f"compared {len(merged)} positions; b exceeds a at "
                f"{int((merged['delta_bps'] > 0).sum())} of them")
    return merged, pd.DataFrame(extrema)


def emit_comparison(summary: pd.DataFrame, extrema: pd.DataFrame,
                    meta_a: RunMetadata, meta_b: RunMetadata) -> bytes:
    """Comparison table as CSV: both metadata preambles, the per-position rows, then the extrema block."""
    buffer = io.StringIO()
    for prefix, meta in (("a", meta_a), ("b", meta_b)):
        for key, value in meta.items():
            buffer.write(f"# {prefix}.{key}: {value}\n")
    table = summary.copy()
    for column in table.columns:
        table[column] = [repr(float(v)) for v in table[column]]
    table.to_csv(buffer, index=False, lineterminator="\n")
    buffer.write("# summary\n")
    for row in extrema.to_dict(orient="records"):
        run = row["run"]
        buffer.write(f"# {run}.min_user_rate_bps: {row['min_user_rate_bps']!r}\n")
        buffer.write(f"# {run}.max_user_rate_bps: {row['max_user_rate_bps']!r}\n")
        buffer.write(f"# {run}.mean_user_rates: {row['mean_user_rates']}\n")
    better = int((summary["delta_bps"] > 0).sum())
    buffer.write(f"# b_sum_rate_higher_at: {better}/{len(summary)}\n")
    return buffer.getvalue().encode("utf-8")
