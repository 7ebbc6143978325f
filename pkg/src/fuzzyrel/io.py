"""Instance files and report serialization.

Matrix CSV: comma separated, dot decimal, UTF-8.  The first row is a header
of column labels when its first cell is empty or any later cell is not a
number; the first column holds row labels when its body cells are not
numbers.  The companion vector file has one value per line, optionally as
``label,value``; blank lines and ``#`` comments are skipped.

JSON instance: ``{"name", "description", "x", "labels_x", "A",
"row_labels", "col_labels"}``; only ``x`` and ``A`` are required.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .composition import (ComparisonReport, FuzzyRelation, FuzzyVector, LambdaProfile,
                          compare_to_oracle, compose_similarity, lambda_profile, rank_alternatives)
from .diagnostics import RegimeReport, classify_regime
from .exceptions import ParseError, RangeError, ShapeError

__all__ = [
    "Instance", "RunReport", "load_instance", "load_matrix_csv", "load_vector_file",
    "dump_instance", "instance_to_dict", "instance_from_dict", "build_run_report",
    "emit_report", "parse_run_report", "format_vector",
]

DECIMALS = 6


@dataclass
class Instance:
    x: FuzzyVector
    A: FuzzyRelation
    name: str = ""
    description: str = ""

    def __post_init__(self):
        if len(self.x) != self.A.shape[0]:
            raise ShapeError(f"x has {len(self.x)} entries but A has {self.A.shape[0]} rows")


def _number(cell):
    try:
        return float(cell)
    except ValueError:
        return None


def _checked(value, row, column, where):
    if math.isnan(value) or not 0.0 <= value <= 1.0:
        raise RangeError(f"{where}: value {value!r} at row {row}, column {column} is outside [0, 1]",
                         row=row, column=column)
    return value


def load_matrix_csv(path) -> FuzzyRelation:
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        rows = [[c.strip() for c in r] for r in csv.reader(fh) if any(c.strip() for c in r)]
    if not rows:
        raise ParseError(f"{path}: empty matrix file")
    first = rows[0]
    header = None
    if first[0] == "" or any(_number(c) is None for c in first[1:]) or (
            len(rows) > 1 and _number(first[0]) is None and _number(rows[1][0]) is not None):
        header, rows = first, rows[1:]
    if not rows:
        raise ParseError(f"{path}: matrix has a header but no body")
    has_row_labels = any(_number(r[0]) is None for r in rows)
    row_labels = [r[0] for r in rows] if has_row_labels else None
    body = [r[1:] for r in rows] if has_row_labels else rows
    width = len(body[0])
    values = []
    for i, r in enumerate(body, start=1):
        if len(r) != width:
            raise ParseError(f"{path}: row {i} has {len(r)} values, expected {width}")
        out = []
        for j, cell in enumerate(r, start=1):
            v = _number(cell)
            if v is None:
                raise ParseError(f"{path}: cannot parse {cell!r} at row {i}, column {j}")
            out.append(_checked(v, i, j, str(path)))
        values.append(out)
    col_labels = None
    if header is not None:
        col_labels = header[1:] if len(header) == width + 1 else header
        if len(col_labels) != width:
            raise ParseError(f"{path}: header has {len(col_labels)} labels for {width} columns")
    return FuzzyRelation(values, row_labels, col_labels)


def load_vector_file(path) -> FuzzyVector:
    path = Path(path)
    values, labels = [], []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        label, _, cell = line.rpartition(",")
        v = _number(cell.strip())
        if v is None:
            raise ParseError(f"{path}: cannot parse {cell.strip()!r} on line {lineno}")
        if not 0.0 <= v <= 1.0:
            raise RangeError(f"{path}: value {v!r} on line {lineno} is outside [0, 1]", row=lineno)
        values.append(v)
        labels.append(label.strip())
    if not values:
        raise ParseError(f"{path}: empty vector file")
    has_labels = any(labels)
    return FuzzyVector(values, labels if has_labels else None)


def instance_from_dict(d, source="instance") -> Instance:
    if "x" not in d or "A" not in d:
        raise ParseError(f"{source}: instance needs both 'x' and 'A'")
    A = d["A"]
    if not isinstance(A, list) or not all(isinstance(r, list) for r in A):
        raise ParseError(f"{source}: 'A' must be a list of rows")
    for i, r in enumerate(A, start=1):
        for j, v in enumerate(r, start=1):
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise ParseError(f"{source}: non-numeric entry {v!r} at row {i}, column {j}")
            _checked(float(v), i, j, source)
    if len({len(r) for r in A}) > 1:
        raise ParseError(f"{source}: rows of 'A' have different lengths")
    x = FuzzyVector(d["x"], d.get("labels_x"))
    rel = FuzzyRelation(A, d.get("row_labels"), d.get("col_labels"))
    return Instance(x, rel, d.get("name", ""), d.get("description", ""))


def instance_to_dict(inst: Instance) -> dict:
    return {
        "name": inst.name,
        "description": inst.description,
        "x": inst.x.tolist(),
        "labels_x": list(inst.x.labels) if inst.x.labels else None,
        "A": inst.A.values.tolist(),
        "row_labels": list(inst.A.row_labels) if inst.A.row_labels else None,
        "col_labels": list(inst.A.col_labels) if inst.A.col_labels else None,
    }


def load_instance(path, format=None, vector_path=None) -> Instance:
    """Load an instance from JSON, or from a matrix CSV plus a vector file."""
    path = Path(path)
    fmt = (format or path.suffix.lstrip(".")).lower()
    if fmt == "json":
        try:
            d = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from None
        return instance_from_dict(d, str(path))
    if fmt == "csv":
        if vector_path is None:
            raise ParseError("a CSV matrix needs a companion vector file")
        A = load_matrix_csv(path)
        x = load_vector_file(vector_path)
        return Instance(x, A, name=path.stem)
    raise ParseError(f"unknown instance format {fmt!r} (expected csv or json)")


def dump_instance(inst: Instance, path):
    Path(path).write_text(json.dumps(instance_to_dict(inst), indent=2) + "\n", encoding="utf-8")


# --------------------------------------------------------------------------
# Run reports


@dataclass
class RunReport:
    name: str
    description: str
    x: FuzzyVector
    compositions: dict
    oracle: FuzzyVector | None
    comparisons: dict
    regime: RegimeReport
    lambda_profile: LambdaProfile
    notes: list = field(default_factory=list)

    def to_dict(self):
        return {
            "name": self.name,
            "description": self.description,
            "x": self.x.to_dict(),
            "compositions": {k: v.to_dict() for k, v in self.compositions.items()},
            "oracle": self.oracle.to_dict() if self.oracle is not None else None,
            "comparisons": {k: v.to_dict() for k, v in self.comparisons.items()},
            "regime": self.regime.to_dict(),
            "lambda_profile": self.lambda_profile.to_dict(),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            name=d["name"], description=d["description"],
            x=FuzzyVector.from_dict(d["x"]),
            compositions={k: FuzzyVector.from_dict(v) for k, v in d["compositions"].items()},
            oracle=FuzzyVector.from_dict(d["oracle"]) if d.get("oracle") else None,
            comparisons={k: ComparisonReport.from_dict(v) for k, v in d["comparisons"].items()},
            regime=RegimeReport.from_dict(d["regime"]),
            lambda_profile=LambdaProfile.from_dict(d["lambda_profile"]),
            notes=list(d.get("notes", [])),
        )


def build_run_report(inst: Instance, compositions: dict, oracle=True, notes=()) -> RunReport:
    sim = compose_similarity(inst.x, inst.A) if oracle else None
    comparisons = {}
    if sim is not None:
        comparisons = {k: compare_to_oracle(v, sim) for k, v in compositions.items()}
    return RunReport(
        name=inst.name, description=inst.description, x=inst.x,
        compositions=dict(compositions), oracle=sim, comparisons=comparisons,
        regime=classify_regime(inst.x, inst.A),
        lambda_profile=lambda_profile(inst.x, inst.A), notes=list(notes),
    )


def format_vector(v) -> str:
    return "[" + ", ".join(f"{float(e):.{DECIMALS}f}" for e in v) + "]"


def _columns_line(labels, m):
    return ", ".join(labels) if labels else ", ".join(str(j) for j in range(m))


def _render_run(r: RunReport) -> str:
    prof = r.lambda_profile
    m = len(prof)
    labels = prof.labels
    out = [f"instance: {r.name or '(unnamed)'}"]
    if r.description:
        out.append(f"  {r.description}")
    out.append(f"x = {format_vector(r.x)}")
    out.append(f"columns: {_columns_line(labels, m)}")
    width = max([len(k) for k in r.compositions] + [len("similarity")])
    for name, b in r.compositions.items():
        out.append(f"  {name:<{width}}  {format_vector(b)}")
    if r.oracle is not None:
        out.append(f"  {'similarity':<{width}}  {format_vector(r.oracle)}")
        top = rank_alternatives(r.oracle)
        out.append(f"reference ranking: {' > '.join(top.ordered_labels or map(str, top.order))}")
        for name, c in r.comparisons.items():
            out.append(f"  {name:<{width}}  linf={c.linf_error:.{DECIMALS}f}  "
                       f"argmax {'agrees' if c.argmax_agrees else 'differs'}  "
                       f"order agreement {c.order_agreement:.{DECIMALS}f}")
    out.append(f"regime: {r.regime.regime.value}")
    for c in r.regime.columns:
        name = c.label or str(c.column_index)
        out.append(f"  {name}: {c.regime.value:<15} nonzero mins={c.nonzero_min_count} "
                   f"saturated(any/all)={int(c.has_saturated_row)}/{int(c.all_rows_saturated)} "
                   f"cor1={int(c.corollary1_holds)} cor2={int(c.corollary2_holds)}")
    out.append("lambda:")
    for j in range(m):
        name = labels[j] if labels else str(j)
        mark = "  degenerate" if prof.degenerate[j] else ""
        out.append(f"  {name}: {prof.lam[j]:.{DECIMALS}f}{mark}")
    for note in r.notes:
        out.append(f"note: {note}")
    return "\n".join(out) + "\n"


def _dumps(d) -> str:
    return json.dumps(d, indent=2, sort_keys=True) + "\n"


def emit_report(report, format="json") -> str:
    """Serialize a report.  JSON is key-sorted; TEXT prints 6 decimals."""
    fmt = format.lower()
    if fmt == "json":
        if isinstance(report, list):
            return _dumps([r.to_dict() for r in report])
        return _dumps(report.to_dict())
    if fmt == "text":
        if isinstance(report, list):
            return "\n".join(emit_report(r, "text") for r in report)
        if isinstance(report, RunReport):
            return _render_run(report)
        if isinstance(report, RegimeReport):
            return _render_regime(report)
        render = getattr(report, "to_text", None)
        if render is not None:
            return render()
        raise TypeError(f"no text rendering for {type(report).__name__}")
    raise ValueError(f"unknown report format {format!r}")


def _render_regime(rep: RegimeReport) -> str:
    out = [f"regime: {rep.regime.value}"]
    for c in rep.columns:
        out.append(f"  {c.label or c.column_index}: {c.regime.value}")
        for key, value in c.to_dict().items():
            if key not in ("label", "column_index", "regime"):
                out.append(f"    {key} = {value}")
    return "\n".join(out) + "\n"


def parse_run_report(text: str):
    d = json.loads(text)
    if isinstance(d, list):
        return [RunReport.from_dict(r) for r in d]
    return RunReport.from_dict(d)
