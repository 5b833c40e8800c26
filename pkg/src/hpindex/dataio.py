"""Dataset ingestion and report serialization.

Input schema (CSV header required, or one JSON object per line)::

    researcher_id,paper_id,citations,n_authors,n_pi

An empty ``n_pi`` marks the PI count as unknown; PI metrics for that
researcher are then estimated from the author counts.
"""
from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, TextIO

from .cohort import CohortTable, Ranking
from .errors import ParseError, ValidationError
from .model import CitationProfile, PaperRecord, ResearcherRecord

COLUMNS = ("researcher_id", "paper_id", "citations", "n_authors", "n_pi")


class DatasetRow(NamedTuple):
    researcher_id: str
    paper_id: str
    citations: int
    n_authors: int
    n_pi: Optional[int]


@dataclass(frozen=True)
class InputDataset:
    rows: tuple[DatasetRow, ...]
    # source line of each row, for error messages only
    lines: tuple[int, ...] = field(default=(), compare=False)

    @property
    def needs_estimate(self) -> bool:
        return any(r.n_pi is None for r in self.rows)

    def to_records(self) -> list[ResearcherRecord]:
        grouped: dict[str, list[PaperRecord]] = {}
        for r in self.rows:
            grouped.setdefault(r.researcher_id, []).append(
                PaperRecord(r.paper_id, r.citations, r.n_authors, r.n_pi)
            )
        return [ResearcherRecord(rid, tuple(papers)) for rid, papers in grouped.items()]


def dataset_from_records(records: Iterable[ResearcherRecord]) -> InputDataset:
    rows = [
        DatasetRow(rec.researcher_id, p.paper_id, p.citations, p.n_authors, p.n_pi)
        for rec in records
        for p in rec.papers
    ]
    return InputDataset(tuple(rows))


def _int(text, name: str, line: int, *, optional: bool = False) -> Optional[int]:
    if text is None or (isinstance(text, str) and text.strip() == ""):
        if optional:
            return None
        raise ParseError(f"missing {name}", line)
    if isinstance(text, bool):
        raise ParseError(f"{name} must be an integer, got {text!r}", line)
    if isinstance(text, int):
        return text
    try:
        return int(str(text).strip())
    except ValueError:
        raise ParseError(f"{name} must be an integer, got {text!r}", line) from None


def _check_row(row: DatasetRow, line: int) -> None:
    where = f"line {line}: researcher {row.researcher_id!r}, paper {row.paper_id!r}"
    if not row.researcher_id or not row.paper_id:
        raise ParseError("researcher_id and paper_id must be non-empty", line)
    if row.citations < 0:
        raise ValidationError(f"{where}: citations must be >= 0")
    if row.n_authors < 1:
        raise ValidationError(f"{where}: n_authors must be >= 1")
    if row.n_pi is not None:
        if row.n_pi < 1:
            raise ValidationError(f"{where}: n_pi must be >= 1")
        if row.n_pi > row.n_authors:
            raise ValidationError(f"{where}: n_pi exceeds n_authors")


def _iter_csv(stream: TextIO):
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None:
        raise ParseError("empty input, header row required", 1)
    if tuple(h.strip() for h in header) != COLUMNS:
        raise ParseError(f"header must be {','.join(COLUMNS)}", 1)
    for fields in reader:
        line = reader.line_num
        if not fields or all(not f.strip() for f in fields):
            continue
        if len(fields) != len(COLUMNS):
            raise ParseError(f"expected {len(COLUMNS)} fields, got {len(fields)}", line)
        yield line, dict(zip(COLUMNS, fields))


def _iter_jsonl(stream: TextIO):
    for line, text in enumerate(stream, 1):
        if not text.strip():
            continue
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line) from None
        if not isinstance(obj, dict):
            raise ParseError("each line must be a JSON object", line)
        unknown = set(obj) - set(COLUMNS)
        if unknown:
            raise ParseError(f"unknown field(s): {', '.join(sorted(unknown))}", line)
        yield line, obj


def parse_dataset(stream: TextIO, fmt: str = "csv") -> InputDataset:
    if fmt == "csv":
        source = _iter_csv(stream)
    elif fmt in ("jsonl", "json-lines"):
        source = _iter_jsonl(stream)
    else:
        raise ValueError(f"unknown input format {fmt!r}")

    rows, lines, seen = [], [], {}
    for line, raw in source:
        rid = raw.get("researcher_id")
        pid = raw.get("paper_id")
        if not isinstance(rid, str) or not isinstance(pid, str):
            raise ParseError("researcher_id and paper_id must be strings", line)
        row = DatasetRow(
            rid.strip(),
            pid.strip(),
            _int(raw.get("citations"), "citations", line),
            _int(raw.get("n_authors"), "n_authors", line),
            _int(raw.get("n_pi"), "n_pi", line, optional=True),
        )
        _check_row(row, line)
        key = (row.researcher_id, row.paper_id)
        if key in seen:
            raise ValidationError(
                f"line {line}: duplicate researcher {row.researcher_id!r}, "
                f"paper {row.paper_id!r} (first seen on line {seen[key]})"
            )
        seen[key] = line
        rows.append(row)
        lines.append(line)
    return InputDataset(tuple(rows), tuple(lines))


def emit_dataset(dataset: InputDataset, fmt: str = "csv") -> str:
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for r in dataset.rows:
            writer.writerow(["" if v is None else v for v in r])
    elif fmt in ("jsonl", "json-lines"):
        for r in dataset.rows:
            buf.write(json.dumps(r._asdict()) + "\n")
    else:
        raise ValueError(f"unknown dataset format {fmt!r}")
    return buf.getvalue()


# -- report serialization ---------------------------------------------------


def _fraction_json(x: Fraction) -> dict:
    return {"value": _decimal(x), "num": x.numerator, "den": x.denominator}


def _decimal(x):
    """Exact integers stay integers; everything else keeps 6 significant digits."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return float(f"{float(x):.6g}")


def to_jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return _fraction_json(obj)
    if isinstance(obj, float):
        return None if math.isnan(obj) or math.isinf(obj) else obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, CohortTable):
        return {
            "metrics": list(obj.metrics),
            "rows": [
                {"researcher_id": r.researcher_id, **{m: to_jsonable(v) for m, v in zip(obj.metrics, r.values)}}
                for r in obj.rows
            ],
            "summary": {m: {"min": to_jsonable(lo), "max": to_jsonable(hi)} for m, (lo, hi) in obj.summary.items()},
            "estimated": list(obj.estimated),
        }
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, tuple) and hasattr(obj, "_asdict"):
        return {k: to_jsonable(v) for k, v in obj._asdict().items()}
    if isinstance(obj, dict):
        return {_key(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _key(k) -> str:
    if isinstance(k, enum.Enum):
        return k.value
    return str(k)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, enum.Enum):
        return v.value
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction) and v.denominator == 1:
        return str(v.numerator)
    if isinstance(v, (Fraction, float)):
        if isinstance(v, float) and (math.isnan(v) or math.isinf(v)):
            return ""
        return f"{float(v):.6g}"
    return str(v)


def _flatten(row) -> dict:
    """Row object -> ordered column dict; ``h_q`` maps expand to ``h_<q>`` columns."""
    if dataclasses.is_dataclass(row):
        items = [(f.name, getattr(row, f.name)) for f in dataclasses.fields(row)]
    else:
        items = list(row._asdict().items())
    out = {}
    for name, value in items:
        if name == "h_q" and isinstance(value, dict):
            for q in sorted(value):
                out[f"h_{q}"] = value[q]
        else:
            out[name] = value
    return out


def _rows_for_csv(obj) -> tuple[list[str], list[list[str]]]:
    if isinstance(obj, CohortTable):
        header = ["researcher_id", *obj.metrics]
        return header, [[r.researcher_id, *map(_cell, r.values)] for r in obj.rows]
    if isinstance(obj, Ranking):
        header = ["rank", "researcher_id", obj.metric or "value"]
        return header, [[str(e.rank), e.researcher_id, _cell(e.value)] for e in obj.order]
    if isinstance(obj, CitationProfile):
        obj = [obj]
    if isinstance(obj, list) and obj and isinstance(obj[0], CitationProfile):
        header = ["researcher_id", "scheme", "rank", "paper_id", "value"]
        rows = [
            [p.researcher_id, p.scheme.value, str(e.rank), e.paper_id, _cell(e.value)]
            for p in obj
            for e in p.entries
        ]
        return header, rows
    if not isinstance(obj, (list, tuple)) or hasattr(obj, "_asdict"):
        obj = [obj]
    if not obj:
        return [], []
    flat = [_flatten(r) for r in obj]
    header = list(flat[0])
    return header, [[_cell(f.get(k)) for k in header] for f in flat]


def emit_report(obj, fmt: str = "json") -> str:
    """Serialize a report object (or list of them) deterministically."""
    if fmt == "json":
        return json.dumps(to_jsonable(obj), indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown output format {fmt!r}")
    header, rows = _rows_for_csv(obj)
    if not header:
        return ""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


class SummaryRow(NamedTuple):
    metric: str
    min: object
    max: object


def summary_rows(table: CohortTable) -> list[SummaryRow]:
    return [SummaryRow(m, lo, hi) for m, (lo, hi) in table.summary.items()]
