"""Delimited and JSON writers with a '#' metadata block.

Floats are written with 17 significant digits so files round-trip exactly.
"""
import csv
import io
import json
import math
from dataclasses import asdict

from . import __version__
from .units import DEFAULT_CONSTANTS


def fmt(value):
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def metadata(config_items=(), constants=DEFAULT_CONSTANTS, extra=()):
    lines = [f"cpgraphene {__version__}"]
    lines += [f"config {k}={v}" for k, v in config_items]
    lines.append("constants " + " ".join(f"{k}={fmt(v)}" for k, v in asdict(constants).items()))
    lines += list(extra)
    return lines


def to_csv(columns, rows, meta=()):
    buf = io.StringIO()
    for line in meta:
        buf.write(f"# {line}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def to_json(columns, rows, meta=()):
    doc = {"metadata": list(meta), "columns": list(columns),
           "rows": [[_json_value(v) for v in row] for row in rows]}
    return json.dumps(doc, indent=1) + "\n"


def write_table(path, columns, rows, meta=(), fmt_name="csv"):
    text = to_json(columns, rows, meta) if fmt_name == "json" else to_csv(columns, rows, meta)
    if path is None or path == "-":
        return text
    with open(path, "w", newline="") as fh:
        fh.write(text)
    return text


def read_csv(path):
    """Read a file written by :func:`to_csv`; returns ``(meta, columns, rows)``."""
    meta, body = [], []
    with open(path) as fh:
        for line in fh:
            if line.startswith("#"):
                meta.append(line[1:].strip())
            else:
                body.append(line)
    reader = csv.reader(body)
    columns = next(reader)
    rows = []
    for row in reader:
        parsed = []
        for cell in row:
            try:
                parsed.append(float(cell))
            except ValueError:
                parsed.append(cell)
        rows.append(parsed)
    return meta, columns, rows
