"""Instance file formats.

plain: '#' lines are comments; the first token is delta, every further
       whitespace-separated token is a position.
csv:   a header row with a "position" column; delta comes from --delta.
json:  {"delta": "2", "points": ["0", "1.5"]} with every number a decimal string.
"""
from __future__ import annotations

import csv
import io
import json
import os
from typing import List, Optional, Tuple

from ..core.model import ProblemInstance, normalize_instance
from ..core.scalar import format_scalar
from ..errors import InstanceFormatError
from ..utils import read_text_source

FORMATS = ("plain", "csv", "json")


def infer_format(path: str) -> str:
    ext = os.path.splitext(path)[1].lower()
    return {".json": "json", ".csv": "csv"}.get(ext, "plain")


def _plain_tokens(text: str) -> List[str]:
    tokens = []
    for line in text.splitlines():
        if line.lstrip().startswith("#"):
            continue
        tokens.extend(line.split())
    return tokens


def parse_plain(text: str) -> Tuple[str, List[str]]:
    tokens = _plain_tokens(text)
    if not tokens:
        raise InstanceFormatError("instance file has no delta")
    return tokens[0], tokens[1:]


def parse_csv(text: str, delta: Optional[str]) -> Tuple[str, List[str]]:
    if delta is None:
        raise InstanceFormatError("CSV instances need delta from --delta")
    reader = csv.DictReader(io.StringIO(text))
    if not reader.fieldnames or "position" not in [f.strip() for f in reader.fieldnames]:
        raise InstanceFormatError('CSV instance needs a "position" header')
    column = next(f for f in reader.fieldnames if f.strip() == "position")
    return delta, [row[column].strip() for row in reader if row[column] and row[column].strip()]


def parse_json(text: str) -> Tuple[str, List[str]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceFormatError(f"invalid JSON instance: {e}") from e
    if not isinstance(data, dict) or "delta" not in data or "points" not in data:
        raise InstanceFormatError('JSON instance needs "delta" and "points"')
    if not isinstance(data["points"], list):
        raise InstanceFormatError('JSON instance "points" must be a list of decimal strings')
    values = [data["delta"], *data["points"]]
    if not all(isinstance(v, str) for v in values):
        raise InstanceFormatError("JSON instance numbers must be decimal strings")
    return data["delta"], list(data["points"])


def parse_instance_text(text: str, fmt: str = "plain", delta: Optional[str] = None) -> ProblemInstance:
    if fmt == "plain":
        raw_delta, raw_points = parse_plain(text)
    elif fmt == "csv":
        raw_delta, raw_points = parse_csv(text, delta)
    elif fmt == "json":
        raw_delta, raw_points = parse_json(text)
    else:
        raise InstanceFormatError(f"unknown instance format {fmt!r}")
    if delta is not None and fmt != "csv":
        raw_delta = delta
    return normalize_instance(raw_points, raw_delta)


def load_instance(path: str, fmt: Optional[str] = None, delta: Optional[str] = None) -> ProblemInstance:
    return parse_instance_text(read_text_source(path), fmt or infer_format(path), delta)


def format_instance_text(inst: ProblemInstance, comment: Optional[str] = None) -> str:
    """Plain-format text of inst with positions in original input order."""
    lines = [f"# {comment}"] if comment else []
    lines.append(format_scalar(inst.delta, inst.scale))
    lines.extend(format_scalar(x, inst.scale) for x in inst.to_input_order(inst.initial))
    return "\n".join(lines) + "\n"


def parse_positions_text(text: str) -> List[str]:
    """Whitespace-separated positions, '#' comment lines allowed."""
    return _plain_tokens(text)
