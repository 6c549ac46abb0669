"""
serialization.py
----------------
Byte-stable JSON and CSV writers.

Floats are written with 17 significant digits so that every value
round-trips exactly; non-finite floats are refused instead of written as
NaN/Infinity tokens. CSV uses LF line endings and leaves absent values empty.
"""

import csv
import io
import json
import math
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

import click
import numpy as np
from pydantic import BaseModel

from rough_strong.core.constants import FLOAT_FORMAT


def format_float(value: float) -> str:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"Refusing to serialise non-finite value {value!r}")
    return format(value, FLOAT_FORMAT)


def _encode(value: Any, indent: int, level: int) -> str:
    if isinstance(value, BaseModel):
        value = value.model_dump(mode="python", by_alias=True)
    if isinstance(value, Enum):
        value = value.value
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, np.ndarray):
        value = value.tolist()

    if value is None or isinstance(value, (bool, str)):
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, Path):
        return json.dumps(str(value))

    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{pad}{_encode(v, indent, level + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"

    raise TypeError(f"Cannot serialise object of type {type(value).__name__}")


def dumps_json(value: Any, indent: int = 2) -> str:
    return _encode(value, indent, 0) + "\n"


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    return str(value)


def dumps_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(v) for v in row])
    return buffer.getvalue()


def write_text(text: str, out: Optional[Path]) -> None:
    """Write to `out` (UTF-8, LF) or to stdout when out is None."""
    if out is None:
        click.echo(text, nl=False)
        return
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
