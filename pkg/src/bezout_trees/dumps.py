"""CSV and JSON-lines tree dumps with columns ``level,path,m,n,u,v``."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, TextIO

FIELDS = ("level", "path", "m", "n", "u", "v")
FORMATS = ("csv", "jsonl")


def node_record(node) -> dict:
    return {
        "level": node.level,
        "path": node.path.step_string,
        "m": node.pair.m,
        "n": node.pair.n,
        "u": node.bezout.u,
        "v": node.bezout.v,
    }


def write_records(records: Iterable[dict], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(FIELDS)
        for rec in records:
            writer.writerow([rec[k] for k in FIELDS])
    elif fmt == "jsonl":
        for rec in records:
            out.write(json.dumps({k: rec[k] for k in FIELDS}, separators=(",", ":")) + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def read_records(text: str, fmt: str) -> list[dict]:
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or tuple(rows[0]) != FIELDS:
            raise ValueError("missing or wrong CSV header")
        return [
            {k: (val if k == "path" else int(val)) for k, val in zip(FIELDS, row)}
            for row in rows[1:]
        ]
    if fmt == "jsonl":
        return [json.loads(line) for line in text.splitlines() if line]
    raise ValueError(f"unknown format {fmt!r}")


def dumps(records: Iterable[dict], fmt: str) -> str:
    buf = io.StringIO()
    write_records(records, fmt, buf)
    return buf.getvalue()
