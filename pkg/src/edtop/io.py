"""Topology files and run-report documents.

A topology file is a JSON object with ``points`` and exactly one of
``opens`` (list of sorted index lists) or ``preorder`` (an n x n 0/1 matrix)::

    {"points": 2, "opens": [[], [0], [0, 1]]}
    {"points": 2, "preorder": [[1, 0], [1, 1]]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .pointset import MAX_POINTS
from .topology import Topology, build_from_opens, build_from_preorder

REPORT_VERSION = 1


class IoError(OSError):
    pass


class SchemaError(ValueError):
    pass


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def topology_from_data(data: Any) -> Topology:
    if not isinstance(data, dict):
        raise SchemaError("topology file must hold a JSON object")
    n = data.get("points")
    if not _is_int(n) or not 0 <= n <= MAX_POINTS:
        raise SchemaError(f"'points' must be an integer in 0..{MAX_POINTS}")
    has_opens, has_pre = "opens" in data, "preorder" in data
    if has_opens == has_pre:
        raise SchemaError("exactly one of 'opens' or 'preorder' is required")
    extra = set(data) - {"points", "opens", "preorder"}
    if extra:
        raise SchemaError(f"unknown keys: {', '.join(sorted(extra))}")

    if has_opens:
        opens = data["opens"]
        if not isinstance(opens, list):
            raise SchemaError("'opens' must be a list of lists")
        for k, members in enumerate(opens):
            if not isinstance(members, list) or not all(_is_int(i) for i in members):
                raise SchemaError(f"opens[{k}] must be a list of integers")
            if any(not 0 <= i < n for i in members):
                raise SchemaError(f"opens[{k}] has an index outside 0..{n - 1}")
            if any(a >= b for a, b in zip(members, members[1:])):
                raise SchemaError(f"opens[{k}] must be strictly ascending")
        return build_from_opens(n, opens)

    matrix = data["preorder"]
    if (
        not isinstance(matrix, list)
        or len(matrix) != n
        or any(not isinstance(row, list) or len(row) != n for row in matrix)
    ):
        raise SchemaError(f"'preorder' must be a {n}x{n} matrix")
    if not all(isinstance(v, bool) or _is_int(v) and v in (0, 1) for row in matrix for v in row):
        raise SchemaError("'preorder' entries must be 0 or 1")
    return build_from_preorder(n, matrix)


def load_topology(path: str | Path) -> Topology:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return topology_from_data(data)


def topology_to_data(T: Topology) -> dict:
    return {"points": T.n, "opens": [list(s.members) for s in T.opens]}


def report_document(
    command: str,
    parameters: dict,
    per_n_stats: list[dict],
    failures: list[dict],
    duration_ms: float | None = None,
    **extra: Any,
) -> dict:
    doc = {
        "version": REPORT_VERSION,
        "command": command,
        "parameters": parameters,
        "per_n_stats": per_n_stats,
        "failures": failures,
        "duration_ms": None if duration_ms is None else round(duration_ms, 3),
    }
    doc.update(extra)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
