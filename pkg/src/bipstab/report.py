"""Deterministic JSON / CSV emission.

Every float is printed with 15 significant digits (%.15g) so repeated runs
with identical inputs produce byte-identical documents.  JSON objects keep
insertion order; nothing here consults locale, time, or environment.
"""

from __future__ import annotations

import json
import math
from importlib import resources

from .errors import InvalidInputError


def fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise InvalidInputError(f"non-finite value {x!r} cannot be serialized")
    return format(float(x), ".15g")


def complex_fields(z: complex | None) -> dict | None:
    if z is None:
        return None
    return {"re": z.real, "im": z.imag}


def render_json(obj, indent: int = 2) -> str:
    """Serialize dicts/lists/scalars with fixed float formatting."""
    out = []
    _render(obj, out, indent, 0)
    out.append("\n")
    return "".join(out)


def _render(obj, out: list, indent: int, level: int):
    pad = " " * (indent * level)
    pad_in = " " * (indent * (level + 1))
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(fmt_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (k, v) in enumerate(obj.items()):
            out.append(f"{pad_in}{json.dumps(str(k))}: ")
            _render(v, out, indent, level + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for i, v in enumerate(obj):
            out.append(pad_in)
            _render(v, out, indent, level + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "]")
    else:
        raise InvalidInputError(f"cannot serialize {type(obj).__name__}")


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isnan(v):
            return ""
        return fmt_float(v)
    return str(v)


def render_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_csv_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def grid_csv(reports) -> str:
    """CSV schema: m,n,verdict,max_re_x,witness_re,witness_im."""
    rows = []
    for rep in reports:
        label = rep.graph_label.strip("K_{}")
        m, n = (int(v) for v in label.split(","))
        w = rep.witness_root
        rows.append([
            m, n, rep.verdict,
            rep.max_real_part_x,
            w.real if w is not None else None,
            w.imag if w is not None else None,
        ])
    return render_csv(["m", "n", "verdict", "max_re_x", "witness_re", "witness_im"], rows)


def scatter_csv(roots_x) -> str:
    """CSV schema: re,im — one row per independence root (x-coordinates)."""
    rows = [[z.real, z.imag] for z in roots_x]
    return render_csv(["re", "im"], rows)


def witness_csv(per_m) -> str:
    """CSV schema: m,n,verdict,max_re_x for each scanned multiple."""
    rows = []
    for m, rep in per_m:
        label = rep.graph_label.strip("K_{}")
        n = int(label.split(",")[1])
        rows.append([m, n, rep.verdict, rep.max_real_part_x])
    return render_csv(["m", "n", "verdict", "max_re_x"], rows)


def ck_table_csv(thresholds) -> str:
    rows = [[t.k, t.c_k, t.minimizer_t, t.delta_k, t.N_k] for t in thresholds]
    return render_csv(["k", "c_k", "minimizer_t", "delta_k", "N_k"], rows)


def load_schema(name: str) -> dict:
    """Load one of the JSON schemas shipped under bipstab/schemas/."""
    path = resources.files("bipstab").joinpath("schemas", name)
    return json.loads(path.read_text(encoding="utf-8"))
