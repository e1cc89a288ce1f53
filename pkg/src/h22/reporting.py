"""Deterministic serialization: canonical JSON reports and coefficient CSVs.

Identical inputs and seed must yield byte-identical output, so floats are
rendered with 17 significant digits, object keys are sorted, and wall-clock
runtimes are zeroed in the serialized form (the in-memory CheckReport keeps
the measured value; human-format output shows it).
"""

from __future__ import annotations

import numbers

import numpy as np

from .harness import CheckReport
from .series import TruncatedSeries

__all__ = [
    "format_float",
    "canonical_json",
    "reports_document",
    "reports_json",
    "reports_csv",
    "reports_human",
    "series_csv",
    "parse_series_csv",
    "matrix_csv",
]

_REPORT_KEYS = ("check_id", "inputs", "lhs", "rhs", "tolerance", "verdict", "runtime_ms")


def format_float(x: float) -> str:
    """17-significant-digit decimal form (round-trips any IEEE double)."""
    if not np.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    return format(float(x), ".17g")


def _canonical(obj):
    """Normalize a value tree for canonical JSON emission."""
    if isinstance(obj, (np.complexfloating, complex)):
        z = complex(obj)
        return {"im": z.imag, "re": z.real}
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, str) or obj is None:
        return obj
    if isinstance(obj, dict):
        return {str(k): _canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_canonical(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _render(obj, out: list):
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format_float(obj))
    elif isinstance(obj, str):
        import json

        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, key in enumerate(sorted(obj)):
            if i:
                out.append(", ")
            _render(key, out)
            out.append(": ")
            _render(obj[key], out)
        out.append("}")
    elif isinstance(obj, list):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(", ")
            _render(v, out)
        out.append("]")
    else:  # pragma: no cover - _canonical rejects everything else first
        raise TypeError(f"cannot render {type(obj).__name__}")


def canonical_json(obj) -> str:
    out: list[str] = []
    _render(_canonical(obj), out)
    return "".join(out)


def reports_document(reports: list[CheckReport]) -> list[dict]:
    """Schema-only view of the reports with runtimes zeroed for determinism."""
    docs = []
    for r in reports:
        d = {
            "check_id": r.check_id,
            "inputs": r.inputs,
            "lhs": r.lhs,
            "rhs": r.rhs,
            "tolerance": r.tolerance,
            "verdict": r.verdict,
            "runtime_ms": 0,
        }
        docs.append(d)
    return docs


def reports_json(reports: list[CheckReport]) -> str:
    return canonical_json(reports_document(reports)) + "\n"


def _scalar_csv(x) -> str:
    if isinstance(x, (complex, np.complexfloating)):
        z = complex(x)
        return f"{format_float(z.real)}{'+' if z.imag >= 0 else '-'}{format_float(abs(z.imag))}j"
    if isinstance(x, numbers.Integral):
        return str(int(x))
    return format_float(float(x))


def reports_csv(reports: list[CheckReport]) -> str:
    lines = ["check_id,lhs,rhs,tolerance,verdict"]
    for r in reports:
        lines.append(
            f"{r.check_id},{_scalar_csv(r.lhs)},{_scalar_csv(r.rhs)},"
            f"{format_float(r.tolerance)},{r.verdict}"
        )
    return "\n".join(lines) + "\n"


def reports_human(reports: list[CheckReport]) -> str:
    lines = []
    width = max(len(r.check_id) for r in reports) if reports else 0
    for r in reports:
        lines.append(
            f"{r.verdict.upper():8s} {r.check_id:<{width}s} "
            f"lhs={_scalar_csv(r.lhs)} rhs={_scalar_csv(r.rhs)} "
            f"tol={r.tolerance:g} [{r.runtime_ms} ms]"
        )
        if r.detail:
            lines.append(f"         {r.check_id:<{width}s} note: {r.detail}")
    counts = {}
    for r in reports:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
    lines.append(f"-- {len(reports)} checks: {summary}")
    return "\n".join(lines) + "\n"


def series_csv(f: TruncatedSeries) -> str:
    """Coefficient interchange format: one 'n,re,im' row per degree."""
    lines = ["n,re,im"]
    for n, c in enumerate(f.coeffs):
        lines.append(f"{n},{format_float(c.real)},{format_float(c.imag)}")
    return "\n".join(lines) + "\n"


def parse_series_csv(text: str) -> TruncatedSeries:
    """Parse 'n,re,im' rows (header and '#' comments optional)."""
    rows = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if parts[0].lower() == "n":
            continue
        if len(parts) != 3:
            raise ValueError(f"expected 'n,re,im' row, got {raw!r}")
        n = int(parts[0])
        if n < 0 or n in rows:
            raise ValueError(f"bad or duplicate degree in row {raw!r}")
        rows[n] = complex(float(parts[1]), float(parts[2]))
    if not rows:
        raise ValueError("no coefficient rows found")
    coeffs = np.zeros(max(rows) + 1, dtype=np.complex128)
    for n, c in rows.items():
        coeffs[n] = c
    return TruncatedSeries(coeffs)


def matrix_csv(entries: np.ndarray) -> str:
    """Dense dump 'm,n,re,im' in row-major order, 17 significant digits."""
    lines = ["m,n,re,im"]
    for m in range(entries.shape[0]):
        for n in range(entries.shape[1]):
            c = entries[m, n]
            lines.append(f"{m},{n},{format_float(c.real)},{format_float(c.imag)}")
    return "\n".join(lines) + "\n"
