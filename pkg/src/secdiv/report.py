"""Rendering of command results as text tables, JSON or LaTeX."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from secdiv.arith import fmt

TEXT_SYMBOLS = {
    "theta": "θ",
    "x": "x",
    "lambda": "λ",
    "psi": "ψ",
    "psi_sum": "Σψ_i",
    "delta_irr": "δ_irr",
}
LATEX_SYMBOLS = {
    "theta": r"\theta",
    "x": "x",
    "lambda": r"\lambda",
    "psi": r"\psi",
    "psi_sum": r"\sum_{i} \psi_i",
    "delta_irr": r"\delta_{\rm irr}",
}


def _symbol(name: str, latex: bool) -> str:
    table = LATEX_SYMBOLS if latex else TEXT_SYMBOLS
    if name in table:
        return table[name]
    if name.startswith("delta_"):
        sub = name[len("delta_") :]
        return rf"\delta_{{{sub}}}" if latex else f"δ_{{{sub}}}" if ":" in sub else f"δ_{sub}"
    return name


def _coeff(value: Fraction, latex: bool) -> str:
    value = abs(Fraction(value))
    if value == 1:
        return ""
    if latex and value.denominator != 1:
        return rf"\frac{{{value.numerator}}}{{{value.denominator}}}"
    return fmt(value)


def render_class(terms: list[tuple[str, Fraction]], latex: bool = False) -> str:
    """Render a linear combination, e.g. ``5θ − 10x``."""
    minus = "-" if latex else "−"
    out = ""
    for name, value in terms:
        value = Fraction(value)
        if value == 0:
            continue
        sym = _symbol(name, latex)
        c = _coeff(value, latex)
        body = f"{c} {sym}" if latex and c else f"{c}{sym}"
        if not out:
            out = (minus if value < 0 else "") + body
        else:
            out += f" {minus if value < 0 else '+'} {body}"
    return out or "0"


def jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return fmt(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def document(command: str, inputs: dict, results: dict, provenance: list[str]) -> dict:
    return {
        "command": command,
        "inputs": jsonable(inputs),
        "results": jsonable(results),
        "provenance": list(provenance),
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _flatten(prefix: str, value: Any, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, rows)
    elif isinstance(value, list):
        rows.append((prefix, ", ".join(str(v) for v in value)))
    else:
        rows.append((prefix, str(value)))


def to_table(doc: dict) -> str:
    rows: list[tuple[str, str]] = []
    _flatten("", doc["results"], rows)
    if not rows:
        return f"{doc['command']}: (no results)\n"
    width = max(len(k) for k, _ in rows)
    lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
    return "\n".join(lines) + "\n"


def grid(header: list[str], body: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in body)) if body else len(h) for i, h in enumerate(header)]
    line = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()  # noqa: E731
    out = [line(header), line(["-" * w for w in widths])]
    out += [line(r) for r in body]
    return "\n".join(out) + "\n"


def latex_tabular(header: list[str], body: list[list[str]]) -> str:
    cols = "l" * len(header)
    out = [rf"\begin{{tabular}}{{{cols}}}", " & ".join(header) + r" \\", r"\hline"]
    out += [" & ".join(r) + r" \\" for r in body]
    out.append(r"\end{tabular}")
    return "\n".join(out) + "\n"
