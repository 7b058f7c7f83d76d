"""Tabular output: column formats, CSV and markdown rendering."""

from __future__ import annotations

import csv
import io
from collections.abc import Sequence
from dataclasses import dataclass, field

from .scenario import FeasibilityRow

# Column kinds: text, int, usd, 2dp, 3dp, 4dp, pct (fraction shown as percent, 1 dp), g
FEASIBILITY_COLUMNS = [
    ("helicopter", "text"), ("condition", "text"), ("species", "text"), ("scenario", "text"),
    ("distance_km", "g"), ("investment", "usd"), ("annual_revenue", "usd"), ("annual_cost", "usd"),
    ("npv", "usd"), ("irr", "pct"), ("payback", "int"), ("verdict", "text"), ("flags", "text"),
]


def format_cell(value, kind: str) -> str:
    if value is None:
        return ""
    if kind == "usd" or kind == "2dp":
        return f"{value:.2f}"
    if kind == "3dp":
        return f"{value:.3f}"
    if kind == "4dp":
        return f"{value:.4f}"
    if kind == "pct":
        return f"{value * 100:.1f}"
    if kind == "int":
        return str(int(value))
    if kind == "g":
        return f"{value:g}"
    if isinstance(value, (tuple, list)):
        return "; ".join(map(str, value))
    return str(getattr(value, "value", value))


@dataclass
class Table:
    name: str
    title: str
    columns: list[tuple[str, str]]
    rows: list[Sequence] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def header(self) -> list[str]:
        return [c for c, _ in self.columns]

    def formatted(self) -> list[list[str]]:
        return [[format_cell(v, kind) for v, (_, kind) in zip(row, self.columns)] for row in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.formatted())
        return buf.getvalue()

    def to_markdown(self) -> str:
        lines = [f"### {self.title}", ""] if self.title else []
        lines.append("| " + " | ".join(self.header) + " |")
        lines.append("|" + "|".join("---" for _ in self.columns) + "|")
        for row in self.formatted():
            lines.append("| " + " | ".join(cell or "-" for cell in row) + " |")
        lines.extend(f"\n{note}" for note in self.notes)
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_markdown() if fmt == "markdown" else self.to_csv()


def feasibility_table(rows: list[FeasibilityRow], name: str = "feasibility", title: str = "") -> Table:
    return Table(
        name, title, FEASIBILITY_COLUMNS,
        [[getattr(r, c) for c, _ in FEASIBILITY_COLUMNS] for r in rows],
    )
