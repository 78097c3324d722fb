"""Report objects and CSV emission with the fixed project-wide schema.

Every experiment reduces to rows ``theta, grid_point, empirical, target,
abs_error, sup_error`` and a list of named pass/fail checks.  The CSV
embeds the originating config and effective seed as ``#`` header comments
and the check verdicts as trailing comments; all formatting is
deterministic, so identical configs and seeds give byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["Row", "Check", "Report", "format_value", "write_csv"]

COLUMNS = ("theta", "grid_point", "empirical", "target",
           "abs_error", "sup_error")


@dataclass(frozen=True)
class Row:
    """One tabulated comparison point."""

    theta: float
    grid_point: object
    empirical: object
    target: object
    abs_error: float
    sup_error: float


@dataclass(frozen=True)
class Check:
    """A named threshold verdict."""

    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    """Everything a CLI run produces besides its exit code."""

    kind: str
    seed: int
    samples: object = None
    rows: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    config_text: str = ""

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def add_rows(self, theta, grid_points, empirical, target, sup_error):
        """Append one theta-group of comparison rows."""
        empirical = np.asarray(empirical)
        target = np.asarray(target)
        for i, point in enumerate(grid_points):
            err = float(np.abs(empirical[i] - target[i]))
            self.rows.append(Row(float(theta), point, empirical[i],
                                 target[i], err, float(sup_error)))


def format_value(value):
    """Deterministic CSV text for floats, complex values, and vectors."""
    if isinstance(value, str):
        return value
    if isinstance(value, (complex, np.complexfloating)):
        z = complex(value)
        sign = "+" if z.imag >= 0 or z.imag != z.imag else "-"
        return f"{z.real!r}{sign}{abs(z.imag)!r}j"
    if isinstance(value, (tuple, list, np.ndarray)):
        return ";".join(repr(float(v)) for v in np.asarray(value).ravel())
    return repr(float(value))


def write_csv(report, path):
    """Write the report to ``path`` under the fixed column schema."""
    lines = [f"# phimix {report.kind} report",
             f"# seed = {report.seed}"]
    if report.samples is not None:
        lines.append(f"# samples = {report.samples}")
    if report.config_text:
        lines.append("# config:")
        for raw in report.config_text.rstrip("\n").split("\n"):
            lines.append(f"#   {raw}")
    lines.append(",".join(COLUMNS))
    for row in report.rows:
        lines.append(",".join((
            format_value(row.theta),
            format_value(row.grid_point),
            format_value(row.empirical),
            format_value(row.target),
            format_value(row.abs_error),
            format_value(row.sup_error),
        )))
    for check in report.checks:
        verdict = "pass" if check.passed else "FAIL"
        detail = f" ({check.detail})" if check.detail else ""
        lines.append(f"# check: {check.name} = {verdict}{detail}")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")
