# -*- coding: utf-8 -*-
"""Human-readable and CSV renderings of reports."""

import csv
from collections.abc import Iterable, Mapping
from typing import TextIO

from rich.console import Console
from rich.table import Table

from bicell.schemas import CensusRow, CheckStatus, PolyReport, VerifyRecord

CENSUS_HEADER = ["n", "p", "mu", "poly", "genus_counts", "imag_axis", "log_concave", "method", "ms"]


def format_genus_counts(counts: Mapping[int, int]) -> str:
    """Format genus counts as ``g:count`` pairs in increasing genus, e.g. ``0:6;1:18``."""
    return ";".join(f"{g}:{count}" for g, count in sorted(counts.items()))


def format_mu(mu: Iterable[int]) -> str:
    return "(" + ",".join(str(part) for part in mu) + ")"


def _flag(value: bool) -> str:
    return "true" if value else "false"


def print_poly_report(console: Console, report: PolyReport) -> None:
    """Print a polynomial report with its genus table."""
    poly = report.to_polynomial()
    title = f"n={report.n}, faces=[{report.p},{report.n - report.p}], mu={format_mu(report.mu)}"
    console.print(f"[bold blue]{title}[/bold blue]")
    suffix = " (connected only)" if report.connected else ""
    console.print(f"[dim]method: {report.method.value}{suffix}[/dim]")
    console.print(f"P(x) = {poly}")

    genus_counts = report.genus_counts()
    if genus_counts:
        table = Table(title="Genus distribution")
        table.add_column("genus", justify="right")
        table.add_column("maps", justify="right")
        for g, count in sorted(genus_counts.items()):
            table.add_row(str(g), str(count))
        console.print(table)

    if report.checks is not None:
        console.print(f"imaginary-axis zeros: {_flag(report.checks.imag_axis)}")
        console.print(f"log-concave: {_flag(report.checks.log_concave)}")
    if report.ms is not None:
        console.print(f"[dim]{report.ms} ms[/dim]")


def poly_report_row(report: PolyReport) -> list[str]:
    """CSV row for a single polynomial report, columns as in CENSUS_HEADER."""
    checks = report.checks
    return [
        str(report.n),
        str(report.p),
        format_mu(report.mu),
        str(report.to_polynomial()),
        format_genus_counts(report.genus_counts()),
        _flag(checks.imag_axis) if checks else "",
        _flag(checks.log_concave) if checks else "",
        report.method.value,
        "" if report.ms is None else str(report.ms),
    ]


def census_row_values(row: CensusRow) -> list[str]:
    return [
        str(row.n),
        str(row.p),
        row.mu,
        row.poly,
        row.genus_counts,
        _flag(row.imag_axis),
        _flag(row.log_concave),
        row.method.value,
        "" if row.ms is None else str(row.ms),
    ]


def write_csv(stream: TextIO, rows: Iterable[list[str]]) -> None:
    """Write the header and rows with Unix line endings."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CENSUS_HEADER)
    writer.writerows(rows)


def format_verify_line(record: VerifyRecord) -> str:
    """One line per record; FAIL lines carry the counterexample as JSON."""
    line = f"{record.status.value} {record.suite} {record.instance}"
    if record.detail:
        line += f" - {record.detail}"
    if record.status is CheckStatus.FAIL and record.counterexample is not None:
        line += " " + record.counterexample.model_dump_json(exclude_none=True)
    return line


def summarize_verify(records: list[VerifyRecord]) -> dict[str, int]:
    """Count records per status."""
    summary = {status.value: 0 for status in CheckStatus}
    for record in records:
        summary[record.status.value] += 1
    return summary
