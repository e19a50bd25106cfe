# -*- coding: utf-8 -*-
"""JSON output for automation."""

import json
from pathlib import Path

from bicell.schemas import PolyReport


def render_json(report: PolyReport) -> str:
    """Render a report as JSON; rationals stay exact as numerator/denominator strings."""
    return json.dumps(report.model_dump(mode="json"), indent=2, ensure_ascii=False)


def parse_json_report(text: str) -> PolyReport:
    """Parse JSON produced by :func:`render_json` back into a PolyReport.

    Raises:
        pydantic.ValidationError: If the JSON does not match the schema.
    """
    return PolyReport.model_validate_json(text)


def write_json_report(report: PolyReport, output_path: Path) -> None:
    """Write a report to disk and check it reads back to the same polynomial.

    Args:
        report: Report to write.
        output_path: Destination file; parent directories are created.
    """
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with output_path.open("w", encoding="utf-8") as f:
        f.write(render_json(report))

    with output_path.open("r", encoding="utf-8") as f:
        loaded = parse_json_report(f.read())

    assert loaded.to_polynomial() == report.to_polynomial()
