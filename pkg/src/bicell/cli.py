# -*- coding: utf-8 -*-
"""CLI entrypoint for the bicellular map engine."""

import logging
import sys
import time
from pathlib import Path

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.text import Text

from bicell import config
from bicell.bicellular import (
    BicellularInstance,
    GenusParityError,
    genus_distribution,
    poly_closed,
    poly_connected,
)
from bicell.census import build_census
from bicell.charlib import mn_character
from bicell.charsum import poly_charsum
from bicell.json_output import render_json, write_json_report
from bicell.oracle import OracleGuardError, oracle_poly
from bicell.parsing import PartitionParseError, parse_partition
from bicell.reporting import (
    census_row_values,
    format_verify_line,
    poly_report_row,
    print_poly_report,
    summarize_verify,
    write_csv,
)
from bicell.schemas import CheckStatus, Method, PolyChecks, PolyReport
from bicell.verify import SUITES, run_suites
from bicell.zeros import imaginary_axis_check, log_concavity_check

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_BAD_INPUT = 2
EXIT_GUARD = 3
EXIT_IO = 4

console = Console()
err_console = Console(stderr=True)

STATUS_STYLES = {
    CheckStatus.PASS: "green",
    CheckStatus.FAIL: "red",
    CheckStatus.SKIPPED: "yellow",
}


def _fail(message: str, code: int) -> None:
    err_console.print(f"[bold red]Error:[/bold red] {message}")
    sys.exit(code)


@click.group()
@click.option(
    "--threads",
    type=int,
    default=None,
    help="Worker processes (0 = one per CPU; default from BICELL_THREADS)",
)
@click.option("--verbose", is_flag=True, default=False, help="Log engine progress to stderr")
@click.pass_context
def cli(ctx: click.Context, threads: int | None, verbose: bool) -> None:
    """Genus distributions of two-face maps, computed exactly."""
    ctx.ensure_object(dict)
    ctx.obj["threads"] = threads
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(message)s",
            handlers=[RichHandler(console=err_console, show_path=False)],
            force=True,
        )


def _threads(ctx: click.Context) -> int:
    return config.resolve_threads(ctx.obj.get("threads"))


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Number of edges")
@click.option("--p", "p", type=int, required=True, help="Length of one face (the other is n-p)")
@click.option("--mu", required=True, help="White vertex degrees, e.g. '3,2' or '2^3,1'")
@click.option(
    "--method",
    type=click.Choice([m.value for m in Method]),
    default=Method.CLOSED.value,
    show_default=True,
    help="Closed form, character sum, or brute force",
)
@click.option("--connected", is_flag=True, default=False, help="Count connected maps only")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json", "csv"]),
    default="text",
    show_default=True,
)
@click.option(
    "--max-class-size",
    type=int,
    default=None,
    help="Oracle guard on |C_mu| (default from BICELL_MAX_CLASS_SIZE)",
)
@click.option(
    "--json-out",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also save the report as JSON to this file",
)
@click.pass_context
def poly(
    ctx: click.Context,
    n: int,
    p: int,
    mu: str,
    method: str,
    connected: bool,
    output_format: str,
    max_class_size: int | None,
    json_out: Path | None,
) -> None:
    """Compute the genus distribution polynomial P_{[p,n-p],mu}(x).

    Example:
        bicell poly --n 5 --p 2 --mu 5
    """
    try:
        partition = parse_partition(mu, n)
        inst = BicellularInstance(n, p, partition)
    except (PartitionParseError, ValueError) as e:
        _fail(str(e), EXIT_BAD_INPUT)
        return

    chosen = Method(method)
    if chosen is Method.CLOSED and not inst.closed_form_valid:
        err_console.print(
            f"[yellow]Warning: min(mu)={inst.mu.min_part} <= p={inst.p} is outside the closed "
            "form; falling back to the character sum[/yellow]"
        )
        chosen = Method.CHARSUM
    if connected and chosen is Method.CHARSUM and not inst.closed_form_valid:
        _fail(
            "--connected with the character sum needs min(mu) >= p+1; use --method oracle",
            EXIT_BAD_INPUT,
        )
        return

    try:
        started = time.perf_counter()
        if chosen is Method.CLOSED:
            result = poly_connected(inst) if connected else poly_closed(inst)
        elif chosen is Method.CHARSUM:
            result = poly_charsum(inst.n, inst.face_type, inst.mu)
        else:
            result = oracle_poly(
                inst.n,
                inst.face_type,
                inst.mu,
                connected_only=connected,
                max_class_size=max_class_size,
                threads=_threads(ctx),
            )
        try:
            genus_counts = genus_distribution(inst, result, connected=connected).counts
        except GenusParityError:
            genus_counts = {}
            err_console.print(
                "[yellow]Warning: some maps are disconnected; genus table omitted "
                "(use --connected with --method oracle)[/yellow]"
            )
        checks = None
        if not result.is_zero():
            checks = PolyChecks(
                imag_axis=imaginary_axis_check(result), log_concave=log_concavity_check(result)
            )
        elapsed = round((time.perf_counter() - started) * 1000)
    except OracleGuardError as e:
        _fail(f"{e} (raise --max-class-size or use --method closed/charsum)", EXIT_GUARD)
        return
    except KeyboardInterrupt:
        err_console.print("\n[yellow]Interrupted by user[/yellow]")
        sys.exit(EXIT_INTERNAL)
    except Exception as e:
        _fail(str(e), EXIT_INTERNAL)
        return

    report = PolyReport(
        n=inst.n,
        p=inst.p,
        mu=list(inst.mu.parts),
        method=chosen,
        connected=connected,
        coeffs=PolyReport.coefficients_of(result),
        genus={str(g): str(count) for g, count in genus_counts.items()},
        checks=checks,
        ms=elapsed,
    )
    if output_format == "json":
        click.echo(render_json(report))
    elif output_format == "csv":
        write_csv(sys.stdout, [poly_report_row(report)])
    else:
        print_poly_report(console, report)

    if json_out is not None:
        try:
            write_json_report(report, json_out)
        except OSError as e:
            _fail(f"Cannot write {json_out}: {e}", EXIT_IO)
            return
        err_console.print(f"[green][OK] Report saved to {json_out}[/green]")


@cli.command()
@click.option("--max-n", type=int, default=8, show_default=True, help="Largest n checked")
@click.option(
    "--suite",
    type=click.Choice([*SUITES, "all"]),
    default="all",
    show_default=True,
)
@click.pass_context
def verify(ctx: click.Context, max_n: int, suite: str) -> None:
    """Cross-check closed forms, character sums and brute force.

    Exits 0 iff no check fails; checks skipped by the oracle guard do not count.
    """
    try:
        records = run_suites(suite, max_n, threads=_threads(ctx))
    except KeyboardInterrupt:
        err_console.print("\n[yellow]Interrupted by user[/yellow]")
        sys.exit(EXIT_INTERNAL)
    except Exception as e:
        _fail(str(e), EXIT_INTERNAL)
        return

    for record in records:
        style = STATUS_STYLES[record.status]
        console.print(Text(format_verify_line(record), style=style), soft_wrap=True)
    summary = summarize_verify(records)
    console.print(
        f"\n[bold]{len(records)} checks:[/bold] {summary['PASS']} passed, "
        f"{summary['FAIL']} failed, {summary['SKIPPED']} skipped"
    )
    if any(record.status is CheckStatus.FAIL for record in records):
        sys.exit(EXIT_INTERNAL)


@cli.command("char")
@click.option("--lambda", "lambda_", required=True, help="Irreducible character label, e.g. 2,1")
@click.option("--mu", required=True, help="Cycle-type of the class, e.g. 3")
def char(lambda_: str, mu: str) -> None:
    """Print the character value chi^lambda(mu)."""
    try:
        lam = parse_partition(lambda_)
        cycle_type = parse_partition(mu)
        value = mn_character(lam, cycle_type)
    except (PartitionParseError, ValueError) as e:
        _fail(str(e), EXIT_BAD_INPUT)
        return
    click.echo(str(value))


@cli.command()
@click.option("--max-n", type=int, required=True, help="Largest n tabulated")
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path, allow_dash=True),
    default="-",
    show_default=True,
    help="CSV destination ('-' for standard output)",
)
@click.option("--timings", is_flag=True, default=False, help="Fill the ms column")
@click.pass_context
def census(ctx: click.Context, max_n: int, out: Path, timings: bool) -> None:
    """Tabulate every closed-form instance with n <= max-n as CSV."""
    try:
        rows = build_census(max_n, threads=_threads(ctx), timings=timings)
    except KeyboardInterrupt:
        err_console.print("\n[yellow]Interrupted by user[/yellow]")
        sys.exit(EXIT_INTERNAL)
    except Exception as e:
        _fail(str(e), EXIT_INTERNAL)
        return

    values = [census_row_values(row) for row in rows]
    if str(out) == "-":
        write_csv(sys.stdout, values)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as f:
            write_csv(f, values)
    except OSError as e:
        _fail(f"Cannot write {out}: {e}", EXIT_IO)
        return
    err_console.print(f"[green][OK] {len(rows)} rows written to {out}[/green]")


def main() -> None:
    """Main CLI entrypoint."""
    cli()


if __name__ == "__main__":
    main()
