"""
Command-line interface for tanglekit.

Usage:
    tanglekit count p32 --n 12 --method sum,rec,dp
    tanglekit table d --k 3 --ell 1,2,3 --n-max 10 --format csv
    tanglekit asym p32 --corrections 3 --fit-n 2000 --format json
    tanglekit bijection-check --n-max 5
    tanglekit render --diagram "n=4; arcs=(1,3)(2,4)" --out crossing.svg

Exit codes: 0 on success, 1 on a domain error or any FAIL line, 2 on a
usage error.
"""

import logging
from pathlib import Path
import sys
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import click

from .config import (
    DEFAULT_CORRECTIONS,
    DEFAULT_FIT_N,
    LOG_LEVEL,
    MAX_PARTITION_N,
    SUBEXP_NS,
    configure_logging,
)
from .counting.asymptotics import analyze, subexp_table
from .counting.formulas import f_k, p32_closed
from .counting.methods import CountTable, d_table, get_method_info, p32_table
from .counting.recurrence import evaluate, p32_recurrence, parse_recurrence
from .counting.walks import (
    BRAID_STEPS,
    PARTITION_STEPS,
    reflection_count,
    region_walks,
    vacillating_counts,
)
from .diagrams.bijections import diagram_to_tableau, tableau_to_diagram, theta, theta_inv
from .diagrams.model import DiagramClass, inflate, is_braid, is_two_regular, parse_diagram
from .diagrams.oracle import ClassSpec, crossing_number, enum_partitions, enum_tangled, oracle_count
from .diagrams.render import render as render_diagram
from .errors import TanglekitError
from .tables import FORMATS, emit_count_table, emit_expansion, emit_subexp

logger = logging.getLogger("tanglekit")

Check = Tuple[str, bool]

CLASS_NAMES = {c.value: c for c in DiagramClass}


def _int_list(ctx, param, value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got '{value}'")


def _name_list(ctx, param, value: Optional[str]) -> Optional[List[str]]:
    if value is None:
        return None
    return [v.strip() for v in value.split(",") if v.strip()]


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
        logger.info("Wrote %s", out)
    else:
        click.echo(text, nl=False)


def _report(checks: Iterable[Check]) -> int:
    failed = 0
    for label, ok in checks:
        click.echo(f"{'PASS' if ok else 'FAIL'} {label}")
        failed += not ok
    return 1 if failed else 0


format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True,
    help="Output format",
)
out_option = click.option("--out", type=click.Path(dir_okay=False), default=None,
                          help="Write output to this file instead of stdout")


class TanglekitGroup(click.Group):
    """Turns domain errors into ``error: ...`` on stderr and exit code 1."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except TanglekitError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(1)


@click.group(cls=TanglekitGroup)
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG")
def cli(verbose: int):
    """Exact counts, bijections and asymptotics for k-noncrossing tangled diagrams."""
    level = {0: LOG_LEVEL, 1: "INFO"}.get(verbose, "DEBUG")
    configure_logging(level)


@cli.command()
@click.argument("kind", type=click.Choice(["p32", "d", "matchings", "partitions"]))
@click.option("--n", "n", type=click.IntRange(min=1), default=None, help="Largest n (alias of --n-max)")
@click.option("--n-max", type=click.IntRange(min=1), default=None, help="Largest n")
@click.option("--ell", callback=_int_list, default="1,2,3", show_default=True)
@click.option("--k", type=click.IntRange(min=2), default=3, show_default=True)
@click.option("--method", callback=_name_list, default="rec", show_default=True,
              help="p32 methods: sum, rec, dp, oracle")
@format_option
@out_option
@click.pass_context
def count(ctx, kind, n, n_max, ell, k, method, fmt, out):
    """Exact counts, one column per method or parameter."""
    n_max = n_max or n or 12
    if kind == "p32":
        table = p32_table(n_max, method)
    elif kind == "d":
        table = d_table(ell, k, n_max)
    elif kind == "matchings":
        table = CountTable()
        for m in range(1, n_max + 1):
            table.set(f"f{k}", 2 * m, f_k(2 * m, k))
    else:
        table = CountTable()
        for m, value in enumerate(vacillating_counts(PARTITION_STEPS, k, n_max)[1:], start=1):
            table.set(f"k={k}", m, value)
    _emit(emit_count_table(table, fmt), out)
    if kind == "p32" and not table.agree():
        click.echo("FAIL p32 methods disagree", err=True)
        ctx.exit(1)


@cli.command()
@click.argument("kind", type=click.Choice(sorted(CLASS_NAMES)))
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--ell", type=click.IntRange(min=0), default=None)
@click.option("--k", type=click.IntRange(min=2), default=None)
@format_option
@out_option
def oracle(kind, n, ell, k, fmt, out):
    """Brute-force count of one diagram class."""
    class_spec = ClassSpec(CLASS_NAMES[kind], n, ell=ell, k=k)
    table = CountTable()
    table.set(kind, n, oracle_count(class_spec))
    _emit(emit_count_table(table, fmt), out)


def _bijection_checks(n_max: int, partition_n_max: int, theta_n_max: int) -> List[Check]:
    checks: List[Check] = []

    def battery(label: str, diagrams) -> None:
        round_trip = rows = True
        for d in diagrams:
            vt = diagram_to_tableau(d)
            round_trip &= tableau_to_diagram(vt) == d
            rows &= vt.max_rows == crossing_number(inflate(d))
        checks.append((f"{label} round trip", round_trip))
        checks.append((f"{label} max rows = crossing number", rows))

    for n in range(1, n_max + 1):
        battery(f"tangled n={n}", enum_tangled(n))
    for n in range(1, partition_n_max + 1):
        battery(f"partitions n={n}", enum_partitions(n))
    for n in range(2, theta_n_max + 1):
        ok = True
        for p in enum_partitions(n):
            if not is_two_regular(p):
                continue
            b = theta(p)
            ok &= is_braid(b) and theta_inv(b) == p
            ok &= all((i, j - 1) in b.arcs for i, j in p.arcs)
        checks.append((f"theta n={n} inverse and arc shift", ok))
    return checks


@cli.command("bijection-check")
@click.option("--n-max", type=click.IntRange(min=1, max=7), default=5, show_default=True,
              help="Largest n for all tangled diagrams")
@click.option("--partition-n-max", type=click.IntRange(min=1, max=MAX_PARTITION_N), default=8,
              show_default=True)
@click.option("--theta-n-max", type=click.IntRange(min=2, max=MAX_PARTITION_N), default=9,
              show_default=True)
@click.pass_context
def bijection_check(ctx, n_max, partition_n_max, theta_n_max):
    """Exhaustive round trips of the tableau bijection and the braid shift."""
    ctx.exit(_report(_bijection_checks(n_max, partition_n_max, theta_n_max)))


@cli.command("reflect-check")
@click.option("--n-max", type=click.IntRange(min=0), default=12, show_default=True,
              help="Largest number of step pairs")
@click.pass_context
def reflect_check(ctx, n_max):
    """Quadrant difference = constrained walks = braid shape DP = beta-sum."""
    dp = vacillating_counts(BRAID_STEPS, 3, n_max)
    checks = []
    for n in range(n_max + 1):
        values = (reflection_count(2 * n), region_walks(2 * n), dp[n], p32_closed(n))
        checks.append((f"2n={2 * n} walks={values[0]}", len(set(values)) == 1))
    ctx.exit(_report(checks))


def _recurrence_from_options(rec: Optional[str], seeds: Optional[str], offset: int, start: Optional[int]):
    if rec is None:
        return p32_recurrence()
    if not seeds:
        raise click.UsageError("--seeds is required with --rec")
    return parse_recurrence(rec, seeds, offset=offset, start=start)


rec_options = [
    click.option("--rec", default=None, help="Comma-separated coefficient polynomials in n"),
    click.option("--seeds", default=None, help="Comma-separated initial terms"),
    click.option("--offset", type=int, default=0, show_default=True),
    click.option("--start", type=int, default=None, help="Index of the first seed (default: offset)"),
]


def _with_rec_options(f: Callable) -> Callable:
    for option in reversed(rec_options):
        f = option(f)
    return f


@cli.command()
@_with_rec_options
@click.option("--n", "n", type=click.IntRange(min=1), default=12, show_default=True,
              help="Number of terms")
@format_option
@out_option
def recurrence(rec, seeds, offset, start, n, fmt, out):
    """Evaluate a P-recursive sequence (default: the p32 recurrence)."""
    recurrence_ = _recurrence_from_options(rec, seeds, offset, start)
    table = CountTable()
    for index, value in enumerate(evaluate(recurrence_, n), start=recurrence_.start):
        table.set("y", index, value)
    _emit(emit_count_table(table, fmt), out)


@cli.command()
@click.argument("kind", type=click.Choice(["p32", "custom"]), default="p32")
@_with_rec_options
@click.option("--corrections", type=click.IntRange(min=0), default=DEFAULT_CORRECTIONS, show_default=True)
@click.option("--fit-n", type=click.IntRange(min=1), default=DEFAULT_FIT_N, show_default=True)
@click.option("--table/--no-table", "with_table", default=False,
              help="Append the sub-exponential table")
@format_option
@out_option
def asym(kind, rec, seeds, offset, start, corrections, fit_n, with_table, fmt, out):
    """Growth rate, exponent, correction terms and fitted constant."""
    if kind == "custom" and rec is None:
        raise click.UsageError("asym custom needs --rec and --seeds")
    recurrence_ = _recurrence_from_options(rec if kind == "custom" else None, seeds, offset, start)
    ns = list(SUBEXP_NS) if with_table else []
    horizon = max([fit_n] + ns)
    seq = evaluate(recurrence_, horizon + recurrence_.offset - recurrence_.start + 1)
    expansion = analyze(recurrence_, corrections=corrections, seq=seq, fit_n=fit_n)
    rows = subexp_table(ns, seq, expansion) if with_table else None
    _emit(emit_expansion(expansion, rows, fmt), out)


@cli.command()
@click.argument("name", type=click.Choice(["p", "d", "subexp"]))
@click.option("--n-max", type=click.IntRange(min=1), default=None)
@click.option("--ell", callback=_int_list, default="1,2,3", show_default=True)
@click.option("--k", type=click.IntRange(min=2), default=3, show_default=True)
@click.option("--method", callback=_name_list, default="sum,rec,dp,oracle", show_default=True)
@click.option("--ns", callback=_int_list, default=None, help="Rows of the sub-exponential table")
@click.option("--fit-n", type=click.IntRange(min=1), default=DEFAULT_FIT_N, show_default=True)
@format_option
@out_option
@click.pass_context
def table(ctx, name, n_max, ell, k, method, ns, fit_n, fmt, out):
    """Reproduce the p-table, the d-table or the sub-exponential table."""
    if name == "p":
        result = p32_table(n_max or 12, method)
        _emit(emit_count_table(result, fmt), out)
        if not result.agree():
            click.echo("FAIL p32 methods disagree", err=True)
            ctx.exit(1)
    elif name == "d":
        _emit(emit_count_table(d_table(ell, k, n_max or 10), fmt), out)
    else:
        rows_n = ns or list(SUBEXP_NS)
        rec = p32_recurrence()
        seq = evaluate(rec, max(rows_n + [fit_n]) + 1)
        expansion = analyze(rec, seq=seq, fit_n=fit_n)
        _emit(emit_subexp(subexp_table(rows_n, seq, expansion), fmt), out)


@cli.command()
@click.option("--diagram", "literal", required=True, help='Literal such as "n=4; arcs=(1,3)(2,4); crossed="')
@click.option("--out", type=click.Path(dir_okay=False), required=True)
def render(literal, out):
    """Write a diagram as SVG."""
    d = parse_diagram(literal)
    render_diagram(d, out)
    click.echo(out)


@cli.command()
@click.option("--n-max", type=click.IntRange(min=1), default=12, show_default=True)
def methods(n_max):
    """List the available p32 counting methods."""
    info = get_method_info(n_max)
    click.echo(f"best: {info['best_method']}")
    click.echo(f"available: {', '.join(info['available_methods'])}")


def run(argv: Sequence[str]) -> int:
    """Run the command line on ``argv`` and return the exit code."""
    try:
        result = cli.main(args=list(argv), prog_name="tanglekit", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
