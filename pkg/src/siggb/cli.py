"""Command line: ``siggb compute`` and ``siggb table``."""
from __future__ import annotations

import logging
import sys

import click

from .bench import (DEFAULT_PAIR_CEILING, resolve_system, run_benchmark, run_one,
                    write_csv)
from .engine import EngineTimeout, PairCeilingExceeded
from .systems import ParseError, render_poly

STRATEGIES = ["f5", "f5p", "ggv", "arri", "minmon", "none", "buchberger"]

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_TIMEOUT = 0, 2, 3, 4


@click.group()
@click.option("-v", "--verbose", count=True)
def main(verbose):
    """Signature-based Groebner bases over prime fields."""
    level = logging.WARNING - 10 * verbose
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@main.command()
@click.option("--system", "system", required=True,
              help="katsuraN, cyclicN, ecoN, toy or a .poly file")
@click.option("--strategy", type=click.Choice(STRATEGIES), default="arri",
              show_default=True)
@click.option("--verify", is_flag=True, help="compare against Buchberger")
@click.option("--certify", "certify_run", is_flag=True,
              help="track cofactors and check every signature")
@click.option("--no-redundancy-check", is_flag=True,
              help="skip the redundancy gate (pair ceiling applies)")
@click.option("--tail-reduce", is_flag=True)
@click.option("--stats", "stats_path", type=click.Path(dir_okay=False),
              help="write a CSV row")
@click.option("--timeout", type=float, default=None, help="seconds")
@click.option("--max-pairs", type=int, default=None)
@click.option("--order", type=click.Choice(["degrevlex"]), default="degrevlex")
@click.option("--char", "char", type=int, default=32003, show_default=True)
@click.option("--print-basis", is_flag=True)
def compute(system, strategy, verify, certify_run, no_redundancy_check,
            tail_reduce, stats_path, timeout, max_pairs, order, char, print_basis):
    """Compute a reduced Groebner basis of one system."""
    try:
        spec = resolve_system(system, char)
    except ParseError as e:
        click.echo(f"parse error: {e}", err=True)
        sys.exit(EXIT_PARSE)
    except (ValueError, OSError) as e:
        click.echo(f"cannot load system: {e}", err=True)
        sys.exit(EXIT_PARSE)
    try:
        out = run_one(spec, strategy, verify=verify, certify_run=certify_run,
                      use_redundancy_check=not no_redundancy_check,
                      tail_reduce=tail_reduce, timeout=timeout, max_pairs=max_pairs)
    except EngineTimeout:
        click.echo(f"timeout after {timeout}s", err=True)
        sys.exit(EXIT_TIMEOUT)
    except PairCeilingExceeded as e:
        click.echo(f"aborted: {e}", err=True)
        sys.exit(EXIT_TIMEOUT)
    s = out.stats
    click.echo(f"{s.system} {s.strategy}: pairs={s.pairs_reduced} "
               f"zero={s.zero_reductions} basis={s.basis_size} "
               f"skipped={s.skipped_inputs} time={s.time_ms:.0f}ms")
    if print_basis:
        for g in out.basis:
            click.echo(render_poly(g))
    if stats_path:
        write_csv([s], stats_path)
    failed = False
    if out.verified is not None:
        click.echo(f"verify: {'ok' if out.verified else 'MISMATCH'}")
        failed |= not out.verified
    if out.certified is not None:
        click.echo(f"certify: {'ok' if out.certified else 'FAILED'}")
        failed |= not out.certified
    sys.exit(EXIT_VERIFY if failed else EXIT_OK)


@main.command()
@click.option("--system", "systems", multiple=True, required=True)
@click.option("--strategy", "strategies", multiple=True,
              type=click.Choice(STRATEGIES), default=("f5", "ggv", "arri"))
@click.option("--stats", "stats_path", type=click.Path(dir_okay=False))
@click.option("--char", "char", type=int, default=32003)
def table(systems, strategies, stats_path, char):
    """Pair counts for several systems and strategies, as a table."""
    rows = run_benchmark(systems, strategies, char)
    w = max(len(r.system) for r in rows)
    for r in rows:
        click.echo(f"{r.system:<{w}}  {r.strategy:<10} {r.pairs_reduced:>7};"
                   f"{r.zero_reductions:<6} {r.time_ms / 1e3:8.2f}s")
    if stats_path:
        write_csv(rows, stats_path)


if __name__ == "__main__":  # pragma: no cover
    main()
