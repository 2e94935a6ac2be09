"""Command-line interface: analyze targets, list the catalog, verify the paper.

`analyze` runs the full pipeline for one catalog name or group file at
one or more primes; with `--report` the structured text goes to the
given path, a tab-separated summary to the same path with a .tsv
suffix, and character-degree figures to PNG files in the same
directory.  `verify-paper` reruns the counterexample reproduction and
the invariant suite over the whole catalog.  Exit status is 0 only if
every verdict is consistent; capacity problems are recorded per target
unless `--strict` makes them fatal.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import __version__
from .catalog import CATALOG, build_catalog_entry
from .group import CapacityError, PermGroup
from .groupfile import load_group_file
from .report import TargetReport, analyze_target, render_figures, render_text, render_tsv


@click.group()
@click.version_option(__version__)
def main():
    """Exact p-block analysis of finite permutation groups."""


def _resolve_target(spec: str) -> tuple[str, PermGroup, tuple[int, ...]]:
    """Catalog name or group-file path -> (name, group, default primes)."""
    if spec in CATALOG:
        return spec, build_catalog_entry(spec), CATALOG[spec].primes
    path = Path(spec)
    if path.exists():
        gf = load_group_file(path)
        G = gf.build()
        primes = tuple(sorted({q for q, _ in _factor(G.order)}))
        return gf.name, G, primes
    raise click.ClickException(
        f"{spec!r} is neither a catalog name nor an existing file; "
        "see `blocklab catalog list`"
    )


def _factor(n: int):
    q = 2
    while q * q <= n:
        k = 0
        while n % q == 0:
            n //= q
            k += 1
        if k:
            yield q, k
        q += 1
    if n > 1:
        yield n, 1


def _emit(reports: list[TargetReport], report_path: str | None, timing: bool) -> None:
    text = render_text(reports, include_timing=timing)
    if report_path is None:
        click.echo(text)
        return
    path = Path(report_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    tsv_path = path.with_suffix(path.suffix + ".tsv")
    tsv_path.write_text(render_tsv(reports))
    figures = render_figures(reports, path.parent)
    click.echo(f"report written to {path}")
    click.echo(f"summary written to {tsv_path}")
    for f in figures:
        click.echo(f"figure written to {f}")


def _exit_status(reports: list[TargetReport], strict: bool) -> int:
    status = 0
    for rep in reports:
        if rep.error:
            click.echo(f"capacity: {rep.name} p={rep.prime}: {rep.error}", err=True)
            if strict:
                status = max(status, 2)
        for blk in rep.blocks:
            if blk.verdict.consistent is False:
                click.echo(
                    f"INCONSISTENT VERDICT: {rep.name} p={rep.prime} "
                    f"block {blk.index} (this indicates a bug; the theorem is proved)",
                    err=True,
                )
                status = 1
            if blk.verdict.consistent is None and strict:
                status = max(status, 2)
    return status


@main.command()
@click.argument("target")
@click.option("--prime", "-p", "primes", type=int, multiple=True,
              help="Prime(s) to analyze; defaults to the catalog entry's primes "
                   "or the prime divisors of the group order.")
@click.option("--report", "report_path", type=click.Path(), default=None,
              help="Write the text report here, a .tsv summary and degree "
                   "figures alongside it.")
@click.option("--fusion-cap", type=int, default=None,
              help="Override the subgroup-enumeration cap for fusion systems.")
@click.option("--strict", is_flag=True,
              help="Treat capacity fallbacks and partial verdicts as errors.")
@click.option("--timing", is_flag=True,
              help="Include wall-clock timing in the text report "
                   "(breaks byte-identical reproducibility).")
def analyze(target, primes, report_path, fusion_cap, strict, timing):
    """Analyze a catalog group or group file at one or more primes."""
    name, G, default_primes = _resolve_target(target)
    primes = tuple(primes) or default_primes
    if not primes:
        raise click.ClickException("no prime given and none could be inferred")
    reports = []
    table = None
    for p in sorted(set(primes)):
        try:
            if table is None:
                from .chartab import character_table

                table = character_table(G)
            rep = analyze_target(G, name, p, fusion_cap=fusion_cap, table=table)
        except CapacityError as exc:
            rep = TargetReport(
                name=name, degree=G.degree, order=G.order, prime=p,
                class_count=0, conductor=0, reduction_map="", error=str(exc),
            )
        reports.append(rep)
    _emit(reports, report_path, timing)
    sys.exit(_exit_status(reports, strict))


@main.group()
def catalog():
    """Inspect the built-in group catalog."""


@catalog.command("list")
def catalog_list():
    """List catalog entries with their orders and default primes."""
    click.echo(f"{'name':<12} {'order':>8}  {'primes':<7} description")
    for entry in CATALOG.values():
        primes = ",".join(str(q) for q in entry.primes)
        click.echo(
            f"{entry.name:<12} {entry.order:>8}  {primes:<7} {entry.description}"
        )


@main.command("verify-paper")
@click.option("--report", "report_path", type=click.Path(), default=None,
              help="Write the batch report here (plus .tsv and figures).")
@click.option("--fusion-cap", type=int, default=None)
@click.option("--strict", is_flag=True)
@click.option("--skip-large", is_flag=True,
              help="Skip the order-34992 counterexample reproduction "
                   "(for quick smoke runs only).")
def verify_paper(report_path, fusion_cap, strict, skip_large):
    """Reproduce the counterexample and run the invariant suite."""
    from .verdicts import conjecture12_surrogate, remark14_reproduction

    reports: list[TargetReport] = []
    failures = []
    for entry in CATALOG.values():
        if entry.name == "remark14":
            continue
        G = build_catalog_entry(entry.name)
        for p in entry.primes:
            try:
                reports.append(
                    analyze_target(G, entry.name, p, fusion_cap=fusion_cap)
                )
            except CapacityError as exc:
                reports.append(TargetReport(
                    name=entry.name, degree=G.degree, order=G.order, prime=p,
                    class_count=0, conductor=0, reduction_map="", error=str(exc),
                ))
        if G.derived_series_reaches_trivial():
            for p in entry.primes:
                r = conjecture12_surrogate(G, p, entry.name)
                if not r["biconditional_holds"]:
                    failures.append(f"surrogate biconditional failed: {entry.name} p={p}")

    verdict_count = sum(len(rep.blocks) for rep in reports)
    click.echo(f"catalog invariant suite: {verdict_count} verdicts")
    if verdict_count < 20:
        failures.append(f"only {verdict_count} verdicts (need >= 20)")

    if not skip_large:
        click.echo("reproducing the order-34992 counterexample ...")
        rep14 = remark14_reproduction()
        click.echo(
            f"  order {rep14['order']}, unique 3-block, "
            f"m = {rep14['m']} = {rep14['m_factorization']}, "
            f"|P:P'| = {rep14['P_abelianization_index']}, "
            f"divides: {rep14['divides']}"
        )

    if report_path is not None:
        _emit(reports, report_path, timing=False)
    status = _exit_status(reports, strict)
    for f in failures:
        click.echo(f"FAILURE: {f}", err=True)
        status = 1
    click.echo("verify-paper: " + ("PASS" if status == 0 else "FAIL"))
    sys.exit(status)


if __name__ == "__main__":
    main()
