"""
notemap command line interface
"""

import functools
import sys
from pathlib import Path
from typing import List, Optional

import click
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from . import __version__
from .core.errors import NotemapError
from .core.harness import VerificationHarness
from .core.models import CaseStatus, FunctionAlgorithm, HarnessReport, NoteSet, Score
from .io import build_score, check_score, export_json, export_midi, import_json
from .mapping import (
    apply_to_set,
    compose,
    format_polynomial,
    interpolate_sets,
    load_algorithm,
    parse_function_expr,
    run_algorithm,
)
from .pitch import format_note_set, parse_note_set
from .progressions import derive_algorithm, get_template_registry, realize_progression, resolve_template
from .utils.config import NotemapConfig, load_config
from .utils.logger import get_logger, setup_logger

EXIT_VERIFICATION_FAILED = 3


class NotemapCLI:
    """Configuration and logging shared by one invocation"""

    def __init__(self, config_path: Optional[str] = None, verbose: bool = False):
        self.config: NotemapConfig = load_config(config_path)
        log_level = "DEBUG" if verbose else self.config.core.log_level
        setup_logger(log_level, self.config.core.log_file)
        self.logger = get_logger('cli')
        self.console = Console(highlight=False, soft_wrap=True)

    def emit(self, score: Score, fmt: str, out: Optional[str]) -> None:
        payload = export_json(score) if fmt == 'json' else export_midi(score, self.config.midi)
        if out:
            Path(out).write_bytes(payload)
            self.logger.info(f"Wrote {len(payload)} bytes to {out}")
        else:
            stream = click.get_binary_stream('stdout')
            stream.write(payload)
            stream.flush()


def handle_errors(f):
    """Report NotemapError on stderr and exit with its code"""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except NotemapError as e:
            get_logger('cli').debug(f"{type(e).__name__}: {e}")
            click.echo(f"Error: {e}", err=True)
            click.get_current_context().exit(e.exit_code)

    return wrapper


def _parse_pins(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}", param_hint='--pin')


@click.group()
@click.version_option(version=__version__, prog_name='notemap')
@click.option('--config', '-c', 'config_path', default=None, help='Configuration file path')
@click.option('--verbose', '-v', is_flag=True, help='Enable debug logging on stderr')
@click.pass_context
@handle_errors
def cli(ctx, config_path, verbose):
    """Map note-sets to note-sets with exact rational polynomials."""
    ctx.ensure_object(dict)
    ctx.obj['cli'] = NotemapCLI(config_path, verbose)


@cli.command()
@click.option('--from', 'source', required=True, help='Source note-set, e.g. "{-7,-2,2,8}"')
@click.option('--to', 'target', required=True, help='Target note-set of the same size')
@click.option('--degree', type=int, default=None, help='Target degree (default: pairs - 1)')
@click.option('--pin', default=None, help='Coefficient indices forced to zero, e.g. "3" or "2,3"')
@click.pass_context
@handle_errors
def solve(ctx, source, target, degree, pin):
    """Derive the polynomial mapping one note-set onto another"""
    poly = interpolate_sets(parse_note_set(source), parse_note_set(target), degree=degree, pinned=_parse_pins(pin))
    click.echo(f"f(n) = {format_polynomial(poly)}")
    for power in range(poly.declared_degree, -1, -1):
        click.echo(f"c{power} = {poly.coefficient(power)}")


@cli.command()
@click.option('--fn', 'expression', required=True, help='Function expression, e.g. "n - 5"')
@click.option('--set', 'note_set', required=True, help='Note-set to map')
@click.option('--spelled', is_flag=True, help='Print note names instead of numbers')
@click.pass_context
@handle_errors
def apply(ctx, expression, note_set, spelled):
    """Apply a polynomial to every element of a note-set"""
    cli_obj = ctx.obj['cli']
    result = apply_to_set(parse_function_expr(expression), parse_note_set(note_set))
    if spelled:
        click.echo(format_note_set(result, 'spelled', cli_obj.config.spelling.policy))
    else:
        click.echo(format_note_set(result))


def _print_chain(sets: List[NoteSet], algorithm: FunctionAlgorithm, variable: str = 'n') -> None:
    click.echo(f"{sets[0].label + ': ' if sets[0].label else ''}{format_note_set(sets[0])}")
    for (label, poly), note_set in zip(algorithm.steps, sets[1:]):
        click.echo(f"  {label}({variable}) = {format_polynomial(poly, variable)}")
        click.echo(f"{note_set.label + ': ' if note_set.label else ''}{format_note_set(note_set)}")


@cli.command()
@click.option('--algorithm', 'algorithm_file', required=True, type=click.Path(exists=True, dir_okay=False),
              help='File with one function expression per line')
@click.option('--set', 'note_set', required=True, help='Starting note-set')
@click.option('--emit', type=click.Choice(['json', 'midi']), default=None, help='Emit a score instead of text')
@click.option('--out', default=None, help='Output path for --emit (default: stdout)')
@click.option('--compose', 'show_composition', is_flag=True, help='Also print the composed polynomial')
@click.pass_context
@handle_errors
def run(ctx, algorithm_file, note_set, emit, out, show_composition):
    """Run a function algorithm from a starting note-set"""
    cli_obj = ctx.obj['cli']
    algorithm = load_algorithm(algorithm_file)
    sets = run_algorithm(algorithm, parse_note_set(note_set))

    if emit:
        cli_obj.emit(build_score(sets, algorithm), emit, out)
        return

    _print_chain(sets, algorithm)
    if show_composition:
        total = parse_function_expr('n')
        for _, poly in algorithm.steps:
            total = compose(poly, total)
        click.echo(f"composed(n) = {format_polynomial(total)}")


@cli.command()
@click.option('--template', 'identifier', required=True, help='Template id, e.g. "I-IV64-V6-I@C" or "NEAP"')
@click.option('--key', default=None,
              help='Key letter with optional # or b; picks the printed template for that key when one '
                   'exists (--key C on I-IV64-V6-I gives the printed minor-iv colour)')
@click.option('--offset', type=int, default=None,
              help='Semitone offset from C; always transposes the generic template (--offset 0 is plain C major)')
@click.option('--pin', default=None, help='Coefficient indices forced to zero in every step')
@click.option('--emit', type=click.Choice(['json', 'midi']), default=None, help='Emit a score instead of text')
@click.option('--out', default=None, help='Output path for --emit (default: stdout)')
@click.pass_context
@handle_errors
def progression(ctx, identifier, key, offset, pin, emit, out):
    """Realize a progression template and derive its function algorithm"""
    cli_obj = ctx.obj['cli']
    if key is not None and offset is not None:
        raise click.UsageError("--key and --offset are mutually exclusive")
    if key is not None:
        identifier = f"{identifier.partition('@')[0]}@{key}"

    template, key_offset = resolve_template(identifier)
    sets = realize_progression(template, key_offset + (offset or 0))
    algorithm = derive_algorithm(sets, _parse_pins(pin))

    if emit:
        cli_obj.emit(build_score(sets, algorithm), emit, out)
        return
    _print_chain(sets, algorithm, 'x')


@cli.command()
@click.pass_context
@handle_errors
def templates(ctx):
    """List progression templates"""
    table = Table(title="Progression templates")
    table.add_column("Template", style="cyan", no_wrap=True)
    table.add_column("Source")
    table.add_column("Chords")
    for name, template in get_template_registry().items():
        chords = ' -> '.join(f"{label} {{{', '.join(str(r) for r in reps)}}}" for label, reps in template.chords)
        table.add_row(name, template.source, chords)
    ctx.obj['cli'].console.print(table)


def _print_report(console: Console, report: HarnessReport) -> None:
    table = Table(title="Printed claims")
    table.add_column("Case", style="cyan", no_wrap=True)
    table.add_column("Kind")
    table.add_column("Status")
    table.add_column("Notes")

    styles = {CaseStatus.MATCH: "green", CaseStatus.MISMATCH: "red", CaseStatus.DERIVED_ONLY: "blue"}
    for case in report.cases:
        if case.status == CaseStatus.MISMATCH:
            diffs = ', '.join(f"{d.position}: {d.printed} -> {d.derived}" for d in case.details)
            notes = f"{case.suspected_erratum} ({diffs})"
        elif case.status == CaseStatus.DERIVED_ONLY:
            notes = case.derived or ""
        else:
            notes = '; '.join(case.remarks)
        table.add_row(case.id, case.kind, f"[{styles[case.status]}]{case.status.value}[/]", escape(notes))

    console.print(table)
    summary = (f"{report.status}: {len(report.cases)} cases, {len(report.mismatches)} mismatches, "
               f"{len(report.unexpected_mismatches)} unexpected")
    console.print(f"[{'green' if report.succeeded else 'red'}]{summary}[/]")


@cli.command('verify-paper')
@click.option('--case', 'case_filter', default=None, help='Case id or id prefix, e.g. "S4.CMAJ"')
@click.option('--expect-known-errata', is_flag=True, help='Succeed when every mismatch is a known erratum')
@click.option('--json', 'as_json', is_flag=True, help='Print the report as a score document')
@click.pass_context
@handle_errors
def verify_paper(ctx, case_filter, expect_known_errata, as_json):
    """Re-derive every registered printed claim and report mismatches"""
    cli_obj = ctx.obj['cli']
    harness = VerificationHarness(cli_obj.config.harness)
    report = harness.run_all(expect_known_errata, case_filter)

    if as_json:
        click.echo(export_json(Score(report=report)).decode('utf-8'), nl=False)
    else:
        _print_report(cli_obj.console, report)

    if not report.succeeded:
        ctx.exit(EXIT_VERIFICATION_FAILED)


@cli.command()
@click.option('--score', 'score_file', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Score JSON file')
@click.pass_context
@handle_errors
def validate(ctx, score_file):
    """Check a score's functions and octave-ordering events"""
    score = import_json(Path(score_file).read_bytes())
    problems = check_score(score)
    if problems:
        for problem in problems:
            click.echo(problem)
        click.echo(f"INVALID: {len(problems)} problems")
        ctx.exit(1)
    click.echo(f"VALID: {len(score.sets)} sets, {len(score.functions)} functions")


def main(argv: Optional[List[str]] = None) -> int:
    """Console entry point; returns the process exit code"""
    try:
        result = cli.main(args=argv, prog_name='notemap', standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except click.ClickException as e:
        e.show()
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(main())
