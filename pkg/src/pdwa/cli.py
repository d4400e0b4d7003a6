"""
``pdwa`` command line.

Every command takes a formula as inline text or ``@path``. Exit status is 0
for TRUE / pass, 1 for FALSE / fail and 2 for any error.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path

import click

from .automaton import to_dot
from .engine import (
    DEFAULT_CAP,
    CompileOptions,
    CorpusOptions,
    CrosscheckOptions,
    EngineKind,
    bench_mult,
    compile,
    crosscheck,
    decide,
    run_corpus_sync,
    solve,
)
from .errors import PdwaError
from .formula import Formula, parse
from .qelim import QeTrace, eliminate_all

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CliConfig:
    """Options shared by every command."""
    base: int = 2
    engine: EngineKind = EngineKind.AUTOMATA
    minimize_each_step: bool = True

    def compile_options(self) -> CompileOptions:
        return CompileOptions(base=self.base, minimize_each_step=self.minimize_each_step, engine=self.engine)


class FormulaSource(click.ParamType):
    """Formula text, or the contents of a file when prefixed with ``@``."""
    name = "formula"

    def convert(self, value, param, ctx) -> str:
        if not isinstance(value, str) or not value.startswith("@"):
            return value
        path = Path(value[1:])
        try:
            return path.read_text()
        except OSError as e:
            self.fail(f"cannot read {path}: {e.strerror}", param, ctx)


FORMULA = FormulaSource()


class _PdwaGroup(click.Group):
    """Reports library errors as one line on stderr with exit status 2."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except PdwaError as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(2)


def _parse(text: str) -> Formula:
    phi = parse(text)
    logger.debug("parsed %s", phi)
    return phi


@click.group(cls=_PdwaGroup)
@click.option("--base", type=click.IntRange(min=2), default=2, envvar="PDWA_BASE", show_default=True,
              help="Radix of the word encoding.")
@click.option("--engine", type=click.Choice([e.value for e in EngineKind]), default=EngineKind.AUTOMATA.value,
              show_default=True, help="Compile directly or eliminate quantifiers first.")
@click.option("--no-minimize-steps", is_flag=True, help="Minimize only after projections and at the end.")
@click.option("--log-level", type=click.Choice(["debug", "info", "warning", "error"], case_sensitive=False),
              default="warning", show_default=True)
@click.pass_context
def cli(ctx: click.Context, base: int, engine: str, no_minimize_steps: bool, log_level: str):
    """Presburger arithmetic with deterministic word automata."""
    logging.basicConfig(level=log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    ctx.obj = CliConfig(base=base, engine=EngineKind(engine), minimize_each_step=not no_minimize_steps)


@cli.command("decide")
@click.argument("formula", type=FORMULA)
@click.pass_obj
def cmd_decide(config: CliConfig, formula: str):
    """Print TRUE or FALSE for a sentence."""
    truth = decide(_parse(formula), config.compile_options())
    click.echo("TRUE" if truth else "FALSE")
    if not truth:
        raise SystemExit(1)


@cli.command("solve")
@click.argument("formula", type=FORMULA)
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def cmd_solve(config: CliConfig, formula: str, as_json: bool):
    """Print a satisfying assignment, or UNSAT."""
    assignment = solve(_parse(formula), config.compile_options())
    if as_json:
        values = None if assignment is None else {v.name: k for v, k in assignment.items()}
        click.echo(json.dumps({"satisfiable": assignment is not None, "assignment": values}))
    elif assignment is None:
        click.echo("UNSAT")
    else:
        click.echo(" ".join(f"{v.name}={k}" for v, k in assignment.items()) or "SAT")
    if assignment is None:
        raise SystemExit(1)


@cli.command("build")
@click.argument("formula", type=FORMULA)
@click.option("--dot", "fmt", flag_value="dot", help="Write the automaton as Graphviz DOT.")
@click.option("--json", "fmt", flag_value="json", help="Write the automaton as JSON.")
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True),
              help="Write the artifact here instead of stdout.")
@click.pass_obj
def cmd_build(config: CliConfig, formula: str, fmt: str | None, output: str | None):
    """Compile a formula and print its minimal automaton."""
    a = compile(_parse(formula), config.compile_options())
    match fmt:
        case "dot":
            artifact = f"// {a.num_states} states\n{to_dot(a)}"
        case "json":
            artifact = a.dumps() + "\n"
        case _:
            artifact = None
    if artifact is None:
        click.echo(f"{a.num_states} states")
    elif output is None:
        click.echo(artifact, nl=False)
    else:
        Path(output).write_text(artifact)
        click.echo(f"{a.num_states} states")


@cli.command("qe")
@click.argument("formula", type=FORMULA)
@click.option("--trace", is_flag=True, help="Also print one JSON line per eliminated quantifier.")
@click.option("--json", "as_json", is_flag=True)
def cmd_qe(formula: str, trace: bool, as_json: bool):
    """Print an equivalent quantifier-free formula."""
    phi = _parse(formula)
    steps: list[QeTrace] = []
    psi = eliminate_all(phi, steps)
    if as_json:
        click.echo(json.dumps({
            "formula": str(phi),
            "result": str(psi),
            "trace": [t.to_dict() for t in steps],
        }))
        return
    click.echo(str(psi))
    if trace:
        for t in steps:
            click.echo(t.to_json())


@cli.command("crosscheck")
@click.argument("formula", type=FORMULA)
@click.option("--max-word-len", type=click.IntRange(min=0), default=4, show_default=True,
              help="Words up to this length are compared with direct evaluation.")
@click.option("--grid-radius", type=click.IntRange(min=0), default=16, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def cmd_crosscheck(config: CliConfig, formula: str, max_word_len: int, grid_radius: int, as_json: bool):
    """Compare the automata and elimination backends on one formula."""
    check = CrosscheckOptions(grid_radius=grid_radius, max_word_len=max_word_len)
    report = crosscheck(_parse(formula), config.compile_options(), check)
    if as_json:
        click.echo(report.to_json())
    else:
        click.echo(f"formula:    {report.formula}")
        click.echo(f"eliminated: {report.qe_formula}")
        click.echo("sizes:      " + ", ".join(f"{k}={v}" for k, v in report.engine_sizes.items()))
        click.echo(f"checked:    {report.points_checked} points, {report.words_checked} words")
        for name, ok in report.verdicts.items():
            click.echo(f"{name}: {'yes' if ok else 'NO'}")
        click.echo("PASS" if report.passed else "FAIL")
    if not report.passed:
        raise SystemExit(1)


@cli.command("corpus")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--count", type=click.IntRange(min=0), default=50, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--max-word-len", type=click.IntRange(min=0), default=4, show_default=True)
@click.option("--inject-fault", is_flag=True, help="Corrupt formula 0's automaton (negative control).")
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def cmd_corpus(config: CliConfig, seed: int, count: int, workers: int, max_word_len: int, inject_fault: bool,
               as_json: bool):
    """Crosscheck and size-check a seeded random corpus."""
    opts = CorpusOptions(
        seed=seed,
        count=count,
        base=config.base,
        workers=workers,
        inject_fault=inject_fault,
        check=CrosscheckOptions(max_word_len=max_word_len),
    )
    summary = run_corpus_sync(opts)
    if as_json:
        click.echo(summary.to_json())
    else:
        for r in summary.results:
            verdict = "pass" if r.passed else "FAIL"
            size = "-" if r.ledger is None else str(r.ledger.final_size)
            click.echo(f"{r.id:4d} {r.shape:<16} {verdict:<4} {size:>6}  {r.formula}")
        click.echo(f"{len(summary.results) - len(summary.failed)}/{len(summary.results)} passed (seed {seed})")
    if not summary.passed:
        raise SystemExit(1)


@cli.command("bench-mult")
@click.argument("m", type=click.IntRange(min=0))
@click.option("--cap", type=click.IntRange(min=1), default=DEFAULT_CAP, show_default=True,
              help="Largest unminimized automaton to build.")
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def cmd_bench_mult(config: CliConfig, m: int, cap: int, as_json: bool):
    """Check that MULT_m needs at least base^m states."""
    bench = bench_mult(m, config.base, cap)
    click.echo(bench.to_json() if as_json else bench.summary())
    if not bench.passed:
        raise SystemExit(1)


def main() -> None:
    cli(prog_name="pdwa")
