import functools
import json
import sys
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Callable, Optional, Type, TypeVar

import typer
from pydantic import BaseModel, ValidationError

from normslab import __version__
from normslab.cli.render import canonical_json, render_table
from normslab.core.config import load_settings
from normslab.core.cyclotomic import CycloElement
from normslab.core.errors import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    InvalidInput,
    NormsLabError,
)
from normslab.core.logging import LogManager
from normslab.core.logging.providers.console import ConsoleLogProvider
from normslab.core.normsfield import (
    NormSequence,
    approximate_lift,
    check_compatibility,
    fon_add,
    series_to_sequence,
)
from normslab.core.oortlift import KummerCoverSpec, verify
from normslab.core.padics import PAdicNumber, check_prime, hensel_lift, parse, teichmuller
from normslab.core.powerseries import PowerSeriesElt, weierstrass_prepare
from normslab.core.ramification import (
    apf_first_jump,
    different_from_minpoly,
    filtration,
    r_of_level,
)
from normslab.core.telemetry import TelemetryCollector, TelemetryManager
from normslab.core.telemetry.providers.memory import InMemoryTelemetryProvider
from normslab.core.utils.parsing import parse_levels, parse_polynomial
from normslab.models.config import Settings
from normslab.models.documents import CycloDocument, SequenceDocument, SeriesDocument
from normslab.models.reports import ApfReport, LiftReport

app = typer.Typer(
    name="norms-lab",
    help="Exact p-adic arithmetic, ramification and field-of-norms checks",
    no_args_is_help=True,
)
weierstrass_app = typer.Typer(name="weierstrass", help="Weierstrass preparation")
ram_app = typer.Typer(name="ram", help="Ramification filtrations of the cyclotomic tower")
fon_app = typer.Typer(name="fon", help="Finite-depth field-of-norms arithmetic")
oort_app = typer.Typer(name="oort", help="p-cyclic lifting verification")
padic_app = typer.Typer(name="padic", help="p-adic numbers")
app.add_typer(weierstrass_app, name="weierstrass")
app.add_typer(ram_app, name="ram")
app.add_typer(fon_app, name="fon")
app.add_typer(oort_app, name="oort")
app.add_typer(padic_app, name="padic")


class OutputFormat(str, Enum):
    JSON = "json"
    TABLE = "table"


@dataclass
class CliState:
    settings: Settings
    output: Optional[Path]
    fmt: OutputFormat
    timings: bool
    telemetry: InMemoryTelemetryProvider

    @property
    def precision(self) -> int:
        return self.settings.arithmetic.precision

    @property
    def max_level(self) -> int:
        return self.settings.arithmetic.max_level

    @property
    def coercion_margin(self) -> int:
        return self.settings.arithmetic.coercion_margin


def _setup_observability(settings: Settings, command: Optional[str]) -> InMemoryTelemetryProvider:
    log_manager = LogManager.get_instance()
    log_manager.clear_providers()
    log_manager.clear_subscribers()
    log_manager.enabled = settings.logging.enabled
    log_manager.set_level(settings.logging.level)
    if "console" in settings.logging.providers:
        log_manager.register_provider(ConsoleLogProvider())

    telemetry_manager = TelemetryManager.get_instance()
    telemetry_manager.clear_providers()
    provider = InMemoryTelemetryProvider()
    if settings.telemetry.enabled:
        telemetry_manager.register_provider(provider)
        telemetry_manager.record_gauge("arithmetic.precision", settings.arithmetic.precision)
        log_manager.subscribe(TelemetryCollector.get_instance().on_log_entry)

    log_manager.initialize()
    log_manager.set_context(trace_id=command or "norms-lab")
    return provider


def _version_callback(value: bool):
    if value:
        typer.echo(f"norms-lab {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    precision: Optional[int] = typer.Option(
        None,
        "--precision",
        help="Working precision in p-adic digits (overrides NORMS_LAB_PRECISION)",
    ),
    config: Optional[Path] = typer.Option(
        None, "--config", "-c", help="Path to config file"
    ),
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Write the document here instead of stdout"
    ),
    fmt: OutputFormat = typer.Option(
        OutputFormat.JSON, "--format", "-f", help="Output format"
    ),
    timings: bool = typer.Option(
        False, "--timings", help="Print operation timers to stderr"
    ),
    version: bool = typer.Option(
        False, "--version", callback=_version_callback, is_eager=True
    ),
):
    """Exact p-adic arithmetic, ramification and field-of-norms checks."""
    try:
        settings = load_settings(config, precision)
    except NormsLabError as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(code=e.exit_code)
    telemetry = _setup_observability(settings, ctx.invoked_subcommand)
    ctx.obj = CliState(settings, output, fmt, timings, telemetry)


F = TypeVar("F", bound=Callable)


def handle_errors(func: F) -> F:
    """Map library errors to exit codes."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except typer.Exit:
            raise
        except NormsLabError as e:
            LogManager.get_instance().error(str(e), source=func.__name__)
            typer.echo(f"Error: {type(e).__name__}: {e}", err=True)
            raise typer.Exit(code=e.exit_code)
        except ValidationError as e:
            typer.echo(f"Error: invalid document: {e}", err=True)
            raise typer.Exit(code=EXIT_INPUT_ERROR)
        except (json.JSONDecodeError, OSError) as e:
            typer.echo(f"Error: cannot read input: {e}", err=True)
            raise typer.Exit(code=EXIT_INPUT_ERROR)

    return wrapper  # type: ignore[return-value]


def emit(ctx: typer.Context, document: BaseModel, passed: bool = True) -> None:
    """Write the document, then timers, then exit with the verdict's code."""
    state: CliState = ctx.obj
    if state.fmt == OutputFormat.TABLE:
        text = render_table(document)
    else:
        text = canonical_json(document)
    if state.output:
        state.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if state.timings:
        for summary in state.telemetry.timer_summary():
            typer.echo(summary.line(), err=True)
    TelemetryManager.get_instance().flush()
    raise typer.Exit(code=EXIT_OK if passed else EXIT_VERIFICATION_FAILED)


M = TypeVar("M", bound=BaseModel)


def read_document(path: Path, model: Type[M]) -> M:
    with open(path, "r", encoding="utf-8") as f:
        return model.model_validate(json.load(f))


def _depth_range(text: str, max_level: int):
    levels = parse_levels(text)
    if levels.start is None:
        raise InvalidInput(f"a depth range must be a..b, got {text!r}")
    if levels.stop > max_level:
        raise InvalidInput(f"level {levels.stop} exceeds the maximum {max_level}")
    return levels.start, levels.stop


def _check_level(level: int, max_level: int, name: str = "level") -> None:
    if level > max_level:
        raise InvalidInput(f"{name} {level} exceeds the maximum {max_level}")


# -- weierstrass --------------------------------------------------------


@weierstrass_app.command("prep")
@handle_errors
def weierstrass_prep(
    ctx: typer.Context,
    path: Path = typer.Argument(..., help="Series document (JSON)"),
):
    """Factor a series as varpi^c * f * U."""
    state: CliState = ctx.obj
    doc = read_document(path, SeriesDocument)
    g = PowerSeriesElt.from_document(doc, state.precision)
    emit(ctx, weierstrass_prepare(g).to_document())


# -- ram ----------------------------------------------------------------


@ram_app.command("profile")
@handle_errors
def ram_profile(
    ctx: typer.Context,
    p: int = typer.Option(..., "--p", help="Odd prime"),
    base: int = typer.Option(0, "--base", help="Base level (0 is Q_p)"),
    top: int = typer.Option(..., "--top", help="Top level"),
):
    """Filtration, Herbrand function and different of L^top | L^base."""
    state: CliState = ctx.obj
    check_prime(p)
    _check_level(top, state.max_level, "top")
    profile = filtration(p, base, top, state.precision)
    report = profile.to_report()
    report.different_oracle = different_from_minpoly(p, base, top, state.precision)
    emit(ctx, report, passed=report.different_oracle == report.different_degree)


@ram_app.command("apf")
@handle_errors
def ram_apf(
    ctx: typer.Context,
    p: int = typer.Option(..., "--p", help="Odd prime"),
    level: int = typer.Option(..., "--level", help="Level m >= 1"),
):
    """i(L | L^m) and the congruence window r(m)."""
    state: CliState = ctx.obj
    check_prime(p)
    _check_level(level + 1, state.max_level)
    jump = apf_first_jump(p, level, state.precision)
    emit(
        ctx,
        ApfReport(p=p, level=level, first_jump=str(jump), r=r_of_level(p, level, state.precision)),
    )


# -- fon ----------------------------------------------------------------


@fon_app.command("check")
@handle_errors
def fon_check(
    ctx: typer.Context,
    path: Path = typer.Argument(..., help="Sequence document (JSON)"),
    strictness: Optional[int] = typer.Option(
        None, "--strictness", help="Accept pairs agreeing to this nu_m"
    ),
):
    """Check the norm relations of a sequence."""
    state: CliState = ctx.obj
    sequence = NormSequence.from_document(read_document(path, SequenceDocument))
    report = check_compatibility(sequence, strictness, state.coercion_margin)
    emit(ctx, report, passed=report.passed)


@fon_app.command("add")
@handle_errors
def fon_add_command(
    ctx: typer.Context,
    left: Path = typer.Argument(..., help="First sequence document"),
    right: Path = typer.Argument(..., help="Second sequence document"),
    probe: int = typer.Option(..., "--probe", help="Probe depth M"),
    top: Optional[int] = typer.Option(None, "--top", help="Highest level of the result"),
):
    """Limit sum at a probe depth, with stability and congruence reports."""
    state: CliState = ctx.obj
    margin = state.coercion_margin
    alpha = NormSequence.from_document(
        read_document(left, SequenceDocument), verify=True, margin=margin
    )
    beta = NormSequence.from_document(
        read_document(right, SequenceDocument), verify=True, margin=margin
    )
    result = fon_add(alpha, beta, probe, top, margin)
    emit(ctx, result.to_report(), passed=result.congruence.passed and result.stability.stable)


@fon_app.command("from-series")
@handle_errors
def fon_from_series(
    ctx: typer.Context,
    p: int = typer.Option(..., "--p", help="Odd prime"),
    series: str = typer.Option(..., "--series", help='Polynomial over F_p, e.g. "z + z^2"'),
    depth: str = typer.Option(..., "--range", help="Depth range a..b"),
    probe: int = typer.Option(..., "--probe", help="Probe depth M"),
):
    """The element g(pi) of the field of norms."""
    state: CliState = ctx.obj
    lo, hi = _depth_range(depth, state.max_level)
    _check_level(probe, state.max_level, "probe depth")
    sequence = series_to_sequence(parse_polynomial(series), p, lo, hi, probe, state.precision)
    emit(ctx, sequence.to_document())


@fon_app.command("approx")
@handle_errors
def fon_approx(
    ctx: typer.Context,
    path: Path = typer.Argument(..., help="Element document (JSON)"),
    depth: str = typer.Option(..., "--range", help="Depth range a..b"),
    probe: int = typer.Option(..., "--probe", help="Probe depth M"),
):
    """Lift an integral element of L^m to a sequence agreeing with it mod r(m)."""
    state: CliState = ctx.obj
    lo, hi = _depth_range(depth, state.max_level)
    _check_level(probe, state.max_level, "probe depth")
    x = CycloElement.from_document(read_document(path, CycloDocument))
    sequence, congruence = approximate_lift(x, lo, hi, probe)
    emit(
        ctx,
        LiftReport(sequence=sequence.to_document(), congruence=congruence),
        passed=congruence.passed,
    )


# -- oort ---------------------------------------------------------------


@oort_app.command("verify")
@handle_errors
def oort_verify(
    ctx: typer.Context,
    p: int = typer.Option(..., "--p", help="Odd prime"),
    c: int = typer.Option(..., "--c", help="Pole order, prime to p"),
    w: str = typer.Option("1", "--w", help='Unit polynomial W, e.g. "1 + Z^4"'),
    levels: str = typer.Option("auto+2", "--levels", help="auto, auto+k or a..b"),
    cross_check: bool = typer.Option(
        False, "--cross-check", help="Recompute differents on explicit extensions (p=3, m<=2)"
    ),
    lift_coefficients: bool = typer.Option(
        False, "--lift-coefficients", help="Replace W's coefficients by Teichmuller lifts"
    ),
):
    """Verify the p-cyclic lifting T^p = 1 + lambda^p W / Z^c."""
    state: CliState = ctx.obj
    spec = KummerCoverSpec.from_text(p, c, w, state.precision, lift_coefficients)
    parsed = parse_levels(levels)
    explicit = None if parsed.start is None else parsed.resolve(0)
    report = verify(
        spec,
        levels=explicit,
        extra=parsed.extra,
        cross_check=cross_check,
        max_level=state.max_level,
        margin=state.settings.arithmetic.pthpower_margin,
    )
    emit(ctx, report, passed=report.verdict == "pass")


# -- padic --------------------------------------------------------------


@padic_app.command("teich")
@handle_errors
def padic_teich(
    ctx: typer.Context,
    p: int = typer.Option(..., "--p", help="Odd prime"),
    r: int = typer.Option(..., "--r", help="Residue, nonzero mod p"),
):
    """Teichmuller representative of r."""
    state: CliState = ctx.obj
    emit(ctx, teichmuller(r, p, state.precision).to_document())


@padic_app.command("hensel")
@handle_errors
def padic_hensel(
    ctx: typer.Context,
    p: int = typer.Option(..., "--p", help="Odd prime"),
    poly: str = typer.Option(..., "--poly", help='Integer polynomial, e.g. "Z^2 - 7"'),
    x0: int = typer.Option(..., "--x0", help="Approximate root"),
):
    """Lift an approximate root of an integer polynomial."""
    state: CliState = ctx.obj
    check_prime(p)
    terms = parse_polynomial(poly)
    f = [
        PAdicNumber.from_int(terms.get(i, 0), p, state.precision)
        for i in range(max(terms, default=0) + 1)
    ]
    root = hensel_lift(f, PAdicNumber.from_int(x0, p, state.precision))
    emit(ctx, root.to_document())


@padic_app.command("parse")
@handle_errors
def padic_parse(
    ctx: typer.Context,
    text: str = typer.Argument(..., help='e.g. "3^1 * (1 + 2*3) [2]"'),
):
    """Parse the text format into a document."""
    emit(ctx, parse(text).to_document())


if __name__ == "__main__":
    app()
