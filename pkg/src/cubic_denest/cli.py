"""Command-line interface.

Exit codes: 0 success, 1 user or input error, 2 internal invariant violation.
"""
from __future__ import annotations

import sys
from fractions import Fraction
from typing import List, Optional

import click

from .cardano import DenestedPair, branch_pairs, denest, denest_verify, enumerate_branches, solve
from .cubic_core import DepressedCubic
from .errors import CubicError, InvariantViolation
from .exact_arith import parse_rational
from .formatting import (
    OutputFormat,
    dumps,
    format_denesting,
    format_rational,
    render,
)
from .numeval import eval_quadext
from .parsing import parse_equation_full

DEFAULT_DIGITS = 10
MAX_DIGITS = 1000


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(value)
        except (ValueError, ZeroDivisionError) as exc:
            self.fail(f"{value!r} is not a rational p/q ({exc})", param, ctx)


RATIONAL = RationalType()

digits_option = click.option(
    "--digits",
    type=click.IntRange(1, MAX_DIGITS),
    default=DEFAULT_DIGITS,
    show_default=True,
    help="Decimal places for numeric output.",
)
format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice([f.value for f in OutputFormat]),
    default="text",
    show_default=True,
)


def _depressed(a, b) -> DepressedCubic:
    if a is None or b is None:
        raise click.UsageError("both --a and --b are required")
    return DepressedCubic(a, b)


@click.group()
def main():
    """Exact cubic solver with denested Cardano radicals."""


@main.command("solve")
@click.argument("equation", required=False)
@click.option("--a", type=RATIONAL, help="a in x^3 + 3ax = 2b")
@click.option("--b", type=RATIONAL, help="b in x^3 + 3ax = 2b")
@digits_option
@format_option
def solve_cmd(equation, a, b, digits, fmt):
    """Solve EQUATION such as "x^3 + 4x = 75/8", or the cubic x^3 + 3ax = 2b.

    Pass either EQUATION or both --a and --b.
    """
    if equation is not None and (a is not None or b is not None):
        raise click.UsageError("give either an equation or --a/--b, not both")
    if equation is not None:
        parsed = parse_equation_full(equation)
        result = solve(parsed.to_cubic(), digits)
        var = parsed.var
    else:
        result = solve(_depressed(a, b), digits)
        var = "x"
    click.echo(render(result, fmt, var))


@main.command("denest")
@click.option("--a", type=RATIONAL, required=True)
@click.option("--b", type=RATIONAL, required=True)
@click.option("--root", type=RATIONAL, required=True, help="A rational root of the cubic.")
@digits_option
@format_option
def denest_cmd(a, b, root, digits, fmt):
    """Denest the Cardano cube roots for a known rational root."""
    d = DepressedCubic(a, b)
    p = denest(d, root)
    if not denest_verify(p, d):
        raise InvariantViolation("denest produced a pair that fails verification")
    w3, w4 = format_denesting(p, "text" if fmt == "json" else fmt)
    if fmt == "json":
        click.echo(
            dumps({"t": format_rational(p.t), "s": format_rational(p.s), "D": format_rational(p.D), "w3": w3, "w4": w4})
        )
        return
    if fmt == "latex":
        click.echo(f"t = {format_rational(p.t, 'latex')},\\quad s = {format_rational(p.s, 'latex')}")
        click.echo(f"w_3 = {w3} \\approx {eval_quadext(p.w3, digits)}")
        click.echo(f"w_4 = {w4} \\approx {eval_quadext(p.w4, digits)}")
        return
    click.echo(f"t = {format_rational(p.t)}")
    click.echo(f"s = {format_rational(p.s)}")
    click.echo(f"D = {format_rational(p.D)}")
    click.echo(f"w3 = {w3} ~ {eval_quadext(p.w3, digits)}")
    click.echo(f"w4 = {w4} ~ {eval_quadext(p.w4, digits)}")


@main.command("verify")
@click.option("--a", type=RATIONAL, required=True)
@click.option("--b", type=RATIONAL, required=True)
@click.option("--t", type=RATIONAL, required=True)
@click.option("--s", type=RATIONAL, required=True)
@format_option
def verify_cmd(a, b, t, s, fmt):
    """Check a candidate (t, s) against the exact denesting identities."""
    d = DepressedCubic(a, b)
    p = DenestedPair(t, s, d.discriminant)
    checks = {
        "s^3*D + 3*s*t^2 = 1": s**3 * p.D + 3 * s * t * t == 1,
        "t^3 + 3*s^2*t*D = b": t**3 + 3 * s * s * t * p.D == b,
        "s^2*D - t^2 = a": s * s * p.D - t * t == a,
    }
    ok = denest_verify(p, d)
    if ok != all(checks.values()):
        raise InvariantViolation("verify: identity table disagrees with denest_verify")
    if fmt == "json":
        click.echo(dumps({"ok": "true" if ok else "false", "checks": {k: "true" if v else "false" for k, v in checks.items()}}))
    else:
        if ok:
            click.echo("OK: denesting identities satisfied")
        else:
            failed = ", ".join(k for k, v in checks.items() if not v)
            click.echo(f"FAIL: {failed}")
    if not ok:
        raise click.exceptions.Exit(1)


@main.command("branches")
@click.option("--a", type=RATIONAL, required=True)
@click.option("--b", type=RATIONAL, required=True)
@click.option("--root", type=RATIONAL, required=True)
@digits_option
@format_option
def branches_cmd(a, b, root, digits, fmt):
    """List the three cube-root branches and their roots (a^3 + b^2 < 0)."""
    d = DepressedCubic(a, b)
    p = denest(d, root)
    roots = enumerate_branches(d, p, digits)
    pairs = branch_pairs(p, digits)
    if fmt == "json":
        click.echo(
            dumps(
                {
                    "branches": [
                        {"w3": str(u), "w4": str(v), "x": str(x.re)} for (u, v), x in zip(pairs, roots)
                    ],
                    "digits": str(digits),
                }
            )
        )
        return
    for k, ((u, v), x) in enumerate(zip(pairs, roots)):
        if fmt == "latex":
            click.echo(f"\\varepsilon^{{{k}}} w_3 = {u},\\quad \\varepsilon^{{-{k}}} w_4 = {v},\\quad x = {x.re}")
        else:
            click.echo(f"branch {k}: w3 = {u}, w4 = {v}, x = {x.re}")


def run_cli(argv: Optional[List[str]] = None) -> int:
    """Run the CLI on ``argv`` and return the exit code instead of exiting."""
    try:
        rv = main.main(args=argv, prog_name="cubic-denest", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        return 1
    except InvariantViolation as exc:
        click.echo(f"internal error: {exc}", err=True)
        return 2
    except (CubicError, ZeroDivisionError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    # non-standalone click hands back the exit code of a raised Exit
    return rv if isinstance(rv, int) else 0


def entry_point():
    sys.exit(run_cli(sys.argv[1:]))
