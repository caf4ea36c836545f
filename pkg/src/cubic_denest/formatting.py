"""Text, LaTeX and JSON renderings of exact values and solve results.

Real surds print as ``s*sqrt(r) + t`` (the shape of the denested cube roots);
imaginary ones print in ``t + s*sqrt(r)*i`` form.  Radicands are shown
squarefree, e.g. ``sqrt(168259/6912)`` becomes ``(43/144)*sqrt(273)``.
"""
from __future__ import annotations

import enum
import json
from fractions import Fraction
from typing import List, Tuple

from .cardano import DenestedPair, SolveResult
from .cubic_core import GeneralCubic
from .exact_arith import squarefree_decompose
from .numeval import eval_quadext, eval_rational
from .quad_field import QuadExt


class OutputFormat(str, enum.Enum):
    TEXT = "text"
    LATEX = "latex"
    JSON = "json"


def _fmt(fmt) -> OutputFormat:
    return OutputFormat(fmt)


def format_rational(q: Fraction, fmt="text") -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    if _fmt(fmt) is OutputFormat.LATEX:
        sign = "-" if q < 0 else ""
        return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"
    return f"{q.numerator}/{q.denominator}"


def _coefficient(k: Fraction, fmt: OutputFormat, sep: str) -> str:
    """Unsigned multiplier in front of a surd or ``i``; ``k > 0``."""
    if k == 1:
        return ""
    if fmt is OutputFormat.LATEX:
        return format_rational(k, fmt)
    if k.denominator == 1:
        return f"{k}{sep}"
    return f"({k}){sep}"


def _surd(k: Fraction, radicand: int, imaginary: bool, fmt: OutputFormat) -> str:
    """Unsigned ``|k|*sqrt(radicand)[*i]``; ``radicand == 1`` drops the root."""
    k = abs(k)
    latex = fmt is OutputFormat.LATEX
    if radicand == 1:
        if not imaginary:
            return format_rational(k, fmt)
        return _coefficient(k, fmt, "*") + "i"
    root = f"\\sqrt{{{radicand}}}" if latex else f"sqrt({radicand})"
    body = _coefficient(k, fmt, "*") + root
    if imaginary:
        body += "i" if latex else "*i"
    return body


def _join(first: str, first_negative: bool, second: str, second_negative: bool, fmt) -> str:
    head = ("-" if first_negative else "") + first
    if fmt is OutputFormat.LATEX:
        return head + ("-" if second_negative else "+") + second
    return head + (" - " if second_negative else " + ") + second


def format_surd(x, fmt="text") -> str:
    """Render a rational or a :class:`QuadExt`."""
    fmt = _fmt(fmt)
    if fmt is OutputFormat.JSON:
        fmt = OutputFormat.TEXT
    if not isinstance(x, QuadExt):
        return format_rational(x, fmt)
    if x.s == 0 or x.radicand == 0:
        return format_rational(x.t, fmt)
    imaginary = x.radicand < 0
    coeff, radicand = squarefree_decompose(abs(x.radicand))
    k = x.s * coeff
    if radicand == 1 and not imaginary:
        return format_rational(x.t + k, fmt)
    surd = _surd(k, radicand, imaginary, fmt)
    if x.t == 0:
        return ("-" if k < 0 else "") + surd
    t = format_rational(abs(x.t), fmt)
    if imaginary:
        return _join(t, x.t < 0, surd, k < 0, fmt)
    return _join(surd, k < 0, t, x.t < 0, fmt)


def format_denesting(p: DenestedPair, fmt="text") -> Tuple[str, str]:
    """``(w3, w4)`` rendered with :func:`format_surd`."""
    return format_surd(p.w3, fmt), format_surd(p.w4, fmt)


def format_equation(g: GeneralCubic, var: str = "x", fmt="text") -> str:
    """Inverse of :func:`~cubic_denest.parsing.parse_equation` for text output."""
    fmt = _fmt(fmt)
    latex = fmt is OutputFormat.LATEX
    pieces: List[str] = []
    for degree, c in zip((3, 2, 1, 0), g.coefficients):
        if c == 0:
            continue
        mag = abs(c)
        if degree == 0:
            body = format_rational(mag, fmt)
        else:
            power = var if degree == 1 else f"{var}^{degree}"
            if mag == 1:
                body = power
            elif latex:
                body = format_rational(mag, fmt) + power
            else:
                body = f"{mag}{power}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces) + " = 0"


# -- solve reports ------------------------------------------------------------

def result_to_dict(r: SolveResult) -> dict:
    """Schema-stable mapping of a result; every value is a string or null."""
    d = r.cubic
    roots = []
    for root in r.roots:
        roots.append(
            {
                "exact": None if root.exact is None else format_surd(root.exact),
                "numeric_re": str(root.numeric.re),
                "numeric_im": str(root.numeric.im),
                "provenance": root.provenance,
            }
        )
    denesting = None
    if r.denesting is not None:
        w3, w4 = format_denesting(r.denesting)
        denesting = {
            "t": format_rational(r.denesting.t),
            "s": format_rational(r.denesting.s),
            "D": format_rational(r.denesting.D),
            "w3": w3,
            "w4": w4,
        }
    elif r.general_denesting is not None:
        g = r.general_denesting
        denesting = {
            "t": str(g.t),
            "s": str(g.s),
            "D": format_rational(d.discriminant),
            "w3": str(g.w3),
            "w4": str(g.w4),
        }
    cardano = None
    if r.cardano is not None:
        cardano = {"w1": str(r.cardano.w1), "w2": str(r.cardano.w2), "x": str(r.cardano.x)}
    return {
        "classification": r.classification.value,
        "a": format_rational(d.a),
        "b": format_rational(d.b),
        "D": format_rational(d.discriminant),
        "roots": roots,
        "denesting": denesting,
        "cardano": cardano,
        "digits": str(r.digits),
    }


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


def _numeric(x, digits):
    if isinstance(x, QuadExt):
        return str(eval_quadext(x, digits))
    return str(eval_rational(x, digits))


def render_text(r: SolveResult, var: str = "x") -> str:
    d, k = r.cubic, r.digits
    lines = []
    if r.equation is not None:
        lines.append(f"equation: {format_equation(r.equation, var)}")
    lines.append(
        f"depressed: {var}^3 + 3a{var} = 2b with a = {format_rational(d.a)}, "
        f"b = {format_rational(d.b)}, shift = {format_rational(r.shift)}"
    )
    lines.append(f"D = a^3 + b^2 = {format_rational(d.discriminant)}")
    lines.append(f"classification: {r.classification.value}")
    lines.append("roots:")
    for i, root in enumerate(r.roots, 1):
        exact = "" if root.exact is None else f"{format_surd(root.exact)} ~ "
        lines.append(f"  {var}{i} = {exact}{root.numeric}  [{root.provenance}]")
    frame = ""
    if r.shift != 0:
        frame = f" [in y = {var} - ({format_rational(r.shift)})]"
    if r.denesting is not None:
        p = r.denesting
        w3, w4 = format_denesting(p)
        lines.append(f"denesting{frame}: t = {format_rational(p.t)}, s = {format_rational(p.s)}")
        lines.append(f"  w3 = {w3} ~ {_numeric(p.w3, k)}")
        lines.append(f"  w4 = {w4} ~ {_numeric(p.w4, k)}")
    elif r.general_denesting is not None:
        g = r.general_denesting
        lines.append(f"denesting (numeric){frame}: t ~ {g.t}, s ~ {g.s}")
        lines.append(f"  w3 = s*sqrt(D) + t ~ {g.w3}")
        lines.append(f"  w4 = s*sqrt(D) - t ~ {g.w4}")
    if r.cardano is not None:
        c = r.cardano
        lines.append(f"cardano{frame}: w1 ~ {c.w1}, w2 ~ {c.w2}, x ~ {c.x}")
    if r.branches is not None:
        lines.append(f"branches{frame}: " + ", ".join(str(b) for b in r.branches))
    for note in r.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def render_latex(r: SolveResult, var: str = "x") -> str:
    d, k = r.cubic, r.digits
    lines = []
    if r.equation is not None:
        lines.append(format_equation(r.equation, var, "latex"))
    lines.append(
        f"a = {format_rational(d.a, 'latex')},\\quad b = {format_rational(d.b, 'latex')},"
        f"\\quad a^3 + b^2 = {format_rational(d.discriminant, 'latex')}"
    )
    for i, root in enumerate(r.roots, 1):
        if root.exact is None:
            lines.append(f"{var}_{i} \\approx {root.numeric}")
        else:
            lines.append(f"{var}_{i} = {format_surd(root.exact, 'latex')} \\approx {root.numeric}")
    if r.denesting is not None:
        p = r.denesting
        w3, w4 = format_denesting(p, "latex")
        lines.append(f"t = {format_rational(p.t, 'latex')},\\quad s = {format_rational(p.s, 'latex')}")
        lines.append(f"w_3 = {w3} \\approx {_numeric(p.w3, k)}")
        lines.append(f"w_4 = {w4} \\approx {_numeric(p.w4, k)}")
    if r.cardano is not None:
        c = r.cardano
        lines.append(f"w_1 \\approx {c.w1},\\quad w_2 \\approx {c.w2}")
    return "\n".join(lines)


def render(r: SolveResult, fmt="text", var: str = "x") -> str:
    fmt = _fmt(fmt)
    if fmt is OutputFormat.JSON:
        return dumps(result_to_dict(r))
    if fmt is OutputFormat.LATEX:
        return render_latex(r, var)
    return render_text(r, var)
