"""Cardano's formula and its denesting into quadratic surds.

For ``x^3 + 3ax = 2b`` with ``D = a^3 + b^2`` the Cardano root is
``w1 - w2`` with ``w1 = cbrt(sqrt(D) + b)`` and ``w2 = cbrt(sqrt(D) - b)``.
When ``x`` is known, both cube roots are the quadratic surds

    w3 = s*sqrt(D) + t,    w4 = s*sqrt(D) - t,    t = x/2,  s = t/(b - 2at).

The exact side of this module lives in Q(sqrt(D)); everything numeric goes
through :mod:`cubic_denest.numeval`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .cubic_core import (
    Classification,
    DepressedCubic,
    GeneralCubic,
    classify,
    deflate,
    depress,
    rational_root_search,
)
from .errors import (
    CubicError,
    DegenerateError,
    InvariantViolation,
    NotARootError,
    RadicandMismatchError,
)
from .exact_arith import as_rational, cbrt_rational_exact, sqrt_rational_exact
from .numeval import (
    GUARD_DIGITS,
    ComplexDecimal,
    FixedDecimal,
    cbrt_approx,
    quadext_approx,
    signed_sqrt_approx,
    sqrt_approx,
)
from .quad_field import QuadExt, qe_cube

PROV_RATIONAL = "rational-root-search"
PROV_DEFLATE = "deflate-quadratic"
PROV_REPEATED = "repeated-root"
PROV_CARDANO = "numeric-cardano"
PROV_CARDANO_DEFLATE = "numeric-cardano-deflate"
PROV_BISECTION = "numeric-bisection"

#: nontrivial cube roots of unity, -1/2 +- (1/2)sqrt(-3)
EPSILON_1 = QuadExt(-3, Fraction(1, 2), Fraction(-1, 2))
EPSILON_2 = QuadExt(-3, Fraction(-1, 2), Fraction(-1, 2))


@dataclass(frozen=True)
class DenestedPair:
    """``w3 = s*sqrt(D) + t`` and ``w4 = s*sqrt(D) - t``."""

    t: Fraction
    s: Fraction
    D: Fraction

    @property
    def w3(self) -> QuadExt:
        return QuadExt(self.D, self.s, self.t)

    @property
    def w4(self) -> QuadExt:
        return QuadExt(self.D, self.s, -self.t)

    @property
    def root(self) -> Fraction:
        """``w3 - w4``, computed in the field rather than as ``2t``."""
        diff = self.w3 - self.w4
        if diff.s != 0:
            raise InvariantViolation("w3 - w4 is not rational")
        return diff.t


@dataclass(frozen=True)
class CardanoNumeric:
    w1: FixedDecimal
    w2: FixedDecimal
    x: FixedDecimal
    digits: int


@dataclass(frozen=True)
class GeneralDenesting:
    """Decimal version of the denesting for a root that need not be rational."""

    t: FixedDecimal
    s: FixedDecimal
    w3: FixedDecimal
    w4: FixedDecimal
    digits: int


@dataclass(frozen=True)
class Root:
    """One root of the original equation.

    ``exact`` is a Fraction, a QuadExt, or None for roots known only numerically.
    """

    exact: Union[Fraction, QuadExt, None]
    numeric: ComplexDecimal
    provenance: str


@dataclass
class SolveResult:
    classification: Classification
    cubic: DepressedCubic
    shift: Fraction
    roots: List[Root]
    digits: int
    equation: Optional[GeneralCubic] = None
    denesting: Optional[DenestedPair] = None
    general_denesting: Optional[GeneralDenesting] = None
    cardano: Optional[CardanoNumeric] = None
    branches: Optional[List[ComplexDecimal]] = None
    notes: List[str] = field(default_factory=list)

    @property
    def D(self) -> Fraction:
        return self.cubic.discriminant

    @property
    def exact_roots(self) -> list:
        return [r.exact for r in self.roots if r.exact is not None]

    @property
    def numeric_roots(self) -> List[ComplexDecimal]:
        return [r.numeric for r in self.roots]


# -- high-precision helpers (rationals within ~10**-prec of the true value) ----

def _cardano_approx(d: DepressedCubic, prec: int) -> Tuple[Fraction, Fraction]:
    disc = d.discriminant
    # cbrt turns an input error e into at most ~1.6*cbrt(e); feed it 3*prec digits
    root_d = sqrt_approx(disc, 3 * prec + 2)
    return cbrt_approx(root_d + d.b, prec), cbrt_approx(root_d - d.b, prec)


def _check_digits(digits: int) -> None:
    if not isinstance(digits, int) or digits < 1:
        raise CubicError("digits must be a positive integer")


def cardano_numeric(d: DepressedCubic, digits: int = 10) -> CardanoNumeric:
    """Evaluate ``w1``, ``w2`` and ``x = w1 - w2`` with real cube roots."""
    _check_digits(digits)
    if d.discriminant < 0:
        raise CubicError("casus irreducibilis: use enumerate_branches")
    prec = digits + GUARD_DIGITS
    w1, w2 = _cardano_approx(d, prec)
    return CardanoNumeric(
        FixedDecimal.from_rational(w1, digits),
        FixedDecimal.from_rational(w2, digits),
        FixedDecimal.from_rational(w1 - w2, digits),
        digits,
    )


def denest(d: DepressedCubic, x) -> DenestedPair:
    """Exact surds ``(t, s)`` for a rational root ``x`` of ``d``."""
    x = as_rational(x)
    if d(x) != 0:
        raise NotARootError(f"not a root: {x}")
    disc = d.discriminant
    if disc == 0:
        raise DegenerateError("repeated root: denesting formula degenerates")
    t = x / 2
    den = d.b - 2 * d.a * t
    if den != 0:
        return DenestedPair(t, t / den, disc)
    # b = 2at together with the root condition forces t = 0 (so b = 0) or D = 0
    if t != 0:
        raise InvariantViolation("b - 2at vanished with t != 0 and D != 0")
    return DenestedPair(Fraction(0), 1 / d.a, disc)


def denest_verify(p: DenestedPair, d: DepressedCubic) -> bool:
    """Check the three exact identities binding ``(t, s)`` to ``(a, b)``.

    ``s^3 D + 3 s t^2 = 1``, ``t^3 + 3 s^2 t D = b`` and ``s^2 D - t^2 = a``;
    the first two say ``(s sqrt(D) + t)^3 = b + sqrt(D)``.
    """
    if p.D != d.discriminant:
        raise RadicandMismatchError(
            f"radicand mismatch: pair has D = {p.D}, cubic has D = {d.discriminant}"
        )
    t, s, disc = p.t, p.s, p.D
    ok = (
        s**3 * disc + 3 * s * t * t == 1
        and t**3 + 3 * s * s * t * disc == d.b
        and s * s * disc - t * t == d.a
    )
    cube = qe_cube(p.w3)
    if ok != (cube.s == 1 and cube.t == d.b and s * s * disc - t * t == d.a):
        raise InvariantViolation("qe_cube disagrees with the componentwise identities")
    return ok


def denest_real_general(d: DepressedCubic, digits: int = 10) -> GeneralDenesting:
    """Decimal ``t, s, w3, w4`` at the real Cardano root, rational or not."""
    _check_digits(digits)
    if d.discriminant < 0:
        raise CubicError("denest_real_general needs a³ + b² ≥ 0")
    # s = t/(b - 2at) amplifies the root error by up to den**-2 >= 10**(2*digits)
    prec = 3 * (digits + GUARD_DIGITS)
    w1, w2 = _cardano_approx(d, prec)
    x = w1 - w2
    t = x / 2
    den = d.b - 2 * d.a * t
    if abs(den) < Fraction(1, 10**digits):
        raise DegenerateError("degenerate: b - 2at is below the working precision")
    s = t / den
    root_d = sqrt_approx(d.discriminant, prec)
    w3 = s * root_d + t
    w4 = s * root_d - t
    out = GeneralDenesting(
        *(FixedDecimal.from_rational(v, digits) for v in (t, s, w3, w4)), digits
    )
    bound = Fraction(1, 10 ** (digits - 1))
    if abs(w3 - w1) > bound or abs(w4 - w2) > bound:
        raise InvariantViolation("numeric denesting does not reproduce Cardano's cube roots")
    return out


def _complex_mul(x, y):
    return x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]


def _branch_pairs_approx(p: DenestedPair, prec: int):
    w3, w4 = quadext_approx(p.w3, prec), quadext_approx(p.w4, prec)
    e1, e2 = quadext_approx(EPSILON_1, prec), quadext_approx(EPSILON_2, prec)
    one = (Fraction(1), Fraction(0))
    return [
        (_complex_mul(e, w3), _complex_mul(e_inv, w4))
        for e, e_inv in ((one, one), (e1, e2), (e2, e1))
    ]


def branch_pairs(p: DenestedPair, digits: int = 10) -> List[Tuple[ComplexDecimal, ComplexDecimal]]:
    """The three admissible ``(e*w3, w4/e)`` for ``e`` in ``1, e1, e2``.

    Pairing each unit root with its inverse keeps the product at
    ``s^2 D - t^2 = a``; the other six combinations do not give roots.
    """
    return [
        (ComplexDecimal.from_rationals(*u, digits), ComplexDecimal.from_rationals(*v, digits))
        for u, v in _branch_pairs_approx(p, digits + GUARD_DIGITS + 2)
    ]


def enumerate_branches(d: DepressedCubic, p: DenestedPair, digits: int = 10) -> List[ComplexDecimal]:
    """All three roots from the cube-root branches of a verified denesting (D < 0)."""
    _check_digits(digits)
    if d.discriminant >= 0:
        raise CubicError("enumerate_branches needs a³ + b² < 0")
    if not denest_verify(p, d):
        raise CubicError("denesting pair does not satisfy the identities")
    roots = [
        (u[0] - v[0], u[1] - v[1])
        for u, v in _branch_pairs_approx(p, digits + GUARD_DIGITS + 2)
    ]
    out = [ComplexDecimal.from_rationals(re, im, digits) for re, im in roots]
    bound = Fraction(1, 10 ** (digits - 1))
    if any(abs(im) > bound for _, im in roots):
        raise InvariantViolation("branch root is not real")
    return out


# -- numeric fallbacks ------------------------------------------------------------

def _bisect(d: DepressedCubic, lo: Fraction, hi: Fraction, prec: int) -> Fraction:
    """Root of ``d`` in ``[lo, hi]`` given a sign change, to within ``10**-prec``."""
    flo = d(lo)
    if flo == 0:
        return lo
    width = Fraction(1, 10**prec)
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = d(mid)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def _three_real_roots_approx(d: DepressedCubic, prec: int) -> List[Fraction]:
    """Bracket the roots with the critical points +-sqrt(-a); needs D < 0."""
    bound = 1 + max(abs(3 * d.a), abs(2 * d.b))
    extra = 0
    while True:
        c = sqrt_approx(-d.a, prec + extra)
        # local max at -c, local min at +c
        if d(-c) > 0 and d(c) < 0:
            break
        extra += 10
    return [
        _bisect(d, -bound, -c, prec),
        _bisect(d, -c, c, prec),
        _bisect(d, c, bound, prec),
    ]


# -- orchestration ------------------------------------------------------------------

def _numeric_from_exact(value, shift, digits) -> ComplexDecimal:
    prec = digits + GUARD_DIGITS
    if isinstance(value, QuadExt):
        re, im = quadext_approx(value, prec)
        return ComplexDecimal.from_rationals(re + shift, im, digits)
    return ComplexDecimal.from_rationals(value + shift, 0, digits)


def _exact_root(value, shift, provenance, digits) -> Root:
    if isinstance(value, QuadExt) and value.radicand >= 0:
        r = sqrt_rational_exact(value.radicand)
        if r is not None:
            value = value.t + value.s * r
    return Root(value + shift, _numeric_from_exact(value, shift, digits), provenance)


def solve(cubic: Union[GeneralCubic, DepressedCubic], digits: int = 10) -> SolveResult:
    """Solve a cubic, exactly where a rational root exists, numerically otherwise."""
    _check_digits(digits)
    if isinstance(cubic, GeneralCubic):
        d, shift = depress(cubic)
        equation = cubic
    else:
        d, shift, equation = cubic, Fraction(0), None
    cls = classify(d)
    result = SolveResult(cls, d, shift, [], digits, equation=equation)

    if cls is Classification.REPEATED:
        _solve_repeated(d, result)
        return result

    if cls is Classification.ONE_REAL:
        result.cardano = cardano_numeric(d, digits)

    x0 = rational_root_search(d)
    if x0 is None:
        _solve_numeric(d, result)
        return result

    pair = denest(d, x0)
    if not denest_verify(pair, d) or pair.root != x0:
        raise InvariantViolation(f"denesting of root {x0} failed verification")
    result.denesting = pair
    result.roots.append(_exact_root(x0, shift, PROV_RATIONAL, digits))
    _, others = deflate(d, x0)
    for q in others:
        result.roots.append(_exact_root(q, shift, PROV_DEFLATE, digits))

    bound = Fraction(1, 10 ** (digits - 1))
    if cls is Classification.ONE_REAL:
        prec = digits + GUARD_DIGITS
        w1, w2 = _cardano_approx(d, prec)
        w3, _ = quadext_approx(pair.w3, prec)
        w4, _ = quadext_approx(pair.w4, prec)
        if abs(w3 - w1) > bound or abs(w4 - w2) > bound:
            raise InvariantViolation("denested surds disagree with Cardano's cube roots")
    else:
        result.branches = enumerate_branches(d, pair, digits)
        targets = [x0] + [quadext_approx(q, digits + GUARD_DIGITS)[0] for q in others]
        for br in result.branches:
            if min(abs(br.re.to_fraction() - x) for x in targets) > bound:
                raise InvariantViolation("branch root matches no deflated root")
    return result


def _solve_repeated(d: DepressedCubic, result: SolveResult) -> None:
    # (x - 2c)(x + c)^2 with c^3 = b and c^2 = -a; c = -b/a is rational whenever a != 0
    c = cbrt_rational_exact(d.b)
    if c is None:
        raise InvariantViolation("D = 0 but b is not a rational cube")
    shift, digits = result.shift, result.digits
    result.roots.append(_exact_root(2 * c, shift, PROV_REPEATED, digits))
    result.roots.append(_exact_root(-c, shift, PROV_REPEATED, digits))
    result.roots.append(_exact_root(-c, shift, PROV_REPEATED, digits))


def _solve_numeric(d: DepressedCubic, result: SolveResult) -> None:
    digits, shift = result.digits, result.shift
    prec = digits + GUARD_DIGITS
    if result.classification is Classification.ONE_REAL:
        hi = 2 * prec
        w1, w2 = _cardano_approx(d, hi)
        x0 = w1 - w2
        result.roots.append(Root(None, ComplexDecimal.from_rationals(x0 + shift, 0, digits), PROV_CARDANO))
        # x^2 + x0 x + (x0^2 + 3a): roots -x0/2 +- (i/2) sqrt(3 x0^2 + 12 a)
        im = signed_sqrt_approx(Fraction(1, 2), 3 * x0 * x0 + 12 * d.a, prec)
        for sign in (1, -1):
            result.roots.append(
                Root(None, ComplexDecimal.from_rationals(-x0 / 2 + shift, sign * im, digits), PROV_CARDANO_DEFLATE)
            )
        try:
            result.general_denesting = denest_real_general(d, digits)
        except DegenerateError as exc:
            result.notes.append(str(exc))
    else:
        for x in _three_real_roots_approx(d, prec):
            result.roots.append(Root(None, ComplexDecimal.from_rationals(x + shift, 0, digits), PROV_BISECTION))
