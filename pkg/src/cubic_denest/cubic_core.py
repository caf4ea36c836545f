"""Cubic data model: depressed form ``x^3 + 3ax = 2b``, classification,
rational root search and deflation."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Tuple

from sympy import divisors

from .errors import NotACubicError, NotARootError
from .exact_arith import as_rational, sqrt_rational_exact
from .quad_field import QuadExt


@dataclass(frozen=True)
class GeneralCubic:
    """``c3*x^3 + c2*x^2 + c1*x + c0 = 0``"""

    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        for name in ("c3", "c2", "c1", "c0"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.c3 == 0:
            raise NotACubicError("not a cubic: leading coefficient is zero")

    @property
    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.c3, self.c2, self.c1, self.c0

    def __call__(self, x):
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0


@dataclass(frozen=True)
class DepressedCubic:
    """``x^3 + 3*a*x = 2*b``"""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))

    @property
    def discriminant(self) -> Fraction:
        return self.a**3 + self.b**2

    def __call__(self, x):
        """Value of ``x^3 + 3ax - 2b``; works for Fractions and QuadExt alike."""
        return x * x * x + 3 * self.a * x - 2 * self.b

    def as_general(self) -> GeneralCubic:
        return GeneralCubic(1, 0, 3 * self.a, -2 * self.b)


class Classification(enum.Enum):
    ONE_REAL = "one-real"
    REPEATED = "repeated"
    THREE_REAL = "three-real"


def depress(g: GeneralCubic) -> Tuple[DepressedCubic, Fraction]:
    """Tschirnhaus shift. ``x = y + shift`` solves ``g`` iff ``y`` solves the result."""
    p, q, r = g.c2 / g.c3, g.c1 / g.c3, g.c0 / g.c3
    shift = -p / 3
    # y^3 + P y + Q with P = q - p^2/3, Q = 2p^3/27 - pq/3 + r
    big_p = q - p * p / 3
    big_q = 2 * p**3 / 27 - p * q / 3 + r
    return DepressedCubic(big_p / 3, -big_q / 2), shift


def discriminant(d: DepressedCubic) -> Fraction:
    return d.discriminant


def classify(d: DepressedCubic) -> Classification:
    disc = d.discriminant
    if disc > 0:
        return Classification.ONE_REAL
    if disc == 0:
        return Classification.REPEATED
    return Classification.THREE_REAL


def integer_coefficients(d: DepressedCubic) -> Tuple[int, int, int]:
    """Primitive integer ``(lead, lin, const)`` proportional to ``x^3 + 3ax - 2b``."""
    c1, c0 = 3 * d.a, -2 * d.b
    m = lcm(c1.denominator, c0.denominator)
    lead, lin, const = m, int(c1 * m), int(c0 * m)
    g = gcd(gcd(lead, lin), const)
    return lead // g, lin // g, const // g


def rational_roots(d: DepressedCubic) -> List[Fraction]:
    """All distinct rational roots, found by the divisor method.

    Candidates ``p/q`` run over increasing ``q | lead`` and increasing
    ``p | const``, each with both signs, and are tested by exact substitution.
    """
    lead, lin, const = integer_coefficients(d)
    if const == 0:
        found = [Fraction(0)]
        rest = Fraction(-lin, lead)
        if rest > 0:
            r = sqrt_rational_exact(rest)
            if r is not None:
                found += [r, -r]
        return found
    found: List[Fraction] = []
    # lead*p^3 = -q^2*(lin*p + const*q) with gcd(p, q) = 1 forces q^2 | lead
    dens = [q for q in divisors(lead) if lead % (q * q) == 0]
    nums = divisors(abs(const))
    for q in dens:
        q2, q3 = q * q, q * q * q
        for p in nums:
            if gcd(p, q) != 1:
                continue
            for sp in (p, -p):
                if lead * sp**3 + lin * sp * q2 + const * q3 == 0:
                    found.append(Fraction(sp, q))
        if len(found) == 3:
            break
    return found


def _root_key(x: Fraction):
    return abs(x.numerator) + x.denominator, x < 0


def rational_root_search(d: DepressedCubic) -> Optional[Fraction]:
    """A rational root of ``d`` or ``None``.

    With several rational roots the one of smallest ``|num| + den`` wins,
    positive before negative.
    """
    roots = rational_roots(d)
    if not roots:
        return None
    return min(roots, key=_root_key)


def deflate(d: DepressedCubic, x0) -> Tuple[Tuple[Fraction, Fraction], Tuple[QuadExt, QuadExt]]:
    """Split off ``(x - x0)``.

    Returns the quadratic ``x^2 + c1*x + c0`` as ``(c1, c0)`` and its two roots
    ``-x0/2 +- (1/2)*sqrt(-3*x0^2 - 12a)`` over that raw radicand.
    """
    x0 = as_rational(x0)
    if d(x0) != 0:
        raise NotARootError(f"not a root: {x0}")
    c1, c0 = x0, x0 * x0 + 3 * d.a
    radicand = -3 * x0 * x0 - 12 * d.a
    half = Fraction(1, 2)
    return (c1, c0), (QuadExt(radicand, half, -x0 / 2), QuadExt(radicand, -half, -x0 / 2))
