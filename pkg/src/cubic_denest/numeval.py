"""Fixed-point decimal evaluation without machine floats.

Every evaluator works on exact rationals: an irrational quantity is replaced by
a truncated integer root at ``k + GUARD_DIGITS`` decimals and then rounded once,
half away from zero, to ``k`` decimals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact_arith import as_rational, icbrt_floor, isqrt_floor
from .quad_field import QuadExt

GUARD_DIGITS = 5


def round_half_away(q: Fraction) -> int:
    """Nearest integer to ``q``, ties away from zero."""
    n, d = abs(q.numerator), q.denominator
    r = (2 * n + d) // (2 * d)
    return r if q >= 0 else -r


@dataclass(frozen=True)
class FixedDecimal:
    """``mantissa * 10**(-scale)``"""

    mantissa: int
    scale: int

    @classmethod
    def from_rational(cls, q, k: int) -> "FixedDecimal":
        q = _to_fraction(q)
        return cls(round_half_away(q * 10**k), k)

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 10**self.scale)

    def rounded(self, k: int) -> "FixedDecimal":
        return FixedDecimal.from_rational(self.to_fraction(), k)

    def _align(self, other):
        other = _to_fixed(other)
        scale = max(self.scale, other.scale)
        return (
            self.mantissa * 10 ** (scale - self.scale),
            other.mantissa * 10 ** (scale - other.scale),
            scale,
        )

    def __add__(self, other):
        m1, m2, scale = self._align(other)
        return FixedDecimal(m1 + m2, scale)

    __radd__ = __add__

    def __sub__(self, other):
        m1, m2, scale = self._align(other)
        return FixedDecimal(m1 - m2, scale)

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return FixedDecimal(-self.mantissa, self.scale)

    def __abs__(self):
        return FixedDecimal(abs(self.mantissa), self.scale)

    def __mul__(self, other):
        other = _to_fixed(other)
        return FixedDecimal(self.mantissa * other.mantissa, self.scale + other.scale)

    __rmul__ = __mul__

    # comparisons are by value, so 0.50 == 0.5
    def __eq__(self, other):
        try:
            return self.to_fraction() == _to_fraction(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.to_fraction())

    def __lt__(self, other):
        return self.to_fraction() < _to_fraction(other)

    def __le__(self, other):
        return self.to_fraction() <= _to_fraction(other)

    def __gt__(self, other):
        return self.to_fraction() > _to_fraction(other)

    def __ge__(self, other):
        return self.to_fraction() >= _to_fraction(other)

    def __str__(self):
        sign = "-" if self.mantissa < 0 else ""
        digits = str(abs(self.mantissa))
        if self.scale == 0:
            return sign + digits
        digits = digits.rjust(self.scale + 1, "0")
        return f"{sign}{digits[:-self.scale]}.{digits[-self.scale:]}"

    def __repr__(self):
        return f"FixedDecimal('{self}')"


@dataclass(frozen=True)
class ComplexDecimal:
    re: FixedDecimal
    im: FixedDecimal

    @classmethod
    def from_rationals(cls, re, im, k: int) -> "ComplexDecimal":
        return cls(FixedDecimal.from_rational(re, k), FixedDecimal.from_rational(im, k))

    @property
    def is_real(self) -> bool:
        return self.im.mantissa == 0

    def abs2(self) -> Fraction:
        re, im = self.re.to_fraction(), self.im.to_fraction()
        return re * re + im * im

    def __str__(self):
        if self.is_real:
            return str(self.re)
        sign = "-" if self.im.mantissa < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)}i"

    def __repr__(self):
        return f"ComplexDecimal('{self}')"


Number = Union[int, Fraction, FixedDecimal]


def _to_fraction(q) -> Fraction:
    if isinstance(q, FixedDecimal):
        return q.to_fraction()
    return as_rational(q)


def _to_fixed(q) -> FixedDecimal:
    if isinstance(q, FixedDecimal):
        return q
    q = as_rational(q)
    if q.denominator != 1:
        raise TypeError("only integers mix with FixedDecimal implicitly")
    return FixedDecimal(q.numerator, 0)


# -- truncated approximations: |result - exact| < 10**-prec ------------------

def sqrt_approx(q, prec: int) -> Fraction:
    q = _to_fraction(q)
    if q < 0:
        raise ValueError("square root of a negative number")
    scaled = q.numerator * 10 ** (2 * prec) // q.denominator
    return Fraction(isqrt_floor(scaled), 10**prec)


def cbrt_approx(q, prec: int) -> Fraction:
    """Real cube root, sign preserving, truncated toward zero."""
    q = _to_fraction(q)
    scaled = abs(q.numerator) * 10 ** (3 * prec) // q.denominator
    r = Fraction(icbrt_floor(scaled), 10**prec)
    return r if q >= 0 else -r


def signed_sqrt_approx(coeff: Fraction, radicand: Fraction, prec: int) -> Fraction:
    """``coeff * sqrt(radicand)`` for ``radicand >= 0`` to within ``10**-prec``."""
    v = sqrt_approx(coeff * coeff * radicand, prec)
    return v if coeff >= 0 else -v


# -- public evaluators ---------------------------------------------------------

def eval_rational(q, k: int) -> FixedDecimal:
    return FixedDecimal.from_rational(q, k)


def eval_sqrt(q, k: int) -> FixedDecimal:
    """``sqrt(q)`` rounded to ``k`` decimals; error at most ``10**-k``."""
    return FixedDecimal.from_rational(sqrt_approx(q, k + GUARD_DIGITS), k)


def eval_cbrt(q: Number, k: int) -> FixedDecimal:
    return FixedDecimal.from_rational(cbrt_approx(q, k + GUARD_DIGITS), k)


def quadext_approx(x: QuadExt, prec: int):
    """``(re, im)`` rationals within ``10**-prec`` of the value of ``x``."""
    if x.radicand >= 0:
        return x.t + signed_sqrt_approx(x.s, x.radicand, prec), Fraction(0)
    return x.t, signed_sqrt_approx(x.s, -x.radicand, prec)


def eval_quadext(x: QuadExt, k: int) -> Union[FixedDecimal, ComplexDecimal]:
    """Real decimal when the radicand is non-negative, complex otherwise."""
    re, im = quadext_approx(x, k + GUARD_DIGITS)
    if x.radicand >= 0:
        return FixedDecimal.from_rational(re, k)
    return ComplexDecimal.from_rationals(re, im, k)


def residual(d, x, k: int = 30) -> FixedDecimal:
    """``|x^3 + 3ax - 2b|`` at a decimal (or complex decimal) point.

    The polynomial value is exact; only the modulus of a complex value is
    rounded, to ``k`` decimals.
    """
    if isinstance(x, ComplexDecimal):
        re, im = x.re.to_fraction(), x.im.to_fraction()
        # (re + i im)^3 + 3a(re + i im) - 2b
        vr = re**3 - 3 * re * im * im + 3 * d.a * re - 2 * d.b
        vi = 3 * re * re * im - im**3 + 3 * d.a * im
        return eval_sqrt(vr * vr + vi * vi, k)
    v = d(_to_fraction(x))
    return FixedDecimal.from_rational(abs(v), k)
