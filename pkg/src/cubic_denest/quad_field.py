"""Arithmetic in Q(sqrt(D)) for a fixed rational radicand D.

A :class:`QuadExt` ``t + s*sqrt(D)`` keeps D raw (e.g. 168259/6912); the
squarefree form is only produced for display.  For ``D < 0`` the value is read
as the complex number ``t + s*i*sqrt(|D|)``; the ring operations do not care.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import RadicandMismatchError
from .exact_arith import as_rational


@dataclass(frozen=True)
class QuadExt:
    radicand: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radicand", as_rational(self.radicand))
        object.__setattr__(self, "s", as_rational(self.s))
        object.__setattr__(self, "t", as_rational(self.t))

    @classmethod
    def rational(cls, value, radicand) -> "QuadExt":
        return cls(radicand, Fraction(0), value)

    @property
    def is_rational(self) -> bool:
        return self.s == 0

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.radicand != self.radicand:
                raise RadicandMismatchError(
                    f"radicand mismatch: {self.radicand} vs {other.radicand}"
                )
            return other
        return QuadExt(self.radicand, Fraction(0), as_rational(other))

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return QuadExt(self.radicand, self.s + o.s, self.t + o.t)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(self.radicand, -self.s, -self.t)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return QuadExt(self.radicand, self.s - o.s, self.t - o.t)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        d = self.radicand
        return QuadExt(
            d,
            self.t * o.s + self.s * o.t,
            self.t * o.t + self.s * o.s * d,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = QuadExt.rational(1, self.radicand)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "QuadExt":
        return QuadExt(self.radicand, -self.s, self.t)

    def norm(self) -> Fraction:
        return self.t * self.t - self.s * self.s * self.radicand

    def __repr__(self):
        return f"QuadExt({self.t} + {self.s}*sqrt({self.radicand}))"


Operand = Union[QuadExt, int, Fraction]


def qe_add(x: QuadExt, y: Operand) -> QuadExt:
    return x + y


def qe_neg(x: QuadExt) -> QuadExt:
    return -x


def qe_sub(x: QuadExt, y: Operand) -> QuadExt:
    return x - y


def qe_mul(x: QuadExt, y: Operand) -> QuadExt:
    return x * y


def qe_conj(x: QuadExt) -> QuadExt:
    return x.conj()


def qe_cube(x: QuadExt) -> QuadExt:
    """Closed-form cube: ``(3s^2tD + t^3) + (s^3D + 3st^2) sqrt(D)``."""
    s, t, d = x.s, x.t, x.radicand
    return QuadExt(d, s**3 * d + 3 * s * t * t, 3 * s * s * t * d + t**3)
