"""Exact integer and rational primitives.

Rationals are :class:`fractions.Fraction` values, which are kept in lowest
terms with a positive denominator, so structural equality is value equality.
Nothing in this module touches floating point.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Optional, Tuple, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

#: trial-division bound used by :func:`squarefree_decompose`
FACTOR_BOUND = 10**6

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*\Z")


def rat_normalize(num: int, den: int) -> Fraction:
    """Canonical ``num/den``: reduced, positive denominator, zero as 0/1."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"``, ``"-p"`` or ``"p/q"``; decimals and floats are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rat_normalize(num, den)


def isqrt_floor(n: int) -> int:
    if n < 0:
        raise ValueError("square root of a negative integer")
    return math.isqrt(n)


def icbrt_floor(n: int) -> int:
    """Largest ``r >= 0`` with ``r**3 <= n`` for ``n >= 0``."""
    if n < 0:
        raise ValueError("icbrt_floor expects a non-negative integer")
    if n < 8:
        return 1 if n else 0
    # start above the root; the integer Newton step then decreases monotonically
    r = 1 << ((n.bit_length() + 2) // 3)
    while True:
        nxt = (2 * r + n // (r * r)) // 3
        if nxt >= r:
            break
        r = nxt
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def sqrt_rational_exact(q: RationalLike) -> Optional[Fraction]:
    """Rational square root of ``q`` or ``None`` when it is irrational."""
    q = as_rational(q)
    if q < 0:
        raise ValueError("square root of a negative rational")
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def cbrt_rational_exact(q: RationalLike) -> Optional[Fraction]:
    """Rational (sign-preserving) cube root of ``q`` or ``None``."""
    q = as_rational(q)
    rn = icbrt_floor(abs(q.numerator))
    rd = icbrt_floor(q.denominator)
    if rn**3 == abs(q.numerator) and rd**3 == q.denominator:
        return Fraction(rn if q >= 0 else -rn, rd)
    return None


def _square_split(n: int, bound: int) -> Tuple[int, int]:
    """Split ``n > 0`` as ``root**2 * rest`` pulling squares of primes below ``bound``."""
    root, rest = 1, 1
    p = 2
    while p <= bound and p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            root *= p ** (e // 2)
            if e % 2:
                rest *= p
        p += 1 if p == 2 else 2
    # whatever survives is a prime, a product of large primes, or a large square
    r = math.isqrt(n)
    if r * r == n:
        root *= r
    else:
        rest *= n
    return root, rest


def squarefree_decompose(q: RationalLike, bound: int = FACTOR_BOUND) -> Tuple[Fraction, int]:
    """Write ``q > 0`` as ``coeff**2 * radicand`` with an integer radicand.

    >>> squarefree_decompose(Fraction(168259, 6912))
    (Fraction(43, 144), 273)

    The identity holds exactly for every input; only the squarefreeness of the
    radicand depends on ``bound``.
    """
    q = as_rational(q)
    if q <= 0:
        raise ValueError("squarefree_decompose expects a positive rational")
    nr, nrest = _square_split(q.numerator, bound)
    dr, drest = _square_split(q.denominator, bound)
    # n/d = (nr/dr)^2 * nrest/drest = (nr/(dr*drest))^2 * nrest*drest
    return Fraction(nr, dr * drest), nrest * drest
