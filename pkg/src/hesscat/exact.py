"""Exact scalar kernel.

Python ``int`` is already an arbitrary-precision integer and
``fractions.Fraction`` keeps rationals in lowest terms with a positive
denominator, so both are used directly as the ``Integer`` and ``Rational``
types of this package. This module adds the binomial kernel (with the
path-counting zero convention) and the decimal/``p/q`` string codecs used
by every external format.
"""
from __future__ import annotations

import math
from fractions import Fraction

Integer = int
Rational = Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k), and 0 whenever k < 0, k > n or n < 0.

    Negative upper indices give 0 rather than the generalized
    ``(-1)**k * C(k - n - 1, k)``: matrix entries are path counts.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def format_integer(value: int) -> str:
    return str(int(value))


def parse_integer(text: str) -> int:
    text = text.strip()
    # int() also accepts "1_000" and surrounding whitespace; only plain decimals are valid here
    body = text[1:] if text[:1] in "+-" else text
    if not body.isdigit() or not body.isascii():
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(text)


def format_rational(value: Fraction | int) -> str:
    """Render as ``"p/q"``, or plain ``"p"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    if not sep:
        return Fraction(parse_integer(num))
    d = parse_integer(den)
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(parse_integer(num), d)
