"""Scalar arithmetic for the two coefficient modes.

Float mode uses the builtin ``complex``.  Exact mode uses Gaussian
rationals: numbers a + bi whose parts are arbitrary-precision
:class:`fractions.Fraction` values, closed under +, -, *, / with no
rounding anywhere.
"""
from __future__ import annotations

import math
import re as _regex
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError

_FractionLike = Union[int, Fraction]


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex scalar with rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re: _FractionLike | str = 0, im: _FractionLike | str = 0) -> "GaussianRational":
        return GaussianRational(Fraction(re), Fraction(im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        # |z|^2, exact.
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = other.norm2()
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __abs__(self) -> float:
        return math.sqrt(float(self.norm2()))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


def _coerce(x) -> "GaussianRational":
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x), Fraction(0))
    return NotImplemented


EXACT_ZERO = GaussianRational.of(0)
EXACT_ONE = GaussianRational.of(1)
EXACT_I = GaussianRational.of(0, 1)

Scalar = Union[complex, GaussianRational]


def conj(x: Scalar) -> Scalar:
    return x.conjugate()


def is_exact(x: Scalar) -> bool:
    return isinstance(x, GaussianRational)


def to_complex(x: Scalar) -> complex:
    return complex(x)


def zero(exact: bool) -> Scalar:
    return EXACT_ZERO if exact else 0j


def one(exact: bool) -> Scalar:
    return EXACT_ONE if exact else 1 + 0j


def from_int(n: int, exact: bool) -> Scalar:
    return GaussianRational.of(n) if exact else complex(n)


def abs2(x: Scalar) -> float:
    """|x|^2 as a float, for magnitude comparisons in either mode."""
    if isinstance(x, GaussianRational):
        return float(x.norm2())
    return x.real * x.real + x.imag * x.imag


# Coefficient token grammar.  Float mode: "re" or "re+imi" / "re-imi" with
# ordinary float literals.  Exact mode: rational literals "p", "p/q",
# "p/q+r/si" and the obvious sign variants; decimal points are rejected.
_FLOAT = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_RAT = r"[+-]?\d+(?:/\d+)?"
_FLOAT_PAIR = _regex.compile(rf"^({_FLOAT})(([+-])({_FLOAT}))?i?$")
_RAT_PAIR = _regex.compile(rf"^({_RAT})(([+-])(\d+(?:/\d+)?))?i?$")


def parse_scalar(token: str, exact: bool) -> Scalar:
    """Parse one coefficient token in the given mode.

    Raises ParseError on malformed tokens or on mode mismatch (a decimal
    literal in exact mode).
    """
    text = token.strip()
    if not text:
        raise ParseError("empty coefficient token")
    if exact:
        if "." in text or "e" in text or "E" in text:
            raise ParseError(f"decimal literal {text!r} not allowed in exact mode")
        m = _RAT_PAIR.match(text)
        if not m:
            raise ParseError(f"malformed exact coefficient {text!r}")
        first, has_pair, sign, second = m.group(1), m.group(2), m.group(3), m.group(4)
        if has_pair:
            im = Fraction(second)
            return GaussianRational(Fraction(first), -im if sign == "-" else im)
        if text.endswith("i"):
            return GaussianRational(Fraction(0), Fraction(first))
        return GaussianRational(Fraction(first), Fraction(0))
    m = _FLOAT_PAIR.match(text)
    if not m:
        raise ParseError(f"malformed coefficient {text!r}")
    first, has_pair, sign, second = m.group(1), m.group(2), m.group(3), m.group(4)
    if has_pair:
        im = float(second)
        return complex(float(first), -im if sign == "-" else im)
    if text.endswith("i"):
        return complex(0.0, float(first))
    return complex(float(first), 0.0)


def format_scalar(x: Scalar) -> str:
    if isinstance(x, GaussianRational):
        return str(x)
    sign = "-" if x.imag < 0 else "+"
    return f"{x.real:g}{sign}{abs(x.imag):g}i"
