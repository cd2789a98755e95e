"""Exact Gaussian-rational scalars and the lattice constants of a fixed q.

Every coefficient in the library lives in Q(i): a pair of
:class:`fractions.Fraction` values.  The lattice parameter is stored as
``t = q**(1/2)`` so that all of alpha_n, gamma_n stay rational.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

__all__ = [
    "Scalar",
    "QContext",
    "ScalarLike",
    "as_scalar",
    "format_rational",
    "parse_rational",
    "alpha_n",
    "gamma_n",
    "gamma_factorial",
]

ScalarLike = Union["Scalar", int, Fraction]

_ZERO = Fraction(0)


class Scalar:
    """An element re + i*im of the Gaussian rationals.

    Instances are immutable and hashable; ``Scalar(3) == 3`` holds so
    plain ints and Fractions mix freely in arithmetic.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _of(cls, re: Fraction, im: Fraction) -> "Scalar":
        s = object.__new__(cls)
        object.__setattr__(s, "re", re)
        object.__setattr__(s, "im", im)
        return s

    # -- construction -----------------------------------------------------

    @classmethod
    def i(cls) -> "Scalar":
        return cls._of(_ZERO, Fraction(1))

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse ``"3/4"``, ``"-2i"``, ``"1/2+3/5i"``, ``"i"`` and similar."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty scalar literal")
        if s.endswith("i"):
            body = s[:-1]
            cut = max(body.rfind("+"), body.rfind("-"))
            if cut > 0:
                real_part, imag_part = body[:cut], body[cut:]
            else:
                real_part, imag_part = "", body
            if imag_part in ("", "+"):
                imag_part = "1"
            elif imag_part == "-":
                imag_part = "-1"
            imag_part = imag_part.rstrip("*")
            try:
                return cls(parse_rational(real_part) if real_part else 0, parse_rational(imag_part))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"bad scalar literal {text!r}") from exc
        try:
            return cls(parse_rational(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar literal {text!r}") from exc

    @classmethod
    def from_json(cls, obj) -> "Scalar":
        if isinstance(obj, dict):
            return cls(parse_rational(str(obj["re"])), parse_rational(str(obj.get("im", "0"))))
        if isinstance(obj, (int, str)):
            return cls.parse(str(obj))
        raise ValueError(f"cannot read scalar from {obj!r}")

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if type(other) is Scalar:
            return Scalar._of(self.re + other.re, self.im + other.im)
        if isinstance(other, Rational):
            return Scalar._of(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is Scalar:
            return Scalar._of(self.re - other.re, self.im - other.im)
        if isinstance(other, Rational):
            return Scalar._of(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Rational):
            return Scalar._of(other - self.re, -self.im)
        return NotImplemented

    def __neg__(self):
        return Scalar._of(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if type(other) is Scalar:
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return Scalar._of(a * c, _ZERO)
            return Scalar._of(a * c - b * d, a * d + b * c)
        if isinstance(other, Rational):
            return Scalar._of(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero scalar")
            return Scalar._of(1 / a, _ZERO)
        n = a * a + b * b
        return Scalar._of(a / n, -b / n)

    def __truediv__(self, other):
        if type(other) is Scalar:
            return self * other.inverse()
        if isinstance(other, Rational):
            if not other:
                raise ZeroDivisionError("division of scalar by zero")
            return Scalar._of(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar._of(Fraction(1), _ZERO)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Scalar":
        return Scalar._of(self.re, -self.im)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if type(other) is Scalar:
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.im:
            return format_rational(self.re)
        im = self.im
        if im == 1:
            ims = "i"
        elif im == -1:
            ims = "-i"
        else:
            ims = format_rational(im) + "i"
        if not self.re:
            return ims
        sign = "" if ims.startswith("-") else "+"
        return f"{format_rational(self.re)}{sign}{ims}"

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"

    def approx(self, digits: int = 6) -> str:
        """Decimal rendering for human-readable tables (never for JSON)."""
        re_s = f"{float(self.re):.{digits}g}"
        if not self.im:
            return re_s
        return f"{re_s}{float(self.im):+.{digits}g}i"


ZERO = Scalar(0)
ONE = Scalar(1)


def as_scalar(x) -> Scalar:
    if type(x) is Scalar:
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar._of(Fraction(x), _ZERO)
    if isinstance(x, str):
        return Scalar.parse(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")


def format_rational(r: Fraction) -> str:
    """Canonical "p/q" form; just "p" when the denominator is 1."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"bad rational literal {text!r}")
    return Fraction(text)


@dataclass(frozen=True)
class QContext:
    """Fixes the lattice through t = q**(1/2), with 0 < t < 1."""

    t: Fraction

    def __post_init__(self):
        t = Fraction(self.t)
        object.__setattr__(self, "t", t)
        if not 0 < t < 1:
            raise ValueError(f"lattice parameter t must satisfy 0 < t < 1, got {t}")

    @classmethod
    def parse(cls, text: str) -> "QContext":
        return cls(parse_rational(text))

    @property
    def q(self) -> Fraction:
        return self.t * self.t

    @property
    def alpha(self) -> Scalar:
        return alpha_n(self, 1)

    def q_pow(self, k: int) -> Scalar:
        """q**k for any integer k."""
        return Scalar(self.q ** k)

    def t_pow(self, k: int) -> Scalar:
        """q**(k/2) for any integer k."""
        return Scalar(self.t ** k)


@lru_cache(maxsize=None)
def _alpha(t: Fraction, n: int) -> Scalar:
    return Scalar((t ** n + t ** -n) / 2)


@lru_cache(maxsize=None)
def _gamma(t: Fraction, n: int) -> Scalar:
    return Scalar((t ** n - t ** -n) / (t - 1 / t))


def alpha_n(ctx: QContext, n: int) -> Scalar:
    """(q^{n/2} + q^{-n/2}) / 2.  Even in n, so alpha_{-1} equals alpha."""
    return _alpha(ctx.t, n)


def gamma_n(ctx: QContext, n: int) -> Scalar:
    """(q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}); odd in n, gamma_{-1} = -1."""
    return _gamma(ctx.t, n)


@lru_cache(maxsize=None)
def _gamma_factorial(t: Fraction, n: int) -> Scalar:
    if n == 0:
        return ONE
    return _gamma_factorial(t, n - 1) * _gamma(t, n)


def gamma_factorial(ctx: QContext, n: int) -> Scalar:
    if n < 0:
        raise ValueError("gamma_factorial needs n >= 0")
    return _gamma_factorial(ctx.t, n)
