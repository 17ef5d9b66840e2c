"""Exact scalar types: rationals, the neutrosophic ring Q(I), and fuzzy-neutrosophic values.

Rationals are plain ``fractions.Fraction``. Neutrosophic scalars are pairs
(a, b) standing for a + bI with I*I = I. Fuzzy-neutrosophic values live in
[0, 1] together with graded indeterminates tI, t in (0, 1], and combine only
through ``fuzzy_min`` / ``fuzzy_max``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError

RATIONAL = "rational"
NEUTROSOPHIC = "neutrosophic"
FUZZY = "fuzzy"
RINGS = (RATIONAL, NEUTROSOPHIC, FUZZY)

_RATIONAL_TOKEN = re.compile(r"-?\d+(?:/\d+|\.\d+)?")


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def parse_rational(token: str) -> Fraction:
    if not _RATIONAL_TOKEN.fullmatch(token):
        raise ParseError(f"bad rational token {token!r}")
    if "/" in token and int(token.split("/")[1]) == 0:
        raise ParseError(f"zero denominator in {token!r}")
    # Fraction parses "-3/4" and "0.25" exactly.
    return Fraction(token)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _terminating_decimal(q: Fraction) -> str | None:
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return None
    places = max(twos, fives)
    if places == 0:
        return str(q.numerator)
    scaled = abs(q.numerator) * 10**places // q.denominator
    whole, frac = divmod(scaled, 10**places)
    sign = "-" if q < 0 else ""
    return f"{sign}{whole}.{frac:0{places}d}"


@dataclass(frozen=True, eq=False)
class NeutrosophicScalar:
    """a + bI with I*I = I."""

    real: Fraction
    indeterminate: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "real", to_rational(self.real))
        object.__setattr__(self, "indeterminate", to_rational(self.indeterminate))

    @classmethod
    def coerce(cls, x) -> NeutrosophicScalar:
        if isinstance(x, NeutrosophicScalar):
            return x
        return cls(to_rational(x))

    def is_zero(self) -> bool:
        return self.real == 0 and self.indeterminate == 0

    def __eq__(self, other):
        try:
            o = NeutrosophicScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.real == o.real and self.indeterminate == o.indeterminate

    def __hash__(self):
        if self.indeterminate == 0:
            return hash(self.real)
        return hash((self.real, self.indeterminate))

    def __add__(self, other):
        try:
            o = NeutrosophicScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return NeutrosophicScalar(self.real + o.real, self.indeterminate + o.indeterminate)

    __radd__ = __add__

    def __neg__(self):
        return NeutrosophicScalar(-self.real, -self.indeterminate)

    def __sub__(self, other):
        try:
            o = NeutrosophicScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return NeutrosophicScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            o = NeutrosophicScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.real, self.indeterminate, o.real, o.indeterminate
        return NeutrosophicScalar(a * c, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __repr__(self):
        return f"NeutrosophicScalar({format_neutro(self)})"


I = NeutrosophicScalar(0, 1)


def neutro_add(x: NeutrosophicScalar, y: NeutrosophicScalar) -> NeutrosophicScalar:
    return x + y


def neutro_mul(x: NeutrosophicScalar, y: NeutrosophicScalar) -> NeutrosophicScalar:
    return x * y


def ev0(x: NeutrosophicScalar) -> Fraction:
    """Ring homomorphism sending I to 0."""
    return x.real


def ev1(x: NeutrosophicScalar) -> Fraction:
    """Ring homomorphism sending I to 1."""
    return x.real + x.indeterminate


def parse_neutro(token: str) -> NeutrosophicScalar:
    if not token.endswith("I"):
        return NeutrosophicScalar(parse_rational(token))
    body = token[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0:
        real_tok, coef_tok = body[:split], body[split:]
    else:
        real_tok, coef_tok = "", body
    if coef_tok in ("", "+"):
        coef = Fraction(1)
    elif coef_tok == "-":
        coef = Fraction(-1)
    else:
        coef = parse_rational(coef_tok.lstrip("+") if coef_tok.startswith("+") else coef_tok)
    real = parse_rational(real_tok) if real_tok else Fraction(0)
    return NeutrosophicScalar(real, coef)


def format_neutro(x: NeutrosophicScalar) -> str:
    a, b = x.real, x.indeterminate
    if b == 0:
        return format_rational(a)
    if b == 1:
        coef = ""
    elif b == -1:
        coef = "-"
    else:
        coef = format_rational(b)
    if a == 0:
        return f"{coef}I"
    if b > 0:
        return f"{format_rational(a)}+{coef}I"
    return f"{format_rational(a)}{coef}I"


REAL = "real"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class FuzzyNeutroValue:
    """A membership grade in [0, 1], or a graded indeterminate tI with t in (0, 1].

    :param kind: ``"real"`` or ``"indeterminate"``
    :param magnitude: the grade t; pure I has magnitude 1
    """

    kind: str
    magnitude: Fraction

    def __post_init__(self):
        m = to_rational(self.magnitude)
        object.__setattr__(self, "magnitude", m)
        if self.kind == REAL:
            if not 0 <= m <= 1:
                raise ValueError(f"fuzzy grade {m} outside [0, 1]")
        elif self.kind == INDETERMINATE:
            if not 0 < m <= 1:
                raise ValueError(f"indeterminate grade {m} outside (0, 1]")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    @classmethod
    def real(cls, t) -> FuzzyNeutroValue:
        return cls(REAL, to_rational(t))

    @classmethod
    def indeterminate(cls, t=1) -> FuzzyNeutroValue:
        return cls(INDETERMINATE, to_rational(t))

    @property
    def is_indeterminate(self) -> bool:
        return self.kind == INDETERMINATE

    def is_zero(self) -> bool:
        return self.kind == REAL and self.magnitude == 0

    def __repr__(self):
        return f"FuzzyNeutroValue({format_fuzzy(self)})"


ZERO_F = FuzzyNeutroValue.real(0)
ONE_F = FuzzyNeutroValue.real(1)
PURE_I = FuzzyNeutroValue.indeterminate(1)


def fuzzy_min(x: FuzzyNeutroValue, y: FuzzyNeutroValue) -> FuzzyNeutroValue:
    if x.is_indeterminate and y.is_indeterminate:
        return x if x.magnitude <= y.magnitude else y
    if not x.is_indeterminate and not y.is_indeterminate:
        return x if x.magnitude <= y.magnitude else y
    real, ind = (x, y) if y.is_indeterminate else (y, x)
    # 0 absorbs; any positive grade yields to the indeterminate
    return real if real.magnitude == 0 else ind


def fuzzy_max(x: FuzzyNeutroValue, y: FuzzyNeutroValue) -> FuzzyNeutroValue:
    if x.is_indeterminate and y.is_indeterminate:
        return x if x.magnitude >= y.magnitude else y
    if not x.is_indeterminate and not y.is_indeterminate:
        return x if x.magnitude >= y.magnitude else y
    real, ind = (x, y) if y.is_indeterminate else (y, x)
    return PURE_I if real.magnitude == 1 else ind


def parse_fuzzy(token: str) -> FuzzyNeutroValue:
    try:
        if token.endswith("I"):
            body = token[:-1]
            return FuzzyNeutroValue.indeterminate(parse_rational(body) if body else 1)
        return FuzzyNeutroValue.real(parse_rational(token))
    except ValueError as exc:
        raise ParseError(f"{token!r}: {exc}") from None


def format_fuzzy(x: FuzzyNeutroValue) -> str:
    # Grades print as exact decimals when they terminate, else as p/q.
    text = _terminating_decimal(x.magnitude) or format_rational(x.magnitude)
    if x.is_indeterminate:
        return "I" if x.magnitude == 1 else f"{text}I"
    return text


def fuzzy_from_neutro(x: NeutrosophicScalar | Fraction | int) -> FuzzyNeutroValue | None:
    """Read a ring scalar as a fuzzy-neutrosophic value; None when it lies outside that set."""
    x = NeutrosophicScalar.coerce(x)
    if x.indeterminate == 0:
        return FuzzyNeutroValue.real(x.real) if 0 <= x.real <= 1 else None
    if x.real == 0 and 0 < x.indeterminate <= 1:
        return FuzzyNeutroValue.indeterminate(x.indeterminate)
    return None


def neutro_from_fuzzy(x: FuzzyNeutroValue) -> NeutrosophicScalar:
    if x.is_indeterminate:
        return NeutrosophicScalar(0, x.magnitude)
    return NeutrosophicScalar(x.magnitude)


Scalar = Union[Fraction, NeutrosophicScalar, FuzzyNeutroValue]


def ring_of(x) -> str:
    if isinstance(x, Fraction):
        return RATIONAL
    if isinstance(x, NeutrosophicScalar):
        return NEUTROSOPHIC
    if isinstance(x, FuzzyNeutroValue):
        return FUZZY
    raise TypeError(f"{type(x).__name__} is not a supported scalar")


def coerce_scalar(x, ring: str) -> Scalar:
    if ring == RATIONAL:
        return to_rational(x)
    if ring == NEUTROSOPHIC:
        return NeutrosophicScalar.coerce(x)
    if ring == FUZZY:
        if isinstance(x, FuzzyNeutroValue):
            return x
        return FuzzyNeutroValue.real(to_rational(x))
    raise ValueError(f"unknown ring {ring!r}")


def zero(ring: str) -> Scalar:
    return coerce_scalar(0, ring)


def one(ring: str) -> Scalar:
    return coerce_scalar(1, ring)


def is_zero(x: Scalar) -> bool:
    if isinstance(x, Fraction):
        return x == 0
    return x.is_zero()


def parse_scalar(token: str, ring: str) -> Scalar:
    if ring == RATIONAL:
        return parse_rational(token)
    if ring == NEUTROSOPHIC:
        return parse_neutro(token)
    if ring == FUZZY:
        return parse_fuzzy(token)
    raise ParseError(f"unknown ring {ring!r}")


def format_scalar(x: Scalar) -> str:
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, NeutrosophicScalar):
        return format_neutro(x)
    if isinstance(x, FuzzyNeutroValue):
        return format_fuzzy(x)
    raise TypeError(f"{type(x).__name__} is not a supported scalar")
