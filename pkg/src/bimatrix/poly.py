"""Univariate polynomials over Q with ascending coefficient tuples."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from . import linalg
from .linalg import Matrix
from .scalars import format_rational, to_rational


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[Fraction, ...]  # ascending; empty tuple is the zero polynomial

    def __post_init__(self):
        c = [to_rational(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x_minus(cls, r) -> Poly:
        return cls((-to_rational(r), Fraction(1)))

    @classmethod
    def constant(cls, c) -> Poly:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for zero

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> Poly:
        return Poly(tuple(c / self.lead for c in self.coeffs))

    def __add__(self, other: Poly | int | Fraction) -> Poly:
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly | int | Fraction) -> Poly:
        return self + (-_lift(other))

    def __rsub__(self, other: int | Fraction) -> Poly:
        return _lift(other) - self

    def __mul__(self, other: Poly | int | Fraction) -> Poly:
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        return reduce(Poly.__mul__, [self] * k, Poly((1,)))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + other.degree] / other.lead
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= c * b
        return Poly(tuple(quot)), Poly(tuple(rem))

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def at_matrix(self, m: Matrix) -> Matrix:
        """Horner evaluation p(M)."""
        n = len(m)
        acc = linalg.zeros(n, n)
        eye = linalg.identity(n)
        for c in reversed(self.coeffs):
            acc = linalg.mat_add(linalg.mat_mul(acc, m), linalg.mat_scale(c, eye))
        return acc

    def __str__(self):
        return format_poly(self)


def _lift(p) -> Poly:
    return p if isinstance(p, Poly) else Poly((p,))


def gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def format_poly(p: Poly) -> str:
    """Ascending order: ``-4 + 8*x - 5*x^2 + x^3``."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            power = "x" if k == 1 else f"x^{k}"
            body = power if mag == 1 else f"{format_rational(mag)}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _integer_coeffs(p: Poly) -> list[int]:
    lcm = reduce(math.lcm, (c.denominator for c in p.coeffs), 1)
    ints = [int(c * lcm) for c in p.coeffs]
    g = reduce(math.gcd, ints)
    return [c // g for c in ints]


def squarefree_part(p: Poly) -> Poly:
    return (p // gcd(p, p.derivative())).monic()


def rational_roots(p: Poly) -> list[Fraction]:
    """Distinct rational roots, ascending, found from the square-free part by the rational root theorem."""
    if p.degree < 1:
        return []
    q = squarefree_part(p)
    roots = []
    if q(0) == 0:
        roots.append(Fraction(0))
        q = q // Poly.x_minus(0)
    if q.degree >= 1:
        ints = _integer_coeffs(q)
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand not in roots and q(cand) == 0:
                        roots.append(cand)
    return sorted(roots)


def factor_rational(p: Poly) -> tuple[list[tuple[Fraction, int]], Poly]:
    """Split a monic polynomial into rational linear factors with multiplicities and a residual.

    The residual has no rational roots and is left unfactored.
    """
    residual = p.monic()
    found = []
    for r in rational_roots(p):
        lin = Poly.x_minus(r)
        mult = 0
        while True:
            quo, rem = divmod(residual, lin)
            if not rem.is_zero():
                break
            residual, mult = quo, mult + 1
        found.append((r, mult))
    return found, residual


def splits(p: Poly) -> bool:
    return factor_rational(p)[1].degree == 0


def from_roots(roots: Sequence) -> Poly:
    return reduce(Poly.__mul__, (Poly.x_minus(r) for r in roots), Poly((1,)))
