"""Bideterminants, bicofactors, biLaplace expansion, biinverses and the singularity classes."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .core import BiMatrix, ShapeClass, classify_shape, mul
from .errors import Bisingular, IndexOutOfRange, RingError, SemiBisingular, ShapeError, SingularMatrix
from .linalg import Matrix, dims
from .scalars import RATIONAL, format_rational


@dataclass(frozen=True)
class BiDeterminant:
    first: Fraction
    second: Fraction

    def __mul__(self, other: BiDeterminant) -> BiDeterminant:
        return BiDeterminant(self.first * other.first, self.second * other.second)

    def __add__(self, other: BiDeterminant) -> BiDeterminant:
        return BiDeterminant(self.first + other.first, self.second + other.second)

    def scaled(self, sign: int) -> BiDeterminant:
        return BiDeterminant(sign * self.first, sign * self.second)

    def __str__(self):
        return f"({format_rational(self.first)}, {format_rational(self.second)})"


class SingularityKind(enum.Enum):
    NON_BISINGULAR = "NonBisingular"
    SEMI_BISINGULAR = "SemiBisingular"
    BISINGULAR = "Bisingular"


@dataclass(frozen=True)
class SingularityClass:
    kind: SingularityKind
    singular_component: int | None = None  # set only for the semi case

    def __str__(self):
        if self.kind is SingularityKind.SEMI_BISINGULAR:
            return f"SemiBisingular:{'first' if self.singular_component == 1 else 'second'}"
        return self.kind.value


@dataclass(frozen=True)
class LaplaceTerm:
    cols: tuple[int, ...]  # 1-based
    sign: int
    minor: BiDeterminant
    complement: BiDeterminant  # signed complementary bicofactor
    product: BiDeterminant


@dataclass(frozen=True)
class LaplaceTermSet:
    row_set: tuple[int, ...]
    terms: tuple[LaplaceTerm, ...]
    total: BiDeterminant


@dataclass(frozen=True)
class CauchyBinetTerm:
    cols: tuple[int, ...]  # 1-based columns of the left factor (rows of the right)
    left: BiDeterminant
    right: BiDeterminant
    product: BiDeterminant


def _rational(a: BiMatrix) -> None:
    if a.ring != RATIONAL:
        raise RingError(f"determinants are defined here over Q only, not the {a.ring} ring")


def _square(a: BiMatrix) -> None:
    _rational(a)
    if classify_shape(a) not in (ShapeClass.SQUARE_UNIFORM, ShapeClass.MIXED_SQUARE):
        raise ShapeError(f"components must be square, got {a.dims}")


def _uniform_order(a: BiMatrix) -> int:
    _rational(a)
    if classify_shape(a) is not ShapeClass.SQUARE_UNIFORM:
        raise ShapeError(f"shared indices need square components of one order, got {a.dims}")
    return len(a.first)


def _det(m: Matrix) -> Fraction:
    return linalg.det(m) if m else Fraction(1)


def bideterminant(a: BiMatrix) -> BiDeterminant:
    _square(a)
    return BiDeterminant(_det(a.first), _det(a.second))


def _delete(m: Matrix, i: int, j: int) -> Matrix:
    return tuple(tuple(x for c, x in enumerate(row) if c != j) for r, row in enumerate(m) if r != i)


def bicofactor(a: BiMatrix, i: int, j: int) -> BiDeterminant:
    """Signed minor with row i and column j (1-based) struck out of both components."""
    n = _uniform_order(a)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"({i}, {j}) outside 1..{n}")
    sign = -1 if (i + j) % 2 else 1
    return BiDeterminant(_det(_delete(a.first, i - 1, j - 1)),
                         _det(_delete(a.second, i - 1, j - 1))).scaled(sign)


def _indices(idx: Sequence[int], bound: int, label: str) -> tuple[int, ...]:
    idx = tuple(idx)
    if not idx or any(b <= a for a, b in zip(idx, idx[1:])) or idx[0] < 1 or idx[-1] > bound:
        raise IndexOutOfRange(f"{label} {idx} must be nonempty, increasing and within 1..{bound}")
    return idx


def biminor(a: BiMatrix, rows: Sequence[int], cols: Sequence[int]) -> BiDeterminant:
    """Determinant pair of the rows x cols selection, same 1-based sets in both components."""
    _rational(a)
    if len(rows) != len(cols):
        raise ShapeError(f"{len(rows)} rows and {len(cols)} columns do not make a square minor")
    (r1, c1), (r2, c2) = a.dims
    rows = _indices(rows, min(r1, r2), "rows")
    cols = _indices(cols, min(c1, c2), "cols")
    r0 = [i - 1 for i in rows]
    c0 = [j - 1 for j in cols]
    return BiDeterminant(_det(linalg.select(a.first, r0, c0)), _det(linalg.select(a.second, r0, c0)))


def bilaplace_expand(a: BiMatrix, row_set: Sequence[int]) -> LaplaceTermSet:
    """Expand along a shared row set: sum over column sets S of |N_S| times its signed complement."""
    n = _uniform_order(a)
    rows = _indices(row_set, n, "row_set")
    if len(rows) >= n:
        raise IndexOutOfRange(f"row set must have between 1 and {n - 1} rows")
    rest_rows = [i for i in range(1, n + 1) if i not in rows]
    terms = []
    total = BiDeterminant(Fraction(0), Fraction(0))
    for cols in combinations(range(1, n + 1), len(rows)):
        rest_cols = [j for j in range(1, n + 1) if j not in cols]
        sign = -1 if (sum(rows) + sum(cols)) % 2 else 1
        minor = biminor(a, rows, cols)
        complement = biminor(a, rest_rows, rest_cols).scaled(sign)
        product = minor * complement
        terms.append(LaplaceTerm(cols, sign, minor, complement, product))
        total = total + product
    return LaplaceTermSet(rows, tuple(terms), total)


def singularity_class(a: BiMatrix) -> SingularityClass:
    d = bideterminant(a)
    z1, z2 = d.first == 0, d.second == 0
    if z1 and z2:
        return SingularityClass(SingularityKind.BISINGULAR)
    if z1 or z2:
        return SingularityClass(SingularityKind.SEMI_BISINGULAR, 1 if z1 else 2)
    return SingularityClass(SingularityKind.NON_BISINGULAR)


def biinverse(a: BiMatrix) -> BiMatrix:
    _square(a)
    inverses = []
    for m in a.components:
        try:
            inverses.append(linalg.inverse(m))
        except SingularMatrix:
            inverses.append(None)
    first, second = inverses
    if first is None and second is None:
        raise Bisingular("both components are singular")
    if first is None:
        raise SemiBisingular(1, second)
    if second is None:
        raise SemiBisingular(2, first)
    return BiMatrix(first, second)


def rectangular_product_bidet(a: BiMatrix, b: BiMatrix) -> tuple[BiDeterminant, tuple[CauchyBinetTerm, ...]]:
    """|a b| for m x n times n x m components (m <= n), broken into C(n, m) minor products."""
    _rational(a)
    _rational(b)
    if classify_shape(a) in (ShapeClass.MIXED_RECTANGULAR, ShapeClass.MIXED_SQUARE):
        raise ShapeError(f"left factor must have uniform dims, got {a.dims}")
    m, n = dims(a.first)
    if b.dims != ((n, m), (n, m)):
        raise ShapeError(f"right factor must be {n}x{m} in both components, got {b.dims}")
    if m > n:
        raise ShapeError(f"need m <= n, got {m}x{n}")
    terms = []
    total = BiDeterminant(Fraction(0), Fraction(0))
    all_rows = range(m)
    for cols in combinations(range(n), m):
        left = BiDeterminant(_det(linalg.select(a.first, all_rows, cols)), _det(linalg.select(a.second, all_rows, cols)))
        right = BiDeterminant(_det(linalg.select(b.first, cols, all_rows)), _det(linalg.select(b.second, cols, all_rows)))
        product = left * right
        terms.append(CauchyBinetTerm(tuple(c + 1 for c in cols), left, right, product))
        total = total + product
    return total, tuple(terms)


def product_bidet(a: BiMatrix, b: BiMatrix) -> BiDeterminant:
    """|a b| computed from the product itself."""
    return bideterminant(mul(a, b, strict=False))
