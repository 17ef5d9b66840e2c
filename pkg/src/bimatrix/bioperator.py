"""Linear bioperators over Q: row bireduction, biequations and spectral analysis.

Every function works on the two components independently except the strong
row bireduction, which drives both components with one shared sequence of
row operations.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .core import BiMatrix, ShapeClass, classify_shape
from .errors import (DimMismatch, Inconsistent, NotDiagonalizable, RingError, ShapeError,
                     SingularMatrix, SingularWitness)
from .linalg import Matrix, RowOp, Vector
from .poly import Poly, factor_rational, splits
from .scalars import RATIONAL


def _require_rational(a: BiMatrix) -> None:
    if a.ring != RATIONAL:
        raise RingError(f"operator analysis runs over Q, not the {a.ring} ring")


def _require_square(a: BiMatrix) -> None:
    _require_rational(a)
    if classify_shape(a) not in (ShapeClass.SQUARE_UNIFORM, ShapeClass.MIXED_SQUARE):
        raise ShapeError(f"components must be square, got {a.dims}")


# --- row bireduction -------------------------------------------------------

class Mode(enum.Enum):
    WEAK = "weak"
    STRONG = "strong"


@dataclass(frozen=True)
class LoggedOp:
    component: str  # "first", "second" or "both"
    op: RowOp


@dataclass(frozen=True)
class BiReduction:
    result: BiMatrix
    ops: tuple[LoggedOp, ...]
    partial: bool = False  # strong mode picked a pivot that is zero in the second component


def row_bireduce(a: BiMatrix, mode: Mode | str = Mode.WEAK) -> BiReduction:
    _require_rational(a)
    mode = Mode(mode)
    if mode is Mode.WEAK:
        e1, e2 = linalg.rref(a.first), linalg.rref(a.second)
        ops = tuple(LoggedOp("first", op) for op in e1.ops) + tuple(LoggedOp("second", op) for op in e2.ops)
        return BiReduction(BiMatrix(e1.matrix, e2.matrix), ops)
    return _strong_reduce(a)


def _strong_reduce(a: BiMatrix) -> BiReduction:
    (n, c1), (n2, c2) = a.dims
    if n != n2:
        raise ShapeError(f"strong bireduction needs equal row counts, got {n} and {n2}")
    top = [list(r) for r in a.first]
    bottom = [list(r) for r in a.second]
    ops: list[RowOp] = []
    partial = False

    def apply(op: RowOp) -> None:
        linalg.apply_op(top, op)
        linalg.apply_op(bottom, op)
        ops.append(op)

    r = 0
    for c in range(c1):
        if r == n:
            break
        live = [i for i in range(r, n) if top[i][c] != 0]
        if not live:
            continue
        shared = [i for i in live if c < c2 and bottom[i][c] != 0]
        if shared:
            p = shared[0]
        else:
            p = live[0]
            partial = True
        if p != r:
            apply(RowOp("swap", r, p))
        if top[r][c] != 1:
            apply(RowOp("scale", r, factor=1 / top[r][c]))
        for i in range(n):
            if i != r and top[i][c] != 0:
                apply(RowOp("addmul", i, r, -top[i][c]))
        r += 1
    result = BiMatrix(top, bottom)
    return BiReduction(result, tuple(LoggedOp("both", op) for op in ops), partial)


def replay_bireduction(a: BiMatrix, ops: Sequence[LoggedOp]) -> BiMatrix:
    first = [list(r) for r in a.first]
    second = [list(r) for r in a.second]
    for logged in ops:
        if logged.component in ("first", "both"):
            linalg.apply_op(first, logged.op)
        if logged.component in ("second", "both"):
            linalg.apply_op(second, logged.op)
    return BiMatrix(first, second)


# --- biequations -----------------------------------------------------------

@dataclass(frozen=True)
class BiSolution:
    particular: tuple[Vector, Vector]
    nullspace: tuple[tuple[Vector, ...], tuple[Vector, ...]]
    homogeneous: bool
    semi_homogeneous: bool


def _column(v) -> Vector:
    if v and isinstance(v[0], tuple):
        if any(len(row) != 1 for row in v):
            raise DimMismatch("right-hand side must be a column")
        return tuple(Fraction(row[0]) for row in v)
    return tuple(Fraction(x) for x in v)


def solve_biequation(a: BiMatrix, y) -> BiSolution:
    """Solve A1 x = y1 and A2 x = y2.

    ``y`` is a pair of column vectors, or a bimatrix whose components are columns.
    """
    _require_rational(a)
    ys = (y.first, y.second) if isinstance(y, BiMatrix) else tuple(y)
    y1, y2 = _column(ys[0]), _column(ys[1])
    particular = []
    for k, (m, rhs) in enumerate(((a.first, y1), (a.second, y2)), start=1):
        x = linalg.solve(m, rhs)
        if x is None:
            raise Inconsistent(k)
        particular.append(x)
    zero1, zero2 = all(v == 0 for v in y1), all(v == 0 for v in y2)
    return BiSolution(tuple(particular), (linalg.nullspace(a.first), linalg.nullspace(a.second)),
                      homogeneous=zero1 and zero2, semi_homogeneous=zero1 != zero2)


# --- polynomials -----------------------------------------------------------

@dataclass(frozen=True)
class BiPolynomial:
    first: Poly
    second: Poly

    def __str__(self):
        return f"({self.first}, {self.second})"


def char_polynomial(m: Matrix) -> Poly:
    """det(xI - M) by the Faddeev-LeVerrier recurrence (exact over Q)."""
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    eye = linalg.identity(n)
    acc = linalg.zeros(n, n)
    for k in range(1, n + 1):
        acc = linalg.mat_add(linalg.mat_mul(m, acc), linalg.mat_scale(coeffs[n - k + 1], eye))
        am = linalg.mat_mul(m, acc)
        coeffs[n - k] = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
    return Poly(tuple(coeffs))


def char_bipolynomial(a: BiMatrix) -> BiPolynomial:
    _require_square(a)
    return BiPolynomial(char_polynomial(a.first), char_polynomial(a.second))


def minimal_polynomial(m: Matrix) -> Poly:
    """Least k with A^k in span(I, ..., A^(k-1)); the dependence gives the monic annihilator."""
    n = len(m)
    power = linalg.identity(n)
    flat = [tuple(x for row in power for x in row)]
    for k in range(1, n + 1):
        power = linalg.mat_mul(power, m)
        target = tuple(x for row in power for x in row)
        basis = tuple(zip(*flat))  # n^2 x k, columns are the earlier powers
        coef = linalg.solve(basis, target)
        if coef is not None:
            return Poly(tuple(-c for c in coef) + (Fraction(1),))
        flat.append(target)
    raise AssertionError("Cayley-Hamilton bounds the degree by n")


def biminimal_polynomial(a: BiMatrix) -> BiPolynomial:
    _require_square(a)
    return BiPolynomial(minimal_polynomial(a.first), minimal_polynomial(a.second))


# --- eigen analysis --------------------------------------------------------

@dataclass(frozen=True)
class EigenRoot:
    value: Fraction
    algebraic: int
    basis: tuple[Vector, ...]

    @property
    def geometric(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class ComponentSpectrum:
    order: int
    characteristic: Poly
    roots: tuple[EigenRoot, ...]
    residual: Poly

    @property
    def splits(self) -> bool:
        return self.residual.degree == 0


class EigenClass(enum.Enum):
    FULL = "Full"
    SEMI_FIRST = "Semi:first"
    SEMI_SECOND = "Semi:second"
    NONE = "None"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class BiEigenReport:
    first: ComponentSpectrum
    second: ComponentSpectrum
    classification: EigenClass


def _shifted(m: Matrix, lam: Fraction) -> Matrix:
    return tuple(tuple(x - lam if i == j else x for j, x in enumerate(row)) for i, row in enumerate(m))


def spectrum(m: Matrix) -> ComponentSpectrum:
    chi = char_polynomial(m)
    found, residual = factor_rational(chi)
    roots = tuple(EigenRoot(r, mult, linalg.nullspace(_shifted(m, r))) for r, mult in found)
    return ComponentSpectrum(len(m), chi, roots, residual)


def bieigen(a: BiMatrix) -> BiEigenReport:
    _require_square(a)
    s1, s2 = spectrum(a.first), spectrum(a.second)
    cls = {(True, True): EigenClass.FULL, (True, False): EigenClass.SEMI_FIRST,
           (False, True): EigenClass.SEMI_SECOND, (False, False): EigenClass.NONE}[(s1.splits, s2.splits)]
    return BiEigenReport(s1, s2, cls)


@dataclass(frozen=True)
class DiagonalWitness:
    """Eigenbasis pair on success; otherwise the failing component and why."""

    bases: tuple[tuple[Vector, ...], tuple[Vector, ...]] | None = None
    component: int | None = None
    reason: str | None = None


def _diag_failure(s: ComponentSpectrum) -> str | None:
    if not s.splits:
        return f"characteristic factor {s.residual} has no rational roots"
    for root in s.roots:
        if root.geometric < root.algebraic:
            return f"root {root.value}: geometric multiplicity {root.geometric} < algebraic {root.algebraic}"
    return None


def is_bidiagonalizable(a: BiMatrix) -> tuple[bool, DiagonalWitness]:
    report = bieigen(a)
    for k, s in enumerate((report.first, report.second), start=1):
        reason = _diag_failure(s)
        if reason:
            return False, DiagonalWitness(component=k, reason=reason)
    bases = tuple(tuple(v for root in s.roots for v in root.basis) for s in (report.first, report.second))
    return True, DiagonalWitness(bases=bases)


@dataclass(frozen=True)
class Projection:
    eigenvalue: Fraction
    matrix: Matrix


@dataclass(frozen=True)
class BiProjectionSet:
    """Spectral projections per component; the two lists may differ in length."""

    first: tuple[Projection, ...]
    second: tuple[Projection, ...]


def _projections(m: Matrix, values: Sequence[Fraction]) -> tuple[Projection, ...]:
    out = []
    for i, ci in enumerate(values):
        interp = Poly((1,))
        for j, cj in enumerate(values):
            if j != i:
                interp = interp * Poly((-cj / (ci - cj), 1 / (ci - cj)))
        out.append(Projection(ci, interp.at_matrix(m)))
    return tuple(out)


def biprojections(a: BiMatrix) -> BiProjectionSet:
    """E_i = f_i(A) with f_i the Lagrange basis polynomial on the distinct eigenvalues."""
    ok, witness = is_bidiagonalizable(a)
    if not ok:
        raise NotDiagonalizable(witness.component, witness.reason)
    report = bieigen(a)
    return BiProjectionSet(_projections(a.first, [r.value for r in report.first.roots]),
                           _projections(a.second, [r.value for r in report.second.roots]))


def is_bitriangularizable(a: BiMatrix) -> tuple[tuple[bool, bool], bool]:
    p = biminimal_polynomial(a)
    flags = (splits(p.first), splits(p.second))
    return flags, all(flags)


def is_binilpotent(a: BiMatrix) -> bool:
    _require_square(a)
    return all(linalg.is_zero_matrix(linalg.mat_pow(m, len(m))) for m in a.components)


def check_similarity_witness(a: BiMatrix, b: BiMatrix, p: BiMatrix) -> bool:
    """Whether b = p^-1 a p in each component.

    When p is singular in one component only, that component must have a == b
    (the semi-similar case); a witness singular in both raises SingularWitness.
    """
    for x in (a, b, p):
        _require_square(x)
    if not (a.dims == b.dims == p.dims):
        raise ShapeError(f"orders differ: {a.dims}, {b.dims}, {p.dims}")
    inverses = []
    for m in p.components:
        try:
            inverses.append(linalg.inverse(m))
        except SingularMatrix:
            inverses.append(None)
    if inverses[0] is None and inverses[1] is None:
        raise SingularWitness("witness is singular in both components")
    for ma, mb, mp, inv in zip(a.components, b.components, p.components, inverses):
        if inv is None:
            if ma != mb:
                return False
        elif linalg.mat_mul(linalg.mat_mul(inv, ma), mp) != mb:
            return False
    return True
