"""Plain matrices as tuples of row tuples, with exact elimination over Q.

The generic helpers (add, mul, transpose, ...) work for any scalar type that
supports ``+`` and ``*``. Elimination routines require ``Fraction`` entries.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import NamedTuple, Sequence

from .errors import DimMismatch, ShapeError, SingularMatrix
from .scalars import RATIONAL, Scalar, coerce_scalar, is_zero, one, ring_of, zero

Matrix = tuple  # tuple[tuple[Scalar, ...], ...]
Vector = tuple  # tuple[Scalar, ...]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Freeze nested sequences; bare ints become Fractions.

    Rationals sitting next to neutrosophic or fuzzy entries are lifted into that ring.
    """
    out = tuple(tuple(Fraction(x) if isinstance(x, int) and not isinstance(x, bool) else x for x in row)
                for row in rows)
    rings = {ring_of(x) for row in out for x in row} - {RATIONAL}
    if len(rings) == 1:
        ring = rings.pop()
        out = tuple(tuple(coerce_scalar(x, ring) for x in row) for row in out)
    if not out or not out[0]:
        raise ShapeError("matrix dimensions must be positive")
    width = len(out[0])
    if any(len(r) != width for r in out):
        raise ShapeError("ragged matrix rows")
    return out


def dims(m: Matrix) -> tuple[int, int]:
    return len(m), len(m[0])


def matrix_ring(m: Matrix) -> str:
    rings = {ring_of(x) for row in m for x in row}
    if len(rings) != 1:
        raise TypeError(f"mixed scalar types in one matrix: {sorted(rings)}")
    return rings.pop()


def identity(n: int, ring: str = "rational") -> Matrix:
    z, o = zero(ring), one(ring)
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def zeros(r: int, c: int, ring: str = "rational") -> Matrix:
    z = zero(ring)
    return tuple((z,) * c for _ in range(r))


def is_zero_matrix(m: Matrix) -> bool:
    return all(is_zero(x) for row in m for x in row)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if dims(a) != dims(b):
        raise DimMismatch(f"cannot add {dims(a)} and {dims(b)}")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return mat_add(a, mat_neg(b))


def mat_scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise DimMismatch(f"cannot multiply {dims(a)} by {dims(b)}")
    cols = transpose(b)
    return tuple(tuple(reduce(lambda s, t: s + t, (x * y for x, y in zip(row, col))) for col in cols)
                 for row in a)


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def mat_pow(a: Matrix, k: int) -> Matrix:
    result = identity(len(a), matrix_ring(a))
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def select(m: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    """0-based row/column selection."""
    return tuple(tuple(m[i][j] for j in cols) for i in rows)


def _require_square(m: Matrix) -> int:
    r, c = dims(m)
    if r != c:
        raise ShapeError(f"{r}x{c} matrix is not square")
    return r


def det(m: Matrix) -> Fraction:
    """Determinant over Q by fraction-free (Bareiss) elimination on an integer image."""
    n = _require_square(m)
    scale = Fraction(1)
    rows = []
    for row in m:
        lcm = reduce(math.lcm, (Fraction(x).denominator for x in row), 1)
        scale /= lcm
        rows.append([int(Fraction(x) * lcm) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1] * scale


class RowOp(NamedTuple):
    """Elementary row operation on 0-based rows.

    kind ``swap``: exchange rows target and source.
    kind ``scale``: row target *= factor.
    kind ``addmul``: row target += factor * row source.
    """

    kind: str
    target: int
    source: int = -1
    factor: Fraction = Fraction(1)


def apply_op(rows: list[list[Fraction]], op: RowOp) -> None:
    if op.kind == "swap":
        rows[op.target], rows[op.source] = rows[op.source], rows[op.target]
    elif op.kind == "scale":
        rows[op.target] = [op.factor * x for x in rows[op.target]]
    elif op.kind == "addmul":
        src = rows[op.source]
        rows[op.target] = [x + op.factor * y for x, y in zip(rows[op.target], src)]
    else:
        raise ValueError(f"unknown row operation {op.kind!r}")


def replay(m: Matrix, ops: Sequence[RowOp]) -> Matrix:
    rows = [list(r) for r in m]
    for op in ops:
        apply_op(rows, op)
    return tuple(tuple(r) for r in rows)


class Echelon(NamedTuple):
    matrix: Matrix
    pivots: tuple[int, ...]
    ops: tuple[RowOp, ...]


def rref(m: Matrix) -> Echelon:
    """Reduced row-echelon form, leftmost-column pivoting with the first nonzero row."""
    rows = [[Fraction(x) for x in r] for r in m]
    nrows, ncols = dims(m)
    ops: list[RowOp] = []
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        step = []
        if p != r:
            step.append(RowOp("swap", r, p))
            apply_op(rows, step[-1])
        if rows[r][c] != 1:
            step.append(RowOp("scale", r, factor=1 / rows[r][c]))
            apply_op(rows, step[-1])
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                step.append(RowOp("addmul", i, r, -rows[i][c]))
                apply_op(rows, step[-1])
        ops.extend(step)
        pivots.append(c)
        r += 1
    return Echelon(tuple(tuple(row) for row in rows), tuple(pivots), tuple(ops))


def is_rref(m: Matrix) -> bool:
    lead_prev = -1
    seen_zero = False
    for i, row in enumerate(m):
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is None:
            seen_zero = True
            continue
        if seen_zero or lead <= lead_prev or row[lead] != 1:
            return False
        if any(m[k][lead] != 0 for k in range(len(m)) if k != i):
            return False
        lead_prev = lead
    return True


def rank(m: Matrix) -> int:
    return len(rref(m).pivots)


def nullspace(m: Matrix) -> tuple[Vector, ...]:
    """Basis of {x : m x = 0}, one vector per free column, free entry set to 1."""
    reduced, pivots, _ = rref(m)
    ncols = len(m[0])
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return tuple(basis)


def solve(m: Matrix, y: Vector) -> Vector | None:
    """One solution of m x = y (free variables zero), or None when inconsistent."""
    if len(y) != len(m):
        raise DimMismatch(f"right-hand side has {len(y)} rows, matrix has {len(m)}")
    aug = tuple(tuple(row) + (Fraction(v),) for row, v in zip(m, y))
    reduced, pivots, _ = rref(aug)
    ncols = len(m[0])
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[-1]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    n = _require_square(m)
    aug = tuple(tuple(row) + tuple(Fraction(int(i == j)) for j in range(n)) for i, row in enumerate(m))
    reduced, pivots, _ = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise SingularMatrix("matrix is singular")
    return tuple(row[n:] for row in reduced)
