"""The bimatrix value type and its componentwise arithmetic."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DegenerateCollapse, DimMismatch, IndexOutOfRange, RingError, ShapeError
from .linalg import Matrix, dims
from .scalars import FUZZY, coerce_scalar


class ShapeClass(enum.Enum):
    RECTANGULAR_UNIFORM = "RectangularUniform"
    SQUARE_UNIFORM = "SquareUniform"
    MIXED_SQUARE = "MixedSquare"
    MIXED_RECTANGULAR = "MixedRectangular"
    ROW = "Row"
    COLUMN = "Column"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class BiMatrix:
    """An ordered pair of matrices over one scalar ring.

    Constructing the dataclass directly gives a relaxed pair: shapes and ring
    are checked but equal components are tolerated. Use :func:`make_bimatrix`
    (or ``strict=True`` on the operations) to enforce the collapse rule.
    """

    first: Matrix
    second: Matrix

    def __post_init__(self):
        object.__setattr__(self, "first", linalg.as_matrix(self.first))
        object.__setattr__(self, "second", linalg.as_matrix(self.second))
        r1, r2 = linalg.matrix_ring(self.first), linalg.matrix_ring(self.second)
        if r1 != r2:
            raise RingError(f"components over different rings ({r1}, {r2})")

    @property
    def ring(self) -> str:
        return linalg.matrix_ring(self.first)

    @property
    def dims(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return dims(self.first), dims(self.second)

    @property
    def components(self) -> tuple[Matrix, Matrix]:
        return self.first, self.second

    def is_zero(self) -> bool:
        return linalg.is_zero_matrix(self.first) and linalg.is_zero_matrix(self.second)

    def is_identity(self) -> bool:
        return all(_is_identity(m) for m in self.components)

    @property
    def is_degenerate(self) -> bool:
        """Equal components that are not both zero."""
        return self.first == self.second and not self.is_zero()

    def __repr__(self):
        return f"BiMatrix({_short(self.first)} U {_short(self.second)})"


def _short(m: Matrix) -> str:
    from .scalars import format_scalar
    return "[" + "; ".join(" ".join(format_scalar(x) for x in row) for row in m) + "]"


def _is_identity(m: Matrix) -> bool:
    r, c = dims(m)
    return r == c and m == linalg.identity(r, linalg.matrix_ring(m))


def check_collapse(b: BiMatrix) -> BiMatrix:
    if b.is_degenerate:
        raise DegenerateCollapse(f"both components equal {_short(b.first)}")
    return b


def make_bimatrix(first: Sequence[Sequence], second: Sequence[Sequence]) -> BiMatrix:
    """Build a bimatrix, rejecting equal nonzero components (the zero pair is admitted)."""
    return check_collapse(BiMatrix(first, second))


def _finish(b: BiMatrix, strict: bool) -> BiMatrix:
    return check_collapse(b) if strict else b


def zero_bimatrix(d1: tuple[int, int], d2: tuple[int, int] | None = None, ring: str = "rational") -> BiMatrix:
    d2 = d2 or d1
    return BiMatrix(linalg.zeros(*d1, ring), linalg.zeros(*d2, ring))


def identity_bimatrix(n1: int, n2: int | None = None, ring: str = "rational") -> BiMatrix:
    """I_B as a relaxed pair; with n1 == n2 it does not pass the collapse check."""
    return BiMatrix(linalg.identity(n1, ring), linalg.identity(n2 or n1, ring))


def classify_shape(b: BiMatrix) -> ShapeClass:
    (r1, c1), (r2, c2) = b.dims
    if (r1, c1) == (r2, c2):
        if r1 == c1:
            return ShapeClass.SQUARE_UNIFORM
        if r1 == 1:
            return ShapeClass.ROW
        if c1 == 1:
            return ShapeClass.COLUMN
        return ShapeClass.RECTANGULAR_UNIFORM
    if r1 == c1 and r2 == c2:
        return ShapeClass.MIXED_SQUARE
    return ShapeClass.MIXED_RECTANGULAR


def _require_arithmetic(*bs: BiMatrix) -> None:
    for b in bs:
        if b.ring == FUZZY:
            raise RingError("fuzzy values only combine by max-min composition")
    if len({b.ring for b in bs}) > 1:
        raise RingError("operands over different scalar rings")


def add(a: BiMatrix, b: BiMatrix, strict: bool = True) -> BiMatrix:
    _require_arithmetic(a, b)
    if dims(a.first) != dims(b.first) or dims(a.second) != dims(b.second):
        raise DimMismatch(f"cannot add {a.dims} and {b.dims}")
    return _finish(BiMatrix(linalg.mat_add(a.first, b.first), linalg.mat_add(a.second, b.second)), strict)


def negate(a: BiMatrix) -> BiMatrix:
    _require_arithmetic(a)
    return BiMatrix(linalg.mat_neg(a.first), linalg.mat_neg(a.second))


def subtract(a: BiMatrix, b: BiMatrix, strict: bool = True) -> BiMatrix:
    return add(a, negate(b), strict=strict)


def scalar_mul(lam, a: BiMatrix, strict: bool = True) -> BiMatrix:
    _require_arithmetic(a)
    c = coerce_scalar(lam, a.ring)
    return _finish(BiMatrix(linalg.mat_scale(c, a.first), linalg.mat_scale(c, a.second)), strict)


def mul(a: BiMatrix, b: BiMatrix, strict: bool = True) -> BiMatrix:
    _require_arithmetic(a, b)
    if dims(a.first)[1] != dims(b.first)[0] or dims(a.second)[1] != dims(b.second)[0]:
        raise DimMismatch(f"cannot multiply {a.dims} by {b.dims}")
    return _finish(BiMatrix(linalg.mat_mul(a.first, b.first), linalg.mat_mul(a.second, b.second)), strict)


def transpose(a: BiMatrix) -> BiMatrix:
    return BiMatrix(linalg.transpose(a.first), linalg.transpose(a.second))


@dataclass(frozen=True)
class SymSkewPair:
    symmetric_part: BiMatrix
    skew_part: BiMatrix


def sym_skew_decompose(a: BiMatrix) -> SymSkewPair:
    """Split a square bimatrix into (A + A^T)/2 and (A - A^T)/2 per component.

    The parts are relaxed pairs: two distinct matrices may share a symmetric part.
    """
    if classify_shape(a) not in (ShapeClass.SQUARE_UNIFORM, ShapeClass.MIXED_SQUARE):
        raise ShapeError(f"symmetric/skew split needs square components, got {a.dims}")
    at = transpose(a)
    half = Fraction(1, 2)
    sym = scalar_mul(half, add(a, at, strict=False), strict=False)
    skew = scalar_mul(half, subtract(a, at, strict=False), strict=False)
    return SymSkewPair(sym, skew)


def is_symmetric(a: BiMatrix) -> bool:
    return transpose(a) == a


def is_skew(a: BiMatrix) -> bool:
    return transpose(a) == negate(a)


def _zero_based(indices: Sequence[int], bound: int, label: str) -> list[int]:
    idx = list(indices)
    if not idx:
        raise IndexOutOfRange(f"{label}: empty index set")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise IndexOutOfRange(f"{label}: indices must be strictly increasing")
    if idx[0] < 1 or idx[-1] > bound:
        raise IndexOutOfRange(f"{label}: indices must lie in 1..{bound}")
    return [i - 1 for i in idx]


def subbimatrix(a: BiMatrix, rows1: Sequence[int], cols1: Sequence[int],
                rows2: Sequence[int], cols2: Sequence[int], strict: bool = True) -> BiMatrix:
    """Keep the listed 1-based rows and columns of each component."""
    (r1, c1), (r2, c2) = a.dims
    first = linalg.select(a.first, _zero_based(rows1, r1, "rows1"), _zero_based(cols1, c1, "cols1"))
    second = linalg.select(a.second, _zero_based(rows2, r2, "rows2"), _zero_based(cols2, c2, "cols2"))
    return _finish(BiMatrix(first, second), strict)


class OverlapKind(enum.Enum):
    NONE = "None"
    ROW = "RowOverlap"
    COLUMN = "ColumnOverlap"
    ROW_COLUMN = "RowColumnOverlap"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SharedVector:
    """A vector occurring in both components, with its 1-based positions in each."""

    entries: tuple
    first_positions: tuple[int, ...]
    second_positions: tuple[int, ...]


@dataclass(frozen=True)
class OverlapReport:
    kind: OverlapKind
    shared_rows: tuple[SharedVector, ...]
    shared_columns: tuple[SharedVector, ...]


def _shared(vs1: Sequence[tuple], vs2: Sequence[tuple]) -> tuple[SharedVector, ...]:
    out = []
    seen = set()
    for v in vs1:
        if v in seen:
            continue
        seen.add(v)
        pos2 = tuple(i + 1 for i, w in enumerate(vs2) if w == v)
        if pos2:
            pos1 = tuple(i + 1 for i, w in enumerate(vs1) if w == v)
            out.append(SharedVector(v, pos1, pos2))
    return tuple(out)


def detect_overlap(a: BiMatrix) -> OverlapReport:
    """Rows (columns) that occur in both components, wherever they sit."""
    if dims(a.first) != dims(a.second):
        raise ShapeError(f"overlap needs equal component dims, got {a.dims}")
    rows = _shared(a.first, a.second)
    cols = _shared(linalg.transpose(a.first), linalg.transpose(a.second))
    kind = {(False, False): OverlapKind.NONE, (True, False): OverlapKind.ROW,
            (False, True): OverlapKind.COLUMN, (True, True): OverlapKind.ROW_COLUMN}[(bool(rows), bool(cols))]
    return OverlapReport(kind, rows, cols)


Partition = tuple[tuple[int, ...], tuple[int, ...]]  # (row block sizes, column block sizes)


def _check_partition(m: Matrix, part: Partition) -> None:
    if any(k <= 0 for k in part[0] + part[1]) or (sum(part[0]), sum(part[1])) != dims(m):
        raise DimMismatch(f"partition {part} does not tile a {dims(m)} matrix")


def partition_compatible(pa: tuple[Partition, Partition], pb: tuple[Partition, Partition],
                         for_product: bool) -> bool:
    """Whether per-component block partitions can be combined blockwise.

    Sums need identical partitions; products need the column blocks of the
    left factor to match the row blocks of the right one.
    """
    for (ra, ca), (rb, cb) in zip(pa, pb):
        if for_product and tuple(ca) != tuple(rb):
            return False
        if not for_product and (tuple(ra), tuple(ca)) != (tuple(rb), tuple(cb)):
            return False
    return True


def _blocks(m: Matrix, part: Partition) -> list[list[Matrix]]:
    _check_partition(m, part)
    row_starts = [sum(part[0][:k]) for k in range(len(part[0]))]
    col_starts = [sum(part[1][:k]) for k in range(len(part[1]))]
    return [[linalg.select(m, range(r, r + h), range(c, c + w)) for c, w in zip(col_starts, part[1])]
            for r, h in zip(row_starts, part[0])]


def _assemble(grid: list[list[Matrix]]) -> Matrix:
    return tuple(tuple(x for block in band for x in block[i]) for band in grid for i in range(len(band[0])))


def _block_product(a: Matrix, b: Matrix, pa: Partition, pb: Partition) -> Matrix:
    ga, gb = _blocks(a, pa), _blocks(b, pb)
    grid = []
    for i in range(len(ga)):
        band = []
        for j in range(len(gb[0])):
            acc = linalg.mat_mul(ga[i][0], gb[0][j])
            for k in range(1, len(gb)):
                acc = linalg.mat_add(acc, linalg.mat_mul(ga[i][k], gb[k][j]))
            band.append(acc)
        grid.append(band)
    return _assemble(grid)


def block_mul(a: BiMatrix, b: BiMatrix, pa: tuple[Partition, Partition], pb: tuple[Partition, Partition],
              strict: bool = True) -> BiMatrix:
    """Multiply blockwise; equals :func:`mul` whenever the partitions conform."""
    _require_arithmetic(a, b)
    if not partition_compatible(pa, pb, for_product=True):
        raise DimMismatch("block partitions do not conform for multiplication")
    out = BiMatrix(_block_product(a.first, b.first, pa[0], pb[0]),
                   _block_product(a.second, b.second, pa[1], pb[1]))
    return _finish(out, strict)


def block_add(a: BiMatrix, b: BiMatrix, pa: tuple[Partition, Partition], pb: tuple[Partition, Partition],
              strict: bool = True) -> BiMatrix:
    _require_arithmetic(a, b)
    if not partition_compatible(pa, pb, for_product=False):
        raise DimMismatch("block partitions differ")
    comps = []
    for ma, mb, part in ((a.first, b.first, pa[0]), (a.second, b.second, pa[1])):
        ga, gb = _blocks(ma, part), _blocks(mb, part)
        comps.append(_assemble([[linalg.mat_add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(ga, gb)]))
    return _finish(BiMatrix(*comps), strict)
