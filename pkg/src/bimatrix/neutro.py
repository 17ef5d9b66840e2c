"""Neutrosophic and fuzzy bimatrices: classification, I-aware products, max-min composition."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Sequence

from . import linalg
from .core import BiMatrix, ShapeClass, check_collapse, classify_shape
from .errors import DimMismatch, RingError
from .linalg import Matrix
from .scalars import (FUZZY, NEUTROSOPHIC, RATIONAL, FuzzyNeutroValue, NeutrosophicScalar,
                      fuzzy_from_neutro, fuzzy_max, fuzzy_min)


class NeutroKind(enum.Enum):
    NEUTROSOPHIC = "Neutrosophic"
    SEMI_FIRST = "SemiNeutrosophic:first"
    SEMI_SECOND = "SemiNeutrosophic:second"
    ORDINARY = "Ordinary"

    def __str__(self):
        return self.value


class FieldScope(enum.Enum):
    PLAIN = "Plain"
    STRONG = "Strong"
    WEAK = "Weak"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class NeutroClass:
    neutro_kind: NeutroKind
    shape: ShapeClass
    field_scope: FieldScope


# Containments among the recognised base fields; anything else is opaque.
_SUBFIELDS = {
    "Q": {"Q"},
    "R": {"Q", "R"},
    "Q(I)": {"Q", "Q(I)"},
    "R(I)": {"Q", "R", "Q(I)", "R(I)"},
}
FIELD_TAG = re.compile(r"[A-Za-z][A-Za-z0-9]*(\(I\))?")


def field_scope(tags: tuple[str | None, str | None] | None) -> FieldScope:
    """Strong for two unrelated base fields, Weak when one contains the other."""
    if not tags or None in tags or tags[0] == tags[1]:
        return FieldScope.PLAIN
    a, b = tags
    if a in _SUBFIELDS.get(b, set()) or b in _SUBFIELDS.get(a, set()):
        return FieldScope.WEAK
    return FieldScope.STRONG


def _has_indeterminate(m: Matrix) -> bool:
    for row in m:
        for x in row:
            if isinstance(x, NeutrosophicScalar) and x.indeterminate != 0:
                return True
            if isinstance(x, FuzzyNeutroValue) and x.is_indeterminate:
                return True
    return False


def classify_neutro(b: BiMatrix, field_tags: tuple[str | None, str | None] | None = None) -> NeutroClass:
    flags = (_has_indeterminate(b.first), _has_indeterminate(b.second))
    kind = {(True, True): NeutroKind.NEUTROSOPHIC, (True, False): NeutroKind.SEMI_FIRST,
            (False, True): NeutroKind.SEMI_SECOND, (False, False): NeutroKind.ORDINARY}[flags]
    return NeutroClass(kind, classify_shape(b), field_scope(field_tags))


class FuzzyKind(enum.Enum):
    FUZZY = "Fuzzy"
    SEMI_FIRST = "SemiFuzzy:first"
    SEMI_SECOND = "SemiFuzzy:second"
    NOT_FUZZY = "NotFuzzy"

    def __str__(self):
        return self.value


def _as_fuzzy(x) -> FuzzyNeutroValue | None:
    if isinstance(x, FuzzyNeutroValue):
        return x
    return fuzzy_from_neutro(x)


@dataclass(frozen=True)
class FuzzyClass:
    """Fuzzy membership of a bimatrix.

    ``integral_neutro`` / ``fuzzy_neutro`` say per component whether every
    entry lies in [0,1] with pure I, or in [0,1] with graded tI. A component
    counts as fuzzy-neutrosophic in ``neutro_label`` only if it also holds some I.
    """

    fuzzy_kind: FuzzyKind
    integral_neutro: tuple[bool, bool]
    fuzzy_neutro: tuple[bool, bool]
    has_indeterminate: tuple[bool, bool]
    shape: ShapeClass

    @property
    def neutro_label(self) -> str:
        proper = tuple(f and i for f, i in zip(self.fuzzy_neutro, self.has_indeterminate))
        if all(proper):
            kind = "fuzzy neutrosophic"
        elif any(proper):
            kind = "semi fuzzy neutrosophic"
        else:
            return "not fuzzy neutrosophic"
        return f"{_SHAPE_WORDS[self.shape]} {kind}"


_SHAPE_WORDS = {
    ShapeClass.SQUARE_UNIFORM: "square",
    ShapeClass.RECTANGULAR_UNIFORM: "rectangular",
    ShapeClass.MIXED_SQUARE: "mixed square",
    ShapeClass.MIXED_RECTANGULAR: "mixed rectangular",
    ShapeClass.ROW: "row",
    ShapeClass.COLUMN: "column",
}


def classify_fuzzy(b: BiMatrix) -> FuzzyClass:
    fuzzy, integral, graded, has_i = [], [], [], []
    for m in b.components:
        vals = [_as_fuzzy(x) for row in m for x in row]
        inside = all(v is not None for v in vals)
        fuzzy.append(inside and not any(v.is_indeterminate for v in vals))
        graded.append(inside)
        integral.append(inside and all(not v.is_indeterminate or v.magnitude == 1 for v in vals))
        has_i.append(_has_indeterminate(m))
    kind = {(True, True): FuzzyKind.FUZZY, (True, False): FuzzyKind.SEMI_FIRST,
            (False, True): FuzzyKind.SEMI_SECOND, (False, False): FuzzyKind.NOT_FUZZY}[tuple(fuzzy)]
    return FuzzyClass(kind, tuple(integral), tuple(graded), tuple(has_i), classify_shape(b))


def neutro_matmul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product in Q(I)."""
    a = tuple(tuple(NeutrosophicScalar.coerce(x) for x in row) for row in a)
    b = tuple(tuple(NeutrosophicScalar.coerce(x) for x in row) for row in b)
    return linalg.mat_mul(a, b)


def fuzzy_maxmin_compose(p: Matrix, q: Matrix) -> Matrix:
    """r_ij = max_k min(p_ik, q_kj) under the indeterminate absorption rules."""
    if len(p[0]) != len(q):
        raise DimMismatch(f"cannot compose {linalg.dims(p)} with {linalg.dims(q)}")
    for m in (p, q):
        if any(not isinstance(x, FuzzyNeutroValue) for row in m for x in row):
            raise RingError("max-min composition needs fuzzy-neutrosophic entries")
    cols = linalg.transpose(q)
    return tuple(tuple(reduce(fuzzy_max, (fuzzy_min(x, y) for x, y in zip(row, col))) for col in cols)
                 for row in p)


def bimatrix_lift(op: Callable[[Matrix, Matrix], Matrix], a: BiMatrix, b: BiMatrix,
                  strict: bool = True) -> BiMatrix:
    """Apply a matrix operation componentwise and enforce the collapse rule."""
    for (ra, ca), (rb, cb) in zip(a.dims, b.dims):
        if ca != rb:
            raise DimMismatch(f"cannot combine {a.dims} with {b.dims}")
    out = BiMatrix(op(a.first, b.first), op(a.second, b.second))
    return check_collapse(out) if strict else out


def neutro_bimul(a: BiMatrix, b: BiMatrix) -> BiMatrix:
    for x in (a, b):
        if x.ring not in (NEUTROSOPHIC, RATIONAL):
            raise RingError(f"neutrosophic product needs ring scalars, got {x.ring}")
    return bimatrix_lift(neutro_matmul, a, b)


def fuzzy_bicompose(a: BiMatrix, b: BiMatrix) -> BiMatrix:
    for x in (a, b):
        if x.ring != FUZZY:
            raise RingError(f"max-min composition needs the fuzzy ring, got {x.ring}")
    return bimatrix_lift(fuzzy_maxmin_compose, a, b)


def ev_matrix(m: Matrix, ev: Callable) -> Matrix:
    return tuple(tuple(ev(NeutrosophicScalar.coerce(x)) for x in row) for row in m)


def permute(b: BiMatrix, rows: Sequence[int], cols: Sequence[int]) -> BiMatrix:
    """Apply the same 0-based row and column permutation to both (uniform) components."""
    return BiMatrix(linalg.select(b.first, rows, cols), linalg.select(b.second, rows, cols))
