"""Text format: canonical round trip, loose input, parse diagnostics."""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bimatrix.core import BiMatrix, ShapeClass, classify_shape
from bimatrix.errors import DegenerateCollapse, ParseError
from bimatrix.scalars import NeutrosophicScalar, PURE_I, FuzzyNeutroValue
from bimatrix.textio import format_bimatrix, format_document, parse_bimatrix, parse_document, read_document
from conftest import DATA, matrices

CORPUS = sorted(p for p in DATA.glob("*.bim") if not p.name.startswith(("err_", "messy_")))


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.stem)
def test_corpus_round_trip(path):
    doc = read_document(path, strict=False)
    text = format_document(doc)
    assert parse_document(text, strict=False) == doc
    assert format_document(parse_document(text, strict=False)) == text


def test_rectangular_example():
    b = read_document(DATA / "rect_2x3.bim").bimatrix
    assert b.dims == ((2, 3), (2, 3))
    assert classify_shape(b) is ShapeClass.RECTANGULAR_UNIFORM


def test_loose_layout_matches_canonical():
    messy = read_document(DATA / "messy_rect.bim")
    assert format_document(messy) == format_document(read_document(DATA / "rect_2x3.bim"))


def test_missing_component_reports_line():
    with pytest.raises(ParseError) as info:
        read_document(DATA / "err_missing_component2.bim")
    assert info.value.line == 5
    assert "component 2" in str(info.value)


def test_bad_token_reports_column():
    with pytest.raises(ParseError) as info:
        read_document(DATA / "err_bad_token.bim")
    assert (info.value.line, info.value.column) == (3, 3)


def test_collapse_on_read():
    with pytest.raises(DegenerateCollapse):
        read_document(DATA / "err_collapse.bim")
    assert read_document(DATA / "err_collapse.bim", strict=False).bimatrix.first == ((1, 2),)


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("matrix rational\n", 1),
    ("bimatrix complex\n", 1),
    ("bimatrix rational\ncomponent 2 rows=1 cols=1\n1\n", 2),
    ("bimatrix rational\ncomponent 1 rows=0 cols=1\n", 2),
    ("bimatrix rational\ncomponent 1 rows=1 cols=1 colour=red\n1\n", 2),
    ("bimatrix rational\ncomponent 1 rows=2 cols=1\n1\ncomponent 2 rows=1 cols=1\n2\n", 4),
    ("bimatrix rational\ncomponent 1 rows=1 cols=2\n1\ncomponent 2 rows=1 cols=1\n2\n", 3),
    ("bimatrix rational\ncomponent 1 rows=1 cols=1\n1\ncomponent 2 rows=1 cols=1\n2\n3\n", 6),
    ("bimatrix fuzzy\ncomponent 1 rows=1 cols=1\n2\ncomponent 2 rows=1 cols=1\n0\n", 3),
    ("bimatrix rational\ncomponent 1 rows=1 cols=1 field=Q(\n1\ncomponent 2 rows=1 cols=1\n2\n", 2),
])
def test_grammar_violations(text, line):
    with pytest.raises(ParseError) as info:
        parse_bimatrix(text)
    assert info.value.line == line


def test_rational_tokens_print_exactly():
    text = "bimatrix rational\ncomponent 1 rows=1 cols=3\n0.5 -4/6 3.0\ncomponent 2 rows=1 cols=1\n7\n"
    assert format_bimatrix(parse_bimatrix(text)).splitlines()[2] == "1/2 -2/3 3"


def test_field_tags_survive():
    doc = read_document(DATA / "neutro_weak_fields.bim")
    assert doc.fields == ("Q(I)", "R(I)")
    assert "component 2 rows=3 cols=3 field=R(I)" in format_document(doc)


fracs = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 9))
rings = {
    "rational": fracs,
    "neutrosophic": st.builds(NeutrosophicScalar, fracs, fracs),
    "fuzzy": st.one_of(st.builds(Fraction, st.integers(0, 8), st.integers(8, 9)).map(FuzzyNeutroValue.real),
                       st.just(PURE_I)),
}


@given(st.sampled_from(sorted(rings)), st.data())
def test_generated_round_trip(ring, data):
    shape = [data.draw(st.integers(1, 4)) for _ in range(4)]
    b = BiMatrix(data.draw(matrices(shape[0], shape[1], rings[ring])),
                 data.draw(matrices(shape[2], shape[3], rings[ring])))
    text = format_bimatrix(b)
    assert text.startswith(f"bimatrix {ring}\n")
    assert parse_bimatrix(text, strict=False) == b
    assert format_bimatrix(parse_bimatrix(text, strict=False)) == text
