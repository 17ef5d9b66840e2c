"""Reading and writing the line-oriented bimatrix text format.

    bimatrix <ring>
    component 1 rows=R cols=C [field=TAG]
    <R rows of C tokens>
    component 2 rows=R' cols=C' [field=TAG]
    <R' rows of C' tokens>

``#`` starts a comment; blank lines are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .core import BiMatrix, check_collapse
from .errors import ParseError
from .linalg import Matrix
from .neutro import FIELD_TAG
from .scalars import RINGS, format_scalar, parse_scalar, ring_of


@dataclass(frozen=True)
class BimatrixDocument:
    bimatrix: BiMatrix
    ring: str
    fields: tuple[str | None, str | None] = (None, None)


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield number, line


def _columns(line: str):
    """(1-based column, token) pairs."""
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((i + 1, line[i:j]))
        i = j
    return out


def _component_header(number: int, line: str, index: int) -> tuple[int, int, str | None]:
    toks = _columns(line)
    words = [t for _, t in toks]
    if words[:2] != ["component", str(index)]:
        raise ParseError(f"expected 'component {index} rows=R cols=C'", number, toks[0][0])
    attrs = {}
    for col, tok in toks[2:]:
        key, sep, value = tok.partition("=")
        if not sep or key not in ("rows", "cols", "field") or key in attrs:
            raise ParseError(f"unexpected attribute {tok!r}", number, col)
        attrs[key] = (col, value)
    for key in ("rows", "cols"):
        if key not in attrs:
            raise ParseError(f"component {index} header lacks {key}=", number)
        col, value = attrs[key]
        if not value.isdigit() or int(value) == 0:
            raise ParseError(f"{key} must be a positive integer, got {value!r}", number, col)
    field = None
    if "field" in attrs:
        col, field = attrs["field"]
        if not FIELD_TAG.fullmatch(field):
            raise ParseError(f"bad field tag {field!r}", number, col)
    return int(attrs["rows"][1]), int(attrs["cols"][1]), field


def parse_document(text: str, strict: bool = True) -> BimatrixDocument:
    lines = list(_content_lines(text))
    pos = 0

    def take(what: str):
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] + 1 if lines else 1
            raise ParseError(f"unexpected end of input, expected {what}", last)
        pos += 1
        return lines[pos - 1]

    number, line = take("'bimatrix <ring>' header")
    words = line.split()
    if len(words) != 2 or words[0] != "bimatrix" or words[1] not in RINGS:
        raise ParseError(f"header must be 'bimatrix <ring>' with ring in {', '.join(RINGS)}", number, 1)
    ring = words[1]
    comps: list[Matrix] = []
    fields: list[str | None] = []
    for index in (1, 2):
        number, line = take(f"'component {index}' header")
        nrows, ncols, field = _component_header(number, line, index)
        rows = []
        for _ in range(nrows):
            number, line = take(f"a row of component {index}")
            toks = _columns(line)
            if toks[0][1] == "component":
                raise ParseError(f"component {index} has fewer than {nrows} rows", number, 1)
            if len(toks) != ncols:
                raise ParseError(f"expected {ncols} entries, found {len(toks)}", number, toks[0][0])
            row = []
            for col, tok in toks:
                try:
                    row.append(parse_scalar(tok, ring))
                except ParseError as exc:
                    raise ParseError(str(exc), number, col) from None
            rows.append(tuple(row))
        comps.append(tuple(rows))
        fields.append(field)
    if pos < len(lines):
        raise ParseError("trailing content after component 2", lines[pos][0], 1)
    b = BiMatrix(comps[0], comps[1])
    if strict:
        check_collapse(b)
    return BimatrixDocument(b, ring, (fields[0], fields[1]))


def parse_bimatrix(text: str, strict: bool = True) -> BiMatrix:
    return parse_document(text, strict).bimatrix


def read_document(path: str | Path, strict: bool = True) -> BimatrixDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8 ({exc.reason})") from None
    return parse_document(text, strict)


def parse_bimatrix_file(path: str | Path, strict: bool = True) -> BiMatrix:
    return read_document(path, strict).bimatrix


def format_matrix_rows(m: Matrix) -> list[str]:
    return [" ".join(format_scalar(x) for x in row) for row in m]


def format_bimatrix(b: BiMatrix, fields: tuple[str | None, str | None] = (None, None)) -> str:
    lines = [f"bimatrix {ring_of(b.first[0][0])}"]
    for index, (m, field) in enumerate(zip(b.components, fields), start=1):
        header = f"component {index} rows={len(m)} cols={len(m[0])}"
        if field:
            header += f" field={field}"
        lines.append(header)
        lines.extend(format_matrix_rows(m))
    return "\n".join(lines) + "\n"


def format_document(doc: BimatrixDocument) -> str:
    return format_bimatrix(doc.bimatrix, doc.fields)
