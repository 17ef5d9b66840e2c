"""Command-line workbench: ``bimatrix <verb> files... [options]``.

Each verb builds a plain dict report; the text output is rendered from that
dict, and ``--json`` dumps the same dict, so the two forms carry the same fields.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import bidet, bioperator, core, neutro
from .core import BiMatrix
from .errors import (Bisingular, BimatrixError, DegenerateCollapse, DimMismatch, IndexOutOfRange,
                     Inconsistent, NotDiagonalizable, ParseError, RingError, SemiBisingular, ShapeError,
                     SingularMatrix, SingularWitness)
from .poly import format_poly
from .scalars import format_rational, format_scalar, parse_scalar
from .textio import read_document

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SHAPE = 2
EXIT_COLLAPSE = 3
EXIT_DOMAIN = 4
EXIT_USAGE = 64

EXIT_CODES: list[tuple[type, int]] = [
    (ParseError, EXIT_PARSE),
    (DimMismatch, EXIT_SHAPE),
    (ShapeError, EXIT_SHAPE),
    (IndexOutOfRange, EXIT_SHAPE),
    (RingError, EXIT_SHAPE),
    (DegenerateCollapse, EXIT_COLLAPSE),
    (SingularMatrix, EXIT_DOMAIN),
    (Bisingular, EXIT_DOMAIN),
    (SemiBisingular, EXIT_DOMAIN),
    (Inconsistent, EXIT_DOMAIN),
    (NotDiagonalizable, EXIT_DOMAIN),
    (SingularWitness, EXIT_DOMAIN),
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --- report values ---------------------------------------------------------

def _bool(x: bool) -> str:
    return "true" if x else "false"


def _pair(d: bidet.BiDeterminant) -> list[str]:
    return [format_rational(d.first), format_rational(d.second)]


def _vec(v) -> list[str]:
    return [format_scalar(x) for x in v]


def _mat(m) -> list[list[str]]:
    return [_vec(row) for row in m]


def _bim(b: BiMatrix, fields=(None, None)) -> dict:
    out = {"ring": b.ring, "first": _mat(b.first), "second": _mat(b.second)}
    if any(fields):
        out["fields"] = list(fields)
    return out


def _tuple_text(items) -> str:
    return "(" + ", ".join(items) + ")"


def _set_text(items) -> str:
    return "{" + ",".join(str(i) for i in items) + "}"


def _matrix_text(rows) -> str:
    return "[" + "; ".join(" ".join(r) for r in rows) + "]"


def _bim_text(d: dict) -> str:
    lines = [f"bimatrix {d['ring']}"]
    fields = d.get("fields", [None, None])
    for index, key in enumerate(("first", "second"), start=1):
        m = d[key]
        header = f"component {index} rows={len(m)} cols={len(m[0])}"
        if fields[index - 1]:
            header += f" field={fields[index - 1]}"
        lines.append(header)
        lines.extend(" ".join(row) for row in m)
    return "\n".join(lines)


def _scalar_text(v) -> str:
    if isinstance(v, bool):
        return _bool(v)
    if isinstance(v, list):
        return _tuple_text(_scalar_text(x) for x in v)
    return str(v)


def _kv_text(d: dict) -> str:
    return "\n".join(f"{k}={_scalar_text(v)}" for k, v in d.items())


# --- verbs -----------------------------------------------------------------

def _load(path: str, strict: bool = True):
    return read_document(path, strict)


def _indices(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad index list {text!r}") from None


def do_classify(args):
    doc = _load(args.a)
    b = doc.bimatrix
    (r1, c1), (r2, c2) = b.dims
    data = {"shape": str(core.classify_shape(b)), "ring": doc.ring, "dims": [f"{r1}x{c1}", f"{r2}x{c2}"]}
    return data, _kv_text(data)


def _result(b: BiMatrix, fields=(None, None)):
    data = {"result": _bim(b, fields)}
    return data, _bim_text(data["result"])


def do_add(args):
    return _result(core.add(_load(args.a).bimatrix, _load(args.b).bimatrix))


def do_mul(args):
    return _result(core.mul(_load(args.a).bimatrix, _load(args.b).bimatrix))


def do_scalarmul(args):
    doc = _load(args.a)
    lam = parse_scalar(args.scalar, doc.ring)
    return _result(core.scalar_mul(lam, doc.bimatrix), doc.fields)


def do_transpose(args):
    doc = _load(args.a)
    return _result(core.transpose(doc.bimatrix), doc.fields)


def do_symskew(args):
    parts = core.sym_skew_decompose(_load(args.a).bimatrix)
    data = {"symmetric": _bim(parts.symmetric_part), "skew": _bim(parts.skew_part)}
    text = "# symmetric\n" + _bim_text(data["symmetric"]) + "\n# skew\n" + _bim_text(data["skew"])
    return data, text


def do_sub(args):
    doc = _load(args.a)
    out = core.subbimatrix(doc.bimatrix, _indices(args.rows1), _indices(args.cols1),
                           _indices(args.rows2), _indices(args.cols2))
    return _result(out, doc.fields)


def do_overlap(args):
    rep = core.detect_overlap(_load(args.a).bimatrix)

    def shared(vs):
        return [{"entries": _vec(v.entries), "first": list(v.first_positions), "second": list(v.second_positions)}
                for v in vs]

    data = {"kind": str(rep.kind), "rows": shared(rep.shared_rows), "columns": shared(rep.shared_columns)}
    lines = [f"kind={data['kind']}"]
    for label, key in (("row", "rows"), ("column", "columns")):
        for v in data[key]:
            lines.append(f"{label}={_tuple_text(v['entries'])} first={_set_text(v['first'])} "
                         f"second={_set_text(v['second'])}")
    return data, "\n".join(lines)


def do_det(args):
    data = {"bidet": _pair(bidet.bideterminant(_load(args.a).bimatrix))}
    return data, _kv_text(data)


def do_cofactor(args):
    at = _indices(args.at)
    if len(at) != 2:
        raise UsageError("--at takes i,j")
    data = {"bicofactor": _pair(bidet.bicofactor(_load(args.a).bimatrix, *at))}
    return data, _kv_text(data)


def do_laplace(args):
    rep = bidet.bilaplace_expand(_load(args.a).bimatrix, _indices(args.rows))
    terms = [{"cols": list(t.cols), "sign": t.sign, "N": _pair(t.minor), "M": _pair(t.complement),
              "term": _pair(t.product)} for t in rep.terms]
    data = {"terms": terms, "total": _pair(rep.total)}
    lines = [f"cols={_set_text(t['cols'])} sign={t['sign']:+d} |N|={_tuple_text(t['N'])} "
             f"|M|={_tuple_text(t['M'])} term={_tuple_text(t['term'])}" for t in terms]
    lines.append(f"total={_tuple_text(data['total'])}")
    return data, "\n".join(lines)


def do_inverse(args):
    return _result(bidet.biinverse(_load(args.a).bimatrix))


def do_singularity(args):
    data = {"singularity": str(bidet.singularity_class(_load(args.a).bimatrix))}
    return data, _kv_text(data)


def do_rectdet(args):
    total, terms = bidet.rectangular_product_bidet(_load(args.a).bimatrix, _load(args.b).bimatrix)
    rows = [{"cols": list(t.cols), "A": _pair(t.left), "B": _pair(t.right), "term": _pair(t.product)}
            for t in terms]
    data = {"terms": rows, "total": _pair(total)}
    lines = [f"cols={_set_text(t['cols'])} |A|={_tuple_text(t['A'])} |B|={_tuple_text(t['B'])} "
             f"term={_tuple_text(t['term'])}" for t in rows]
    lines.append(f"total={_tuple_text(data['total'])}")
    return data, "\n".join(lines)


def _op_record(logged: bioperator.LoggedOp) -> dict:
    op = logged.op
    rec = {"component": logged.component, "kind": op.kind, "target": op.target + 1}
    if op.kind in ("swap", "addmul"):
        rec["source"] = op.source + 1
    if op.kind in ("scale", "addmul"):
        rec["factor"] = format_rational(op.factor)
    return rec


def do_rref(args):
    red = bioperator.row_bireduce(_load(args.a).bimatrix, args.mode)
    data = {"mode": args.mode, "partial": red.partial, "ops": [_op_record(o) for o in red.ops],
            "result": _bim(red.result)}
    lines = [f"# mode={args.mode} partial={_bool(red.partial)}"]
    for rec in data["ops"]:
        extra = [str(rec[k]) for k in ("source", "factor") if k in rec]
        lines.append(" ".join(["# op", rec["component"], rec["kind"], str(rec["target"])] + extra))
    lines.append(_bim_text(data["result"]))
    return data, "\n".join(lines)


def do_solve(args):
    a = _load(args.a).bimatrix
    if args.y:
        y = _load(args.y, strict=False).bimatrix
    else:
        y = core.zero_bimatrix((a.dims[0][0], 1), (a.dims[1][0], 1))
    sol = bioperator.solve_biequation(a, y)
    comps = [{"particular": _vec(p), "nullspace": [_vec(v) for v in ns]}
             for p, ns in zip(sol.particular, sol.nullspace)]
    data = {"homogeneous": sol.homogeneous, "semi_homogeneous": sol.semi_homogeneous,
            "first": comps[0], "second": comps[1]}
    lines = [f"homogeneous={_bool(sol.homogeneous)}", f"semi_homogeneous={_bool(sol.semi_homogeneous)}"]
    for index, c in enumerate(comps, start=1):
        basis = "[" + ", ".join(_tuple_text(v) for v in c["nullspace"]) + "]"
        lines.append(f"component={index} particular={_tuple_text(c['particular'])} nullspace={basis}")
    return data, "\n".join(lines)


def _bipoly(p: bioperator.BiPolynomial):
    data = {"first": format_poly(p.first), "second": format_poly(p.second)}
    return data, _kv_text(data)


def do_charpoly(args):
    return _bipoly(bioperator.char_bipolynomial(_load(args.a).bimatrix))


def do_minpoly(args):
    return _bipoly(bioperator.biminimal_polynomial(_load(args.a).bimatrix))


def do_eigen(args):
    rep = bioperator.bieigen(_load(args.a).bimatrix)
    comps = []
    for s in (rep.first, rep.second):
        comps.append({"roots": [{"root": format_rational(r.value), "alg": r.algebraic, "geo": r.geometric,
                                 "basis": [_vec(v) for v in r.basis]} for r in s.roots],
                      "residual": format_poly(s.residual)})
    data = {"first": comps[0], "second": comps[1], "classification": str(rep.classification)}
    lines = []
    for index, c in enumerate(comps, start=1):
        lines.append(f"component={index}")
        for r in c["roots"]:
            basis = "[" + ", ".join(_tuple_text(v) for v in r["basis"]) + "]"
            lines.append(f"root={r['root']} alg={r['alg']} geo={r['geo']} basis={basis}")
        lines.append(f"residual={c['residual']}")
    lines.append(f"classification={data['classification']}")
    return data, "\n".join(lines)


def do_diagcheck(args):
    ok, w = bioperator.is_bidiagonalizable(_load(args.a).bimatrix)
    if ok:
        data = {"bidiagonalizable": True, "first_basis": [_vec(v) for v in w.bases[0]],
                "second_basis": [_vec(v) for v in w.bases[1]]}
        text = "\n".join([
            "bidiagonalizable=true",
            "first_basis=[" + ", ".join(_tuple_text(v) for v in data["first_basis"]) + "]",
            "second_basis=[" + ", ".join(_tuple_text(v) for v in data["second_basis"]) + "]",
        ])
        return data, text
    data = {"bidiagonalizable": False, "component": w.component, "reason": w.reason}
    return data, _kv_text(data)


def do_projections(args):
    rep = bioperator.biprojections(_load(args.a).bimatrix)
    data = {key: [{"eigenvalue": format_rational(p.eigenvalue), "matrix": _mat(p.matrix)} for p in projs]
            for key, projs in (("first", rep.first), ("second", rep.second))}
    lines = [f"component={index} eigenvalue={p['eigenvalue']} matrix={_matrix_text(p['matrix'])}"
             for index, key in enumerate(("first", "second"), start=1) for p in data[key]]
    return data, "\n".join(lines)


def do_tricheck(args):
    (f1, f2), overall = bioperator.is_bitriangularizable(_load(args.a).bimatrix)
    data = {"first": f1, "second": f2, "overall": overall}
    return data, _kv_text(data)


def do_nilcheck(args):
    data = {"binilpotent": bioperator.is_binilpotent(_load(args.a).bimatrix)}
    return data, _kv_text(data)


def do_simcheck(args):
    a, b, p = (_load(x).bimatrix for x in (args.a, args.b, args.p))
    data = {"similar": bioperator.check_similarity_witness(a, b, p)}
    return data, _kv_text(data)


def do_neutro_mul(args):
    return _result(neutro.neutro_bimul(_load(args.a).bimatrix, _load(args.b).bimatrix))


def do_fuzzy_compose(args):
    return _result(neutro.fuzzy_bicompose(_load(args.a).bimatrix, _load(args.b).bimatrix))


def do_neutro_classify(args):
    doc = _load(args.a)
    c = neutro.classify_neutro(doc.bimatrix, doc.fields)
    data = {"kind": str(c.neutro_kind), "shape": str(c.shape), "field_scope": str(c.field_scope)}
    return data, _kv_text(data)


def do_fuzzy_classify(args):
    c = neutro.classify_fuzzy(_load(args.a).bimatrix)
    data = {"kind": str(c.fuzzy_kind), "shape": str(c.shape), "integral_neutro": list(c.integral_neutro),
            "fuzzy_neutro": list(c.fuzzy_neutro), "label": c.neutro_label}
    return data, _kv_text(data)


# verb -> (handler, positional file arguments, extra option setup)
VERBS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "classify": (do_classify, ("a",)),
    "add": (do_add, ("a", "b")),
    "mul": (do_mul, ("a", "b")),
    "scalarmul": (do_scalarmul, ("a",)),
    "transpose": (do_transpose, ("a",)),
    "symskew": (do_symskew, ("a",)),
    "sub": (do_sub, ("a",)),
    "overlap": (do_overlap, ("a",)),
    "det": (do_det, ("a",)),
    "cofactor": (do_cofactor, ("a",)),
    "laplace": (do_laplace, ("a",)),
    "inverse": (do_inverse, ("a",)),
    "singularity": (do_singularity, ("a",)),
    "rectdet": (do_rectdet, ("a", "b")),
    "rref": (do_rref, ("a",)),
    "solve": (do_solve, ("a",)),
    "charpoly": (do_charpoly, ("a",)),
    "minpoly": (do_minpoly, ("a",)),
    "eigen": (do_eigen, ("a",)),
    "diagcheck": (do_diagcheck, ("a",)),
    "projections": (do_projections, ("a",)),
    "tricheck": (do_tricheck, ("a",)),
    "nilcheck": (do_nilcheck, ("a",)),
    "simcheck": (do_simcheck, ("a", "b", "p")),
    "neutro-mul": (do_neutro_mul, ("a", "b")),
    "fuzzy-compose": (do_fuzzy_compose, ("a", "b")),
    "neutro-classify": (do_neutro_classify, ("a",)),
    "fuzzy-classify": (do_fuzzy_classify, ("a",)),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bimatrix", description="Exact bimatrix algebra workbench.")
    parser.add_argument("--json", action="store_true", help="emit the report as JSON")
    # SUPPRESS keeps a subcommand from resetting a --json given before the verb
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit the report as JSON")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb, (handler, files) in VERBS.items():
        p = sub.add_parser(verb, parents=[common])
        for name in files:
            p.add_argument(name, metavar=f"{name}.bim")
        p.set_defaults(handler=handler)
        if verb == "scalarmul":
            p.add_argument("--scalar", required=True)
        elif verb == "sub":
            for opt in ("--rows1", "--cols1", "--rows2", "--cols2"):
                p.add_argument(opt, required=True, help="1-based comma list")
        elif verb == "cofactor":
            p.add_argument("--at", required=True, help="i,j (1-based)")
        elif verb == "laplace":
            p.add_argument("--rows", required=True, help="shared 1-based row set")
        elif verb == "rref":
            p.add_argument("--mode", choices=("weak", "strong"), default="weak")
        elif verb == "solve":
            p.add_argument("y", nargs="?", metavar="y.bim", help="right-hand columns; omit for homogeneous")
    return parser


def exit_code_for(exc: BaseException) -> int:
    for cls, code in EXIT_CODES:
        if isinstance(exc, cls):
            return code
    if isinstance(exc, OSError):
        return EXIT_PARSE
    raise exc


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        data, text = args.handler(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (BimatrixError, OSError) as exc:
        code = exit_code_for(exc)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return code
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
