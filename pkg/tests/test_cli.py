"""CLI reports against goldens, exit codes, determinism, and the JSON mirror."""
import contextlib
import io
import json
import subprocess
import sys

import pytest

from bimatrix.cli import VERBS, main
from cli_cases import CASES, DATA, GOLDEN, resolve


def main_text(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def run(argv):
    return main_text(resolve(argv))


@pytest.mark.parametrize("name, argv, expected", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, expected):
    code, out, err = run(argv)
    assert code == expected, err
    assert out == (GOLDEN / f"{name}.out").read_text(encoding="utf-8")
    if code not in (0, 64):
        assert err.startswith("error: ") and out == ""


def test_every_verb_has_a_golden():
    covered = {argv[0] if not argv[0].startswith("--") else argv[1] for _, argv, _ in CASES}
    assert set(VERBS) <= covered


@pytest.mark.parametrize("name, argv, expected", CASES[::7], ids=[c[0] for c in CASES[::7]])
def test_byte_stable(name, argv, expected):
    assert run(argv) == run(argv)


def test_key_reports():
    assert run(["det", "mixed_det.bim"])[1] == "bidet=(0, 10)\n"
    eigen = run(["eigen", "semi_spectrum.bim"])[1]
    assert "residual=1 + x^2" in eigen and eigen.endswith("classification=Semi:second\n")
    composed = run(["fuzzy-compose", "fuzzy_compose_p.bim", "fuzzy_compose_q.bim"])[1].splitlines()
    assert composed[2:5] == ["I", "I", "0.1"]


@pytest.mark.parametrize("argv", [["det", "mixed_det.bim"], ["eigen", "diagonalizable.bim"], ["inverse", "inverse_2x2.bim"],
                                  ["overlap", "row_column_overlap.bim"], ["solve", "homogeneous_system.bim"], ["diagcheck", "defective_spectrum.bim"]])
def test_json_mirrors_text(argv):
    code, out, _ = run(["--json", *argv])
    assert code == 0
    data = json.loads(out)
    text = run(argv)[1]
    # every scalar printed in the JSON form also appears in the text form
    def leaves(x):
        if isinstance(x, dict):
            for v in x.values():
                yield from leaves(v)
        elif isinstance(x, list):
            for v in x:
                yield from leaves(v)
        else:
            yield x
    for leaf in leaves(data):
        token = str(leaf).lower() if isinstance(leaf, bool) else str(leaf)
        assert token in text


def test_json_flag_position_is_free():
    assert run(["--json", "det", "mixed_det.bim"]) == run(["det", "mixed_det.bim", "--json"])


def test_unknown_verb_before_io():
    code, out, err = run(["frobnicate", "does_not_exist.bim"])
    assert code == 64 and "invalid choice" in err


def test_round_trip_through_transpose_twice(tmp_path):
    first = tmp_path / "t.bim"
    first.write_text(run(["transpose", "square_3x3.bim"])[1], encoding="utf-8")
    code, out, _ = main_text(["transpose", str(first)])
    assert code == 0
    assert out == (DATA / "square_3x3.bim").read_text(encoding="utf-8")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bimatrix", "det", str(DATA / "mixed_det.bim")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "bidet=(0, 10)\n"
    proc = subprocess.run([sys.executable, "-m", "bimatrix", "add", str(DATA / "collapse_sum_a.bim"),
                           str(DATA / "collapse_sum_b.bim")], capture_output=True, text=True, check=False)
    assert proc.returncode == 3 and "DegenerateCollapse" in proc.stderr
