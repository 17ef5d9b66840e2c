"""Rewrite tests/golden/*.out from the current CLI. Review the diff before committing."""
import contextlib
import io
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from cli_cases import CASES, GOLDEN, resolve  # noqa: E402

from bimatrix.cli import main  # noqa: E402


def run(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = main(resolve(argv))
    return code, out.getvalue()


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for name, argv, expected in CASES:
        code, text = run(argv)
        if code != expected:
            sys.exit(f"{name}: exit {code}, table says {expected}")
        (GOLDEN / f"{name}.out").write_text(text, encoding="utf-8")
    print(f"wrote {len(CASES)} goldens to {GOLDEN}")
