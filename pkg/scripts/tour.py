"""Print a few CLI reports over the bundled corpus, e.g. `python3 scripts/tour.py det eigen`."""
import sys
from pathlib import Path

from bimatrix.cli import main

DATA = Path(__file__).resolve().parents[1] / "tests" / "data"

TOUR = {
    "det": ["det", "mixed_det.bim"],
    "rectdet": ["rectdet", "rect_product_a.bim", "rect_product_b.bim"],
    "laplace": ["laplace", "shared_rows.bim", "--rows", "1,2"],
    "inverse": ["inverse", "inverse_mixed.bim"],
    "rref": ["rref", "reduction_pair.bim", "--mode", "strong"],
    "eigen": ["eigen", "semi_spectrum.bim"],
    "projections": ["projections", "diagonalizable.bim"],
    "neutro-mul": ["neutro-mul", "neutro_product_a.bim", "neutro_product_b.bim"],
    "fuzzy-compose": ["fuzzy-compose", "fuzzy_compose_p.bim", "fuzzy_compose_q.bim"],
}

if __name__ == "__main__":
    for name in sys.argv[1:] or TOUR:
        argv = [str(DATA / a) if a.endswith(".bim") else a for a in TOUR[name]]
        print(f"$ bimatrix {' '.join(TOUR[name])}")
        code = main(argv)
        print(f"[exit {code}]\n")
