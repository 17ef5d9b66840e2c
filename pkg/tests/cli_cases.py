"""Golden CLI invocations over the example corpus: (name, argv, expected exit code).

Paths in argv are relative to tests/data. Goldens live in tests/golden/<name>.out
and hold stdout only; stderr is checked loosely in test_cli.py.
"""
from pathlib import Path

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

CASES: list[tuple[str, list[str], int]] = [
    ("classify_rect_2x3", ["classify", "rect_2x3.bim"], 0),
    ("classify_mixed_square", ["classify", "mixed_square.bim"], 0),
    ("classify_mixed_rect", ["classify", "mixed_rect.bim"], 0),
    ("classify_row_pair", ["classify", "row_pair.bim"], 0),
    ("classify_column_pair", ["classify", "column_pair.bim"], 0),
    ("add_sum", ["add", "sum_a.bim", "sum_c.bim"], 0),
    ("add_collapse", ["add", "collapse_sum_a.bim", "collapse_sum_b.bim"], 3),
    ("mul_square", ["mul", "product_a.bim", "product_b.bim"], 0),
    ("mul_mixed", ["mul", "mixed_product_a.bim", "mixed_product_b.bim"], 0),
    ("mul_mismatch", ["mul", "rect_2x3.bim", "rect_2x3.bim"], 2),
    ("mul_det_product", ["mul", "det_product_a.bim", "det_product_b.bim"], 0),
    ("scalarmul_rect_scalar", ["scalarmul", "rect_scalar.bim", "--scalar=-3/2"], 0),
    ("transpose_square_3x3", ["transpose", "square_3x3.bim"], 0),
    ("symskew_symmetric_pair", ["symskew", "symmetric_pair.bim"], 0),
    ("symskew_rect", ["symskew", "rect_2x3.bim"], 2),
    ("sub_selection", ["sub", "submatrix_source.bim", "--rows1", "1,3", "--cols1", "1,2,3", "--rows2", "1,3,5,6", "--cols2", "1,2"], 0),
    ("sub_out_of_range", ["sub", "submatrix_source.bim", "--rows1", "9", "--cols1", "1", "--rows2", "1", "--cols2", "1"], 2),
    ("overlap_none", ["overlap", "skew_pair.bim"], 0),
    ("overlap_row_4x4", ["overlap", "row_overlap_4x4.bim"], 0),
    ("overlap_row", ["overlap", "row_overlap.bim"], 0),
    ("overlap_column", ["overlap", "column_overlap.bim"], 0),
    ("overlap_row_column", ["overlap", "row_column_overlap.bim"], 0),
    ("det_mixed", ["det", "mixed_det.bim"], 0),
    ("det_4x4", ["det", "det_4x4.bim"], 0),
    ("det_rect", ["det", "rect_2x3.bim"], 2),
    ("cofactor_pair", ["cofactor", "cofactor_pair.bim", "--at", "1,1"], 0),
    ("laplace_shared_rows", ["laplace", "shared_rows.bim", "--rows", "1,2"], 0),
    ("laplace_mixed", ["laplace", "column_split.bim", "--rows", "1"], 2),
    ("det_column_split", ["det", "column_split.bim"], 0),
    ("det_shared_rows", ["det", "shared_rows.bim"], 0),
    ("inverse_2x2", ["inverse", "inverse_2x2.bim"], 0),
    ("inverse_mixed", ["inverse", "inverse_mixed.bim"], 0),
    ("inverse_product", ["inverse", "inverse_product_a.bim"], 0),
    ("inverse_bisingular", ["inverse", "bisingular.bim"], 4),
    ("inverse_semi_bisingular", ["inverse", "semi_bisingular.bim"], 4),
    ("singularity_bisingular", ["singularity", "bisingular.bim"], 0),
    ("singularity_semi_bisingular", ["singularity", "semi_bisingular.bim"], 0),
    ("rectdet", ["rectdet", "rect_product_a.bim", "rect_product_b.bim"], 0),
    ("rref_reduction_pair_weak", ["rref", "reduction_pair.bim"], 0),
    ("rref_reduction_pair_strong", ["rref", "reduction_pair.bim", "--mode", "strong"], 0),
    ("solve_homogeneous_system", ["solve", "homogeneous_system.bim"], 0),
    ("solve_reduction_pair_semi", ["solve", "reduction_pair.bim", "semi_homogeneous_rhs.bim"], 0),
    ("charpoly_semi_spectrum", ["charpoly", "semi_spectrum.bim"], 0),
    ("charpoly_defective_spectrum", ["charpoly", "defective_spectrum.bim"], 0),
    ("minpoly_minimal_pair", ["minpoly", "minimal_pair.bim"], 0),
    ("eigen_semi_spectrum", ["eigen", "semi_spectrum.bim"], 0),
    ("eigen_diagonalizable", ["eigen", "diagonalizable.bim"], 0),
    ("diagcheck_diagonalizable", ["diagcheck", "diagonalizable.bim"], 0),
    ("diagcheck_defective_spectrum", ["diagcheck", "defective_spectrum.bim"], 0),
    ("projections_diagonalizable", ["projections", "diagonalizable.bim"], 0),
    ("projections_defective_spectrum", ["projections", "defective_spectrum.bim"], 4),
    ("tricheck_minimal_pair", ["tricheck", "minimal_pair.bim"], 0),
    ("tricheck_semi_spectrum", ["tricheck", "semi_spectrum.bim"], 0),
    ("nilcheck_nilpotent", ["nilcheck", "nilpotent.bim"], 0),
    ("nilcheck_minimal_pair", ["nilcheck", "minimal_pair.bim"], 0),
    ("simcheck_true", ["simcheck", "diagonalizable.bim", "sim_b.bim", "sim_p.bim"], 0),
    ("simcheck_false", ["simcheck", "diagonalizable.bim", "sim_b_wrong.bim", "sim_p.bim"], 0),
    ("neutro_mul", ["neutro-mul", "neutro_product_a.bim", "neutro_product_b.bim"], 0),
    ("fuzzy_compose", ["fuzzy-compose", "fuzzy_compose_p.bim", "fuzzy_compose_q.bim"], 0),
    ("neutro_classify_weak_fields", ["neutro-classify", "neutro_weak_fields.bim"], 0),
    ("neutro_classify_strong_fields", ["neutro-classify", "neutro_strong_fields.bim"], 0),
    ("neutro_classify_mixed_square", ["neutro-classify", "neutro_mixed_square.bim"], 0),
    ("neutro_classify_semi_neutro", ["neutro-classify", "semi_neutro.bim"], 0),
    ("fuzzy_classify_square", ["fuzzy-classify", "fuzzy_square.bim"], 0),
    ("fuzzy_classify_semi_fuzzy", ["fuzzy-classify", "semi_fuzzy.bim"], 0),
    ("fuzzy_classify_column", ["fuzzy-classify", "column_fuzzy_neutro.bim"], 0),
    ("parse_missing_component", ["classify", "err_missing_component2.bim"], 1),
    ("parse_bad_token", ["det", "err_bad_token.bim"], 1),
    ("parse_collapse", ["classify", "err_collapse.bim"], 3),
    ("missing_file", ["det", "no_such_file.bim"], 1),
    ("unknown_verb", ["frobnicate", "rect_2x3.bim"], 64),
    ("missing_option", ["cofactor", "cofactor_pair.bim"], 64),
    ("json_det_mixed", ["--json", "det", "mixed_det.bim"], 0),
    ("json_eigen_semi_spectrum", ["eigen", "semi_spectrum.bim", "--json"], 0),
    ("json_inverse_2x2", ["--json", "inverse", "inverse_2x2.bim"], 0),
    ("json_laplace_shared_rows", ["--json", "laplace", "shared_rows.bim", "--rows", "1,2"], 0),
]


def resolve(argv: list[str]) -> list[str]:
    return [str(DATA / a) if a.endswith(".bim") else a for a in argv]
