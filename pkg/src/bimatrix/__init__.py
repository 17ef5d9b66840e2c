"""Exact bimatrix algebra: paired matrices over Q, Q(I) and fuzzy-neutrosophic values."""
from .bidet import (BiDeterminant, SingularityClass, bicofactor, bideterminant, biinverse, bilaplace_expand,
                    biminor, rectangular_product_bidet, singularity_class)
from .bioperator import (BiPolynomial, Mode, bieigen, biminimal_polynomial, biprojections, char_bipolynomial,
                         check_similarity_witness, is_bidiagonalizable, is_binilpotent, is_bitriangularizable,
                         row_bireduce, solve_biequation)
from .core import (BiMatrix, ShapeClass, add, classify_shape, detect_overlap, make_bimatrix, mul, scalar_mul,
                   subbimatrix, sym_skew_decompose, transpose)
from .errors import *  # noqa: F401,F403
from .neutro import (bimatrix_lift, classify_fuzzy, classify_neutro, fuzzy_maxmin_compose, neutro_matmul)
from .scalars import FuzzyNeutroValue, NeutrosophicScalar, fuzzy_max, fuzzy_min, neutro_add, neutro_mul
from .textio import format_bimatrix, parse_bimatrix, parse_bimatrix_file

__version__ = "0.1.0"
