"""
orealg: exact univariate Ore algebras.

>>> from orealg import make_algebra
>>> A = make_algebra("x", "Dx")
>>> print(A("Dx") * A("x"))
x*Dx + 1
"""

from .algebra import (
    Domain,
    Kind,
    OreAlgebra,
    OrePoly,
    apply,
    convert,
    from_coeff_list,
    make_algebra,
    random_operator,
)
from .arith import QQ, Poly, QPoly, RatFun, nullspace, rank
from .closures import (
    annihilator_of_associate,
    annihilator_of_polynomial,
    symmetric_power,
    symmetric_product,
)
from .errors import (
    ConversionError,
    InsufficientDataError,
    InvalidAlgebraError,
    NoRelationError,
    OreDomainError,
    OreError,
    ParseError,
    SingularIndexError,
    UnsupportedError,
)
from .euclid import PrsStrategy, gcrd, lclm, normalize, quo_rem, xgcrd, xlclm
from .grammar import format_operator, parse, parse_polynomial
from .guessing import GuessOptions, GuessReport, guess, guess_raw, guess_report
from .sequences import BsplitResult, decimal_digits, forward_matrix_bsplit, to_list
from .series import Series
from .solvers import Solution, polynomial_solutions, power_series_solutions, rational_solutions
from .transforms import (
    annihilator_of_composition,
    annihilator_of_composition_d,
    annihilator_of_composition_s,
    annihilator_of_integral,
    annihilator_of_interlacing,
    annihilator_of_sum,
    from_F,
    from_T,
    to_D,
    to_F,
    to_S,
    to_T,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
