"""Exact cubic solving with Cardano's cube roots denested into quadratic surds."""
from .cardano import (
    EPSILON_1,
    EPSILON_2,
    CardanoNumeric,
    DenestedPair,
    GeneralDenesting,
    Root,
    SolveResult,
    branch_pairs,
    cardano_numeric,
    denest,
    denest_real_general,
    denest_verify,
    enumerate_branches,
    solve,
)
from .cubic_core import (
    Classification,
    DepressedCubic,
    GeneralCubic,
    classify,
    deflate,
    depress,
    discriminant,
    rational_root_search,
)
from .errors import (
    CubicError,
    DegenerateError,
    InvariantViolation,
    NotACubicError,
    NotARootError,
    ParseError,
    RadicandMismatchError,
)
from .formatting import format_equation, format_surd
from .numeval import ComplexDecimal, FixedDecimal, eval_cbrt, eval_quadext, eval_sqrt, residual
from .parsing import parse_equation
from .quad_field import QuadExt, qe_cube

__version__ = "0.1.0"
