"""Exact tools for the continuant Diophantine equation

    P(K_{n-1}(x_1..x_{n-1})) = K_n(x_0..x_{n-1}) * K_n(x_1..x_n).
"""
from .continuants import Matrix2, continuant, continuant_matrix, reverse, window
from .equation import (
    Chain,
    EquationInstance,
    ExtendKind,
    LiftKind,
    Solution,
    chain_window,
    chains_equivalent,
    extend_left,
    extend_right,
    is_nonstandard_window,
    lift,
    verify_solution,
)
from .errors import (
    ContinuantError,
    InadmissibleInstanceError,
    InternalError,
    InvalidInputError,
    InvalidParameterError,
    UnsupportedCaseError,
)
from .polynomials import ConditionReport, IntPolynomial, check_condition, eval_poly

__version__ = "0.1.0"
