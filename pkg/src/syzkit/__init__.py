"""Gröbner bases of syzygy modules and multiplication matrices over prime fields."""

from .errors import (
    DimensionError,
    InfiniteQuotientError,
    InvariantError,
    NotReducedError,
    OracleLimitError,
    SingularMatrixError,
    StructuralAssumptionError,
    SyzkitError,
    ValidationError,
)
from .ff_linalg import PrimeField
from .instances import (
    gen_hermite_pade,
    gen_matrix_annihilator,
    gen_multivar_pade,
    gen_points_ideal,
    gen_random_commuting,
)
from .modpoly import (
    GroebnerBasis,
    ModulePoly,
    Staircase,
    check_reduced,
    check_structural_assumption,
    divide,
    leading_term,
    staircase_from_lm,
)
from .monomials import Monomial, MonomialIndex, MonomialOrder, build_index, contract, divides, expand, mul_by_power
from .mulmat import MulMatResult, change_order, krylov_eval, multiplication_matrices, next_monomials
from .syzygy import (
    Instance,
    MonomialBasisResult,
    apply_poly,
    border_basis,
    monomial_basis,
    normal_form,
    syzygy_basis,
)

__version__ = "0.1.0"
