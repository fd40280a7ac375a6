"""Exact computer algebra for LG models: regularized potentials, critical values,
Milnor data and matrix factorizations over Q."""

__version__ = "0.1.0"

from .crit import critical_values, cross_check, is_relative_critical_point, relative_critical_values
from .errors import BudgetExceededError, DomainCondition, InputError, MfcohError
from .groebner import Ideal, Submodule, groebner_basis, spair_budget
from .lg import LGModel, check_regular_sequence, regularize, translate
from .matfac import MatrixFactorization, koszul_mf, shift, stable_hom_dims, tensor_mf, validate_mf
from .milnor import hh_rank, hp_rank, per_value_milnor_numbers
from .poly import GREVLEX, LEX, PolyRing, Polynomial

__all__ = [
    "BudgetExceededError",
    "DomainCondition",
    "GREVLEX",
    "Ideal",
    "InputError",
    "LEX",
    "LGModel",
    "MatrixFactorization",
    "MfcohError",
    "PolyRing",
    "Polynomial",
    "Submodule",
    "check_regular_sequence",
    "critical_values",
    "cross_check",
    "groebner_basis",
    "hh_rank",
    "hp_rank",
    "is_relative_critical_point",
    "koszul_mf",
    "per_value_milnor_numbers",
    "regularize",
    "relative_critical_values",
    "shift",
    "spair_budget",
    "stable_hom_dims",
    "tensor_mf",
    "translate",
    "validate_mf",
]
