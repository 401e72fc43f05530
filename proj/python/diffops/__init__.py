from ._diffops import (
    BudgetExceeded,
    InputError,
    Op,
    ParseError,
    dop_generator,
    dop_membership,
    groebner_basis,
    jacobian,
    jacobian_ideal_monomial,
    normal_form,
    run_cli,
    simplicity_verdict,
    stability,
)

__all__ = [
    "BudgetExceeded",
    "InputError",
    "Op",
    "ParseError",
    "dop_generator",
    "dop_membership",
    "groebner_basis",
    "jacobian",
    "jacobian_ideal_monomial",
    "normal_form",
    "run_cli",
    "simplicity_verdict",
    "stability",
]
