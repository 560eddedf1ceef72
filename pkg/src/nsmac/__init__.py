"""Exact non-symmetric Macdonald polynomials E_mu(x; q, t).

Two independent engines compute E_mu: a sum over non-attacking fillings
(``E_combinatorial``) and the Hecke-operator recurrence (``E_recurrence``).
The symmetric forms H~, J, P and Schur polynomials are built on top.
"""
from .exactalg import (
    ONE,
    Q,
    T,
    ZERO,
    EvaluationPoleError,
    QTPoly,
    QTRational,
    XPolynomial,
    qt_evaluate,
    qt_invert_params,
    qt_normalize,
)
from .fillings import Filling, enumerate_fillings, enumerate_non_attacking, plain_stats, stats
from .hecke import OperatorContext, E_recurrence, apply_Psi, apply_si, apply_Ti
from .macdonald import (
    RouteMismatchError,
    E_combinatorial,
    E_integral,
    E_inverted,
    check_complement_identity,
    key_polynomial,
)
from .shapes import arm_length, bruhat_leq, leg_length, parse_composition
from .symmetric import (
    D_mu,
    J_lambda,
    J_via_stable_limit,
    P_lambda,
    P_via_stable_limit,
    P_via_symmetrization,
    schur_oracle,
    schur_via_keys,
)

__version__ = "0.1.0"

__all__ = [
    "ONE", "ZERO", "Q", "T",
    "QTPoly", "QTRational", "XPolynomial", "EvaluationPoleError",
    "qt_normalize", "qt_evaluate", "qt_invert_params",
    "Filling", "enumerate_fillings", "enumerate_non_attacking", "stats", "plain_stats",
    "OperatorContext", "apply_si", "apply_Ti", "apply_Psi", "E_recurrence",
    "E_combinatorial", "E_integral", "E_inverted", "key_polynomial",
    "check_complement_identity", "RouteMismatchError",
    "arm_length", "leg_length", "bruhat_leq", "parse_composition",
    "D_mu", "J_lambda", "J_via_stable_limit",
    "P_lambda", "P_via_stable_limit", "P_via_symmetrization",
    "schur_via_keys", "schur_oracle",
]
