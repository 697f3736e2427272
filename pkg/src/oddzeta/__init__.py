"""oddzeta: a verification lab for the odd-zeta log-kernel integrals.

Computes the unit-square integrals I(n, m), their exact affine-in-zeta closed
forms, certified zeta values, and mechanically audits the associated
inequality, floor, and Diophantine case-analysis claims.
"""

__version__ = "0.1.0"

from .audit import (
    AuditTrace,
    ClaimReport,
    DiophantineCase,
    check_dn_growth,
    check_floor_claims,
    check_integral_bounds,
    diophantine_enumerate,
    full_chain_audit,
    in_scope_keys,
    induction_step_audit,
)
from .certified import CertifiedReal, PrecisionError, UndecidedComparison
from .exact import (
    LcmTable,
    PrimePower,
    Rational,
    binomial,
    factorial,
    is_prime_power,
    lcm_table,
    lcm_table_direct,
)
from .forms import (
    ZetaAffine,
    closed_form_I,
    eta_partial,
    eta_value,
    eta_zeta_factor,
    p_star,
    zeta_value,
)
from .quadrature import (
    OracleConvergenceError,
    QuadratureResult,
    ReducedIntegrand,
    log_moment_integral,
    oracle_I_quadrature,
    oracle_I_series,
    reduce_double_to_single,
)

__all__ = [
    "AuditTrace",
    "CertifiedReal",
    "ClaimReport",
    "DiophantineCase",
    "LcmTable",
    "OracleConvergenceError",
    "PrecisionError",
    "PrimePower",
    "QuadratureResult",
    "Rational",
    "ReducedIntegrand",
    "UndecidedComparison",
    "ZetaAffine",
    "binomial",
    "check_dn_growth",
    "check_floor_claims",
    "check_integral_bounds",
    "closed_form_I",
    "diophantine_enumerate",
    "eta_partial",
    "eta_value",
    "eta_zeta_factor",
    "factorial",
    "full_chain_audit",
    "in_scope_keys",
    "induction_step_audit",
    "is_prime_power",
    "lcm_table",
    "lcm_table_direct",
    "log_moment_integral",
    "oracle_I_quadrature",
    "oracle_I_series",
    "p_star",
    "reduce_double_to_single",
    "zeta_value",
]
