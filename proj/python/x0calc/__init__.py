"""Eisenstein arithmetic intersection numbers on X_0(N), N squarefree."""

from ._x0calc import (
    EisOperator,
    Eigenform,
    Error,
    GramMatrix,
    SymbolicReal,
    canonical_decomposition,
    eta_expand,
    genus_quotient,
    gram,
    hecke_shift,
    heegner_points,
    ingest_file,
    invariants,
    is_self_adjoint,
    l_derivative,
    l_value,
    level11_form,
    omega_eis_sq,
    omega_f_sq,
    parse_eigenform,
    petersson,
    symmetry_residual,
    t_hat,
    verify_analysis,
    w_hat,
    w_square,
)

__all__ = [name for name in dir() if not name.startswith("_")]
