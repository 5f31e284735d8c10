"""Entanglement dynamics of a qutrit pair dephasing in an anisotropic ring.

Thin python surface over the C++ core: effective-field tables, suppression
factors, negativity, time/alpha sweeps, and the small-ring exact
diagonalization used for cross-checks.
"""

from ._core import (
    DomainError,
    __version__,
    alpha_time_grid,
    antiperiodic_phases,
    big_lambda,
    exact_factor_series,
    factor_complex,
    factor_magnitude,
    factor_magnitude_at_phases,
    factors_for_state,
    find_critical_alpha,
    lambda_table,
    mode_phases,
    negativity_closed_form,
    negativity_spectral,
    theta,
    time_series,
    xi,
)

__all__ = [
    "DomainError",
    "__version__",
    "alpha_time_grid",
    "antiperiodic_phases",
    "big_lambda",
    "exact_factor_series",
    "factor_complex",
    "factor_magnitude",
    "factor_magnitude_at_phases",
    "factors_for_state",
    "find_critical_alpha",
    "lambda_table",
    "mode_phases",
    "negativity_closed_form",
    "negativity_spectral",
    "theta",
    "time_series",
    "xi",
]
