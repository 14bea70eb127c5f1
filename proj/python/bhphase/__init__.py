"""Phase portraits and traveling waves of the generalized Burgers-Huxley equation."""

from ._bhphase import (
    ConfigError,
    DomainError,
    NumericalError,
    ParameterError,
    Params,
    PreconditionError,
    circle_equilibria,
    classify_portrait,
    cycle_search,
    field,
    finite_equilibria,
    infinite_equilibria,
    pde_speed,
    portrait_json,
    pushforward_residual,
    shoot_wave,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "NumericalError",
    "ParameterError",
    "Params",
    "PreconditionError",
    "circle_equilibria",
    "classify_portrait",
    "cycle_search",
    "field",
    "finite_equilibria",
    "infinite_equilibria",
    "pde_speed",
    "portrait_json",
    "pushforward_residual",
    "shoot_wave",
]
