"""Reflection-free CAP coefficients from the scaling contour.

The similarity-transformed kinetic operator adds a non-local absorber

    v0 + v1 d/dx + v2 d^2/dx^2,

    v0 = 1/(4 M F'^3) * (F''' - 5 F''^2 / (2 F')),
    v1 = F'' / (M F'^3),
    v2 = (1/2M) (1 - F'^{-2}),

(hbar = 1) plus the potential correction delta_v = V(F(x)) - V(x).  All
coefficients vanish with the contour derivatives inside |x| < x_cap and
scale inversely with the mass.  The conventional one-sided monomial
absorber -i*lam*(x-x0)^n is provided for comparison, mirrored to both
edges like everything else here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .contour import ContourParams, contour_eval
from .errors import ConfigError, NumericalError
from .grid import GridSpec, WavepacketState
from .potentials import PotentialModel

__all__ = ["CapOperator", "build_rf_cap", "build_delta_v", "apply_cap",
           "build_monomial_cap", "monomial_cap_profile"]


@dataclass
class CapOperator:
    """Coefficient arrays of the absorber on a specific grid."""

    v0: np.ndarray
    v1: np.ndarray
    v2: np.ndarray
    delta_v: np.ndarray
    mass: float
    grid: GridSpec
    contour: ContourParams | None = field(default=None)

    def __post_init__(self):
        for name in ("v0", "v1", "v2", "delta_v"):
            arr = np.asarray(getattr(self, name), dtype=complex)
            if arr.shape != (self.grid.n_points,):
                raise ConfigError(f"{name} does not match the grid size")
            if not np.all(np.isfinite(arr.view(float))):
                raise NumericalError(f"non-finite values in {name}")
            setattr(self, name, arr)


def build_rf_cap(contour: ContourParams, grid: GridSpec, mass: float = 1.0) -> CapOperator:
    """Evaluate the three coefficient functions on the grid (delta_v zeroed)."""
    if not mass > 0:
        raise ConfigError(f"mass={mass} must be positive")
    _, f1, f2, f3 = contour_eval(contour, grid.x)
    f1_3 = f1**3
    v0 = (f3 - 2.5 * f2**2 / f1) / (4.0 * mass * f1_3)
    v1 = f2 / (mass * f1_3)
    v2 = (1.0 - f1**-2) / (2.0 * mass)
    zero = np.zeros(grid.n_points, dtype=complex)
    return CapOperator(v0, v1, v2, zero, mass, grid, contour)


def build_delta_v(potential: PotentialModel, contour: ContourParams,
                  grid: GridSpec, clamp: float | None = None) -> np.ndarray:
    """Potential correction V(F(x)) - V(x) on the grid.

    Raises NumericalError (naming the worst grid point) if the continued
    potential overflows or exceeds an optional magnitude clamp.
    """
    f = contour_eval(contour, grid.x).f
    on_path = np.asarray(potential.on_contour(grid.x, f), dtype=complex)
    on_axis = np.asarray(potential(grid.x), dtype=complex)
    delta = on_path - on_axis
    bad = ~np.isfinite(delta.view(float).reshape(-1, 2)).all(axis=1)
    if bad.any():
        j = int(np.argmax(bad))
        raise NumericalError(
            f"potential overflow on the contour at x={grid.x[j]:g} (index {j})"
        )
    if clamp is not None and np.abs(delta).max() > clamp:
        j = int(np.argmax(np.abs(delta)))
        raise NumericalError(
            f"|delta_v| = {np.abs(delta[j]):.3e} exceeds clamp {clamp:g} "
            f"at x={grid.x[j]:g}"
        )
    return delta


def apply_cap(cap: CapOperator, state: WavepacketState) -> np.ndarray:
    """(v0 + delta_v) psi + v1 psi' + v2 psi'' via spectral derivatives."""
    if state.grid is not cap.grid and (
            state.grid.n_points != cap.grid.n_points
            or state.grid.box_length != cap.grid.box_length):
        raise ConfigError("state and CAP live on different grids")
    psi = state.amplitudes
    d1 = cap.grid.derivative(psi, 1)
    d2 = cap.grid.derivative(psi, 2)
    return (cap.v0 + cap.delta_v) * psi + cap.v1 * d1 + cap.v2 * d2


def monomial_cap_profile(lambda_abs: float, x0: float, n: int):
    """Callable form of the two-sided monomial absorber, for quadrature."""
    if not 1 <= n <= 8:
        raise ConfigError(f"monomial power n={n} outside 1..8")
    if lambda_abs < 0:
        raise ConfigError(f"lambda_abs={lambda_abs} must be >= 0")

    def profile(x):
        depth = np.maximum(np.abs(np.asarray(x, dtype=float)) - x0, 0.0)
        return -1j * lambda_abs * depth**n

    return profile


def build_monomial_cap(lambda_abs: float, x0: float, n: int, grid: GridSpec) -> np.ndarray:
    """Two-sided monomial absorber -i*lam*(|x| - x0)^n outside |x| >= x0."""
    if not x0 < grid.box_length / 2:
        raise ConfigError(f"x0={x0} is outside the box (L/2={grid.box_length / 2})")
    return monomial_cap_profile(lambda_abs, x0, n)(grid.x)
