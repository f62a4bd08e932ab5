"""Uniform periodic grid, Fourier bookkeeping, and spectral derivatives.

Atomic units throughout (hbar = 1).  The box is [-L/2, L/2) sampled at N
evenly spaced points x_j = -L/2 + j*dx, with conjugate wavenumbers
k_n = 2*pi*n/L for n = -N/2 .. N/2-1.  Transforms use the unitary
convention (1/sqrt(N) each way) with plane-wave phases anchored at the
physical coordinates, so sum_j |psi_j|^2 is preserved exactly and the
momentum coefficient at k multiplies exp(i*k*x).

Boundary conditions are periodic because the basis is; the box has to be
chosen large enough that wrap-around is part of whatever edge phenomenon
is under study rather than an extra artifact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.fft as _fft

from .errors import ConfigError, NumericalError

__all__ = ["GridSpec", "WavepacketState", "make_grid", "spectral_derivative"]


@dataclass(frozen=True)
class GridSpec:
    """Collocation grid plus its conjugate wavenumber grid.

    `k` is in ascending signed order (matching `x`); `k_fft` holds the
    same values in FFT storage order for internal use.
    """

    n_points: int
    box_length: float
    x: np.ndarray = field(repr=False)
    k: np.ndarray = field(repr=False)
    k_fft: np.ndarray = field(repr=False)
    _sign_fft: np.ndarray = field(repr=False)

    @property
    def dx(self) -> float:
        return self.box_length / self.n_points

    # -- transforms -------------------------------------------------------

    def to_momentum(self, amplitudes: np.ndarray) -> np.ndarray:
        """Unitary transform to coefficients of exp(i*k*x), ascending k."""
        coeffs = _fft.fft(np.asarray(amplitudes, dtype=complex), norm="ortho")
        return _fft.fftshift(self._sign_fft * coeffs)

    def to_position(self, coefficients: np.ndarray) -> np.ndarray:
        """Inverse of :meth:`to_momentum`."""
        coeffs = _fft.ifftshift(np.asarray(coefficients, dtype=complex))
        return _fft.ifft(self._sign_fft * coeffs, norm="ortho")

    def derivative(self, amplitudes: np.ndarray, order: int) -> np.ndarray:
        """(d/dx)^order by multiplying FFT coefficients with (ik)^order."""
        coeffs = _fft.fft(np.asarray(amplitudes, dtype=complex))
        return _fft.ifft((1j * self.k_fft) ** order * coeffs)

    def interpolate(self, amplitudes: np.ndarray, x_new: np.ndarray) -> np.ndarray:
        """Evaluate the trigonometric interpolant at arbitrary points.

        Exact on grid points and periodic, so x = +L/2 aliases to -L/2.
        """
        coeffs = self.to_momentum(amplitudes)
        x_new = np.atleast_1d(np.asarray(x_new, dtype=float))
        waves = np.exp(1j * np.outer(x_new, self.k))
        return waves @ coeffs / np.sqrt(self.n_points)

    def value_at(self, amplitudes: np.ndarray, x0: float) -> complex:
        return complex(self.interpolate(amplitudes, np.array([x0]))[0])


@dataclass
class WavepacketState:
    """Complex amplitudes on a grid, stamped with the physical time."""

    amplitudes: np.ndarray
    time: float
    grid: GridSpec

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (self.grid.n_points,):
            raise ConfigError(
                f"amplitude array has shape {amps.shape}, grid expects "
                f"({self.grid.n_points},)"
            )
        if not np.all(np.isfinite(amps.view(float))):
            raise NumericalError(f"non-finite amplitudes in state at t={self.time}")
        self.amplitudes = amps

    def norm(self) -> float:
        """L2 norm with the Riemann measure, sqrt(sum |psi|^2 dx)."""
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2) * self.grid.dx))

    def copy(self) -> "WavepacketState":
        return WavepacketState(self.amplitudes.copy(), self.time, self.grid)


def make_grid(n_points: int, box_length: float) -> GridSpec:
    """Build the periodic grid for a box of the given length.

    n_points must be even (the signed k-grid needs a half-integer split)
    and at least 4; box_length must be positive.
    """
    if n_points != int(n_points) or n_points < 4:
        raise ConfigError(f"n_points={n_points} is too small (need >= 4)")
    n_points = int(n_points)
    if n_points % 2:
        raise ConfigError(f"n_points={n_points} must be even")
    if not box_length > 0:
        raise ConfigError(f"box_length={box_length} must be positive")
    box_length = float(box_length)

    dx = box_length / n_points
    x = -box_length / 2 + dx * np.arange(n_points)
    n_fft = np.rint(_fft.fftfreq(n_points) * n_points).astype(int)
    k_fft = 2 * np.pi * n_fft / box_length
    k = _fft.fftshift(k_fft)
    # exp(i k_n L/2) = (-1)^n, the phase anchoring coefficients at x = -L/2
    sign_fft = np.where(n_fft % 2 == 0, 1.0, -1.0).astype(complex)
    for arr in (x, k, k_fft, sign_fft):
        arr.flags.writeable = False
    return GridSpec(n_points, box_length, x, k, k_fft, sign_fft)


def spectral_derivative(state: WavepacketState, order: int) -> np.ndarray:
    """First or second spatial derivative of a state's amplitudes."""
    if order not in (1, 2):
        raise ConfigError(f"unsupported derivative order {order}")
    return state.grid.derivative(state.amplitudes, order)
