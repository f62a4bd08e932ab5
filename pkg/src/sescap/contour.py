"""Smooth-exterior-scaling path and its first three derivatives.

The path F(x) stays on the real axis inside |x| < x_cap and rotates into
the upper complex plane by the scaling angle outside, switched on over a
width ~1/lam.  Both box edges are scaled (the test problems are
symmetric), so F is odd: F(-x) = -F(x).

With the switch profile s(d) = (1 + erf(d))/2 and its antiderivative
S(d) = d*s(d) + exp(-d^2)/(2 sqrt(pi)),

    g(x)  = s(lam*(x - x_cap)) + s(-lam*(x + x_cap))
    F(x)  = x + (e^{i theta} - 1) * [S(lam*(x - x_cap)) - S(-lam*(x + x_cap))] / lam
    F'(x) = 1 + (e^{i theta} - 1) * g(x)

and F'', F''' follow from g', g''.  On the right edge F(x) approaches
x_cap + (x - x_cap) e^{i theta} exactly (plain exterior scaling); inside,
|F(x) - x| decays like exp(-lam^2 (x_cap - |x|)^2), fast enough that the
path is indistinguishable from the real axis well before the absorber
ends and the accuracy budget of the whole method is preserved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.special import erf

from .errors import ConfigError

__all__ = ["ContourParams", "ContourValues", "contour_eval",
           "validate_theta_against_initial"]

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class ContourParams:
    """Scaling angle (rad), switch steepness (1/length), and onset x_cap."""

    theta: float
    lam: float
    x_cap: float

    def __post_init__(self):
        if not 0.0 <= self.theta < math.pi:
            raise ConfigError(f"theta={self.theta} outside [0, pi)")
        if not self.lam > 0:
            raise ConfigError(f"lam={self.lam} must be positive")
        if not self.x_cap > 0:
            raise ConfigError(f"x_cap={self.x_cap} must be positive")


class ContourValues(NamedTuple):
    f: np.ndarray    # F(x)
    f1: np.ndarray   # F'
    f2: np.ndarray   # F''
    f3: np.ndarray   # F'''


def _switch(d):
    """Switch s, antiderivative S, and s', s''."""
    s = 0.5 * (1.0 + erf(d))
    gauss = np.exp(-d * d)
    big_s = d * s + gauss / (2.0 * _SQRT_PI)
    sp = gauss / _SQRT_PI
    spp = -2.0 * d * gauss / _SQRT_PI
    return s, big_s, sp, spp


def contour_eval(params: ContourParams, x) -> ContourValues:
    """Evaluate F, F', F'', F''' at real points x (scalar or array)."""
    x = np.asarray(x, dtype=float)
    lam, xc = params.lam, params.x_cap
    rot = np.exp(1j * params.theta) - 1.0

    su, iu, spu, sppu = _switch(lam * (x - xc))
    sv, iv, spv, sppv = _switch(-lam * (x + xc))

    f = x + rot * (iu - iv) / lam
    f1 = 1.0 + rot * (su + sv)
    f2 = rot * lam * (spu - spv)
    f3 = rot * lam * lam * (sppu + sppv)
    return ContourValues(f, f1, f2, f3)


def validate_theta_against_initial(params: ContourParams, family_exponent: int) -> None:
    """Check that scaling keeps an exp(-a*x^N)-type state square integrable.

    The critical angle is pi/N (pi/2 for a Gaussian); raises ConfigError
    at or beyond it.
    """
    if family_exponent < 1:
        raise ConfigError(f"family exponent {family_exponent} must be >= 1")
    theta_c = math.pi / family_exponent
    if not params.theta < theta_c:
        raise ConfigError(
            f"theta={params.theta} >= pi/{family_exponent} = {theta_c:.6f}: "
            "the scaled initial state is not square integrable"
        )
