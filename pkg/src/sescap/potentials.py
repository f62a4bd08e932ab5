"""Potential models evaluable at real and complex coordinates.

Built-ins: the well-between-barriers test potential
V(x) = (0.5 x^2 - 0.8) exp(-0.1 x^2), the free particle, and the harmonic
oscillator.  Potentials compose with `SumPotential`, which is how edge
aids (the dc field) enter the Hamiltonian.

`on_contour(x, f_of_x)` evaluates the potential along a complex path.
Analytic potentials just continue; piecewise ones (the dc field) pick the
branch from the real coordinate x, not from Re(F(x)).
"""

from __future__ import annotations

import numpy as np

from .errors import ConfigError

__all__ = ["PotentialModel", "TestWellBarrier", "FreeParticle",
           "HarmonicPotential", "SumPotential", "make_potential"]


class PotentialModel:
    """Base class: a potential is a callable on (possibly complex) points."""

    kind = "abstract"

    def __call__(self, z):
        raise NotImplementedError

    def on_contour(self, x, f_of_x):
        """Potential along a complex path parametrized by the real x."""
        return self(f_of_x)

    def params(self) -> dict:
        return {}

    def describe(self) -> dict:
        return {"kind": self.kind, **self.params()}


class TestWellBarrier(PotentialModel):
    """A well at the origin embedded between two symmetric barriers."""

    kind = "test_well_barrier"

    def __call__(self, z):
        z = np.asarray(z)
        return (0.5 * z**2 - 0.8) * np.exp(-0.1 * z**2)


class FreeParticle(PotentialModel):
    kind = "free"

    def __call__(self, z):
        return np.zeros_like(np.asarray(z))


class HarmonicPotential(PotentialModel):
    kind = "harmonic"

    def __init__(self, omega: float = 1.0):
        if not omega > 0:
            raise ConfigError(f"omega={omega} must be positive")
        self.omega = float(omega)

    def __call__(self, z):
        z = np.asarray(z)
        return 0.5 * self.omega**2 * z**2

    def params(self):
        return {"omega": self.omega}


class SumPotential(PotentialModel):
    kind = "sum"

    def __init__(self, *terms: PotentialModel):
        self.terms = terms

    def __call__(self, z):
        return sum(term(z) for term in self.terms)

    def on_contour(self, x, f_of_x):
        return sum(term.on_contour(x, f_of_x) for term in self.terms)

    def params(self):
        return {"terms": [term.describe() for term in self.terms]}


_BUILTINS = {
    "test_well_barrier": TestWellBarrier,
    "free": FreeParticle,
    "harmonic": HarmonicPotential,
}


def make_potential(kind: str, **params) -> PotentialModel:
    try:
        cls = _BUILTINS[kind]
    except KeyError:
        raise ConfigError(
            f"unknown potential kind {kind!r}; choose from {sorted(_BUILTINS)}"
        ) from None
    return cls(**params)
