"""1D wavepacket propagation with smooth-exterior-scaling absorbers.

Atomic units (hbar = 1, mass 1 unless stated).  The package builds
reflection-free complex absorbing potentials from a smooth exterior
scaling contour, assembles Hermitian and complex-symmetric Fourier-grid
Hamiltonians, propagates wavepackets by split-operator, eigen-expansion,
or short-step evolution matrices, and measures edge reflections against
numerically exact references.
"""

from .cap import CapOperator, apply_cap, build_delta_v, build_monomial_cap, build_rf_cap
from .contour import ContourParams, contour_eval, validate_theta_against_initial
from .errors import ConfigError, NumericalError
from .grid import GridSpec, WavepacketState, make_grid, spectral_derivative
from .hamiltonian import (EigenDecomposition, HamiltonianMatrix,
                          assemble_hermitian, assemble_nonhermitian,
                          eigendecompose, with_diagonal_cap, write_spectrum)
from .potentials import (FreeParticle, HarmonicPotential, PotentialModel,
                         SumPotential, TestWellBarrier, make_potential)

__version__ = "0.1.0"
