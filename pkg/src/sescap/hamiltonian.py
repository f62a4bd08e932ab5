"""Dense Fourier-basis Hamiltonians and their eigendecompositions.

Matrices are built in the momentum basis: basis function n is the plane
wave exp(i k_n x) on the box, and a matrix acts on the momentum
coefficient vector `grid.to_momentum(psi)`.  The kinetic part is diagonal
(k^2/2M); every coordinate-space factor (potential, delta_v, absorber
coefficients) enters as a Toeplitz block of Fourier coefficients computed
on a refined grid, so products are free of collocation aliasing.  The
absorber is cross-assembled as v0 + v1*(ik) + v2*(-k^2).

That construction makes the scaled Hamiltonian complex symmetric to
machine precision, which is both the structural property the c-product
relies on and a sharp assembly bug-catcher: sign or argument mistakes in
the absorber terms break it immediately.

Non-Hermitian eigenvectors are normalized in the c-product (bilinear, no
conjugation), the natural pairing for complex symmetric matrices;
projections onto the eigenbasis evaluate that product through a direct
solve, which is the numerically stable form of the same operation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg as _sla

from .cap import build_delta_v, build_rf_cap
from .contour import ContourParams
from .errors import ConfigError, NumericalError
from .grid import GridSpec, make_grid
from .potentials import PotentialModel

__all__ = ["HamiltonianMatrix", "EigenDecomposition", "assemble_hermitian",
           "assemble_nonhermitian", "with_diagonal_cap", "eigendecompose",
           "write_spectrum"]

# refinement factor for the quadrature grid behind Toeplitz blocks
_QUAD_REFINE = 8


@dataclass
class HamiltonianMatrix:
    """Dense momentum-basis matrix plus assembly metadata."""

    matrix: np.ndarray
    hermitian: bool
    grid: GridSpec
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        n = self.grid.n_points
        if m.shape != (n, n):
            raise ConfigError(f"matrix shape {m.shape} does not match grid ({n})")
        if not np.all(np.isfinite(m.view(float))):
            raise NumericalError("non-finite entries in Hamiltonian matrix")
        self.matrix = m

    def hermiticity_defect(self) -> float:
        return float(np.abs(self.matrix - self.matrix.conj().T).max())

    def symmetry_defect(self) -> float:
        """Max deviation from the plain (unconjugated) transpose."""
        return float(np.abs(self.matrix - self.matrix.T).max())

    def apply(self, amplitudes: np.ndarray) -> np.ndarray:
        """Act on grid-space amplitudes, returning grid-space amplitudes."""
        return self.grid.to_position(self.matrix @ self.grid.to_momentum(amplitudes))


def _mode_numbers(grid: GridSpec) -> np.ndarray:
    return np.rint(grid.k * grid.box_length / (2.0 * np.pi)).astype(int)


def _toeplitz_block(grid: GridSpec, fine: GridSpec, values_fine: np.ndarray) -> np.ndarray:
    """Momentum-basis matrix of multiplication by a coordinate function.

    Entry (n, m) is the Fourier coefficient of the function at mode
    n - m, taken from the refined quadrature grid.
    """
    n_fine = fine.n_points
    coeffs = fine.to_momentum(np.asarray(values_fine, dtype=complex)) / np.sqrt(n_fine)
    by_mode = np.empty(n_fine, dtype=complex)
    by_mode[_mode_numbers(fine) + n_fine // 2] = coeffs
    n_small = _mode_numbers(grid)
    diff = n_small[:, None] - n_small[None, :] + n_fine // 2
    return by_mode[diff]


def _quadrature_grid(grid: GridSpec) -> GridSpec:
    return make_grid(_QUAD_REFINE * grid.n_points, grid.box_length)


def assemble_hermitian(grid: GridSpec, potential: PotentialModel,
                       mass: float = 1.0) -> HamiltonianMatrix:
    """-1/(2M) d^2/dx^2 + V(x) in the momentum basis."""
    fine = _quadrature_grid(grid)
    v_fine = np.asarray(potential(fine.x))
    if np.iscomplexobj(v_fine) and np.abs(v_fine.imag).max() > 0:
        raise ConfigError("Hermitian assembly requires a real potential")
    h = _toeplitz_block(grid, fine, v_fine.real)
    h[np.diag_indices_from(h)] += grid.k**2 / (2.0 * mass)
    return HamiltonianMatrix(h, True, grid,
                             {"potential": potential.describe(), "mass": mass})


def assemble_nonhermitian(grid: GridSpec, potential: PotentialModel,
                          contour: ContourParams, mass: float = 1.0,
                          delta_v_clamp: float | None = None) -> HamiltonianMatrix:
    """Hermitian part plus delta_v plus the three absorber terms."""
    fine = _quadrature_grid(grid)
    cap = build_rf_cap(contour, fine, mass)
    delta_v = build_delta_v(potential, contour, fine, clamp=delta_v_clamp)
    v_fine = np.asarray(potential(fine.x)).real

    h = _toeplitz_block(grid, fine, v_fine + delta_v + cap.v0)
    h += _toeplitz_block(grid, fine, cap.v1) * (1j * grid.k)[None, :]
    h += _toeplitz_block(grid, fine, cap.v2) * (-grid.k**2)[None, :]
    h[np.diag_indices_from(h)] += grid.k**2 / (2.0 * mass)
    return HamiltonianMatrix(h, False, grid, {
        "potential": potential.describe(), "mass": mass,
        "contour": {"theta": contour.theta, "lam": contour.lam,
                    "x_cap": contour.x_cap},
    })


def with_diagonal_cap(ham: HamiltonianMatrix, cap_profile,
                      label: str = "diagonal_cap") -> HamiltonianMatrix:
    """Add a local complex absorbing potential given as a profile callable.

    The profile is evaluated on the refined quadrature grid like any other
    coordinate-space term, so kinked absorbers (the monomial family) get
    their Fourier matrix elements from honest quadrature rather than from
    coarse collocation samples.
    """
    fine = _quadrature_grid(ham.grid)
    values = np.asarray(cap_profile(fine.x), dtype=complex)
    h = ham.matrix + _toeplitz_block(ham.grid, fine, values)
    meta = dict(ham.meta)
    meta[label] = True
    return HamiltonianMatrix(h, False, ham.grid, meta)


@dataclass
class EigenDecomposition:
    """Eigenpairs with projection machinery in the declared product.

    Eigenvector columns are momentum-basis coefficients, normalized so
    that the declared product of a vector with itself is 1 with the dx
    measure (matching the L2 convention of `grid`).
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    product: str                 # "hermitian" or "c"
    grid: GridSpec
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self._lu = None

    def vectors_on_grid(self) -> np.ndarray:
        """Columns as coordinate-space samples."""
        cols = [self.grid.to_position(self.eigenvectors[:, j])
                for j in range(self.eigenvectors.shape[1])]
        return np.array(cols).T

    def project(self, amplitudes: np.ndarray) -> np.ndarray:
        """Expansion coefficients of grid-space amplitudes in the eigenbasis.

        For the Hermitian product this is the conjugated inner product;
        for the c-product it is evaluated by solving against the full
        eigenvector matrix, the stable form of the bilinear projection
        (the two coincide up to roundoff when the matrix is complex
        symmetric, but the solve keeps near-degenerate pairs honest).
        """
        c = self.grid.to_momentum(np.asarray(amplitudes, dtype=complex))
        if self.product == "hermitian":
            return (self.eigenvectors.conj().T @ c) * self.grid.dx
        if self._lu is None:
            self._lu = _sla.lu_factor(self.eigenvectors)
        return _sla.lu_solve(self._lu, c)

    def c_product_coefficients(self, amplitudes: np.ndarray) -> np.ndarray:
        """The textbook bilinear projection, kept for diagnostics."""
        c = self.grid.to_momentum(np.asarray(amplitudes, dtype=complex))
        return (self.eigenvectors.T @ c) * self.grid.dx

    def reconstruct(self, coefficients: np.ndarray) -> np.ndarray:
        """Grid-space amplitudes from expansion coefficients."""
        return self.grid.to_position(self.eigenvectors @ coefficients)

    def orthonormality_defect(self) -> float:
        v = self.eigenvectors
        if self.product == "hermitian":
            gram = v.conj().T @ v * self.grid.dx
        else:
            gram = v.T @ v * self.grid.dx
        return float(np.abs(gram - np.eye(len(gram))).max())


def eigendecompose(ham: HamiltonianMatrix,
                   residual_tol: float = 1e-8,
                   self_orthogonality_tol: float = 1e-8) -> EigenDecomposition:
    """Full dense eigendecomposition with residual and product checks.

    Near-self-orthogonal eigenvectors of the complex symmetric case (the
    signature of contour parameters close to an exceptional point) are
    reported by raising, never silently renormalized.
    """
    if ham.hermitian:
        vals, vecs = _sla.eigh(ham.matrix)
        vals = vals.astype(complex)
        product = "hermitian"
    else:
        vals, vecs = _sla.eig(ham.matrix)
        order = np.lexsort((vals.imag, vals.real))
        vals, vecs = vals[order], vecs[:, order]
        # LAPACK returns unit 2-norm columns; the bilinear norm then
        # directly measures distance from self-orthogonality.
        cnorm2 = np.einsum("ij,ij->j", vecs, vecs)
        degenerate = np.abs(cnorm2) < self_orthogonality_tol
        if degenerate.any():
            idx = np.nonzero(degenerate)[0]
            raise NumericalError(
                f"self-orthogonal eigenvector(s) at indices {idx.tolist()} "
                f"(|c-norm| < {self_orthogonality_tol:g}); the contour is "
                "near an exceptional point"
            )
        vecs = vecs / np.sqrt(cnorm2)
        product = "c"

    vecs = vecs / np.sqrt(ham.grid.dx)

    residual = np.abs(ham.matrix @ vecs - vecs * vals).max(axis=0)
    scale = np.abs(vecs).max(axis=0)
    worst = float((residual / scale).max())
    if worst > residual_tol:
        raise NumericalError(
            f"eigendecomposition residual {worst:.3e} exceeds {residual_tol:g}"
        )
    return EigenDecomposition(vals, vecs, product, ham.grid,
                              {**ham.meta, "residual": worst})


def write_spectrum(decomp: EigenDecomposition, path, header: str = "") -> None:
    """Plain-text spectrum dump: index, Re E, Im E."""
    with open(path, "w") as fh:
        if header:
            for line in header.rstrip("\n").split("\n"):
                fh.write(f"# {line}\n")
        fh.write("# index  Re_E  Im_E\n")
        for j, e in enumerate(decomp.eigenvalues):
            fh.write(f"{j} {e.real!r} {e.imag!r}\n")
