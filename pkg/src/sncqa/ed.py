"""Exact-diagonalization oracles and overlap computation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import ResourceGuardError
from .spinmodel import IrrepHamiltonian

IRREP_DENSE_MAX_DIM = 5000
FULL_ED_MAX_DIM = 16384
FULL_DENSE_MAX_DIM = 4096
DEGENERACY_TOL = 1e-8


@dataclass(frozen=True)
class SpectrumReport:
    """Ascending eigenvalues plus an orthonormal basis of the ground space."""

    eigenvalues: np.ndarray
    ground_vectors: np.ndarray  # columns span the ground eigenspace
    degeneracy: int

    @property
    def ground_energy(self) -> float:
        return float(self.eigenvalues[0])


def _report(eigenvalues: np.ndarray, vectors: np.ndarray) -> SpectrumReport:
    order = np.argsort(eigenvalues)
    eigenvalues = eigenvalues[order]
    vectors = vectors[:, order]
    ground = eigenvalues[0]
    degeneracy = int(np.sum(eigenvalues <= ground + DEGENERACY_TOL))
    return SpectrumReport(
        eigenvalues=eigenvalues,
        ground_vectors=vectors[:, :degeneracy],
        degeneracy=degeneracy,
    )


def ed_irrep(ham: IrrepHamiltonian) -> SpectrumReport:
    """Dense symmetric eigendecomposition of an in-irrep Hamiltonian."""
    if ham.dim > IRREP_DENSE_MAX_DIM:
        raise ResourceGuardError(
            f"irrep dimension {ham.dim} exceeds dense guard {IRREP_DENSE_MAX_DIM}"
        )
    eigenvalues, vectors = np.linalg.eigh(ham.matrix)
    return _report(eigenvalues, vectors)


def ed_full(ham: sp.spmatrix, num_lowest: int = 10) -> SpectrumReport:
    """Eigendecomposition of the full computational-basis Hamiltonian.

    Dense (full spectrum) up to dimension 4096; above that an iterative
    solver returns at least ``num_lowest`` lowest eigenpairs with a fixed
    starting vector so results are deterministic.
    """
    dim = ham.shape[0]
    if dim > FULL_ED_MAX_DIM:
        raise ResourceGuardError(f"dimension {dim} exceeds full-ED guard {FULL_ED_MAX_DIM}")
    if dim <= FULL_DENSE_MAX_DIM:
        eigenvalues, vectors = np.linalg.eigh(ham.toarray())
        return _report(eigenvalues, vectors)
    k = min(max(num_lowest, 10), dim - 2)
    v0 = np.full(dim, 1.0 / np.sqrt(dim))
    eigenvalues, vectors = spla.eigsh(ham, k=k, which="SA", v0=v0)
    return _report(eigenvalues, vectors)


def overlap(a: np.ndarray, b_space: np.ndarray) -> float:
    """Norm of the projection of a (normalized) onto span(b_space).

    ``b_space`` holds orthonormal columns; a 1-d array is treated as a single
    vector.  The result is in [0, 1] and invariant under phase changes of
    ``a`` and orthonormal re-basing of ``b_space``.
    """
    a = np.asarray(a)
    norm = np.linalg.norm(a)
    if norm == 0.0:
        raise ValueError("cannot compute overlap of the zero vector")
    if b_space.ndim == 1:
        b_space = b_space[:, None]
    coeffs = b_space.conj().T @ (a / norm)
    return float(min(np.linalg.norm(coeffs), 1.0))


def irrep_ground_sweep(
    lattice, shapes, builder=None
) -> dict:
    """Ground energy per two-row shape; used by the ed CLI and sector checks.

    Returns a dict mapping Partition -> SpectrumReport.  ``builder`` defaults
    to :func:`sncqa.spinmodel.heisenberg_irrep`.
    """
    from .spinmodel import heisenberg_irrep

    if builder is None:
        builder = heisenberg_irrep
    return {shape: ed_irrep(builder(shape, lattice)) for shape in shapes}
