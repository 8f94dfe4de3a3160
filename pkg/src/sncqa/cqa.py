"""Alternating-ansatz simulation inside a single S_n irrep.

Each layer applies the problem evolution exp(-i gamma H) followed by a mixer
exp(-i sum_{k<=l} beta_kl X_k X_l), which is diagonal in the Young basis
because the Jucys-Murphy elements are.  By the convention X_1 = I, the pairs
with k = 1 supply the first-order mixer terms and beta_11 a global phase.

The energy of the final state uses only its real part (falling back to the
imaginary part when the real part vanishes), as a Rayleigh quotient of the
positively shifted Hamiltonian; gradients are exact, computed by adjoint
back-propagation through the layer chain and the eigenbasis of H.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .spinmodel import IrrepHamiltonian
from .tableaux import Partition
from .yor import IrrepRep

logger = logging.getLogger(__name__)

_REAL_PART_TOL = 1e-12


def yjm_pair_indices(n: int) -> list[tuple[int, int]]:
    """The (k, l) pairs with 1 <= k <= l <= n, in row-major order."""
    return [(k, l) for k in range(1, n + 1) for l in range(k, n + 1)]


def num_pairs(n: int) -> int:
    return n * (n + 1) // 2


@dataclass(frozen=True)
class CQAParams:
    """Per-layer mixer coefficients and evolution angles.

    ``betas[j]`` holds the upper-triangle coefficients beta_kl (k <= l, in
    :func:`yjm_pair_indices` order) of layer j; ``gammas[j]`` the matching
    evolution angle.
    """

    betas: np.ndarray  # (p, n_pairs)
    gammas: np.ndarray  # (p,)

    def __post_init__(self):
        betas = np.atleast_2d(np.asarray(self.betas, dtype=float))
        gammas = np.atleast_1d(np.asarray(self.gammas, dtype=float))
        if betas.shape[0] != gammas.shape[0]:
            raise ValueError("betas and gammas must agree on the layer count")
        if not (np.all(np.isfinite(betas)) and np.all(np.isfinite(gammas))):
            raise ValueError("parameters must be finite")
        object.__setattr__(self, "betas", betas)
        object.__setattr__(self, "gammas", gammas)

    @property
    def layers(self) -> int:
        return len(self.gammas)

    def beta_matrix(self, layer: int, n: int) -> np.ndarray:
        """The symmetric n x n beta matrix of one layer."""
        mat = np.zeros((n, n))
        for value, (k, l) in zip(self.betas[layer], yjm_pair_indices(n)):
            mat[k - 1, l - 1] = value
            mat[l - 1, k - 1] = value
        return mat

    def flatten(self) -> np.ndarray:
        return np.concatenate([self.betas.ravel(), self.gammas])

    @classmethod
    def unflatten(cls, flat: np.ndarray, p: int, n: int) -> "CQAParams":
        m = num_pairs(n)
        return cls(betas=flat[: p * m].reshape(p, m), gammas=flat[p * m :])

    @classmethod
    def zeros(cls, p: int, n: int) -> "CQAParams":
        return cls(betas=np.zeros((p, num_pairs(n))), gammas=np.zeros(p))

    @classmethod
    def random(cls, p: int, n: int, scale: float, rng: np.random.Generator) -> "CQAParams":
        return cls(
            betas=scale * rng.standard_normal((p, num_pairs(n))),
            gammas=scale * rng.standard_normal(p),
        )


def yjm_products(rep: IrrepRep) -> np.ndarray:
    """Rows x_k * x_l (componentwise, k <= l) over the tableau basis.

    x_1 is the all-ones vector (X_1 redefined as the identity); x_k for
    k >= 2 is the content diagonal of X_k.
    """
    dim = rep.dim
    x = np.ones((rep.n + 1, dim))
    for k in range(2, rep.n + 1):
        x[k] = rep.yjm[k - 1]
    return np.array([x[k] * x[l] for k, l in yjm_pair_indices(rep.n)])


def mixer_phases(rep: IrrepRep, beta: np.ndarray) -> np.ndarray:
    """Diagonal of the mixer sum_{k<=l} beta_kl X_k X_l on the Young basis."""
    beta = np.asarray(beta, dtype=float)
    if beta.ndim == 2:
        n = rep.n
        beta = np.array([beta[k - 1, l - 1] for k, l in yjm_pair_indices(n)])
    return beta @ yjm_products(rep)


@dataclass(frozen=True)
class CQAState:
    """Unit-norm amplitude vector over the Young basis of one irrep."""

    shape: Partition
    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex)
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"state norm {norm} is not 1")
        object.__setattr__(self, "amplitudes", amp)


class CQACircuit:
    """Forward/adjoint engine for one (irrep, Hamiltonian) pair.

    Holds the one-time eigendecomposition H = V diag(w) V^T used for every
    evolution layer, and the stacked YJM products used by every mixer.  The
    order flag selects whether the problem evolution or the mixer acts first
    within a layer (the default matches reading the alternating product
    right-to-left as applied to the state).
    """

    def __init__(
        self,
        rep: IrrepRep,
        ham: IrrepHamiltonian,
        init: np.ndarray,
        order: str = "problem_first",
    ):
        if rep.shape != ham.shape:
            raise ValueError("representation and Hamiltonian shapes differ")
        if order not in ("problem_first", "mixer_first"):
            raise ValueError(f"unknown layer order {order!r}")
        init = np.asarray(init, dtype=complex)
        if init.shape != (rep.dim,):
            raise ValueError(f"init vector must have length {rep.dim}")
        norm = np.linalg.norm(init)
        if norm < 1e-12:
            raise ValueError("init vector is zero")
        self.rep = rep
        self.ham = ham
        self.order = order
        self.init = init / norm
        self.eigenvalues, self.eigenvectors = np.linalg.eigh(ham.matrix)
        self.pair_products = yjm_products(rep)
        self.n = rep.n
        self.dim = rep.dim

    # -- forward -----------------------------------------------------------

    def _evolve(self, state: np.ndarray, gamma: float) -> np.ndarray:
        v = self.eigenvectors
        return v @ (np.exp(-1j * gamma * self.eigenvalues) * (v.T @ state))

    def forward(self, params: CQAParams, keep_intermediates: bool = False):
        """Final amplitudes, optionally with per-layer intermediates."""
        state = self.init
        mids, outs, phase_vecs = [], [], []
        for layer in range(params.layers):
            phases = params.betas[layer] @ self.pair_products
            if self.order == "problem_first":
                mid = self._evolve(state, params.gammas[layer])
                state = np.exp(-1j * phases) * mid
            else:
                mid = np.exp(-1j * phases) * state
                state = self._evolve(mid, params.gammas[layer])
            if keep_intermediates:
                mids.append(mid)
                outs.append(state)
                phase_vecs.append(phases)
        if keep_intermediates:
            return state, mids, outs, phase_vecs
        return state

    def _postprocess(self, psi: np.ndarray) -> tuple[np.ndarray, bool]:
        real = psi.real
        if np.linalg.norm(real) >= _REAL_PART_TOL:
            return real, False
        imag = psi.imag
        if np.linalg.norm(imag) < _REAL_PART_TOL:
            raise ValueError("post-processed state vanished (real and imaginary)")
        logger.warning("real part of the wavefunction vanished; using imaginary part")
        return imag, True

    def energy(self, params: CQAParams) -> tuple[float, float]:
        """(shifted, unshifted) Rayleigh quotient of the post-processed state."""
        psi = self.forward(params)
        phi, _ = self._postprocess(psi)
        quad = float(phi @ (self.ham.matrix @ phi)) / float(phi @ phi)
        return quad + self.ham.shift, quad

    # -- gradient ------------------------------------------------------------

    def energy_and_gradient(self, params: CQAParams):
        """Exact gradient of the shifted energy in CQAParams layout.

        Backpropagates the real cotangent d E / d Re(psi) through the layer
        chain: mixer layers contribute Im(out * conj(adjoint)) against the
        YJM products, evolution layers Im(<adjoint| H |mid>); the evolution
        transpose is applied through the cached eigenbasis.
        """
        psi, mids, outs, phase_vecs = self.forward(params, keep_intermediates=True)
        phi, used_imag = self._postprocess(psi)
        nrm2 = float(phi @ phi)
        hphi = self.ham.matrix @ phi
        quad = float(phi @ hphi) / nrm2
        seed = 2.0 * (hphi - quad * phi) / nrm2
        adjoint = (1j * seed) if used_imag else seed.astype(complex)

        grad_betas = np.zeros_like(params.betas)
        grad_gammas = np.zeros_like(params.gammas)
        v = self.eigenvectors
        for layer in range(params.layers - 1, -1, -1):
            if self.order == "problem_first":
                # layer: mid = evolve(in); out = phase * mid
                phase = np.exp(-1j * phase_vecs[layer])
                grad_d = np.imag(outs[layer] * np.conj(adjoint))
                grad_betas[layer] = self.pair_products @ grad_d
                adjoint = np.conj(phase) * adjoint
                grad_gammas[layer] = float(
                    np.imag(np.vdot(adjoint, self.ham.matrix @ mids[layer]))
                )
                adjoint = v @ (np.exp(1j * params.gammas[layer] * self.eigenvalues) * (v.T @ adjoint))
            else:
                # layer: mid = phase * in; out = evolve(mid)
                grad_gammas[layer] = float(
                    np.imag(np.vdot(adjoint, self.ham.matrix @ outs[layer]))
                )
                adjoint = v @ (np.exp(1j * params.gammas[layer] * self.eigenvalues) * (v.T @ adjoint))
                grad_d = np.imag(mids[layer] * np.conj(adjoint))
                grad_betas[layer] = self.pair_products @ grad_d
                phase = np.exp(-1j * phase_vecs[layer])
                adjoint = np.conj(phase) * adjoint
        energy_shifted = quad + self.ham.shift
        gradient = CQAParams(betas=grad_betas, gammas=grad_gammas)
        return (energy_shifted, quad), gradient


def mixer_beta_vector(n: int, beta_matrix: np.ndarray) -> np.ndarray:
    """Upper triangle (k <= l) of a symmetric beta matrix, in layout order."""
    beta_matrix = np.asarray(beta_matrix, dtype=float)
    return np.array([beta_matrix[k - 1, l - 1] for k, l in yjm_pair_indices(n)])


def apply_layer(
    state: CQAState,
    rep: IrrepRep,
    ham: IrrepHamiltonian,
    beta: np.ndarray,
    gamma: float,
    order: str = "problem_first",
) -> CQAState:
    """One alternating layer acting on a normalized Young-basis state.

    Convenience wrapper; it rebuilds the eigendecomposition each call, so
    loops should use :class:`CQACircuit` directly.
    """
    if state.amplitudes.shape != (rep.dim,):
        raise ValueError("state dimension does not match the representation")
    beta = np.asarray(beta, dtype=float)
    if beta.ndim == 2:
        beta = mixer_beta_vector(rep.n, beta)
    circuit = CQACircuit(rep, ham, state.amplitudes, order=order)
    params = CQAParams(betas=beta[None, :], gammas=np.array([gamma]))
    return CQAState(shape=rep.shape, amplitudes=circuit.forward(params))


def energy(
    params: CQAParams,
    rep: IrrepRep,
    ham: IrrepHamiltonian,
    init: np.ndarray,
    order: str = "problem_first",
) -> tuple[float, float]:
    """(shifted, unshifted) energy of the ansatz output state."""
    return CQACircuit(rep, ham, init, order=order).energy(params)


def gradient(
    params: CQAParams,
    rep: IrrepRep,
    ham: IrrepHamiltonian,
    init: np.ndarray,
    order: str = "problem_first",
) -> CQAParams:
    """Exact energy gradient with the same layout as the parameters."""
    _, grad = CQACircuit(rep, ham, init, order=order).energy_and_gradient(params)
    return grad
