"""Nesterov-accelerated Adam and the ansatz training loop."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .cqa import CQACircuit, CQAParams
from .ed import SpectrumReport, ed_irrep, overlap
from .spinmodel import IrrepHamiltonian
from .yor import IrrepRep


@dataclass(frozen=True)
class TrainConfig:
    p: int = 4
    lr: float = 0.002
    beta1: float = 0.99
    beta2: float = 0.999
    epsilon: float = 1e-8
    iters: int = 500
    seed: int = 0
    record_every: int = 5
    init_scale: float = 0.1
    order: str = "problem_first"

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("p must be nonnegative")
        if self.lr <= 0:
            raise ValueError("lr must be positive")
        if not (0 < self.beta1 < 1 and 0 < self.beta2 < 1):
            raise ValueError("beta1 and beta2 must lie in (0, 1)")
        if self.iters < 1:
            raise ValueError("iters must be at least 1")
        if self.record_every < 1:
            raise ValueError("record_every must be at least 1")


@dataclass
class NAdamState:
    """First/second moment accumulators; step count lives with the caller."""

    m: np.ndarray
    v: np.ndarray

    @classmethod
    def zeros(cls, size: int) -> "NAdamState":
        return cls(m=np.zeros(size), v=np.zeros(size))


def nadam_step(
    params: np.ndarray,
    grads: np.ndarray,
    moments: NAdamState,
    t: int,
    cfg: TrainConfig,
) -> tuple[np.ndarray, NAdamState]:
    """One NAdam update (bias-corrected Adam with a Nesterov lookahead).

    m_hat blends the corrected momentum at t+1 with the corrected current
    gradient, which is what distinguishes NAdam from plain Adam.
    """
    if not np.all(np.isfinite(grads)):
        raise ValueError("gradient contains non-finite entries")
    if t < 1:
        raise ValueError("step index t starts at 1")
    b1, b2 = cfg.beta1, cfg.beta2
    m = b1 * moments.m + (1.0 - b1) * grads
    v = b2 * moments.v + (1.0 - b2) * grads**2
    m_hat = b1 * m / (1.0 - b1 ** (t + 1)) + (1.0 - b1) * grads / (1.0 - b1**t)
    v_hat = v / (1.0 - b2**t)
    new_params = params - cfg.lr * m_hat / (np.sqrt(v_hat) + cfg.epsilon)
    return new_params, NAdamState(m=m, v=v)


@dataclass(frozen=True)
class TrainTrace:
    """Energies recorded along one training trajectory.

    ``records`` holds (iteration, shifted energy, unshifted energy) rows at
    the configured stride; ``overlap`` is the norm of the projection of the
    final post-processed state onto the in-irrep ED ground eigenspace.
    """

    records: tuple[tuple[int, float, float], ...]
    final_params: CQAParams
    final_energy: float
    final_energy_shifted: float
    overlap: float
    config: TrainConfig
    ed_report: SpectrumReport = field(repr=False, compare=False)

    @property
    def best_energy(self) -> float:
        return min(r[2] for r in self.records)


def train(
    rep: IrrepRep,
    ham: IrrepHamiltonian,
    init: np.ndarray,
    cfg: TrainConfig,
    ed_report: SpectrumReport | None = None,
) -> TrainTrace:
    """Run NAdam on the ansatz energy from a seeded Gaussian start.

    The loss is the shifted (positive semidefinite) Rayleigh quotient; both
    shifted and raw energies are recorded every ``record_every`` iterations,
    always including the final one.  The overlap is measured against the
    ground eigenspace of the in-irrep exact diagonalization.
    """
    circuit = CQACircuit(rep, ham, init, order=cfg.order)
    rng = np.random.default_rng(cfg.seed)
    params = CQAParams.random(cfg.p, rep.n, cfg.init_scale, rng)
    flat = params.flatten()
    moments = NAdamState.zeros(flat.size)
    records = []

    for t in range(1, cfg.iters + 1):
        params = CQAParams.unflatten(flat, cfg.p, rep.n)
        (shifted, unshifted), grad = circuit.energy_and_gradient(params)
        if t % cfg.record_every == 0 or t == cfg.iters:
            records.append((t, shifted, unshifted))
        flat, moments = nadam_step(flat, grad.flatten(), moments, t, cfg)

    final_params = CQAParams.unflatten(flat, cfg.p, rep.n)
    shifted, unshifted = circuit.energy(final_params)
    if ed_report is None:
        ed_report = ed_irrep(ham)
    psi = circuit.forward(final_params)
    phi, _ = circuit._postprocess(psi)
    final_overlap = overlap(phi, ed_report.ground_vectors)
    return TrainTrace(
        records=tuple(records),
        final_params=final_params,
        final_energy=unshifted,
        final_energy_shifted=shifted,
        overlap=final_overlap,
        config=cfg,
        ed_report=ed_report,
    )


def train_best_of(
    rep: IrrepRep,
    ham: IrrepHamiltonian,
    init: np.ndarray,
    cfg: TrainConfig,
    seeds: tuple[int, ...],
) -> TrainTrace:
    """Train once per seed and keep the lowest final energy."""
    ed_report = ed_irrep(ham)
    best = None
    for seed in seeds:
        trace = train(rep, ham, init, replace(cfg, seed=seed), ed_report=ed_report)
        if best is None or trace.final_energy < best.final_energy:
            best = trace
    return best
