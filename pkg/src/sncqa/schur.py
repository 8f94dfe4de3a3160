"""Bridge between the computational basis and the Young basis at small n.

A permutation module M^mu is the span of computational bitstrings of fixed
Hamming weight.  Simultaneously diagonalizing the Jucys-Murphy operators
X_2, ..., X_n inside M^mu produces the Young basis vectors of every irrep
S^lambda with lambda dominating mu, each labeled by its content vector.

Initialization states (strings of |0> sites and two-site singlets) expand in
that basis with closed-form coefficients: appending |0> to a highest-weight
spin-j state keeps a single branch, while appending a singlet splits into
sqrt((j+1)/(2j+1)) on the up-down branch and -sqrt(j/(2j+1)) on the down-up
branch (Condon-Shortley phases).
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import ResourceGuardError
from .tableaux import Partition, StandardTableau, enumerate_partitions, enumerate_syt

SCHUR_MAX_SITES = 16
_EIGENVALUE_TOL = 1e-8


def _as_two_row(mu: Partition) -> tuple[int, int]:
    if mu.num_rows > 2:
        raise ValueError("permutation modules are built for shapes with <= 2 rows")
    mu1 = mu.rows[0]
    mu2 = mu.rows[1] if mu.num_rows == 2 else 0
    return mu1, mu2


@dataclass(frozen=True)
class PermutationModule:
    """Computational bitstrings of Hamming weight mu2 (z-spin (mu1-mu2)/2).

    States are stored as integers with site 1 at the most significant bit;
    ``basis_states`` is ascending, and ``index`` inverts it.
    """

    n: int
    mu: Partition
    basis_states: tuple[int, ...]

    @classmethod
    def build(cls, n: int, mu: Partition) -> "PermutationModule":
        mu1, mu2 = _as_two_row(mu)
        if mu1 + mu2 != n:
            raise ValueError(f"|mu| = {mu1 + mu2} does not match n = {n}")
        states = tuple(
            sorted(
                sum(1 << (n - site) for site in ones)
                for ones in combinations(range(1, n + 1), mu2)
            )
        )
        return cls(n=n, mu=mu, basis_states=states)

    @property
    def dim(self) -> int:
        return len(self.basis_states)

    def index(self, state: int) -> int:
        i = bisect_left(self.basis_states, state)
        if i >= self.dim or self.basis_states[i] != state:
            raise KeyError(f"state {state:0{self.n}b} not in module")
        return i

    def swap_matrix(self, a: int, b: int) -> np.ndarray:
        """Transposition (a b) acting on tensor factors, restricted to M^mu."""
        mat = np.zeros((self.dim, self.dim))
        mask = (1 << (self.n - a)) | (1 << (self.n - b))
        for col, state in enumerate(self.basis_states):
            bit_a = (state >> (self.n - a)) & 1
            bit_b = (state >> (self.n - b)) & 1
            target = state if bit_a == bit_b else state ^ mask
            mat[self.index(target), col] = 1.0
        return mat

    def yjm_matrix(self, k: int) -> np.ndarray:
        """X_k = (1,k) + ... + (k-1,k) restricted to M^mu; X_1 = 0."""
        mat = np.zeros((self.dim, self.dim))
        for i in range(1, k):
            mat += self.swap_matrix(i, k)
        return mat

    def casimir_matrix(self) -> np.ndarray:
        """Total spin Casimir J^2 = sum_{i<j} P_ij + n(4-n)/4 * I."""
        n = self.n
        mat = np.eye(self.dim) * (0.75 * n - 0.25 * n * (n - 1))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                mat += self.swap_matrix(i, j)
        return mat


@dataclass(frozen=True)
class SchurBlock:
    """Young basis vectors of every irrep inside one permutation module."""

    module: PermutationModule
    vectors: dict[StandardTableau, np.ndarray]

    @property
    def mu(self) -> Partition:
        return self.module.mu

    def shapes(self) -> list[Partition]:
        return sorted({t.shape for t in self.vectors}, reverse=True)

    def tableaux(self, shape: Partition) -> list[StandardTableau]:
        return [t for t in self.vectors if t.shape == shape]

    def matrix(self) -> np.ndarray:
        """All vectors as columns, in a deterministic (content-sorted) order."""
        keys = sorted(self.vectors, key=lambda t: (t.shape.rows, t.content))
        return np.column_stack([self.vectors[t] for t in keys])


def _content_lookup(n: int, mu: Partition) -> dict[tuple[int, ...], StandardTableau]:
    mu1, _ = _as_two_row(mu)
    lookup = {}
    for shape in enumerate_partitions(n, max_rows=2):
        if shape.rows[0] < mu1:
            continue  # only lambda dominating mu occur in M^mu
        for tab in enumerate_syt(shape):
            lookup[tab.content] = tab
    return lookup


def build_schur_block(n: int, mu: Partition) -> SchurBlock:
    """Simultaneous eigenbasis of X_2..X_n inside M^mu, labeled by tableau.

    Sequential eigenspace refinement: diagonalize X_2, split, diagonalize
    X_3 inside each eigenspace, and so on.  Joint eigenvalue tuples are
    content vectors and occur exactly once, so every final block is
    one-dimensional.  Each vector's sign makes its largest-magnitude
    coordinate positive (ties: lowest basis state wins).

    Cost grows like dim(M^mu)^3; the guard caps n at 16.
    """
    if n > SCHUR_MAX_SITES:
        raise ResourceGuardError(f"n = {n} exceeds Schur-block guard {SCHUR_MAX_SITES}")
    module = PermutationModule.build(n, mu)
    blocks: list[tuple[np.ndarray, tuple[int, ...]]] = [
        (np.eye(module.dim), (0,))
    ]
    for k in range(2, n + 1):
        xk = module.yjm_matrix(k)
        refined = []
        for q, contents in blocks:
            if q.shape[1] == 1:
                value = float(q[:, 0] @ xk @ q[:, 0])
                refined.append((q, contents + (_round_eigenvalue(value),)))
                continue
            local = q.T @ xk @ q
            eigenvalues, vecs = np.linalg.eigh(local)
            rounded = [_round_eigenvalue(v) for v in eigenvalues]
            for value in sorted(set(rounded)):
                cols = [i for i, r in enumerate(rounded) if r == value]
                refined.append((q @ vecs[:, cols], contents + (value,)))
        blocks = refined

    lookup = _content_lookup(n, mu)
    vectors: dict[StandardTableau, np.ndarray] = {}
    for q, contents in blocks:
        if q.shape[1] != 1:
            raise RuntimeError(
                f"joint eigenvalue collision in M^{mu}: contents {contents} "
                f"have multiplicity {q.shape[1]}"
            )
        tab = lookup.get(contents)
        if tab is None:
            raise RuntimeError(f"content vector {contents} matches no tableau")
        vectors[tab] = _fix_sign(q[:, 0])
    if len(vectors) != module.dim:
        raise RuntimeError("Schur block does not fill the permutation module")
    return SchurBlock(module=module, vectors=vectors)


def _round_eigenvalue(value: float) -> int:
    rounded = round(value)
    if abs(value - rounded) > _EIGENVALUE_TOL:
        raise RuntimeError(f"YJM eigenvalue {value} is not close to an integer")
    return int(rounded)


def _fix_sign(vec: np.ndarray) -> np.ndarray:
    best = np.argmax(np.abs(vec) - 1e-12 * np.arange(len(vec)))
    if vec[best] < 0:
        vec = -vec
    out = vec.copy()
    out.setflags(write=False)
    return out


# ---------------------------------------------------------------------------
# initialization states


def default_ordering(n: int, k: int) -> str:
    """The all-zeros-first pattern: k |0> sites then (n-k)/2 singlet pairs."""
    return "0" * k + "s" * ((n - k) // 2)


def parse_ordering(n: int, k: int, ordering: str | None) -> str:
    if (n - k) % 2 != 0:
        raise ValueError(f"n - k must be even, got n={n}, k={k}")
    if ordering is None:
        return default_ordering(n, k)
    if set(ordering) - {"0", "s"}:
        raise ValueError(f"ordering must use only '0' and 's': {ordering!r}")
    if ordering.count("0") != k or ordering.count("s") != (n - k) // 2:
        raise ValueError(
            f"ordering {ordering!r} does not place {k} zeros and {(n - k) // 2} singlets"
        )
    return ordering


@dataclass(frozen=True)
class InitialStateExpansion:
    """Young-basis coefficients of a |0>/singlet product state.

    All weight sits in the single irrep lambda = ((n+k)/2, (n-k)/2); the
    coefficients are real with unit square sum.
    """

    n: int
    k: int
    ordering: str
    shape: Partition
    coefficients: dict[StandardTableau, float]

    def vector(self, basis: tuple[StandardTableau, ...]) -> np.ndarray:
        """Coefficients arranged against an explicit tableau order."""
        return np.array([self.coefficients.get(t, 0.0) for t in basis])


def expand_initial_state(
    n: int, k: int, ordering: str | None = None
) -> InitialStateExpansion:
    """Expand |0..0 s..s> (any interleaving) in the Young basis.

    Walks the token string keeping only highest-weight branches: a '0' site
    raises the running spin j by 1/2 with coefficient 1; an 's' pair either
    visits j+1/2 and returns (coefficient sqrt((j+1)/(2j+1))) or dips to
    j-1/2 and returns (coefficient -sqrt(j/(2j+1))).
    """
    tokens = parse_ordering(n, k, ordering)
    paths: list[tuple[tuple[int, ...], float, float]] = [((), 0.0, 1.0)]
    for token in tokens:
        grown = []
        for rows, j, coeff in paths:
            if token == "0":
                grown.append((rows + (0,), j + 0.5, coeff))
            else:
                up = math.sqrt((j + 1.0) / (2.0 * j + 1.0))
                grown.append((rows + (0, 1), j, coeff * up))
                if j > 0:
                    down = math.sqrt(j / (2.0 * j + 1.0))
                    grown.append((rows + (1, 0), j, coeff * -down))
        paths = grown

    shape = Partition(((n + k) // 2, (n - k) // 2)) if k < n else Partition((n,))
    coefficients = {}
    for rows, _, coeff in paths:
        row1 = tuple(i + 1 for i, r in enumerate(rows) if r == 0)
        row2 = tuple(i + 1 for i, r in enumerate(rows) if r == 1)
        tab = StandardTableau((row1, row2) if row2 else (row1,))
        coefficients[tab] = coeff
    return InitialStateExpansion(
        n=n, k=k, ordering=tokens, shape=shape, coefficients=coefficients
    )


def product_state_vector(module: PermutationModule, ordering: str) -> np.ndarray:
    """The |0>/singlet product state as a vector in M^mu coordinates."""
    n = module.n
    amplitudes: list[tuple[int, float]] = [(0, 1.0)]
    site = 1
    for token in ordering:
        if token == "0":
            site += 1  # bit stays 0
        else:
            amp = 1.0 / math.sqrt(2.0)
            grown = []
            for state, coeff in amplitudes:
                grown.append((state | (1 << (n - site - 1)), coeff * amp))
                grown.append((state | (1 << (n - site)), -coeff * amp))
            amplitudes = grown
            site += 2
    if site != n + 1:
        raise ValueError(f"ordering does not cover {n} sites")
    vec = np.zeros(module.dim)
    for state, coeff in amplitudes:
        vec[module.index(state)] = coeff
    return vec


def total_spin_check(module: PermutationModule, vec: np.ndarray) -> float:
    """Total spin j with J^2 v = j(j+1) v; rejects non-eigenvectors."""
    vec = np.asarray(vec, dtype=float)
    norm = np.linalg.norm(vec)
    if norm == 0.0:
        raise ValueError("zero vector has no total spin")
    vec = vec / norm
    image = module.casimir_matrix() @ vec
    value = float(vec @ image)
    if np.linalg.norm(image - value * vec) > 1e-8:
        raise ValueError("vector is not a total-spin eigenvector")
    j = 0.5 * (math.sqrt(1.0 + 4.0 * value) - 1.0)
    rounded = round(2.0 * j) / 2.0
    if abs(j - rounded) > 1e-8:
        raise ValueError(f"Casimir eigenvalue {value} is not j(j+1) for half-integer j")
    return rounded
