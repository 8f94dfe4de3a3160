"""J1-J2 Heisenberg Hamiltonians on coupling graphs.

Two constructions of the same model: restricted to a single S_n irrep via
the swap identity S_i . S_j = P_ij / 2 - I/4 (P_ij the transposition
matrix), and in the full 2^n computational basis as a sparse matrix for
exact-diagonalization cross checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .errors import ResourceGuardError
from .tableaux import Partition
from .yor import IrrepRep, build_irrep, transposition_matrix

FULL_BASIS_MAX_SITES = 20

Edge = tuple[int, int]


def _check_edges(edges: tuple[Edge, ...], n_sites: int, which: str) -> tuple[Edge, ...]:
    seen = set()
    out = []
    for edge in edges:
        if len(edge) != 2:
            raise ValueError(f"{which} edge {edge} is not a pair")
        a, b = int(edge[0]), int(edge[1])
        if a == b:
            raise ValueError(f"{which} edge ({a},{b}) is a self-loop")
        if not (1 <= a <= n_sites and 1 <= b <= n_sites):
            raise ValueError(f"{which} edge ({a},{b}) outside sites 1..{n_sites}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ValueError(f"duplicate {which} edge ({a},{b})")
        seen.add(key)
        out.append(key)
    return tuple(out)


@dataclass(frozen=True)
class LatticeSpec:
    """Site count plus J1/J2 edge lists; sites are 1-based."""

    n_sites: int
    j1_edges: tuple[Edge, ...]
    j2_edges: tuple[Edge, ...]
    J1: float = 1.0
    J2: float = 0.0
    name: str = "custom"

    def __post_init__(self):
        if self.n_sites < 1:
            raise ValueError("n_sites must be positive")
        object.__setattr__(
            self, "j1_edges", _check_edges(tuple(self.j1_edges), self.n_sites, "J1")
        )
        object.__setattr__(
            self, "j2_edges", _check_edges(tuple(self.j2_edges), self.n_sites, "J2")
        )

    def weighted_edges(self) -> list[tuple[float, Edge]]:
        return [(self.J1, e) for e in self.j1_edges] + [
            (self.J2, e) for e in self.j2_edges
        ]


@dataclass(frozen=True)
class IrrepHamiltonian:
    """Heisenberg Hamiltonian restricted to one irrep, with its PSD shift.

    ``matrix`` is the raw restriction H(shape); ``matrix + shift * I`` is
    positive semidefinite.  The shift never moves eigenvectors or gaps.
    """

    shape: Partition
    matrix: np.ndarray
    shift: float
    lattice: LatticeSpec
    rep: IrrepRep = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def psd_shift(lat: LatticeSpec) -> float:
    """3/4 of the total coupling weight; dominates since each bond is >= -3/4."""
    return 0.75 * (lat.J1 * len(lat.j1_edges) + lat.J2 * len(lat.j2_edges))


def heisenberg_irrep(
    shape: Partition, lat: LatticeSpec, rep: IrrepRep | None = None
) -> IrrepHamiltonian:
    """Restrict the J1-J2 Hamiltonian to the irrep of a two-row shape."""
    if shape.num_rows > 2:
        raise ValueError("spin-1/2 Heisenberg restriction needs a two-row shape")
    if shape.n != lat.n_sites:
        raise ValueError(
            f"partition size {shape.n} does not match n_sites {lat.n_sites}"
        )
    if rep is None:
        rep = build_irrep(shape)
    dim = rep.dim
    matrix = np.zeros((dim, dim))
    eye = np.eye(dim)
    for coupling, (a, b) in lat.weighted_edges():
        if coupling == 0.0:
            continue
        swap = transposition_matrix(rep, a, b)
        matrix += coupling * (0.5 * swap - 0.25 * eye)
    return IrrepHamiltonian(
        shape=shape, matrix=matrix, shift=psd_shift(lat), lattice=lat, rep=rep
    )


def heisenberg_full(lat: LatticeSpec) -> sp.csr_matrix:
    """Full 2^n computational-basis Hamiltonian, sparse real symmetric.

    Site k maps to bit n-k (site 1 is the most significant bit), matching the
    tensor-product order of bitstrings |b1 b2 ... bn>.
    """
    n = lat.n_sites
    if n > FULL_BASIS_MAX_SITES:
        raise ResourceGuardError(f"n_sites={n} exceeds full-basis guard {FULL_BASIS_MAX_SITES}")
    dim = 1 << n
    states = np.arange(dim, dtype=np.int64)
    diag = np.zeros(dim)
    rows, cols, vals = [], [], []
    for coupling, (a, b) in lat.weighted_edges():
        if coupling == 0.0:
            continue
        bit_a = (states >> (n - a)) & 1
        bit_b = (states >> (n - b)) & 1
        aligned = bit_a == bit_b
        diag += np.where(aligned, 0.25, -0.25) * coupling
        flip = states[~aligned] ^ ((1 << (n - a)) | (1 << (n - b)))
        rows.append(flip)
        cols.append(states[~aligned])
        vals.append(np.full(flip.shape, 0.5 * coupling))
    rows.append(states)
    cols.append(states)
    vals.append(diag)
    mat = sp.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(dim, dim),
    )
    return mat.tocsr()


def _rect3x4_edges() -> tuple[tuple[Edge, ...], tuple[Edge, ...]]:
    # 3 rows x 4 columns, open boundary; site = r*4 + c + 1
    def site(r, c):
        return r * 4 + c + 1

    j1 = []
    for r in range(3):
        for c in range(4):
            if c + 1 < 4:
                j1.append((site(r, c), site(r, c + 1)))
            if r + 1 < 3:
                j1.append((site(r, c), site(r + 1, c)))
    j2 = []
    for r in range(2):
        for c in range(3):
            j2.append((site(r, c), site(r + 1, c + 1)))
            j2.append((site(r, c + 1), site(r + 1, c)))
    return tuple(j1), tuple(j2)


def _kagome12_edges() -> tuple[tuple[Edge, ...], tuple[Edge, ...]]:
    """2x2 kagome torus: 4 unit cells of 3 sites with periodic wrapping.

    Sublattices A, B, C sit at (0,0), (1,0), (1/2, sqrt(3)/2) inside a cell
    spanned by a1 = (2,0), a2 = (1, sqrt(3)).  J1 bonds are the triangle
    edges (each site has 4), J2 bonds the distance-sqrt(3) pairs across the
    hexagons (each site again has 4).
    """

    def site(i, j, s):
        return ((i % 2) * 2 + (j % 2)) * 3 + s + 1

    A, B, C = 0, 1, 2
    j1, j2 = [], []
    for i in range(2):
        for j in range(2):
            j1 += [
                (site(i, j, A), site(i, j, B)),
                (site(i, j, A), site(i, j, C)),
                (site(i, j, B), site(i, j, C)),
                (site(i, j, B), site(i + 1, j, A)),
                (site(i, j, C), site(i, j + 1, A)),
                (site(i, j, C), site(i - 1, j + 1, B)),
            ]
            j2 += [
                (site(i, j, A), site(i - 1, j + 1, B)),
                (site(i, j, A), site(i, j - 1, B)),
                (site(i, j, A), site(i - 1, j, C)),
                (site(i, j, A), site(i + 1, j - 1, C)),
                (site(i, j, B), site(i + 1, j, C)),
                (site(i, j, B), site(i, j - 1, C)),
            ]
    return tuple(j1), tuple(j2)


def builtin_lattice(name: str, J1: float = 1.0, J2: float = 0.0) -> LatticeSpec:
    """Named lattices: "rect3x4" (open 3x4 grid) and "kagome12" (2x2 torus)."""
    if name == "rect3x4":
        j1, j2 = _rect3x4_edges()
    elif name == "kagome12":
        j1, j2 = _kagome12_edges()
    else:
        raise ValueError(f"unknown lattice {name!r}; expected rect3x4 or kagome12")
    return LatticeSpec(n_sites=12, j1_edges=j1, j2_edges=j2, J1=J1, J2=J2, name=name)
