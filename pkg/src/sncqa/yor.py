"""Young's orthogonal representation of S_n on the Young basis.

For each shape the adjacent transpositions (k, k+1) act by real orthogonal
involutions whose entries come from inverse axial distances between the
boxes holding k and k+1.  The Jucys-Murphy elements X_k = (1,k)+...+(k-1,k)
are diagonal in this basis with the box contents as eigenvalues, which is
what makes the basis useful: every operator built from them is a cheap
componentwise product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .tableaux import Partition, StandardTableau, enumerate_syt


@dataclass(frozen=True)
class IrrepRep:
    """Orthogonal matrices of the adjacent transpositions for one shape.

    ``adjacent[k-1]`` represents (k, k+1) for k = 1..n-1.  ``yjm[k-1]`` is the
    integer diagonal of the Jucys-Murphy element X_k, i.e. the contents of
    label k across the tableau basis; X_1 = 0 by convention.
    """

    shape: Partition
    basis: tuple[StandardTableau, ...]
    adjacent: tuple[np.ndarray, ...]
    yjm: tuple[np.ndarray, ...]

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def dim(self) -> int:
        return len(self.basis)


def build_irrep(shape: Partition) -> IrrepRep:
    """Construct the orthogonal representation matrices for a shape.

    For a tableau T and adjacent transposition s_k, let
    rho = 1 / (content(k+1) - content(k)).  If exchanging k and k+1 in T is
    not standard (same row or column, rho = +-1), T is an eigenvector with
    eigenvalue rho; otherwise s_k maps |T> to rho |T> + sqrt(1 - rho^2) |T'>
    with T' the exchanged tableau.  The positive square root makes every
    matrix symmetric.
    """
    basis = enumerate_syt(shape)
    index = {tab.rows: i for i, tab in enumerate(basis)}
    n, dim = shape.n, len(basis)

    adjacent = []
    for k in range(1, n):
        mat = np.zeros((dim, dim))
        for i, tab in enumerate(basis):
            rho = 1.0 / (tab.content[k] - tab.content[k - 1])
            mat[i, i] = rho
            swapped = tab.swap_adjacent(k)
            if swapped is not None:
                j = index[swapped.rows]
                mat[j, i] = math.sqrt(1.0 - rho * rho)
        mat.setflags(write=False)
        adjacent.append(mat)

    yjm = []
    for k in range(1, n + 1):
        diag = np.array([tab.content[k - 1] for tab in basis], dtype=np.int64)
        diag.setflags(write=False)
        yjm.append(diag)

    return IrrepRep(shape=shape, basis=basis, adjacent=tuple(adjacent), yjm=tuple(yjm))


def transposition_matrix(rep: IrrepRep, i: int, j: int) -> np.ndarray:
    """Matrix of the transposition (i j) as s_{j-1}...s_{i+1} s_i s_{i+1}...s_{j-1}."""
    if not 1 <= i < j <= rep.n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j})")
    mat = rep.adjacent[i - 1]
    for k in range(i + 1, j):
        s = rep.adjacent[k - 1]
        mat = s @ mat @ s
    return mat


def _factor_into_adjacent(perm: tuple[int, ...]) -> list[int]:
    """Factor a one-line permutation into adjacent transposition indices.

    Bubble sort collects swaps turning sigma into the identity; reading them
    back right-to-left expresses sigma as a product of s_k, leftmost factor
    applied last.
    """
    word = list(perm)
    swaps = []
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                word[k], word[k + 1] = word[k + 1], word[k]
                swaps.append(k + 1)
                changed = True
    return swaps[::-1]


def permutation_matrix(rep: IrrepRep, perm: tuple[int, ...]) -> np.ndarray:
    """Matrix of a permutation given in one-line notation (images of 1..n)."""
    if sorted(perm) != list(range(1, rep.n + 1)):
        raise ValueError(f"not a permutation of 1..{rep.n}: {perm}")
    mat = np.eye(rep.dim)
    for k in _factor_into_adjacent(tuple(perm)):
        mat = mat @ rep.adjacent[k - 1]
    return mat


def group_algebra_matrix(
    rep: IrrepRep, terms: list[tuple[complex, tuple[int, ...]]]
) -> np.ndarray:
    """Representation of a group algebra element sum_i c_i sigma_i.

    ``terms`` is a list of (coefficient, one-line permutation) pairs.  The
    result is complex in general; it is real whenever the coefficients are.
    """
    total = np.zeros((rep.dim, rep.dim), dtype=complex)
    for coeff, perm in terms:
        total += coeff * permutation_matrix(rep, perm)
    if np.all(total.imag == 0.0):
        return total.real
    return total


def yjm_matrix(rep: IrrepRep, k: int) -> np.ndarray:
    """Dense diagonal matrix of the Jucys-Murphy element X_k."""
    if not 1 <= k <= rep.n:
        raise ValueError(f"need 1 <= k <= n, got {k}")
    return np.diag(rep.yjm[k - 1].astype(float))
