"""Integer partitions, standard Young tableaux, and content vectors.

Partitions label the irreducible representations of the symmetric group S_n.
Standard Young tableaux (SYT) of a shape index the Young (Gelfand-Tsetlin)
basis of the corresponding irrep; each tableau is uniquely determined by its
content vector, the sequence col(k) - row(k) of the box holding each label k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache, reduce
from math import factorial
from operator import mul


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers summing to n."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("partition must have at least one row")
        if any(r <= 0 for r in rows):
            raise ValueError(f"partition rows must be positive: {rows}")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError(f"partition rows must be weakly decreasing: {rows}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the text form "l1,l2,..." used by the CLI and config files."""
        try:
            rows = tuple(int(p) for p in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse partition from {text!r}") from None
        return cls(rows)

    @property
    def n(self) -> int:
        return sum(self.rows)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows)

    def removable_corners(self) -> list[tuple[int, int]]:
        """(row, col) coordinates of boxes whose removal leaves a partition."""
        corners = []
        for r, length in enumerate(self.rows):
            below = self.rows[r + 1] if r + 1 < len(self.rows) else 0
            if length > below:
                corners.append((r, length - 1))
        return corners

    def remove_corner(self, row: int) -> "Partition | None":
        new = list(self.rows)
        new[row] -= 1
        if new[row] == 0:
            new.pop(row)
        if not new:
            return None
        return Partition(tuple(new))


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling of a Young diagram with the labels 1..n.

    ``rows[r][c]`` is the label in box (r, c); labels increase along rows and
    down columns.  ``content[k-1]`` is col - row of the box holding label k
    (0-indexed coordinates), so ``content[0] == 0`` always.
    """

    rows: tuple[tuple[int, ...], ...]
    content: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        n = sum(len(r) for r in self.rows)
        pos = {}
        for r, row in enumerate(self.rows):
            for c, label in enumerate(row):
                pos[label] = (r, c)
        if sorted(pos) != list(range(1, n + 1)):
            raise ValueError("tableau labels must be 1..n, each used once")
        for r, row in enumerate(self.rows):
            for c, label in enumerate(row):
                if c + 1 < len(row) and row[c + 1] <= label:
                    raise ValueError("rows must increase left to right")
                if r + 1 < len(self.rows) and c < len(self.rows[r + 1]):
                    if self.rows[r + 1][c] <= label:
                        raise ValueError("columns must increase top to bottom")
        content = tuple(pos[k][1] - pos[k][0] for k in range(1, n + 1))
        object.__setattr__(self, "content", content)

    @property
    def n(self) -> int:
        return len(self.content)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def position(self, label: int) -> tuple[int, int]:
        for r, row in enumerate(self.rows):
            for c, value in enumerate(row):
                if value == label:
                    return (r, c)
        raise ValueError(f"label {label} not in tableau")

    def row_of(self, label: int) -> int:
        return self.position(label)[0]

    def swap_adjacent(self, k: int) -> "StandardTableau | None":
        """Exchange labels k and k+1; None if the result is not standard."""
        if not 1 <= k < self.n:
            raise ValueError(f"need 1 <= k < n, got k={k}")
        (r1, c1), (r2, c2) = self.position(k), self.position(k + 1)
        if r1 == r2 or c1 == c2:
            # same row or column: the swap breaks standardness
            return None
        new = [list(row) for row in self.rows]
        new[r1][c1], new[r2][c2] = k + 1, k
        return StandardTableau(tuple(tuple(row) for row in new))

    def __str__(self) -> str:
        return " / ".join(" ".join(str(v) for v in row) for row in self.rows)


def enumerate_partitions(n: int, max_rows: int) -> list[Partition]:
    """All partitions of n with at most max_rows rows, descending lexicographic."""
    if n < 1 or max_rows < 1:
        raise ValueError("n and max_rows must be positive")

    def gen(remaining: int, largest: int, rows_left: int):
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first, rows_left - 1):
                yield (first,) + rest

    return [Partition(rows) for rows in gen(n, n, max_rows)]


def dim_irrep(shape: Partition) -> int:
    """Number of standard Young tableaux of the shape (hook length formula)."""
    rows = shape.rows
    conjugate = [sum(1 for r in rows if r > c) for c in range(rows[0])]
    hooks = (
        (rows[r] - c) + (conjugate[c] - r) - 1
        for r in range(len(rows))
        for c in range(rows[r])
    )
    return factorial(shape.n) // reduce(mul, hooks, 1)


@cache
def enumerate_syt(shape: Partition) -> tuple[StandardTableau, ...]:
    """All SYT of the shape in last-letter order.

    Tableaux are sorted by the row index of n (descending), ties broken
    recursively on n-1, n-2, ...  This is the canonical Young-basis order:
    it makes the subgroup S_{n-1} < S_n act block-diagonally, so the
    orthogonal representation matrices it induces are reproducible
    bit-for-bit.
    """
    n = shape.n
    if n == 1:
        return (StandardTableau(((1,),)),)
    out = []
    for r, c in sorted(shape.removable_corners(), reverse=True):
        child = shape.remove_corner(r)
        for sub in enumerate_syt(child):
            rows = [list(row) for row in sub.rows]
            if r == len(rows):
                rows.append([])
            rows[r].append(n)
            out.append(StandardTableau(tuple(tuple(row) for row in rows)))
    return tuple(out)


def branch_children(shape: Partition) -> list[Partition]:
    """Partitions of n-1 under the branching rule (one removable box each)."""
    if shape.n == 1:
        return []
    children = []
    for r, _ in shape.removable_corners():
        children.append(shape.remove_corner(r))
    return children


def shifted_content(tab: StandardTableau) -> tuple[int, ...]:
    """Content vector shifted by the row count of the shape; all entries > 0."""
    shift = tab.shape.num_rows
    return tuple(a + shift for a in tab.content)


@dataclass(frozen=True)
class TensorContent:
    """Outer product of the shifted content vector with itself.

    The (r, s) entry is beta(r) * beta(s) where beta is the shifted content
    vector, so the matrix is symmetric with positive integer entries.  No two
    distinct tableaux of the same size share a tensor content matrix.
    """

    matrix: tuple[tuple[int, ...], ...]

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.matrix for v in row)


def tensor_content(tab: StandardTableau) -> TensorContent:
    beta = shifted_content(tab)
    return TensorContent(tuple(tuple(bi * bj for bj in beta) for bi in beta))


def spin_labels(tab: StandardTableau) -> tuple[float, ...]:
    """Sequential total-spin labels (j_1, ..., j_n) of a two-row tableau.

    j_1 = 1/2 and each later label moves up by 1/2 when the box sits in row
    one, down by 1/2 when it sits in row two, ending at (l1 - l2)/2.  Only
    defined for shapes dual to SU(2), i.e. at most two rows.
    """
    if tab.shape.num_rows > 2:
        raise ValueError("spin labels are defined for shapes with at most 2 rows")
    labels = []
    j = 0.0
    for k in range(1, tab.n + 1):
        j += 0.5 if tab.row_of(k) == 0 else -0.5
        labels.append(j)
    return tuple(labels)
