"""Exact linear algebra over the rationals.

solve_linear returns either a solution of A x = b or an inconsistency
certificate: a row vector y with y^T A = 0 and y^T b != 0, exhibiting the
contradiction 0 = y^T b as an explicit combination of the input rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence


def _frac_matrix(rows) -> List[List[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


@dataclass(frozen=True)
class LinSystem:
    """A finite system of linear equations matrix * x = rhs."""

    matrix: Sequence[Sequence[Fraction]]
    rhs: Sequence[Fraction]

    def __post_init__(self):
        if len(self.matrix) != len(self.rhs):
            raise ValueError("matrix and rhs size mismatch")


@dataclass(frozen=True)
class LinSolution:
    vector: List[Fraction]

    @property
    def consistent(self) -> bool:
        return True


@dataclass(frozen=True)
class LinInconsistency:
    """Row combination proving 0 = value with value != 0."""

    combination: List[Fraction]
    value: Fraction

    @property
    def consistent(self) -> bool:
        return False

    def verify(self, sys: LinSystem) -> bool:
        m = len(sys.rhs)
        ncols = len(sys.matrix[0]) if m else 0
        for j in range(ncols):
            if sum(self.combination[i] * sys.matrix[i][j] for i in range(m)) != 0:
                return False
        total = sum(self.combination[i] * sys.rhs[i] for i in range(m))
        return total == self.value and self.value != 0


def solve_linear(sys: LinSystem):
    """Solve an exact linear system.

    Returns LinSolution (free variables set to 0) or LinInconsistency.
    """
    a = _frac_matrix(sys.matrix)
    b = [Fraction(x) for x in sys.rhs]
    m = len(a)
    n = len(a[0]) if m else 0
    # tracker[i] = coefficients of original rows making up current row i
    tracker = [[Fraction(1 if i == j else 0) for j in range(m)] for i in range(m)]
    pivots = []  # (row, col)
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, m):
            if a[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        b[row], b[pivot] = b[pivot], b[row]
        tracker[row], tracker[pivot] = tracker[pivot], tracker[row]
        inv = Fraction(1) / a[row][col]
        a[row] = [x * inv for x in a[row]]
        b[row] *= inv
        tracker[row] = [x * inv for x in tracker[row]]
        for r in range(m):
            if r != row and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[row])]
                b[r] -= factor * b[row]
                tracker[r] = [x - factor * y for x, y in zip(tracker[r], tracker[row])]
        pivots.append((row, col))
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if b[r] != 0:
            return LinInconsistency(combination=tracker[r], value=b[r])
    x = [Fraction(0)] * n
    for r, c in pivots:
        x[c] = b[r]
    return LinSolution(vector=x)


def nullspace(matrix) -> List[List[Fraction]]:
    """Basis of the kernel of a rational matrix, from the reduced echelon form.

    Basis vectors are indexed by the free columns; each has a 1 in its free
    column, so a coordinate-subspace kernel comes back as coordinate vectors.
    """
    a = _frac_matrix(matrix)
    m = len(a)
    n = len(a[0]) if m else 0
    pivots = []
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, m):
            if a[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = Fraction(1) / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for r in range(m):
            if r != row and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -a[r][free]
        basis.append(vec)
    return basis


def rank(matrix) -> int:
    n = len(matrix[0]) if matrix else 0
    return n - len(nullspace(matrix))


def matrix_inverse(matrix) -> Optional[List[List[Fraction]]]:
    """Exact inverse of a square rational matrix, or None if singular."""
    n = len(matrix)
    a = _frac_matrix(matrix)
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if a[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = Fraction(1) / a[col][col]
        a[col] = [x * scale for x in a[col]]
        inv[col] = [x * scale for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
    return inv


def determinant(matrix) -> Fraction:
    """Exact determinant by fraction-free style elimination over Fraction."""
    n = len(matrix)
    a = _frac_matrix(matrix)
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if a[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                factor = a[r][col] * inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det
