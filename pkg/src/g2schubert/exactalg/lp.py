"""Exact linear-program feasibility over the rationals.

Decides whether {x : A x = b, x >= 0} is nonempty, by a phase-1 simplex with
Bland's rule (anti-cycling) on exact Fractions.  The answer is exact either
way: a feasible rational point, or a Farkas certificate y with y^T A <= 0
componentwise and y^T b > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence


@dataclass(frozen=True)
class LpFeasibility:
    """Equality constraints matrix * x = rhs with x >= 0 componentwise."""

    matrix: Sequence[Sequence[Fraction]]
    rhs: Sequence[Fraction]

    def __post_init__(self):
        if len(self.matrix) != len(self.rhs):
            raise ValueError("matrix and rhs size mismatch")


@dataclass(frozen=True)
class LpPoint:
    vector: List[Fraction]

    @property
    def feasible(self) -> bool:
        return True

    def verify(self, prob: LpFeasibility) -> bool:
        if any(x < 0 for x in self.vector):
            return False
        for row, b in zip(prob.matrix, prob.rhs):
            if sum(Fraction(r) * x for r, x in zip(row, self.vector)) != Fraction(b):
                return False
        return True


@dataclass(frozen=True)
class LpInfeasible:
    """Farkas certificate: y^T A <= 0 and y^T b > 0."""

    multipliers: List[Fraction]

    @property
    def feasible(self) -> bool:
        return False

    def verify(self, prob: LpFeasibility) -> bool:
        m = len(prob.rhs)
        ncols = len(prob.matrix[0]) if m else 0
        for j in range(ncols):
            if sum(self.multipliers[i] * Fraction(prob.matrix[i][j])
                   for i in range(m)) > 0:
                return False
        return sum(self.multipliers[i] * Fraction(prob.rhs[i])
                   for i in range(m)) > 0


def lp_feasible(prob: LpFeasibility):
    """Exact feasibility of {A x = b, x >= 0}; returns LpPoint or LpInfeasible."""
    m = len(prob.rhs)
    n = len(prob.matrix[0]) if m else 0
    signs = []
    a: List[List[Fraction]] = []
    b: List[Fraction] = []
    for row, rhs in zip(prob.matrix, prob.rhs):
        r = [Fraction(x) for x in row]
        rb = Fraction(rhs)
        if rb < 0:
            r = [-x for x in r]
            rb = -rb
            signs.append(Fraction(-1))
        else:
            signs.append(Fraction(1))
        a.append(r)
        b.append(rb)
    if m == 0:
        return LpPoint(vector=[Fraction(0)] * n)

    # tableau columns: n problem vars, m artificials, then rhs
    width = n + m
    tab = [a[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [b[i]]
           for i in range(m)]
    basis = [n + i for i in range(m)]
    # reduced-cost row for minimizing the sum of artificials:
    # r_j = c_j - 1^T tab_j, with c = 1 exactly on the artificial columns
    cost = [Fraction(1) if n <= j < width else Fraction(0)
            for j in range(width + 1)]
    for i in range(m):
        for j in range(width + 1):
            cost[j] -= tab[i][j]

    while True:
        enter = None
        for j in range(width):
            if cost[j] < 0:
                enter = j  # Bland: smallest index
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # phase-1 objective is bounded below by 0; cannot happen
            raise RuntimeError("phase-1 simplex became unbounded")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, tab[leave])]
        basis[leave] = enter

    objective = -cost[width]
    if objective > 0:
        # duals: reduced cost of artificial i is 1 - y_i, so y_i = 1 - cost[n+i]
        y = [Fraction(1) - cost[n + i] for i in range(m)]
        cert = LpInfeasible(multipliers=[signs[i] * y[i] for i in range(m)])
        if not cert.verify(prob):
            raise RuntimeError("internal error: invalid Farkas certificate")
        return cert

    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tab[i][width]
    point = LpPoint(vector=x)
    if not point.verify(prob):
        raise RuntimeError("internal error: invalid feasible point")
    return point
