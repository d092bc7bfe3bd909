"""Exact solution of integer linear systems A x = b with certificates.

Column operations with extended gcds bring A to lower echelon form
L = A U with U unimodular.  Forward substitution in L then either yields an
integer solution (plus the lattice of homogeneous solutions, the trailing
columns of U) or a rational row vector y proving infeasibility:

* ``y A = 0`` and ``y b != 0``: no rational solution;
* ``y A`` integral and ``y b`` not an integer: no integer solution.

Every pivot row also yields a vector w with ``w A`` equal to a row of
U^-1; combinations of these certify that a linear form is constant on the
solution set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


@dataclass
class Solution:
    feasible: bool
    x: Optional[list] = None  # particular integer solution
    kernel: list = field(default_factory=list)  # integer basis of {x : A x = 0}
    certificate: Optional[list] = None  # rational y when infeasible
    kind: str = ""  # "rational" or "integer" infeasibility
    _U: list = field(default_factory=list, repr=False)
    _w: dict = field(default_factory=dict, repr=False)  # pivot column -> rational row vector
    rank: int = 0

    def forced_value(self, d: Sequence[int]) -> Optional[tuple[Fraction, list]]:
        """If ``d . x`` is the same for every solution return (value, y) with
        y A = d and y b = value; otherwise None."""
        if not self.feasible:
            raise ValueError("system is infeasible")
        nvar = len(d)
        coeffs = [sum(d[i] * self._U[i][k] for i in range(nvar)) for k in range(nvar)]
        if any(coeffs[k] for k in range(self.rank, nvar)):
            return None
        nrows = len(next(iter(self._w.values()))) if self._w else 0
        y = [Fraction(0)] * nrows
        for k in range(self.rank):
            if coeffs[k]:
                for i, v in enumerate(self._w[k]):
                    y[i] += coeffs[k] * v
        value = sum(d[i] * self.x[i] for i in range(nvar))
        return Fraction(value), y


def solve(A: Sequence[Sequence[int]], b: Sequence[int]) -> Solution:
    nrows = len(A)
    nvar = len(A[0]) if nrows else 0
    L = [list(map(int, row)) for row in A]
    U = [[int(i == j) for j in range(nvar)] for i in range(nvar)]

    def colop(k, j, s, t, u, v):
        # (col_k, col_j) <- (s col_k + t col_j, u col_k + v col_j)
        for M in (L, U):
            for row in M:
                a, c = row[k], row[j]
                row[k] = s * a + t * c
                row[j] = u * a + v * c

    pivots: list[tuple[int, int]] = []  # (row, column)
    k = 0
    for i in range(nrows):
        if k == nvar:
            break
        for j in range(k + 1, nvar):
            if L[i][j]:
                a, c = L[i][k], L[i][j]
                g, s, t = xgcd(a, c)
                colop(k, j, s, t, -c // g, a // g)
        if L[i][k]:
            if L[i][k] < 0:
                for M in (L, U):
                    for row in M:
                        row[k] = -row[k]
            pivots.append((i, k))
            k += 1
    rank = k
    pivot_row = {i: col for i, col in pivots}

    # forward substitution, tracking w_k with z_k = w_k . b
    z: list[int] = [0] * nvar
    w: dict[int, list] = {}
    for i in range(nrows):
        done = pivot_row.get(i, len(w))
        # rational combination expressing sum_{j<done} L[i][j] z_j in terms of b
        comb = [Fraction(0)] * nrows
        comb[i] = Fraction(1)
        for j in range(done):
            if L[i][j]:
                for r, v in enumerate(w[j]):
                    comb[r] -= L[i][j] * v
        rest = b[i] - sum(L[i][j] * z[j] for j in range(done))
        if i in pivot_row:
            piv = L[i][done]
            w[done] = [v / piv for v in comb]
            if rest % piv:
                return Solution(False, certificate=w[done], kind="integer", rank=rank)
            z[done] = rest // piv
        elif rest != 0:
            return Solution(False, certificate=comb, kind="rational", rank=rank)
    x = [sum(U[r][c] * z[c] for c in range(nvar)) for r in range(nvar)]
    kernel = [[U[r][c] for r in range(nvar)] for c in range(rank, nvar)]
    return Solution(True, x=x, kernel=kernel, _U=U, _w=w, rank=rank)


def check_infeasibility(A, b, y) -> bool:
    """True iff y proves A x = b has no integer solution."""
    nvar = len(A[0]) if A else 0
    yA = [sum(Fraction(y[i]) * A[i][j] for i in range(len(A))) for j in range(nvar)]
    yb = sum(Fraction(y[i]) * b[i] for i in range(len(A)))
    if all(v == 0 for v in yA):
        return yb != 0
    return all(v.denominator == 1 for v in yA) and yb.denominator != 1


def check_combination(A, b, y, d, value) -> bool:
    """True iff y A = d and y b = value, i.e. d . x = value on every solution."""
    nvar = len(A[0]) if A else 0
    yA = [sum(Fraction(y[i]) * A[i][j] for i in range(len(A))) for j in range(nvar)]
    yb = sum(Fraction(y[i]) * b[i] for i in range(len(A)))
    return yA == [Fraction(v) for v in d] and yb == Fraction(value)
