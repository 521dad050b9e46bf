"""Exact phase-1 simplex over the rationals.

Decides feasibility of {A x = b, x >= 0} with Fraction arithmetic and
Bland's anti-cycling rule. Feasible systems yield a witness x; infeasible
ones yield a Farkas certificate y with y^T A <= 0 and y^T b > 0, both exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SimplexResult:
    feasible: bool
    witness: tuple | None      # x >= 0 with A x = b, when feasible
    certificate: tuple | None  # Farkas y over the rows, when infeasible


def solve_equalities(A, b) -> SimplexResult:
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A) or len(b) != m:
        raise ValueError("inconsistent system dimensions")

    # Make b nonnegative; remember which rows were flipped so the
    # certificate can be mapped back to the original orientation.
    flipped = [False] * m
    rows = []
    for r in range(m):
        coeffs = [Fraction(x) for x in A[r]]
        rhs = Fraction(b[r])
        if rhs < 0:
            coeffs = [-x for x in coeffs]
            rhs = -rhs
            flipped[r] = True
        rows.append(coeffs + [Fraction(0)] * m + [rhs])
        rows[r][n + r] = Fraction(1)  # artificial variable

    basis = [n + r for r in range(m)]

    # Reduced-cost row for min sum(artificials): cost 1 on artificials,
    # 0 elsewhere, then priced out against the starting basis.
    width = n + m + 1
    obj = [Fraction(0)] * width
    for j in range(n + m):
        obj[j] = (Fraction(1) if j >= n else Fraction(0)) - sum(r[j] for r in rows)
    obj[-1] = -sum(r[-1] for r in rows)  # holds minus the objective value

    while True:
        enter = next((j for j in range(n + m) if obj[j] < 0), None)
        if enter is None:
            break
        # Bland ratio test: smallest ratio, ties to the smallest basis index.
        leave = None
        best = None
        for r in range(m):
            coef = rows[r][enter]
            if coef > 0:
                ratio = rows[r][-1] / coef
                if best is None or ratio < best or (
                        ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:
            raise RuntimeError("phase-1 objective unbounded; system malformed")
        _pivot(rows, obj, basis, leave, enter)

    value = -obj[-1]
    if value > 0:
        # Dual of the phase-1 optimum: artificial column n+r has cost 1,
        # so its reduced cost is 1 - y_r.
        y = []
        for r in range(m):
            yr = Fraction(1) - obj[n + r]
            y.append(-yr if flipped[r] else yr)
        return SimplexResult(feasible=False, witness=None, certificate=tuple(y))

    x = [Fraction(0)] * n
    for r, var in enumerate(basis):
        if var < n:
            x[var] = rows[r][-1]
    return SimplexResult(feasible=True, witness=tuple(x), certificate=None)


def _pivot(rows, obj, basis, leave, enter):
    piv = rows[leave][enter]
    rows[leave] = [x / piv for x in rows[leave]]
    for r in range(len(rows)):
        if r != leave and rows[r][enter]:
            f = rows[r][enter]
            rows[r] = [x - f * y for x, y in zip(rows[r], rows[leave])]
    if obj[enter]:
        f = obj[enter]
        for j in range(len(obj)):
            obj[j] -= f * rows[leave][j]
    basis[leave] = enter
