"""Exact LP feasibility by the two-phase simplex method (phase I only).

Bland's smallest-index rule is used for both entering and leaving
variables, which guarantees termination without any perturbation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def feasible_point(
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    n: Optional[int] = None,
) -> Optional[tuple[Fraction, ...]]:
    """Find ``x >= 0`` with ``A_eq x == b_eq`` and ``A_ub x <= b_ub``.

    Returns an exact feasible point, or None when the system is infeasible.
    """
    rows = list(A_eq) + list(A_ub)
    if n is None:
        if not rows:
            raise ValueError("cannot infer the number of variables")
        n = len(rows[0])
    n_ub = len(A_ub)
    m = len(rows)
    if m == 0:
        return tuple(Fraction(0) for _ in range(n))
    # columns: x (n), slacks (n_ub), artificials (m)
    width = n + n_ub + m
    T: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i, (row, b) in enumerate(zip(rows, list(b_eq) + list(b_ub))):
        r = [Fraction(v) for v in row] + [Fraction(0)] * (n_ub + m)
        if i >= len(A_eq):
            r[n + i - len(A_eq)] = Fraction(1)
        b = Fraction(b)
        if b < 0:
            r = [-v for v in r]
            b = -b
        r[n + n_ub + i] = Fraction(1)
        T.append(r)
        rhs.append(b)
    basis = [n + n_ub + i for i in range(m)]
    # phase-I objective: minimise sum of artificials; reduced costs c_j - c_B B^-1 A_j
    cost = [Fraction(0)] * (n + n_ub) + [Fraction(1)] * m
    red = cost[:]
    for i in range(m):
        red = [a - b for a, b in zip(red, T[i])]
    while True:
        enter = next((j for j in range(width) if red[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # pragma: no cover - phase I objective is bounded below
            raise ArithmeticError("unbounded phase-I problem")
        p = best[1]
        piv = T[p][enter]
        T[p] = [v / piv for v in T[p]]
        rhs[p] /= piv
        for i in range(m):
            if i != p and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * b for a, b in zip(T[i], T[p])]
                rhs[i] -= f * rhs[p]
        f = red[enter]
        red = [a - f * b for a, b in zip(red, T[p])]
        basis[p] = enter
    x = [Fraction(0)] * width
    for i, j in enumerate(basis):
        x[j] = rhs[i]
    if any(x[n + n_ub :]):
        return None
    return tuple(x[:n])
