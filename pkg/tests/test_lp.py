from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import linprog

from sphmoduli.lp import feasible_point

coef = st.integers(-4, 4)


def _check(x, A_eq, b_eq, A_ub, b_ub):
    assert all(v >= 0 for v in x)
    for row, b in zip(A_eq, b_eq):
        assert sum(Fraction(a) * v for a, v in zip(row, x)) == b
    for row, b in zip(A_ub, b_ub):
        assert sum(Fraction(a) * v for a, v in zip(row, x)) <= b


def test_simple_feasible_and_infeasible():
    assert feasible_point([[1, 1]], [2]) is not None
    assert feasible_point([[1, 1]], [-1]) is None
    assert feasible_point(A_ub=[[1, 0]], b_ub=[-1]) is None
    x = feasible_point([[1, -1]], [0], [[1, 1]], [4])
    _check(x, [[1, -1]], [0], [[1, 1]], [4])


def test_no_constraints():
    assert feasible_point(n=3) == (0, 0, 0)


def test_degenerate_cycling_example():
    # a classic degenerate system where naive pivoting can cycle
    A = [[Fraction(1, 4), -8, -1, 9], [Fraction(1, 2), -12, Fraction(-1, 2), 3], [0, 0, 1, 0]]
    b = [0, 0, 1]
    x = feasible_point(A, b)
    _check(x, A, b, [], [])


@given(
    st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.lists(st.lists(coef, min_size=n, max_size=n), min_size=0, max_size=3),
            st.lists(coef, min_size=3, max_size=3),
            st.lists(st.lists(coef, min_size=n, max_size=n), min_size=0, max_size=3),
            st.lists(coef, min_size=3, max_size=3),
            st.just(n),
        )
    )
)
def test_feasibility_agrees_with_scipy(args):
    A_eq, b_eq, A_ub, b_ub, n = args
    b_eq, b_ub = b_eq[: len(A_eq)], b_ub[: len(A_ub)]
    x = feasible_point(A_eq, b_eq, A_ub, b_ub, n=n)
    res = linprog(
        np.zeros(n),
        A_eq=np.array(A_eq, dtype=float).reshape(-1, n) if A_eq else None,
        b_eq=np.array(b_eq, dtype=float) if A_eq else None,
        A_ub=np.array(A_ub, dtype=float).reshape(-1, n) if A_ub else None,
        b_ub=np.array(b_ub, dtype=float) if A_ub else None,
        bounds=[(0, None)] * n,
        method="highs",
    )
    assert (x is not None) == (res.status == 0)
    if x is not None:
        _check(x, A_eq, b_eq, A_ub, b_ub)
