"""Full-support spherical roots of each simple type, written out by hand.

Entries are ``(row, halved, coefficients, pi_pp)`` with coefficients on
the simple roots in Bourbaki order and ``pi_pp`` as 1-based indices.
Halved entries are the asterisk rows whose half is a weight outside the
root lattice.
"""

from fractions import Fraction

H = Fraction(1, 2)


def expected_full_support(series: str, n: int) -> set:
    out = set()

    def add(row, coeffs, pi_pp, halved=False):
        out.add((row, halved, tuple(Fraction(c) for c in coeffs), frozenset(pi_pp)))

    if series == "A":
        if n == 1:
            add(1, [1], [])
            add(2, [2], [])
        else:
            add(4, [1] * n, [] if n == 2 else range(2, n))
        if n == 3:
            add(5, [1, 2, 1], [1, 3])
            add(5, [H, 1, H], [1, 3], halved=True)
    elif series == "B":
        add(6, [1] * n, [] if n == 2 else range(2, n))
        add(7, [2] * n, range(2, n + 1))
        if n == 3:
            add(8, [1, 2, 3], [1, 2])
            add(8, [H, 1, 3 * H], [1, 2], halved=True)
    elif series == "C":
        add(9, [1] + [2] * (n - 2) + [1], range(3, n + 1))
    elif series == "D":
        # the three legs of D4 are permuted by triality
        legs = [(1, 3, 4), (3, 1, 4), (4, 1, 3)] if n == 4 else [(1, n - 1, n)]
        for a, b, c in legs:
            coeffs = [0] * n
            coeffs[a - 1] = 2
            for i in range(2, n - 1):
                coeffs[i - 1] = 2
            coeffs[b - 1] = coeffs[c - 1] = 1
            pi_pp = set(range(1, n + 1)) - {a}
            add(10, coeffs, pi_pp)
            add(10, [x * H for x in coeffs], pi_pp, halved=True)
    elif series == "F":
        add(11, [1, 2, 3, 2], [1, 2, 3])
    elif series == "G":
        add(12, [1, 1], [])
        add(13, [2, 1], [2])
        add(14, [4, 2], [2])
    return out


def simple_types(max_rank: int = 8):
    for s, lo in (("A", 1), ("B", 2), ("C", 3), ("D", 4)):
        for n in range(lo, max_rank + 1):
            yield s, n
    for s, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        if n <= max_rank:
            yield s, n
