"""Exact integer and rational linear algebra.

Matrices are plain sequences of rows; integers are Python ints and
rationals are :class:`fractions.Fraction`, so nothing ever overflows or
rounds.  Functions return tuples so results can be hashed and shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]
IntMatrix = tuple[IntVector, ...]


class DimensionError(ValueError):
    """Raised when vector or matrix shapes do not match."""


def as_fractions(v: Sequence) -> RatVector:
    return tuple(Fraction(x) for x in v)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} != {len(v)}")
    return sum((a * b for a, b in zip(u, v)), 0)


def vec_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitive(v: Sequence) -> IntVector:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    fr = as_fractions(v)
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = vec_gcd(ints)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def hnf(m: Sequence[Sequence[int]], cols: Optional[int] = None) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H == U @ m``, ``U`` unimodular, ``H`` upper
    echelon with positive pivots, entries above each pivot reduced into
    ``[0, pivot)`` and zero rows at the bottom.  ``cols`` is only needed
    when ``m`` has no rows.
    """
    A = [[int(x) for x in row] for row in m]
    rows = len(A)
    ncols = len(A[0]) if rows else (cols or 0)
    if any(len(row) != ncols for row in A):
        raise DimensionError("ragged matrix")
    U = _identity(rows)

    def sub(i: int, k: int, q: int) -> None:
        # row_i -= q * row_k
        if q:
            A[i] = [a - q * b for a, b in zip(A[i], A[k])]
            U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    r = 0
    for c in range(ncols):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if A[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[p] = A[p], A[r]
            U[r], U[p] = U[p], U[r]
            clean = True
            for i in range(r + 1, rows):
                if A[i][c]:
                    sub(i, r, A[i][c] // A[r][c])
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-a for a in A[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            sub(i, r, A[i][c] // A[r][c])
        r += 1
    return tuple(map(tuple, A)), tuple(map(tuple, U))


def is_hnf(H: Sequence[Sequence[int]]) -> bool:
    last = -1
    seen_zero = False
    for i, row in enumerate(H):
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            seen_zero = True
            continue
        if seen_zero or piv <= last or row[piv] <= 0:
            return False
        for k in range(i):
            if not 0 <= H[k][piv] < row[piv]:
                return False
        last = piv
    return True


@dataclass(frozen=True)
class LatticeBasis:
    """A sublattice of Z^n given by the nonzero rows of a Hermite normal form."""

    ambient_dim: int
    basis: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    @classmethod
    def from_generators(cls, gens: Sequence[Sequence[int]], ambient_dim: int) -> "LatticeBasis":
        for g in gens:
            if len(g) != ambient_dim:
                raise DimensionError(f"generator {tuple(g)} does not have {ambient_dim} entries")
        H, _ = hnf(gens, cols=ambient_dim)
        return cls(ambient_dim, tuple(row for row in H if any(row)))

    def vector(self, coords: Sequence) -> tuple:
        """Lattice (or rational) coordinates back to an ambient vector."""
        if len(coords) != self.rank:
            raise DimensionError("coordinate vector has wrong length")
        out = [0] * self.ambient_dim
        for c, row in zip(coords, self.basis):
            if c:
                out = [o + c * x for o, x in zip(out, row)]
        return tuple(out)


def lattice_coords(basis: LatticeBasis, v: Sequence[int]) -> Optional[IntVector]:
    """Integer coordinates of ``v`` in ``basis``, or None if ``v`` is not in the lattice."""
    c = rational_coords(basis, v)
    if c is None or any(x.denominator != 1 for x in c):
        return None
    return tuple(int(x) for x in c)


def rational_coords(basis: LatticeBasis, v: Sequence) -> Optional[RatVector]:
    """Coordinates of ``v`` in ``basis`` over Q, or None if ``v`` is outside the Q-span."""
    if len(v) != basis.ambient_dim:
        raise DimensionError(f"expected {basis.ambient_dim} entries, got {len(v)}")
    res = list(as_fractions(v))
    coords = []
    for row, p in zip(basis.basis, basis.pivots):
        c = res[p] / row[p]
        coords.append(c)
        if c:
            res = [a - c * b for a, b in zip(res, row)]
    if any(res):
        return None
    return tuple(coords)


def is_primitive(basis: LatticeBasis, v: Sequence[int]) -> bool:
    """True iff ``v`` is an indivisible element of the lattice."""
    c = lattice_coords(basis, v)
    if c is None:
        raise ValueError(f"{tuple(v)} is not in the lattice")
    if not any(c):
        raise ValueError("the zero vector is never primitive")
    return vec_gcd(c) == 1


def rref(A: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    M = [list(as_fractions(row)) for row in A]
    pivots: list[int] = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rank(A: Sequence[Sequence]) -> int:
    return len(rref(A)[1]) if A else 0


def solve_rational(A: Sequence[Sequence], b: Sequence) -> Optional[RatVector]:
    """One exact solution of ``A x = b`` (free variables set to 0), or None."""
    if len(A) != len(b):
        raise DimensionError(f"{len(A)} equations but {len(b)} right-hand sides")
    if not A:
        raise DimensionError("empty system has no column count")
    n = len(A[0])
    if any(len(row) != n for row in A):
        raise DimensionError("ragged matrix")
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    M, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = M[i][n]
    return tuple(x)


def nullspace(A: Sequence[Sequence], n: Optional[int] = None) -> list[RatVector]:
    """A basis of ``{x : A x = 0}``; ``n`` gives the column count when A is empty."""
    if not A:
        if n is None:
            raise DimensionError("column count unknown")
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    n = len(A[0])
    M, pivots = rref(A)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i, c in enumerate(pivots):
            x[c] = -M[i][f]
        basis.append(tuple(x))
    return basis


def det(A: Sequence[Sequence]) -> Fraction:
    n = len(A)
    M = [list(as_fractions(row)) for row in A]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] / M[c][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return d


def inverse(A: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(A)
    aug = [list(as_fractions(row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    M, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in M]


def mat_vec(A: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in A)


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*A)]
