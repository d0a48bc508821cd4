"""Exact polyhedral cones over Q.

A :class:`PolyCone` carries both descriptions: extremal rays plus a
lineality basis, and facet normals plus equations.  Conversion between
them uses the double description method; every vector is stored as a
primitive integer tuple so the representation is canonical.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from . import lp
from .zlinalg import (
    DimensionError,
    IntVector,
    LatticeBasis,
    dot,
    hnf,
    inverse,
    nullspace,
    primitive,
    rank,
    rational_coords,
    rref,
)

log = logging.getLogger(__name__)


class NotPointedError(ValueError):
    """The cone contains a line where a pointed cone is required."""


def _canonical_span(vectors: Sequence[Sequence]) -> tuple[IntVector, ...]:
    """Canonical primitive integer basis of the span (scaled rows of the RREF)."""
    if not vectors:
        return ()
    M, piv = rref(vectors)
    return tuple(primitive(M[i]) for i in range(len(piv)))


def _dd(ineqs: Iterable[Sequence], dim: int) -> tuple[tuple[IntVector, ...], tuple[IntVector, ...]]:
    """Double description: rays and lineality basis of ``{x : a.x >= 0 for all a}``."""
    A: list[IntVector] = []
    for a in ineqs:
        if len(a) != dim:
            raise DimensionError(f"inequality of length {len(a)} in dimension {dim}")
        if any(a):
            p = primitive(a)
            if p not in A:
                A.append(p)
    lin = _canonical_span(nullspace(A, dim)) if A else _canonical_span(nullspace([], dim))
    if not A or len(lin) == dim:
        return (), lin

    # equality rows pin the cone into the complement of its lineality space
    basis_rows: list[Sequence] = list(lin)
    chosen: list[int] = []
    for k, a in enumerate(A):
        if rank(basis_rows + [a]) > len(basis_rows):
            basis_rows.append(a)
            chosen.append(k)
        if len(basis_rows) == dim:
            break
    Binv = inverse(basis_rows)
    n_eq = len(lin)
    rays: list[IntVector] = []
    zeros: list[frozenset[int]] = []
    for pos, k in enumerate(chosen):
        col = [Binv[i][n_eq + pos] for i in range(dim)]
        rays.append(primitive(col))
        zeros.append(frozenset(c for c in chosen if c != k))

    for k, a in enumerate(A):
        if k in chosen:
            continue
        vals = [dot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        new_rays = [rays[i] for i in pos]
        new_zeros = [zeros[i] for i in pos]
        for i in zer:
            new_rays.append(rays[i])
            new_zeros.append(zeros[i] | {k})
        for i in pos:
            for j in neg:
                common = zeros[i] & zeros[j]
                if len(common) < dim - n_eq - 2:
                    continue
                if any(common <= zeros[t] for t in range(len(rays)) if t != i and t != j):
                    continue
                v = [vals[i] * y - vals[j] * x for x, y in zip(rays[i], rays[j])]
                new_rays.append(primitive(v))
                new_zeros.append(common | {k})
        rays, zeros = new_rays, new_zeros
    return tuple(sorted(set(rays))), lin


@dataclass(frozen=True)
class PolyCone:
    """A rational polyhedral cone in Q^dim.

    ``rays`` generate the cone modulo ``lineality``; ``facets`` are inward
    normals and ``equations`` cut out the linear span.
    """

    dim: int
    rays: tuple[IntVector, ...]
    lineality: tuple[IntVector, ...]
    facets: tuple[IntVector, ...]
    equations: tuple[IntVector, ...]

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence], dim: int) -> "PolyCone":
        gens = [g for g in gens]
        for g in gens:
            if len(g) != dim:
                raise DimensionError(f"generator of length {len(g)} in dimension {dim}")
        facets, eqs = _dd(gens, dim)
        return cls._from_h(facets, eqs, dim)

    @classmethod
    def from_inequalities(cls, ineqs: Iterable[Sequence], dim: int, equations: Iterable[Sequence] = ()) -> "PolyCone":
        ineqs = list(ineqs)
        eqs = list(equations)
        rays, lin = _dd(ineqs + eqs + [[-x for x in e] for e in eqs], dim)
        gens = list(rays) + list(lin) + [tuple(-x for x in v) for v in lin]
        facets, eqs2 = _dd(gens, dim)
        return cls._from_h(facets, eqs2, dim)

    @classmethod
    def _from_h(cls, facets, eqs, dim) -> "PolyCone":
        rays, lin = _dd(list(facets) + list(eqs) + [tuple(-x for x in e) for e in eqs], dim)
        return cls(dim, rays, lin, tuple(facets), tuple(eqs))

    @property
    def pointed(self) -> bool:
        return not self.lineality

    @property
    def full_dimensional(self) -> bool:
        return not self.equations

    def generators(self) -> list[IntVector]:
        return list(self.rays) + list(self.lineality) + [tuple(-x for x in v) for v in self.lineality]


def dual_cone(gens: Iterable[Sequence], dim: int) -> PolyCone:
    """``{f : f.g >= 0 for every g}`` under the standard dot product."""
    return PolyCone.from_inequalities(list(gens), dim)


def extremal_rays(c: PolyCone) -> list[IntVector]:
    if not c.pointed:
        raise NotPointedError("cone contains a line")
    return list(c.rays)


def member(c: PolyCone, v: Sequence) -> bool:
    if len(v) != c.dim:
        raise DimensionError(f"vector of length {len(v)} in dimension {c.dim}")
    return all(dot(e, v) == 0 for e in c.equations) and all(dot(f, v) >= 0 for f in c.facets)


def cone_equal(a: PolyCone, b: PolyCone) -> bool:
    if a.dim != b.dim:
        raise DimensionError(f"cones live in dimensions {a.dim} and {b.dim}")
    return all(member(b, g) for g in a.generators()) and all(member(a, g) for g in b.generators())


@dataclass(frozen=True)
class HalfSpace:
    """``{q : <q, normal> <= 0}``."""

    normal: tuple


def generated_with_halfspace(K: PolyCone, S: Sequence[Sequence], h: HalfSpace) -> bool:
    """Is ``K = cone(S + F)`` for some finite ``F`` inside the half-space?

    Each extremal ray ``r`` of ``K`` must lie in ``cone(S) + (K & h)``; this
    is decided by an exact LP over nonnegative multipliers of ``S`` and of
    the rays of ``K``.
    """
    for s in S:
        if not member(K, s):
            log.debug("generator %s lies outside the cone", tuple(s))
            return False
    rays = extremal_rays(K)
    S = [tuple(s) for s in S if any(s)]
    hvals = [dot(rho, h.normal) for rho in rays]
    nvar = len(S) + len(rays)
    A_eq = [[s[i] for s in S] + [rho[i] for rho in rays] for i in range(K.dim)]
    A_ub = [[0] * len(S) + hvals]
    for r in rays:
        if lp.feasible_point(A_eq, r, A_ub, [0], n=nvar) is None:
            log.debug("ray %s is not reached", r)
            return False
    return True


def _box(bounds: Sequence[int]):
    return product(*(range(b) for b in bounds))


def _parallelepiped(B: Sequence[IntVector]) -> list[IntVector]:
    """Nonzero lattice points of ``{sum t_i b_i : 0 <= t_i < 1}`` for a basis ``B`` of Q^d."""
    H, _ = hnf(B)
    diag = [H[i][i] for i in range(len(B))]
    Binv = inverse(B)
    pts = []
    for x in _box(diag):
        if not any(x):
            continue
        t = [sum((x[i] * Binv[i][j] for i in range(len(x))), Fraction(0)) for j in range(len(x))]
        frac = [tj - (tj.numerator // tj.denominator) for tj in t]
        p = tuple(int(sum((frac[i] * B[i][j] for i in range(len(B))), Fraction(0))) for j in range(len(B)))
        if any(p):
            pts.append(p)
    return pts


def _integer_kernel(E: Sequence[IntVector], k: int) -> list[IntVector]:
    """A Z-basis of ``{x in Z^k : E x = 0}``."""
    if not E:
        return [tuple(int(i == j) for j in range(k)) for i in range(k)]
    ET = [[E[r][c] for r in range(len(E))] for c in range(k)]
    H, U = hnf(ET)
    return [U[i] for i in range(k) if not any(H[i])]


def hilbert_basis(c: PolyCone, lattice: LatticeBasis) -> list[IntVector]:
    """Minimal generating set of the monoid ``lattice & c``.

    Candidates come from the fundamental parallelepipeds of every simplicial
    cone spanned by linearly independent extremal rays; irreducible
    candidates are kept.
    """
    if not c.pointed:
        raise NotPointedError("Hilbert basis needs a pointed cone")
    if lattice.ambient_dim != c.dim:
        raise DimensionError("lattice and cone live in different dimensions")
    if not c.rays:
        return []
    k = lattice.rank
    # rays in lattice coordinates
    R = []
    for r in c.rays:
        rc = rational_coords(lattice, r)
        if rc is None:
            raise ValueError(f"ray {r} is outside the span of the lattice")
        R.append(primitive(rc))
    # saturated sublattice Z^k & span(R), full rank in its own coordinates
    eqs = [primitive(v) for v in nullspace(R)] if rank(R) < k else []
    M = LatticeBasis.from_generators(_integer_kernel(eqs, k), k)
    Rm = [primitive(rational_coords(M, r)) for r in R]
    d = M.rank
    inner = PolyCone.from_generators(Rm, d)
    cand = set(Rm)
    for sub in combinations(Rm, d):
        if rank(sub) == d:
            cand.update(p for p in _parallelepiped(sub) if member(inner, p))
    # a point is reducible iff it dominates a basis element of smaller degree,
    # so one pass in order of increasing degree suffices
    grade = [sum(col) for col in zip(*inner.facets)]
    cand = sorted(cand, key=lambda x: (dot(grade, x), x))
    basis: list[IntVector] = []
    for x in cand:
        if not any(member(inner, [a - b for a, b in zip(x, y)]) for y in basis):
            basis.append(x)
    out = [lattice.vector(M.vector(x)) for x in basis]
    return sorted(out)


def monoid_decomposition(gens: Sequence[Sequence[int]], target: Sequence[int], facets: Sequence[Sequence[int]]):
    """Nonnegative integer coefficients writing ``target`` over ``gens``, or None.

    ``facets`` must be inward normals of a pointed cone containing every
    generator.  The coefficient of ``g`` never exceeds ``<f, target> / <f, g>``
    for a facet ``f`` with ``<f, g> > 0``, which bounds the search.
    """
    gens = [tuple(g) for g in gens]
    fvals = [[dot(f, g) for f in facets] for g in gens]
    for g, fv in zip(gens, fvals):
        if any(g) and not any(v > 0 for v in fv):
            raise NotPointedError(f"generator {g} is not separated from 0 by any facet")

    @lru_cache(maxsize=None)
    def rec(i: int, res: tuple) -> Optional[tuple]:
        if not any(res):
            return (0,) * (len(gens) - i)
        if i == len(gens):
            return None
        rv = [dot(f, res) for f in facets]
        if any(v < 0 for v in rv):
            return None
        g = gens[i]
        if not any(g):
            sub = rec(i + 1, res)
            return None if sub is None else (0,) + sub
        bound = min(rv[j] // fvals[i][j] for j in range(len(facets)) if fvals[i][j] > 0)
        for cnt in range(bound, -1, -1):
            sub = rec(i + 1, tuple(a - cnt * b for a, b in zip(res, g)))
            if sub is not None:
                return (cnt,) + sub
        return None

    return rec(0, tuple(target))


def saturation_witness(generators: Sequence[Sequence[int]], lattice: LatticeBasis) -> Optional[IntVector]:
    """First Hilbert-basis element of ``lattice & cone(generators)`` missing from the monoid."""
    coords = []
    for g in generators:
        c = rational_coords(lattice, g)
        if c is None or any(x.denominator != 1 for x in c):
            raise ValueError(f"generator {tuple(g)} is not in the lattice")
        coords.append(tuple(int(x) for x in c))
    r = lattice.rank
    if r == 0:
        return None
    C = PolyCone.from_generators(coords, r)
    if not C.pointed:
        raise NotPointedError("the cone spanned by the generators contains a line")
    std = LatticeBasis.from_generators([tuple(int(i == j) for j in range(r)) for i in range(r)], r)
    for h in hilbert_basis(C, std):
        if monoid_decomposition(coords, h, C.facets) is None:
            return lattice.vector(h)
    return None


def is_saturated(generators: Sequence[Sequence[int]], lattice: LatticeBasis) -> bool:
    return saturation_witness(generators, lattice) is None
