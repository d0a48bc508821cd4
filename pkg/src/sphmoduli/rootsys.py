"""Root data of a reductive group given as simple factors times a torus.

Weights are integer tuples in the basis of fundamental weights of each
factor (Bourbaki labelling), followed by the torus characters.  Simple
roots are numbered globally in factor order, so simple root ``i`` pairs
with weight coordinate ``i`` under its coroot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import permutations
from typing import Optional, Sequence

from . import zlinalg
from .errors import ValidationError

Weight = tuple[int, ...]

SERIES = "ABCDEFG"

_SUBSTITUTES = {
    ("B", 1): "A1",
    ("C", 1): "A1",
    ("C", 2): "B2",
    ("D", 2): "A1xA1",
    ("D", 3): "A3",
}


class GroupSpecError(ValidationError):
    """Invalid series/rank combination or unparseable group string."""


def _check_factor(series: str, rank: int) -> None:
    if series not in SERIES:
        raise GroupSpecError(f"unknown series {series!r}; expected one of {SERIES}")
    if not isinstance(rank, int) or rank < 1:
        raise GroupSpecError(f"rank must be a positive integer, got {rank!r}")
    sub = _SUBSTITUTES.get((series, rank))
    if sub is not None:
        raise GroupSpecError(f"{series}{rank} is not a canonical name; enter it as {sub}")
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 3,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[series]
    if not ok:
        raise GroupSpecError(f"there is no simple root system of type {series}{rank}")


@dataclass(frozen=True)
class GroupSpec:
    factors: tuple[tuple[str, int], ...]
    torus_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((str(s), r) for s, r in self.factors))
        for s, r in self.factors:
            _check_factor(s, r)
        if not isinstance(self.torus_rank, int) or self.torus_rank < 0:
            raise GroupSpecError(f"torus rank must be a nonnegative integer, got {self.torus_rank!r}")

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse strings such as ``"A3"``, ``"B2xA1+T1"`` or ``"T2"``."""
        factors = []
        torus = 0
        text = text.replace(" ", "")
        if not text:
            raise GroupSpecError("empty group string")
        for part in text.split("+"):
            m = re.fullmatch(r"T(\d+)", part)
            if m:
                torus += int(m.group(1))
                continue
            for f in part.split("x"):
                m = re.fullmatch(r"([A-G])(\d+)", f)
                if not m:
                    raise GroupSpecError(f"cannot parse factor {f!r} in {text!r}")
                factors.append((m.group(1), int(m.group(2))))
        return cls(tuple(factors), torus)

    def __str__(self) -> str:
        s = "x".join(f"{a}{r}" for a, r in self.factors)
        if self.torus_rank:
            s = f"{s}+T{self.torus_rank}" if s else f"T{self.torus_rank}"
        return s or "T0"


def _simple_gram(series: str, r: int) -> list[list[int]]:
    """Symmetric Gram matrix of the simple roots, short roots of squared length 2."""
    g = [[0] * r for _ in range(r)]

    def bond(i: int, j: int, v: int) -> None:
        g[i][j] = g[j][i] = v

    if series == "A":
        lengths = [2] * r
        for i in range(r - 1):
            bond(i, i + 1, -1)
    elif series == "B":
        lengths = [4] * (r - 1) + [2]
        for i in range(r - 1):
            bond(i, i + 1, -2)
    elif series == "C":
        lengths = [2] * (r - 1) + [4]
        for i in range(r - 2):
            bond(i, i + 1, -1)
        bond(r - 2, r - 1, -2)
    elif series == "D":
        lengths = [2] * r
        for i in range(r - 2):
            bond(i, i + 1, -1)
        bond(r - 3, r - 1, -1)
    elif series == "E":
        lengths = [2] * r
        bond(0, 2, -1)
        bond(1, 3, -1)
        for i in range(2, r - 1):
            bond(i, i + 1, -1)
    elif series == "F":
        lengths = [4, 4, 2, 2]
        bond(0, 1, -2)
        bond(1, 2, -2)
        bond(2, 3, -1)
    elif series == "G":
        lengths = [2, 6]
        bond(0, 1, -3)
    else:  # pragma: no cover - guarded by GroupSpec
        raise GroupSpecError(series)
    for i in range(r):
        g[i][i] = lengths[i]
    return g


@dataclass(frozen=True)
class SubdiagramType:
    """Classification of a set of simple roots.

    ``series`` is a Dynkin letter, ``"A1xA1"`` for two orthogonal roots, or
    ``"Other"``.  ``labels`` lists the global indices in Bourbaki order.
    """

    series: str
    labels: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class RootSystem:
    spec: GroupSpec
    offsets: tuple[int, ...] = field(init=False)
    n_simple: int = field(init=False)
    n_weights: int = field(init=False)
    cartan: tuple[tuple[int, ...], ...] = field(init=False)
    simple_gram: tuple[tuple[int, ...], ...] = field(init=False)
    simple_roots: tuple[Weight, ...] = field(init=False)

    def __post_init__(self):
        offsets = []
        n = 0
        for _, r in self.spec.factors:
            offsets.append(n)
            n += r
        gram = [[0] * n for _ in range(n)]
        for (s, r), off in zip(self.spec.factors, offsets):
            g = _simple_gram(s, r)
            for i in range(r):
                for j in range(r):
                    gram[off + i][off + j] = g[i][j]
        # <a_i^v, a_j> = 2 (a_i, a_j) / (a_i, a_i)
        cartan = [[2 * gram[i][j] // gram[i][i] for j in range(n)] for i in range(n)]
        nw = n + self.spec.torus_rank
        roots = tuple(tuple(cartan[i][j] for i in range(n)) + (0,) * self.spec.torus_rank for j in range(n))
        object.__setattr__(self, "offsets", tuple(offsets))
        object.__setattr__(self, "n_simple", n)
        object.__setattr__(self, "n_weights", nw)
        object.__setattr__(self, "cartan", tuple(map(tuple, cartan)))
        object.__setattr__(self, "simple_gram", tuple(map(tuple, gram)))
        object.__setattr__(self, "simple_roots", roots)

    def factor_of(self, i: int) -> int:
        for k in range(len(self.offsets) - 1, -1, -1):
            if i >= self.offsets[k]:
                return k
        raise IndexError(i)

    def root_length2(self, i: int) -> int:
        return self.simple_gram[i][i]

    @cached_property
    def ip_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix of the invariant inner product on weight coordinates."""
        n, nw = self.n_simple, self.n_weights
        G = [[Fraction(0)] * nw for _ in range(nw)]
        for (_, r), off in zip(self.spec.factors, self.offsets):
            block = [[self.cartan[off + i][off + j] for j in range(r)] for i in range(r)]
            inv = zlinalg.inverse(block)
            # (w_k, w_l) = sum_j (A^-1)_{jl}... computed as D * A^{-1} with D = |a_k|^2 / 2
            for k in range(r):
                d = Fraction(self.simple_gram[off + k][off + k], 2)
                for l in range(r):
                    G[off + k][off + l] = d * inv[k][l]
        for t in range(n, nw):
            G[t][t] = Fraction(1)
        return tuple(map(tuple, G))

    def weight(self, coords: Sequence[int]) -> Weight:
        if len(coords) != self.n_weights:
            raise zlinalg.DimensionError(f"weight needs {self.n_weights} coordinates, got {len(coords)}")
        return tuple(int(x) for x in coords)

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(x >= 0 for x in lam[: self.n_simple])

    def from_root_coords(self, c: Sequence) -> tuple:
        """Weight of ``sum c_i alpha_i``; rational ``c`` gives rational output."""
        out = [0] * self.n_weights
        for ci, a in zip(c, self.simple_roots):
            if ci:
                out = [o + ci * x for o, x in zip(out, a)]
        return tuple(out)

    @cached_property
    def _positive_root_coords(self) -> tuple[tuple[int, ...], ...]:
        out: list[tuple[int, ...]] = []
        for (_, r), off in zip(self.spec.factors, self.offsets):
            A = [[self.cartan[off + i][off + j] for j in range(r)] for i in range(r)]
            simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
            found = set(simple)
            level = list(simple)
            allr = list(simple)
            while level:
                nxt = []
                for beta in level:
                    for i in range(r):
                        gamma = tuple(b + (j == i) for j, b in enumerate(beta))
                        if gamma in found:
                            continue
                        p = 0
                        down = tuple(b - (j == i) for j, b in enumerate(beta))
                        while down in found:
                            p += 1
                            down = tuple(b - (j == i) for j, b in enumerate(down))
                        pairing = sum(A[i][j] * beta[j] for j in range(r))
                        if p - pairing > 0:
                            found.add(gamma)
                            nxt.append(gamma)
                allr.extend(sorted(nxt))
                level = nxt
            for c in allr:
                full = [0] * self.n_simple
                full[off : off + r] = c
                out.append(tuple(full))
        return tuple(out)

    def positive_roots(self) -> list[Weight]:
        """All positive roots as weights, grouped by factor and ordered by height."""
        return [self.from_root_coords(c) for c in self._positive_root_coords]

    def positive_root_coords(self) -> list[tuple[int, ...]]:
        return list(self._positive_root_coords)


def build(spec: GroupSpec) -> RootSystem:
    return RootSystem(spec)


def coroot_pairing(rs: RootSystem, i: int, lam: Sequence[int]) -> int:
    if not 0 <= i < rs.n_simple:
        raise IndexError(f"simple root index {i} out of range")
    return lam[i]


def inner_product(rs: RootSystem, lam: Sequence, mu: Sequence) -> Fraction:
    G = rs.ip_gram
    total = Fraction(0)
    for i, a in enumerate(lam):
        if a:
            total += a * sum((G[i][j] * b for j, b in enumerate(mu) if b), Fraction(0))
    return total


def positive_roots(rs: RootSystem) -> list[Weight]:
    return rs.positive_roots()


def root_coords(rs: RootSystem, lam: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Rational coefficients of ``lam`` on the simple roots, None if torus part is nonzero."""
    if any(lam[rs.n_simple :]):
        return None
    n = rs.n_simple
    if n == 0:
        return ()
    # columns of the Cartan matrix are the simple roots
    return zlinalg.solve_rational([list(row) for row in rs.cartan], list(lam[:n]))


def in_root_lattice(rs: RootSystem, lam: Sequence[int]) -> Optional[tuple[int, ...]]:
    c = root_coords(rs, lam)
    if c is None or any(x.denominator != 1 for x in c):
        return None
    return tuple(int(x) for x in c)


def _adjacent(rs: RootSystem, i: int, j: int) -> bool:
    return i != j and rs.cartan[i][j] != 0


def _components(rs: RootSystem, S: Sequence[int]) -> list[list[int]]:
    rest = set(S)
    comps = []
    while rest:
        start = min(rest)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in list(rest):
                if w not in comp and _adjacent(rs, v, w):
                    comp.add(w)
                    stack.append(w)
        rest -= comp
        comps.append(sorted(comp))
    return comps


def _path_from(rs: RootSystem, start: int, nodes: set[int]) -> list[int]:
    path = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w in nodes if _adjacent(rs, cur, w) and w != prev and w not in path]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def subdiagram_type(rs: RootSystem, S) -> SubdiagramType:
    """Type of the Dynkin subdiagram on ``S`` with one canonical Bourbaki labelling."""
    S = sorted(set(S))
    if not S:
        raise ValueError("empty set of simple roots")
    comps = _components(rs, S)
    if len(comps) > 1:
        if len(S) == 2:
            return SubdiagramType("A1xA1", tuple(S))
        return SubdiagramType("Other", tuple(S))
    nodes = set(S)
    r = len(S)
    if r == 1:
        return SubdiagramType("A", tuple(S))
    deg = {v: sum(_adjacent(rs, v, w) for w in nodes) for v in nodes}
    bonds = {
        (v, w): rs.cartan[v][w] * rs.cartan[w][v] for v in nodes for w in nodes if v < w and _adjacent(rs, v, w)
    }
    mult = sorted(bonds.values())
    length = rs.root_length2
    if any(d > 3 for d in deg.values()) or len(bonds) != r - 1:
        return SubdiagramType("Other", tuple(S))
    branch = [v for v in nodes if deg[v] == 3]
    if mult[-1] == 3:
        short, long_ = sorted(nodes, key=length)
        return SubdiagramType("G", (short, long_))
    if mult[-1] == 2:
        if branch:
            return SubdiagramType("Other", tuple(S))
        ends = [v for v in nodes if deg[v] == 1]
        path = _path_from(rs, min(ends), nodes)
        k = next(i for i in range(r - 1) if rs.cartan[path[i]][path[i + 1]] * rs.cartan[path[i + 1]][path[i]] == 2)
        if r == 2:
            return SubdiagramType("B", tuple(sorted(nodes, key=lambda v: -length(v))))
        if k == r - 2 or k == 0:
            if k == 0:
                path.reverse()
            # the double bond now sits between path[-2] and path[-1]
            if length(path[-1]) < length(path[-2]):
                return SubdiagramType("B", tuple(path))
            return SubdiagramType("C", tuple(path))
        if r == 4 and k == 1:
            if length(path[0]) < length(path[-1]):
                path.reverse()
            return SubdiagramType("F", tuple(path))
        return SubdiagramType("Other", tuple(S))
    # simply laced
    if not branch:
        ends = sorted(v for v in nodes if deg[v] == 1)
        return SubdiagramType("A", tuple(_path_from(rs, ends[0], nodes)))
    if len(branch) > 1:
        return SubdiagramType("Other", tuple(S))
    b = branch[0]
    arms = []
    for w in sorted(v for v in nodes if _adjacent(rs, b, v)):
        arm = _path_from(rs, w, nodes - {b})
        arms.append(arm)
    arms.sort(key=lambda a: (len(a), a[0]))
    lens = tuple(len(a) for a in arms)
    if lens == (1, 1, 1):
        return SubdiagramType("D", (arms[0][0], b, arms[1][0], arms[2][0]))
    if lens[0] == 1 and lens[1] == 1:
        long_arm = list(reversed(arms[2]))
        return SubdiagramType("D", tuple(long_arm + [b, arms[0][0], arms[1][0]]))
    if lens in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        a1, a3 = arms[1][1], arms[1][0]
        return SubdiagramType("E", tuple([a1, arms[0][0], a3, b] + arms[2]))
    return SubdiagramType("Other", tuple(S))


def labelings(rs: RootSystem, S) -> list[SubdiagramType]:
    """Every Bourbaki labelling of a connected subdiagram (its diagram automorphisms)."""
    t = subdiagram_type(rs, S)
    lab = list(t.labels)
    if t.series == "A" and t.rank > 1:
        alts = [lab, lab[::-1]]
    elif t.series == "D" and t.rank == 4:
        alts = []
        for p in permutations([lab[0], lab[2], lab[3]]):
            alts.append([p[0], lab[1], p[1], p[2]])
    elif t.series == "D":
        alts = [lab, lab[:-2] + [lab[-1], lab[-2]]]
    elif t.series == "E" and t.rank == 6:
        alts = [lab, [lab[5], lab[1], lab[4], lab[3], lab[2], lab[0]]]
    else:
        alts = [lab]
    out = []
    for a in alts:
        st = SubdiagramType(t.series, tuple(a))
        if st not in out:
            out.append(st)
    return out
