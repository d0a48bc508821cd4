"""Spherical roots of G and their compatibility with a weight monoid.

The table of spherical roots is encoded row by row as coefficient
patterns on a Bourbaki-labelled support; ``enumerate_sigma_G`` applies
every row to every matching subdiagram.  Compatibility with a lattice
and with a monoid follow the lattice conditions (primitivity, the
Pi^pp / Pi^p sandwich, the A1xA1 and 2*alpha parity rules) and the cone
generation conditions on the dual cone K.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import rootsys
from .cones import HalfSpace, PolyCone, generated_with_halfspace, member
from .rootsys import RootSystem, Weight
from .zlinalg import LatticeBasis, dot, lattice_coords, rational_coords, solve_rational, vec_gcd

Functional = tuple  # values on the HNF basis of the lattice


@dataclass(frozen=True)
class TableRow:
    number: int
    series: str
    admits: Callable[[int], bool]
    coefficients: Callable[[int], list[int]]
    asterisk: bool = False
    cross: bool = False


TABLE: tuple[TableRow, ...] = (
    TableRow(1, "A", lambda r: r == 1, lambda r: [1]),
    TableRow(2, "A", lambda r: r == 1, lambda r: [2]),
    TableRow(3, "A1xA1", lambda r: r == 2, lambda r: [1, 1], asterisk=True),
    TableRow(4, "A", lambda r: r >= 2, lambda r: [1] * r),
    TableRow(5, "A", lambda r: r == 3, lambda r: [1, 2, 1], asterisk=True),
    TableRow(6, "B", lambda r: r >= 2, lambda r: [1] * r),
    TableRow(7, "B", lambda r: r >= 2, lambda r: [2] * r),
    TableRow(8, "B", lambda r: r == 3, lambda r: [1, 2, 3], asterisk=True),
    TableRow(9, "C", lambda r: r >= 3, lambda r: [1] + [2] * (r - 2) + [1]),
    TableRow(10, "D", lambda r: r >= 4, lambda r: [2] * (r - 2) + [1, 1], asterisk=True),
    TableRow(11, "F", lambda r: r == 4, lambda r: [1, 2, 3, 2]),
    TableRow(12, "G", lambda r: r == 2, lambda r: [1, 1]),
    TableRow(13, "G", lambda r: r == 2, lambda r: [2, 1], cross=True),
    TableRow(14, "G", lambda r: r == 2, lambda r: [4, 2]),
)

ASTERISK_ROWS = frozenset(t.number for t in TABLE if t.asterisk)
CROSS_ROWS = frozenset(t.number for t in TABLE if t.cross)


@dataclass(frozen=True)
class SphericalRoot:
    sigma: Weight
    coefficients: tuple[Fraction, ...]  # on the simple roots, global order
    support: frozenset[int]
    labels: tuple[int, ...]  # Bourbaki labelling of the support used for the table row
    table_row: int
    halved: bool
    in_root_lattice: bool
    spherically_closed: bool
    pi_pp: frozenset[int]
    pi_p_sigma: frozenset[int]

    @property
    def is_simple(self) -> bool:
        return self.table_row == 1

    def render(self) -> str:
        return render_root_combination(self.coefficients)


def render_root_combination(coeffs: Sequence[Fraction]) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        name = f"a{i + 1}"
        mag = abs(c)
        term = name if mag == 1 else f"{mag}*{name}"
        parts.append(("-" if c < 0 else "+") + term)
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


def _connected_subsets(rs: RootSystem) -> list[frozenset[int]]:
    n = rs.n_simple
    adj = {i: {j for j in range(n) if j != i and rs.cartan[i][j]} for i in range(n)}
    seen: set[frozenset[int]] = set()
    frontier = [frozenset([i]) for i in range(n)]
    seen.update(frontier)
    while frontier:
        nxt = []
        for s in frontier:
            for v in s:
                for w in adj[v] - s:
                    t = s | {w}
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def _pi_p_sigma(rs: RootSystem, sigma: Sequence) -> frozenset[int]:
    return frozenset(i for i in range(rs.n_simple) if rootsys.inner_product(rs, sigma, rs.simple_roots[i]) == 0)


def _pi_pp(row: int, series: str, labels: Sequence[int], pi_p_sigma: frozenset[int]) -> frozenset[int]:
    base = frozenset(labels) & pi_p_sigma
    if series == "B" and row == 6:
        return base - {labels[-1]}
    if series == "C":
        return base - {labels[0]}
    return base


def _make_root(rs: RootSystem, row: TableRow, labels: Sequence[int], coeffs: Sequence[int]) -> SphericalRoot:
    c = [Fraction(0)] * rs.n_simple
    for idx, k in zip(labels, coeffs):
        c[idx] = Fraction(k)
    sigma = rs.from_root_coords(c)
    pps = _pi_p_sigma(rs, sigma)
    return SphericalRoot(
        sigma=tuple(int(x) for x in sigma),
        coefficients=tuple(c),
        support=frozenset(labels),
        labels=tuple(labels),
        table_row=row.number,
        halved=False,
        in_root_lattice=True,
        spherically_closed=not row.cross,
        pi_pp=_pi_pp(row.number, row.series, labels, pps),
        pi_p_sigma=pps,
    )


def _halve(rs: RootSystem, root: SphericalRoot) -> Optional[SphericalRoot]:
    if any(x % 2 for x in root.sigma):
        return None
    half = tuple(x // 2 for x in root.sigma)
    if rootsys.in_root_lattice(rs, half) is not None:
        return None
    return SphericalRoot(
        sigma=half,
        coefficients=tuple(x / 2 for x in root.coefficients),
        support=root.support,
        labels=root.labels,
        table_row=root.table_row,
        halved=True,
        in_root_lattice=False,
        spherically_closed=False,
        pi_pp=root.pi_pp,
        pi_p_sigma=root.pi_p_sigma,
    )


def _sort_key(root: SphericalRoot):
    return (len(root.support), sorted(root.support), root.table_row, root.halved, root.coefficients)


def enumerate_sigma_G(rs: RootSystem) -> list[SphericalRoot]:
    """All spherical roots of G in canonical order."""
    found: dict[Weight, SphericalRoot] = {}

    def add(root: SphericalRoot) -> None:
        if root.sigma not in found:
            found[root.sigma] = root

    candidates = list(_connected_subsets(rs))
    n = rs.n_simple
    candidates += [frozenset((i, j)) for i in range(n) for j in range(i + 1, n) if rs.cartan[i][j] == 0]
    for S in candidates:
        for lab in rootsys.labelings(rs, S):
            for row in TABLE:
                if row.series != lab.series or not row.admits(lab.rank):
                    continue
                root = _make_root(rs, row, lab.labels, row.coefficients(lab.rank))
                add(root)
                if row.asterisk:
                    half = _halve(rs, root)
                    if half is not None:
                        add(half)
    return sorted(found.values(), key=_sort_key)


# --------------------------------------------------------------------------
# the monoid context


@dataclass(frozen=True)
class GammaContext:
    """Lattice, cone and coroot data attached to a saturated weight monoid."""

    rs: RootSystem
    generators: tuple[Weight, ...]
    lattice: LatticeBasis
    gen_coords: tuple[tuple[int, ...], ...]
    pi_p: frozenset[int]
    K: PolyCone
    K1: tuple[Functional, ...]
    iota: tuple[Functional, ...]

    @classmethod
    def build(cls, rs: RootSystem, generators: Sequence[Sequence[int]]) -> "GammaContext":
        gens = tuple(tuple(int(x) for x in g) for g in generators)
        lattice = LatticeBasis.from_generators(gens, rs.n_weights)
        coords = tuple(lattice_coords(lattice, g) for g in gens)
        r = lattice.rank
        K = PolyCone.from_inequalities(coords, r)
        iota = tuple(tuple(b[i] for b in lattice.basis) for i in range(rs.n_simple))
        pi_p = frozenset(i for i in range(rs.n_simple) if not any(iota[i]))
        K1 = tuple(K.rays) if K.pointed else ()
        return cls(rs, gens, lattice, coords, pi_p, K, K1, iota)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def coords(self, weight: Sequence) -> Optional[tuple[Fraction, ...]]:
        """Rational coordinates of a weight in the lattice basis (None outside Q*Lambda)."""
        return rational_coords(self.lattice, weight)

    def pair(self, f: Functional, weight: Sequence) -> Fraction:
        c = self.coords(weight)
        if c is None:
            raise ValueError(f"weight {tuple(weight)} is not in the rational span of the lattice")
        return dot(f, c)

    def on_generators(self, f: Functional) -> tuple[Fraction, ...]:
        """Values of ``f`` on the generators: its coordinates in the dual basis when E is a basis."""
        return tuple(dot(f, c) for c in self.gen_coords)

    def coroot_expression(self, f: Functional) -> Optional[tuple[Fraction, ...]]:
        """Write ``f`` as a rational combination of iota(alpha_i^v) and the torus duals.

        Free coefficients are set to zero, so the expression is canonical
        but not unique when Lambda is not of full rank.
        """
        if self.rank == 0:
            return tuple(Fraction(0) for _ in range(self.rs.n_weights))
        A = [list(row) for row in self.lattice.basis]
        return solve_rational(A, list(f))


def render_coroot_expression(coeffs: Sequence[Fraction], n_simple: int) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        name = f"a{i + 1}^v" if i < n_simple else f"t{i - n_simple + 1}^*"
        mag = abs(c)
        term = name if mag == 1 else f"{mag}*{name}"
        parts.append(("-" if c < 0 else "+") + term)
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


def pi_p_of_monoid(ctx: GammaContext) -> frozenset[int]:
    return frozenset(i for i in range(ctx.rs.n_simple) if all(g[i] == 0 for g in ctx.generators))


def compatible_with_lattice(rs: RootSystem, root: SphericalRoot, lattice: LatticeBasis) -> bool:
    c = lattice_coords(lattice, root.sigma)
    if c is None or vec_gcd(c) != 1:
        return False
    pi_p = frozenset(i for i in range(rs.n_simple) if all(b[i] == 0 for b in lattice.basis))
    if not (root.pi_pp <= pi_p <= root.pi_p_sigma):
        return False
    if root.table_row == 3:
        a, b = sorted(root.support)
        if any(v[a] != v[b] for v in lattice.basis):
            return False
    if root.table_row == 2:
        (a,) = root.support
        if any(v[a] % 2 for v in lattice.basis):
            return False
    return True


@dataclass(frozen=True)
class ColorPair:
    alpha: int
    rho_plus: Functional
    rho_minus: Functional

    @property
    def elements(self) -> tuple[Functional, Functional]:
        return (self.rho_plus, self.rho_minus)


@dataclass(frozen=True)
class Compatibility:
    """A root of Sigma(Gamma) together with its color pair when it is simple."""

    root: SphericalRoot
    color_pair: Optional[ColorPair] = None


def _frac(f: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in f)


def compatible_with_monoid(ctx: GammaContext, root: SphericalRoot) -> Optional[Compatibility]:
    if not compatible_with_lattice(ctx.rs, root, ctx.lattice):
        return None
    n = ctx.rs.n_simple
    sigma = ctx.coords(root.sigma)
    h = HalfSpace(sigma)
    if not root.is_simple:
        S = [ctx.iota[g] for g in range(n) if g not in ctx.pi_p]
        return Compatibility(root) if generated_with_halfspace(ctx.K, S, h) else None
    (a,) = root.support
    others = [ctx.iota[g] for g in range(n) if g not in ctx.pi_p and g != a]
    for rho in ctx.K1:
        if dot(rho, sigma) != 1:
            continue
        partner = tuple(x - y for x, y in zip(ctx.iota[a], rho))
        if not member(ctx.K, partner):
            continue
        if generated_with_halfspace(ctx.K, [rho, partner] + others, h):
            lo, hi = sorted([_frac(rho), _frac(partner)])
            return Compatibility(root, ColorPair(a, lo, hi))
    return None


def sigma_gamma(ctx: GammaContext) -> list[Compatibility]:
    out = []
    for root in enumerate_sigma_G(ctx.rs):
        w = compatible_with_monoid(ctx, root)
        if w is not None:
            out.append(w)
    return out


def gamma_distinguished(ctx: GammaContext, root: SphericalRoot, witness: Optional[Compatibility] = None) -> bool:
    if root.is_simple:
        if witness is None or witness.color_pair is None:
            raise ValueError("a simple spherical root needs its color pair")
        (a,) = root.support
        half = tuple(Fraction(x, 2) for x in ctx.iota[a])
        p = witness.color_pair
        return p.rho_plus == half and p.rho_minus == half
    if root.table_row == 6 and not root.halved:
        return set(root.labels[1:]) <= ctx.pi_p
    return root.table_row == 13


def overline_sigma(ctx: GammaContext, root: SphericalRoot, witness: Optional[Compatibility] = None) -> Weight:
    if root.halved or gamma_distinguished(ctx, root, witness):
        return tuple(2 * x for x in root.sigma)
    return root.sigma
