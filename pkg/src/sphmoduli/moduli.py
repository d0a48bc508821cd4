"""Admissible sets, deviant roots, tangent weights and the assembled report.

``analyze`` runs the whole pipeline on a group and a list of dominant
generators and returns a :class:`ModuliReport`.  Irreducible components
are the maximal cliques of the admissibility graph on Sigma(Gamma);
the tangent space at the most degenerate point has weights
``Phi = overline Sigma(Gamma) + Dev(Gamma)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from . import rootsys
from .cones import NotPointedError, PolyCone, cone_equal, monoid_decomposition, saturation_witness
from .errors import InternalError, SaturationError, ValidationError
from .rootsys import GroupSpec, RootSystem, Weight
from .spherical import (
    Compatibility,
    Functional,
    GammaContext,
    gamma_distinguished,
    overline_sigma,
    sigma_gamma,
)
from .zlinalg import LatticeBasis, dot, lattice_coords, solve_rational

log = logging.getLogger(__name__)


# --------------------------------------------------------------------------
# admissibility


@dataclass(frozen=True)
class Obstruction:
    """Why a pair fails: ``rho`` from the color pair of ``simple`` pairs to ``value`` with ``other``."""

    simple: int  # index into Sigma(Gamma)
    other: int
    rho: Functional
    value: Fraction


def pair_obstruction(ctx: GammaContext, sg: Sequence[Compatibility], i: int, j: int) -> Optional[Obstruction]:
    """First violation of the admissibility condition for the pair ``(sg[i], sg[j])``, or None."""
    if i == j:
        raise ValueError("a pair needs two distinct roots")
    for a, b in ((i, j), (j, i)):
        wa, wb = sg[a], sg[b]
        if not wa.root.is_simple:
            continue
        if wa.color_pair is None:
            raise ValueError(f"simple root {wa.root.render()} has no color pair")
        for rho in wa.color_pair.elements:
            v = ctx.pair(rho, wb.root.sigma)
            if v < 1:
                continue
            if v == 1 and wb.root.is_simple:
                if wb.color_pair is None:
                    raise ValueError(f"simple root {wb.root.render()} has no color pair")
                if rho in wb.color_pair.elements:
                    continue
            return Obstruction(a, b, rho, v)
    return None


def admissible_pair(ctx: GammaContext, first: Compatibility, second: Compatibility) -> bool:
    return pair_obstruction(ctx, [first, second], 0, 1) is None


@dataclass(frozen=True)
class AdmissibilityGraph:
    n_vertices: int
    edges: frozenset[tuple[int, int]]  # (i, j) with i < j
    obstructions: tuple[Obstruction, ...] = ()

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbours(self, i: int) -> frozenset[int]:
        return frozenset(j for j in range(self.n_vertices) if j != i and self.adjacent(i, j))

    @property
    def complete(self) -> bool:
        return len(self.edges) == self.n_vertices * (self.n_vertices - 1) // 2


def admissibility_graph(ctx: GammaContext, sg: Sequence[Compatibility]) -> AdmissibilityGraph:
    edges = set()
    obs = []
    for i, j in combinations(range(len(sg)), 2):
        o = pair_obstruction(ctx, sg, i, j)
        if o is None:
            edges.add((i, j))
        else:
            obs.append(o)
    return AdmissibilityGraph(len(sg), frozenset(edges), tuple(obs))


@dataclass(frozen=True)
class Component:
    roots: tuple[int, ...]  # indices into Sigma(Gamma)
    root_monoid_generators: tuple[Weight, ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.roots)


def maximal_cliques(graph: AdmissibilityGraph) -> list[tuple[int, ...]]:
    """Bron--Kerbosch with pivoting; sorted by size descending, then lexicographically."""
    out: list[tuple[int, ...]] = []
    nbr = [graph.neighbours(v) for v in range(graph.n_vertices)]

    def expand(R: frozenset, P: frozenset, X: frozenset) -> None:
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        pivot = max(sorted(P | X), key=lambda u: len(P & nbr[u]))
        for v in sorted(P - nbr[pivot]):
            expand(R | {v}, P & nbr[v], X & nbr[v])
            P = P - {v}
            X = X | {v}

    expand(frozenset(), frozenset(range(graph.n_vertices)), frozenset())
    return sorted(out, key=lambda c: (-len(c), c))


def maximal_admissible_sets(graph: AdmissibilityGraph, sigma_bar: Sequence[Weight] = ()) -> list[Component]:
    """Components from the maximal cliques; ``sigma_bar`` supplies the root monoid generators."""
    comps = []
    for clique in maximal_cliques(graph):
        gens = tuple(sigma_bar[i] for i in clique) if sigma_bar else ()
        comps.append(Component(clique, gens))
    return comps


# --------------------------------------------------------------------------
# deviant roots and tangent weights


@dataclass(frozen=True)
class DeviantWitness:
    alpha: int
    rho1: Functional
    rho2: Functional
    coefficients: tuple[Fraction, Fraction]  # iota(alpha^v) = c1*rho1 + c2*rho2


def deviant_witness(ctx: GammaContext, a: int) -> Optional[DeviantWitness]:
    alpha = ctx.rs.simple_roots[a]
    c = lattice_coords(ctx.lattice, alpha)
    if c is None:
        return None
    vals = [dot(rho, c) for rho in ctx.K1]
    iota = tuple(Fraction(x) for x in ctx.iota[a])
    for i, j in combinations(range(len(ctx.K1)), 2):
        if vals[i] != 1 or vals[j] != 1:
            continue
        if any(v > 0 for k, v in enumerate(vals) if k not in (i, j)):
            continue
        r1, r2 = ctx.K1[i], ctx.K1[j]
        sol = solve_rational([[x, y] for x, y in zip(r1, r2)], list(iota))
        if sol is None or sol[0] < 0 or sol[1] < 0:
            continue
        if iota in (tuple(2 * Fraction(x) for x in r1), tuple(2 * Fraction(x) for x in r2)):
            continue
        if iota == tuple(Fraction(x + y) for x, y in zip(r1, r2)):
            continue
        return DeviantWitness(a, r1, r2, (sol[0], sol[1]))
    return None


def deviant_roots(ctx: GammaContext) -> list[int]:
    return [a for a in range(ctx.rs.n_simple) if deviant_witness(ctx, a) is not None]


def tangent_weights(ctx: GammaContext, sg: Sequence[Compatibility], dev: Sequence[int]) -> tuple[list[Weight], list[int]]:
    """Phi as a deduplicated list, and the deviant roots already present in overline Sigma(Gamma)."""
    phi: list[Weight] = []
    for w in sg:
        s = overline_sigma(ctx, w.root, w)
        if s not in phi:
            phi.append(s)
    overlap = []
    for a in dev:
        alpha = ctx.rs.simple_roots[a]
        if alpha in phi:
            overlap.append(a)
        else:
            phi.append(alpha)
    return phi, overlap


def g_saturated(ctx: GammaContext) -> bool:
    """Is the cone of Gamma cut out of Q*Lambda by the dominant chamber?"""
    r = ctx.rank
    if r == 0:
        return True
    ours = PolyCone.from_generators(ctx.gen_coords, r)
    walls = [f for f in ctx.iota if any(f)]
    dominant = PolyCone.from_inequalities(walls, r)
    return cone_equal(ours, dominant)


# --------------------------------------------------------------------------
# generators


def indecomposables(gens: Sequence[Sequence[int]], lattice: LatticeBasis) -> list[Weight]:
    """Drop zeros, duplicates and every generator that is a sum of the others."""
    seen: list[Weight] = []
    for g in gens:
        g = tuple(int(x) for x in g)
        if any(g) and g not in seen:
            seen.append(g)
    if not seen:
        return []
    coords = [lattice_coords(lattice, g) for g in seen]
    cone = PolyCone.from_generators(coords, lattice.rank)
    if not cone.pointed:
        raise ValidationError("the generators span a cone containing a line; a weight monoid is pointed")
    keep = list(range(len(seen)))
    for i in range(len(seen)):
        rest = [coords[k] for k in keep if k != i]
        if rest and monoid_decomposition(rest, coords[i], cone.facets) is not None:
            keep.remove(i)
    return [seen[k] for k in keep]


# --------------------------------------------------------------------------
# the report


@dataclass(frozen=True)
class AnalyzeOptions:
    assume_saturated: bool = False
    check_g_saturated: bool = True


@dataclass(frozen=True)
class ModuliReport:
    group: GroupSpec
    input_generators: tuple[Weight, ...]
    generators: tuple[Weight, ...]  # indecomposable elements E
    saturated: Optional[bool]  # None when assumed rather than checked
    g_saturated: bool
    free: bool
    pi_p: tuple[int, ...]
    lattice_basis: tuple[Weight, ...]
    K1: tuple[Functional, ...]
    sigma_gamma: tuple[Compatibility, ...]
    distinguished: tuple[bool, ...]
    sigma_bar_gamma: tuple[Weight, ...]
    graph: AdmissibilityGraph
    components: tuple[Component, ...]
    dev: tuple[int, ...]
    dev_witnesses: tuple[DeviantWitness, ...]
    phi: tuple[Weight, ...]
    phi_overlap: tuple[int, ...]
    notes: tuple[str, ...] = field(default=())
    context: Optional[GammaContext] = field(default=None, compare=False, repr=False)

    @property
    def irreducible(self) -> bool:
        return len(self.components) == 1

    @property
    def max_component_dimension(self) -> int:
        return max(c.dimension for c in self.components)

    @property
    def tangent_dimension(self) -> int:
        return len(self.phi)

    @property
    def is_affine_space(self) -> Optional[bool]:
        """True/False when licensed by the theory, None when undetermined."""
        if not self.irreducible:
            return False
        if not self.dev:
            return True
        if not self.sigma_gamma:
            return False  # a non-reduced point
        return None

    @property
    def nonreduced_point(self) -> bool:
        return not self.sigma_gamma and bool(self.dev)


def _validate(rs: RootSystem, gens: Sequence[Sequence[int]]) -> list[Weight]:
    out = []
    for g in gens:
        try:
            w = tuple(int(x) for x in g)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"generator {g!r} is not an integer vector") from exc
        if any(w[i] != x for i, x in enumerate(g)):
            raise ValidationError(f"generator {g!r} is not an integer vector")
        if len(w) != rs.n_weights:
            raise ValidationError(f"generator {w} has {len(w)} entries; {rs.spec} needs {rs.n_weights}")
        if not rs.is_dominant(w):
            raise ValidationError(f"generator {w} is not dominant")
        out.append(w)
    return out


def analyze(spec: GroupSpec, gens: Sequence[Sequence[int]], options: AnalyzeOptions = AnalyzeOptions()) -> ModuliReport:
    rs = rootsys.build(spec)
    given = _validate(rs, gens)
    lattice = LatticeBasis.from_generators(given, rs.n_weights)
    E = indecomposables(given, lattice)
    saturated: Optional[bool] = None
    if not options.assume_saturated:
        try:
            witness = saturation_witness(E, lattice)
        except NotPointedError as exc:  # pragma: no cover - caught by indecomposables
            raise ValidationError(str(exc)) from exc
        if witness is not None:
            raise SaturationError(f"the monoid is not saturated: {witness} is missing", witness)
        saturated = True

    ctx = GammaContext.build(rs, E)
    sg = sigma_gamma(ctx)
    dist = tuple(gamma_distinguished(ctx, w.root, w) for w in sg)
    sbar = tuple(overline_sigma(ctx, w.root, w) for w in sg)
    graph = admissibility_graph(ctx, sg)
    comps = maximal_admissible_sets(graph, sbar)
    witnesses = [w for w in (deviant_witness(ctx, a) for a in range(rs.n_simple)) if w is not None]
    dev = [w.alpha for w in witnesses]
    phi, overlap = tangent_weights(ctx, sg, dev)
    notes = []
    if overlap:
        notes.append("deviant roots already in overline Sigma(Gamma): " + ", ".join(f"a{a + 1}" for a in overlap))
    free = len(E) == lattice.rank
    gsat = g_saturated(ctx)

    report = ModuliReport(
        group=spec,
        input_generators=tuple(given),
        generators=tuple(E),
        saturated=saturated,
        g_saturated=gsat,
        free=free,
        pi_p=tuple(sorted(ctx.pi_p)),
        lattice_basis=lattice.basis,
        K1=ctx.K1,
        sigma_gamma=tuple(sg),
        distinguished=dist,
        sigma_bar_gamma=sbar,
        graph=graph,
        components=tuple(comps),
        dev=tuple(dev),
        dev_witnesses=tuple(witnesses),
        phi=tuple(phi),
        phi_overlap=tuple(overlap),
        notes=tuple(notes),
        context=ctx,
    )
    _post_checks(report, options)
    return report


def _post_checks(report: ModuliReport, options: AnalyzeOptions) -> None:
    def fail(msg: str) -> None:
        raise InternalError(msg)

    if report.irreducible != report.graph.complete:
        fail("irreducibility disagrees with completeness of the admissibility graph")
    covered = {i for c in report.components for i in c.roots}
    if covered != set(range(len(report.sigma_gamma))):
        fail("some root of Sigma(Gamma) lies in no component")
    for c in report.components:
        if len(set(c.root_monoid_generators)) != len(c.root_monoid_generators):
            fail(f"component {c.roots} has repeated root monoid generators")
    if report.tangent_dimension < report.max_component_dimension:
        fail("tangent dimension is smaller than a component dimension")
    if report.free and report.dev:
        fail("a free monoid has deviant roots")
    if options.check_g_saturated and report.g_saturated and (not report.irreducible or report.dev):
        fail("a G-saturated monoid must give an irreducible moduli scheme without deviant roots")
