from fractions import Fraction

import pytest

from sphmoduli import rootsys
from sphmoduli.rootsys import GroupSpec, build
from sphmoduli.spherical import (
    GammaContext,
    compatible_with_lattice,
    compatible_with_monoid,
    enumerate_sigma_G,
    gamma_distinguished,
    overline_sigma,
    pi_p_of_monoid,
    render_coroot_expression,
    render_root_combination,
    sigma_gamma,
)
from sphmoduli.zlinalg import LatticeBasis
from table_data import expected_full_support, simple_types


def roots_of(name):
    return enumerate_sigma_G(build(GroupSpec.parse(name)))


def full_support(rs, roots):
    return {
        (r.table_row, r.halved, r.coefficients, frozenset(i + 1 for i in r.pi_pp))
        for r in roots
        if len(r.support) == rs.n_simple
    }


@pytest.mark.parametrize("series,n", list(simple_types()))
def test_full_support_roots_match_table(series, n):
    rs = build(GroupSpec(((series, n),)))
    assert full_support(rs, enumerate_sigma_G(rs)) == expected_full_support(series, n)


def test_small_counts():
    assert len(roots_of("A1")) == 2
    assert len(roots_of("A1xA1")) == 6
    assert len(roots_of("A2")) == 5
    assert {r.table_row for r in roots_of("G2")} == {1, 2, 12, 13, 14}


def test_cross_row_is_not_spherically_closed():
    (row13,) = [r for r in roots_of("G2") if r.table_row == 13]
    assert not row13.spherically_closed and row13.in_root_lattice
    halves = [r for r in roots_of("A1xA1") if r.halved]
    assert len(halves) == 1 and halves[0].sigma == (1, 1) and not halves[0].spherically_closed


def test_roots_are_sums_of_simple_roots_in_weight_coordinates():
    rs = build(GroupSpec.parse("B3xA1+T1"))
    for r in enumerate_sigma_G(rs):
        assert rs.from_root_coords(r.coefficients) == r.sigma
        assert r.sigma[-1] == 0


def test_support_in_other_factor_and_orthogonal_pairs():
    rs = build(GroupSpec.parse("A2xA1"))
    pairs = [r for r in enumerate_sigma_G(rs) if r.table_row == 3]
    assert sorted(sorted(r.support) for r in pairs if not r.halved) == [[0, 2], [1, 2]]


def test_rendering():
    assert render_root_combination([Fraction(1), Fraction(2), 0]) == "a1+2*a2"
    assert render_root_combination([Fraction(1, 2), 0, Fraction(1, 2)]) == "1/2*a1+1/2*a3"
    assert render_root_combination([0, 0]) == "0"
    assert render_coroot_expression([Fraction(3, 2), Fraction(2), Fraction(-2)], 3) == "3/2*a1^v+2*a2^v-2*a3^v"
    assert render_coroot_expression([Fraction(-1), Fraction(1)], 1) == "-a1^v+t1^*"


# -- compatibility with a lattice -------------------------------------------


def _root(rs, text):
    (r,) = [x for x in enumerate_sigma_G(rs) if x.render() == text]
    return r


def test_lattice_primitivity():
    rs = build(GroupSpec.parse("A1"))
    L = LatticeBasis.from_generators([(2,)], 1)
    assert compatible_with_lattice(rs, _root(rs, "a1"), L)
    assert not compatible_with_lattice(rs, _root(rs, "2*a1"), L)
    L = LatticeBasis.from_generators([(1,)], 1)
    assert not compatible_with_lattice(rs, _root(rs, "a1"), L)


def test_lattice_pi_p_sandwich():
    rs = build(GroupSpec.parse("B2"))
    # Pi^pp = {a2} = Pi^p(Lambda) = Pi^p(2a1+2a2)
    L = LatticeBasis.from_generators([(2, 0)], 2)
    assert compatible_with_lattice(rs, _root(rs, "2*a1+2*a2"), L)
    # Pi^p(Lambda) = {} does not contain Pi^pp = {a2}
    L = LatticeBasis.from_generators([(2, 0), (0, 2)], 2)
    assert not compatible_with_lattice(rs, _root(rs, "2*a1+2*a2"), L)


def test_lattice_a1xa1_rule():
    rs = build(GroupSpec.parse("A1xA1"))
    diag = LatticeBasis.from_generators([(1, 1)], 2)
    assert compatible_with_lattice(rs, _root(rs, "1/2*a1+1/2*a2"), diag)
    skew = LatticeBasis.from_generators([(1, 1), (2, 0)], 2)
    assert not compatible_with_lattice(rs, _root(rs, "1/2*a1+1/2*a2"), skew)
    assert not compatible_with_lattice(rs, _root(rs, "a1+a2"), skew)


def test_lattice_two_alpha_parity():
    rs = build(GroupSpec.parse("A1xA1"))
    # basis (2, 1), (0, 2): every a1-coroot value is even
    even = LatticeBasis.from_generators([(4, 0), (6, 1)], 2)
    assert compatible_with_lattice(rs, _root(rs, "2*a1"), even)
    # basis (1, 1), (0, 4): 2a1 is primitive but the coroot value 1 is odd
    odd = LatticeBasis.from_generators([(4, 0), (1, 1)], 2)
    assert not compatible_with_lattice(rs, _root(rs, "2*a1"), odd)


# -- the monoid ---------------------------------------------------------------


def ctx_of(name, gens):
    return GammaContext.build(build(GroupSpec.parse(name)), gens)


def test_sl3_color_pair():
    ctx = ctx_of("A2", [(3, 0), (1, 1)])
    assert ctx.pi_p == frozenset() == pi_p_of_monoid(ctx)
    sg = sigma_gamma(ctx)
    assert [w.root.render() for w in sg] == ["a1", "a1+a2"]
    pair = sg[0].color_pair
    assert sorted(ctx.on_generators(r) for r in pair.elements) == [(1, 0), (2, 1)]
    assert sg[1].color_pair is None
    # a2 fails the cone conditions: it pairs to -1 with e1
    assert compatible_with_monoid(ctx, _root(ctx.rs, "a2")) is None


def test_color_pair_sums_to_coroot():
    ctx = ctx_of("A3", [(2, 1, 0), (0, 2, 0), (1, 0, 1)])
    for w in sigma_gamma(ctx):
        if w.color_pair is not None:
            a = w.color_pair.alpha
            total = tuple(x + y for x, y in zip(*w.color_pair.elements))
            assert total == tuple(Fraction(x) for x in ctx.iota[a])
            assert w.color_pair.rho_plus <= w.color_pair.rho_minus
            for rho in w.color_pair.elements:
                assert ctx.pair(rho, w.root.sigma) == 1


def test_distinguished_cases():
    # sigma = alpha with both colors equal to half the coroot
    ctx = ctx_of("A1", [(2,)])
    (w,) = sigma_gamma(ctx)
    assert gamma_distinguished(ctx, w.root, w) and overline_sigma(ctx, w.root, w) == (4,)
    # B_n with a2..an in Pi^p
    ctx = ctx_of("B3", [(1, 0, 0)])
    (w,) = sigma_gamma(ctx)
    assert w.root.table_row == 6 and gamma_distinguished(ctx, w.root, w)
    assert overline_sigma(ctx, w.root, w) == (2, 0, 0)
    # the cross-marked row of G2
    ctx = ctx_of("G2", [(1, 0)])
    (w,) = sigma_gamma(ctx)
    assert w.root.table_row == 13 and overline_sigma(ctx, w.root, w) == (2, 0)
    # a halved root doubles without being distinguished
    ctx = ctx_of("A1xA1", [(1, 1)])
    (w,) = sigma_gamma(ctx)
    assert w.root.halved and not gamma_distinguished(ctx, w.root, w)
    assert overline_sigma(ctx, w.root, w) == (2, 2)


def test_simple_root_needs_witness():
    ctx = ctx_of("A1", [(2,)])
    with pytest.raises(ValueError):
        gamma_distinguished(ctx, _root(ctx.rs, "a1"))


def test_coroot_expressions_sl4_nonreduced():
    ctx = ctx_of("A3", [(0, 1, 1), (2, 2, 2), (2, 2, 3), (4, 4, 7)])
    exprs = {render_coroot_expression(ctx.coroot_expression(k), 3) for k in ctx.K1}
    assert exprs == {"3/2*a1^v+2*a2^v-2*a3^v", "-a2^v+a3^v", "-a1^v+a2^v"}
    assert sigma_gamma(ctx) == []
