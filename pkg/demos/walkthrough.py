"""A guided tour of the invariants on small weight monoids.

Run with ``python3 demos/walkthrough.py``.  Each case prints the spherical
roots of the monoid, their color pairs, why a pair of roots is or is not
admissible, the irreducible components, and the deviant roots.
"""

from sphmoduli import GroupSpec, analyze

CASES = [
    (
        "SL3 with generators 3w1 and w1+w2",
        "A2",
        [(3, 0), (1, 1)],
        "Both a1 and a1+a2 are compatible, but the color pair of a1 takes the value 1 on a1+a2, "
        "so the two roots never occur together: two components, each a line.",
    ),
    (
        "SL2xSL2 with generators 2w1 and 2w1+2w2",
        "A1xA1",
        [(2, 0), (2, 2)],
        "The color pair of a1 has the same value on a2 as the colors of a2 do, "
        "but it is not one of those colors, so again two components.",
    ),
    (
        "SL2xSL3 with generators 2w1 and 2w1+w2+w3",
        "A1xA2",
        [(2, 0, 0), (2, 1, 1)],
        "With the coefficient l = 1 on w1 the pair is inadmissible; compare with the next case.",
    ),
    (
        "SL2xSL3 with generators 2w1 and w2+w3",
        "A1xA2",
        [(2, 0, 0), (0, 1, 1)],
        "With l = 0 the obstruction vanishes and the scheme is irreducible of dimension 2.",
    ),
    (
        "SL4 monoid with Dev = {a1}",
        "A3",
        [(0, 1, 1), (2, 2, 2), (2, 2, 3), (4, 4, 7)],
        "No spherical root is compatible, yet a1 is deviant: the tangent space at the "
        "distinguished point is one-dimensional while the scheme is a point, so the point is non-reduced.",
    ),
]


def show(title, group, gens, comment):
    print("=" * len(title))
    print(title)
    print("=" * len(title))
    r = analyze(GroupSpec.parse(group), gens)
    ctx = r.context
    names = [w.root.render() for w in r.sigma_gamma]
    print(f"lattice rank {len(r.lattice_basis)}, free monoid: {r.free}, Pi^p = {[i + 1 for i in r.pi_p]}")
    print(f"Sigma(Gamma) = {names}")
    for w in r.sigma_gamma:
        if w.color_pair is not None:
            pair = [ctx.on_generators(p) for p in w.color_pair.elements]
            pair = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in pair)
            print(f"  colors of {w.root.render()} on the generators: {pair}")
    for o in r.graph.obstructions:
        rho = ", ".join(str(x) for x in ctx.on_generators(o.rho))
        print(f"  {names[o.simple]} and {names[o.other]} are not admissible: <({rho}), {names[o.other]}> = {o.value}")
    for c in r.components:
        print(f"  component {[names[i] for i in c.roots]} of dimension {c.dimension}")
    print(f"Dev = {[f'a{a + 1}' for a in r.dev]}, tangent dimension {r.tangent_dimension}")
    print(f"irreducible: {r.irreducible}, affine space: {r.is_affine_space}, non-reduced point: {r.nonreduced_point}")
    print(comment)
    print()


if __name__ == "__main__":
    for case in CASES:
        show(*case)
