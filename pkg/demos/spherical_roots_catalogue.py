"""List the spherical roots of a few reductive groups.

Run with ``python3 demos/spherical_roots_catalogue.py [GROUP ...]``.
Halved roots are marked with ``/2``; Pi^pp is the set of simple roots that
must lie in Pi^p for the root to be compatible with a monoid.
"""

import sys

from sphmoduli import GroupSpec, build, enumerate_sigma_G


def catalogue(group: str) -> None:
    rs = build(GroupSpec.parse(group))
    roots = enumerate_sigma_G(rs)
    print(f"{group}: {len(roots)} spherical roots")
    for r in roots:
        mark = "/2" if r.halved else "  "
        pp = ",".join(f"a{i + 1}" for i in r.pi_pp) or "-"
        print(f"  {r.render():28s} row {r.table_row:2d}{mark}  Pi^pp = {pp}")
    print()


if __name__ == "__main__":
    for g in sys.argv[1:] or ["A1xA1", "A3", "B3", "C3", "D4", "G2", "F4"]:
        catalogue(g)
