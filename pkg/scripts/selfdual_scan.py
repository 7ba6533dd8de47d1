"""Scan extra-relation coefficients for self-dual sixteen-operation quotients.

The two distinguished sixteen-operation presentations arise from the
square product of the three-operation operads by adjoining one extra
relation in each of two directions. This script sweeps integer
coefficient pairs (a, b) on those directions over a square grid and
reports which pairs give a quotient that is isomorphic to its own dual
by a signed relabeling. Over every grid tried so far the passing set is
exactly the pairs with a = +/-b and a nonzero, matching the sign choices
that produce the two built-ins.
"""

import argparse
import sys

from quadops.verify import scan_grid, sixteenth_relation_scan


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--radius",
        type=int,
        default=2,
        help="half-width of the coefficient grid (default 2)",
    )
    ns = parser.parse_args(argv)
    if ns.radius < 1:
        parser.error("--radius must be at least 1")

    grid = scan_grid(ns.radius)
    passing = sixteenth_relation_scan(grid)
    expected = frozenset(
        (a, b) for (a, b) in grid if a != 0 and abs(a) == abs(b)
    )

    print(f"grid: {len(grid)} pairs, radius {ns.radius}")
    print(f"self-dual quotients: {len(passing)}")
    for pair in sorted(passing):
        print(f"  a={pair[0]:+d}  b={pair[1]:+d}")
    if passing == expected:
        print("pattern: exactly the pairs with a = +/-b, a nonzero")
        return 0
    print("pattern BROKEN: passing set differs from {a = +/-b, a nonzero}")
    print(f"  unexpected: {sorted(passing - expected)}")
    print(f"  missing:    {sorted(expected - passing)}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
