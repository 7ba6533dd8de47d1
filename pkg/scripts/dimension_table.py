"""Tabulate free-algebra component dimensions for the built-in operads.

Each row lists the dimension of the weight-n component of the free
algebra on one generator, computed by exact linear algebra. Weight 4
for the sixteen-operation presentations takes a few seconds.
"""

import argparse
import sys

from quadops.catalog import BUILTIN_NAMES, builtin
from quadops.expansion import component_dim


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--max",
        type=int,
        default=3,
        dest="max_weight",
        help="largest weight to tabulate (default 3)",
    )
    parser.add_argument(
        "names",
        nargs="*",
        default=list(BUILTIN_NAMES),
        help="operads to include (default: all built-ins)",
    )
    ns = parser.parse_args(argv)
    if ns.max_weight < 1:
        parser.error("--max must be at least 1")

    weights = list(range(1, ns.max_weight + 1))
    rows = []
    for name in ns.names:
        p = builtin(name)
        rows.append((name, [component_dim(p, n) for n in weights]))

    name_width = max(len(name) for name, _ in rows)
    header = " ".join(f"n={n:<6d}" for n in weights)
    print(f"{'operad':<{name_width}} {header}")
    for name, dims in rows:
        cells = " ".join(f"{d:<8d}" for d in dims)
        print(f"{name:<{name_width}} {cells}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
