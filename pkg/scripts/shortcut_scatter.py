#!/usr/bin/env python3
"""Write the cyclic difference scatters as SVG files, one per level.

The plots reproduce the fractal-looking point clouds of the last-column
difference sequence; around d = 6 the self-similar bands become obvious.
"""

import argparse
from pathlib import Path

from ratlab import fractal


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dmin", type=int, default=2)
    parser.add_argument("--dmax", type=int, default=6)
    parser.add_argument("--out", default="scatter_plots")
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for d in range(args.dmin, args.dmax + 1):
        path = out / f"diff_scatter_d{d}.svg"
        path.write_text(fractal.emit_scatter(d, "svg"))
        print(f"wrote {path} ({3 ** (d - 1)} points)")


if __name__ == "__main__":
    main()
