#!/usr/bin/env python3
"""Print computed homology of squared-cycle cut complexes next to the
conjectured values. Purely observational: nothing is asserted.

Usage: squared_cycle_conjecture.py [max_k]

For each k up to max_k (default 5) the n = k+5 complex is computed and shown
against the conjectured wedge S^3 v (S^4)^beta with
beta = (k-3)(k-2)(k+5)/6.
"""

import sys

from cutcomplex.cli import main

if __name__ == "__main__":
    max_k = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    for k in range(3, max_k + 1):
        main(["experiment", "squared-cycle", "--k", str(k), "--n", str(k + 5)])
        print()
