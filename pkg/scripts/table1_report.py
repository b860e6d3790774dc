#!/usr/bin/env python3
"""Run the family corpus end to end and print one verdict line per row.

Exit status 1 if any row disagrees with its closed-form prediction.
"""

import sys

from cutcomplex.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", "table1-small"] + sys.argv[1:]))
