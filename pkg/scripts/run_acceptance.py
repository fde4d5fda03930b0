#!/usr/bin/env python3
"""Print one PASS/FAIL line per acceptance criterion; exit 1 if any fails."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from test_acceptance import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
