"""
Console entry point for quaddom.

Run from the project root:
    python run_cli.py family --kind 1 --figure

or, once installed, through the ``quaddom`` script.
"""

import os
import sys

# Ensure the project root is on sys.path so `quaddom` is importable.
_ROOT = os.path.dirname(os.path.abspath(__file__))
if _ROOT not in sys.path:
    sys.path.insert(0, _ROOT)

from quaddom.cli.main import main as _main  # noqa: E402  (needs the path set up first)


def main() -> int:
    """Console-script entry point (``quaddom``)."""
    return _main()


if __name__ == "__main__":
    sys.exit(main())
