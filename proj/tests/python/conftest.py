import os
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parents[2]

# Allow running against an in-tree build without installing the wheel.
_pkg = os.environ.get("FHO_PYTHON_PKG")
if _pkg:
    sys.path.insert(0, _pkg)
