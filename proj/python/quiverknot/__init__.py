"""Quandle coloring quivers and their polynomial invariants."""

import os as _os

_here = _os.path.dirname(__file__)
if _os.path.isdir(_os.path.join(_here, "data")):
    _os.environ.setdefault("QUIVERKNOT_DATA", _os.path.join(_here, "data"))

from ._core import *  # noqa: E402,F401,F403
from ._core import QuiverknotError, CapExceeded  # noqa: E402,F401

__version__ = "0.1.0"
