"""Selects the reduction kernel at import time.

The compiled ``_ckernel`` is used when it was built; ``LAMWORK_PURE=1``
forces the pure-Python kernel.
"""

import os

from . import _pykernel

BACKEND = "python"
kernel = _pykernel

if os.environ.get("LAMWORK_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel
    except ImportError:
        pass
    else:
        kernel = _ckernel
        BACKEND = "cython"

LAM = _pykernel.LAM
APP = _pykernel.APP
FREE_BASE = _pykernel.FREE_BASE
REACHED = _pykernel.REACHED
FUEL_EXHAUSTED = _pykernel.FUEL_EXHAUSTED
SPACE_EXHAUSTED = _pykernel.SPACE_EXHAUSTED
