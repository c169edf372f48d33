"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python twin
is the fallback and is always used for extended-precision escalation.
Set TUBELAB_PURE_PYTHON=1 to force the fallback for hardware tracking too.
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("TUBELAB_PURE_PYTHON") == "1":
    impl = _kernel_py
else:
    try:
        from . import _kernel as impl  # type: ignore[no-redef]
    except ImportError:
        impl = _kernel_py

pure = _kernel_py

BACKEND: str = impl.BACKEND

OK = _kernel_py.OK
STEP_UNDERFLOW = _kernel_py.STEP_UNDERFLOW
LEAD_SMALL = _kernel_py.LEAD_SMALL
