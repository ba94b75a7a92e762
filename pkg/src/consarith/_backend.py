"""Pick the kernel implementation at import time.

The compiled extension is used when it imports; otherwise, or when
``CONSARITH_PURE_PYTHON=1`` is set, the pure-Python kernels are used.
"""

from __future__ import annotations

import os
from types import ModuleType

from consarith import _pykernels


def _select() -> ModuleType:
    if os.environ.get("CONSARITH_PURE_PYTHON") == "1":
        return _pykernels
    try:
        from consarith import _ckernels
    except ImportError:
        return _pykernels
    return _ckernels


kernels: ModuleType = _select()
BACKEND: str = kernels.BACKEND


def available_backends() -> dict[str, ModuleType]:
    """All importable kernel modules keyed by backend name."""
    found = {"python": _pykernels}
    try:
        from consarith import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
