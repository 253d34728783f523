"""Backend selection for the right-hand-side sweep.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over. Set ``ILSCONN_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from ilsconn import _fallback

try:
    from ilsconn import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS: dict[str, ModuleType] = {"python": _fallback}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

if _compiled is not None and not os.environ.get("ILSCONN_PURE_PYTHON"):
    DEFAULT_BACKEND = "cython"
else:
    DEFAULT_BACKEND = "python"


def get_backend(name: str | None = None) -> ModuleType:
    name = name or DEFAULT_BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
