"""Hot-loop kernels with a compiled core and a pure-Python fallback.

Both backends draw from the same PCG64 stream in the same order, so for a
given seed they produce bit-identical output; the compiled one is just fast.
Selection happens at import time and can be forced with the environment
variable ``CASCADELAB_BACKEND=c`` or ``CASCADELAB_BACKEND=python``.
"""

from __future__ import annotations

import os

from cascadelab.kernels import pure as _pure

_forced = os.environ.get("CASCADELAB_BACKEND", "").strip().lower()
if _forced not in ("", "c", "python"):
    raise RuntimeError(f"CASCADELAB_BACKEND must be 'c' or 'python', got {_forced!r}")

_impl = None
if _forced != "python":
    try:
        from cascadelab.kernels import _ckern as _impl  # type: ignore[no-redef]
    except ImportError:
        if _forced == "c":
            raise
        _impl = None

if _impl is None:
    _impl = _pure
    BACKEND = "python"
else:
    BACKEND = "c"

ba_edge_list = _impl.ba_edge_list
cascade_events = _impl.cascade_events


def available_backends() -> dict[str, object]:
    """Importable kernel modules keyed by backend name (for tests/benchmarks)."""
    backends: dict[str, object] = {"python": _pure}
    try:
        from cascadelab.kernels import _ckern

        backends["c"] = _ckern
    except ImportError:
        pass
    return backends
