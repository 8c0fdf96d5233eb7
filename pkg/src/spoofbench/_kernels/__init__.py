"""Hot per-pixel kernels with a compiled core and a pure-numpy fallback.

The compiled extension (``_native``, Cython) is preferred when importable;
otherwise the numpy reference implementation is used. Both backends compute
bit-identical results (integer ops for thinning, FMA-free float64 for the
bilinear warp). Set ``SPOOFBENCH_BACKEND=python`` to force the fallback.
"""

import os

from . import _reference

BACKEND = "python"
_native = None

if os.environ.get("SPOOFBENCH_BACKEND", "").lower() not in ("python", "reference"):
    try:
        from . import _native  # type: ignore[no-redef]

        BACKEND = "native"
    except ImportError:
        _native = None

if _native is not None:
    warp_patch = _native.warp_patch
    thin = _native.thin
else:
    warp_patch = _reference.warp_patch
    thin = _reference.thin


def backends():
    """Importable backends, keyed by name. Used by tests and benchmarks."""
    found = {"python": _reference}
    if _native is not None:
        found["native"] = _native
    return found
