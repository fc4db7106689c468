"""Kernel backend selection.

The compiled kernel is used when importable; set ``HODGELIM_BACKEND=python``
or ``HODGELIM_BACKEND=cython`` to force a choice (forcing ``cython`` raises
if the extension is missing, so benchmarks cannot silently compare a backend
against itself).
"""
import os

_requested = os.environ.get("HODGELIM_BACKEND", "").strip().lower()

if _requested == "python":
    from . import _kernels_py as _impl
elif _requested == "cython":
    from . import _kernels_cy as _impl  # type: ignore[attr-defined]
elif _requested == "":
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl
else:
    raise RuntimeError(f"unknown HODGELIM_BACKEND={_requested!r}")

rref = _impl.rref
matmul = _impl.matmul
BACKEND_NAME = _impl.BACKEND_NAME
