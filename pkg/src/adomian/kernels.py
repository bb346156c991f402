"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Set ``ADOMIAN_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("ADOMIAN_PURE_PYTHON", "") not in ("", "0"):
    from ._kernels_py import trunc_convolve, weighted_multisets

    BACKEND = "python"
else:
    try:
        from ._ckernels import trunc_convolve, weighted_multisets

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import trunc_convolve, weighted_multisets

        BACKEND = "python"

__all__ = ["BACKEND", "trunc_convolve", "weighted_multisets"]
