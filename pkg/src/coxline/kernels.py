"""Backend selection for the hot kernels.

The compiled extension is used when importable; set ``COXLINE_PURE=1`` to
force the pure fallback. ``BACKEND`` names the active one.
"""

import os

from . import _pure

compiled = None
if os.environ.get("COXLINE_PURE") != "1":
    try:
        from . import _kernels as compiled
    except ImportError:  # extension not built
        compiled = None

_impl = compiled if compiled is not None else _pure
BACKEND = "cython" if compiled is not None else "python"

enumerate_cliques = _impl.enumerate_cliques
slicer_masks = _impl.slicer_masks
slicer_tally = _impl.slicer_tally
nearest_codeword = _impl.nearest_codeword

__all__ = [
    "BACKEND",
    "compiled",
    "enumerate_cliques",
    "nearest_codeword",
    "slicer_masks",
    "slicer_tally",
]
