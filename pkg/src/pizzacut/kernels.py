"""Backend selection for the numeric hot paths.

The numba kernels are used when numba imports and the environment variable
``PIZZACUT_DISABLE_NUMBA`` is unset (or ``0``); otherwise the numpy
vectorized kernels are bound under the same names.
"""
import os

from . import _vectorized

_flag = os.environ.get("PIZZACUT_DISABLE_NUMBA", "").strip().lower()
_disabled = _flag not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError("numba disabled by PIZZACUT_DISABLE_NUMBA")
    from . import _loops as _impl
    HAS_NUMBA = True
except ImportError:
    _impl = _vectorized
    HAS_NUMBA = False

BACKEND = "numba" if HAS_NUMBA else "numpy"

cut_area = _impl.cut_area
cut_areas = _impl.cut_areas
section_offset = _impl.section_offset
section_profile = _impl.section_profile
arc_cap_area = _impl.arc_cap_area

__all__ = [
    "BACKEND",
    "HAS_NUMBA",
    "arc_cap_area",
    "cut_area",
    "cut_areas",
    "section_offset",
    "section_profile",
]
