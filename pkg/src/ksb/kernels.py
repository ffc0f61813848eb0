"""Kernel dispatch: the compiled extension when available, the pure-Python
fallback otherwise.

Set ``KSB_PURE_PYTHON=1`` to force the fallback (used by tests and the
benchmark for side-by-side comparison).
"""

from __future__ import annotations

import os

from . import _kernels_py as python_impl

cython_impl = None
if os.environ.get("KSB_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as cython_impl  # type: ignore[no-redef]
    except ImportError:
        cython_impl = None

impl = cython_impl if cython_impl is not None else python_impl
BACKEND = "cython" if cython_impl is not None else "python"

max_clique = impl.max_clique
gf2_rank = impl.gf2_rank
fourier_diag_check = impl.fourier_diag_check
distance_adjacency = impl.distance_adjacency


def available_backends() -> dict[str, object]:
    """Name -> module for every importable backend (for tests/benchmarks)."""
    out: dict[str, object] = {"python": python_impl}
    if cython_impl is not None:
        out["cython"] = cython_impl
    return out
