"""Backend selection for the hot loops.

The compiled extension is used when importable; set ``TRIKERN_BACKEND=python``
to force the pure-Python fallback, or call :func:`select` at runtime.
"""
import os

from trikern import _pykernels

NAMES = ("build_csr", "degeneracy_order", "degeneracy_value", "nwt_scan", "tc_scan", "greedy_color")

try:
    from trikern import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKEND = "python"


def select(name: str) -> None:
    """Rebind every kernel to the ``"cython"`` or ``"python"`` implementation."""
    global BACKEND
    if name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled extension trikern._ckernels is not built")
        impl = _ckernels
    elif name == "python":
        impl = _pykernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    globals().update({k: getattr(impl, k) for k in NAMES})
    BACKEND = name


select("python" if _ckernels is None or os.environ.get("TRIKERN_BACKEND", "").lower() == "python"
       else "cython")
