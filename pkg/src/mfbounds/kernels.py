"""Selects the compiled kernels when available, else the pure-Python ones.

Set ``MFBOUNDS_PURE_PYTHON=1`` to force the fallback. ``BACKEND`` names the
active implementation.
"""
import os

from mfbounds import _pure

_compiled = None
if not os.environ.get("MFBOUNDS_PURE_PYTHON"):
    try:
        from mfbounds import _speedups as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def _dispatch(name):
    pure = getattr(_pure, name)
    if _compiled is None:
        return pure
    fast = getattr(_compiled, name)

    def call(*args):
        try:
            return fast(*args)
        except OverflowError:
            return pure(*args)

    call.__name__ = name
    call.__doc__ = pure.__doc__
    return call


all_faces = _dispatch("all_faces")
face_counts = _dispatch("face_counts")
bareiss_rank = _dispatch("bareiss_rank")
scan_complexes = _dispatch("scan_complexes")
scan_face_numbers = _dispatch("scan_face_numbers")


def implementations():
    """Map backend name to module, for benchmarks and cross-checking tests."""
    impls = {"python": _pure}
    if _compiled is not None:
        impls["cython"] = _compiled
    return impls
