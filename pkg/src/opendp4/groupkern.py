"""Kernel dispatch: compiled census kernels with a numpy fallback.

The census work (subgroup closures, conjugation canonicalization,
normalizers) runs through four small kernels.  When the optional Cython
extension was built it is used; otherwise the numpy implementation with
identical semantics takes over.  BACKEND records which one is active.
"""

try:
    from . import _groupkern as _impl
except ImportError:  # pragma: no cover - depends on build environment
    from . import _groupkern_py as _impl

BACKEND = _impl.BACKEND
closure = _impl.closure
canonical_key = _impl.canonical_key
normalizer = _impl.normalizer
conj_min_reps = _impl.conj_min_reps
