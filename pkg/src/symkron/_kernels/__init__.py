"""Kernel backend selection for the hot sparse-series loops.

Two interchangeable implementations exist: ``_pure`` (plain Python, always
available) and ``_speedups`` (compiled Cython extension, built by setup.py
when a compiler is present).  Both expose the same functions over the same
data: term maps are dicts keyed by weakly decreasing integer tuples with
``fractions.Fraction`` values, and results are exactly equal between the
backends.

The compiled backend is preferred when importable.  Set the environment
variable SYMKRON_KERNEL to ``python`` or ``c`` to force a choice at import
time; ``set_backend`` switches at runtime (the benchmark uses this).
"""

import os

from symkron._kernels import _pure

try:
    from symkron._kernels import _speedups
except ImportError:
    _speedups = None

_BACKENDS = {"python": _pure}
if _speedups is not None:
    _BACKENDS["c"] = _speedups

_impl = _speedups if _speedups is not None else _pure


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def backend_name() -> str:
    """Name of the active backend: "c" or "python"."""
    return "c" if _impl is _speedups else "python"


def set_backend(name: str) -> None:
    global _impl
    try:
        _impl = _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown or unavailable kernel backend {name!r}; "
            f"available: {', '.join(available_backends())}"
        ) from None


_forced = os.environ.get("SYMKRON_KERNEL")
if _forced:
    set_backend(_forced)


def mul_terms(a: dict, b: dict, limit: int) -> dict:
    """Sparse product of two multiplicative-basis term maps, truncated so
    that no result key has weight above ``limit``."""
    return _impl.mul_terms(a, b, limit)


def kron_terms(a: dict, b: dict) -> dict:
    """Diagonal (Kronecker) product: shared keys only, weighted by z."""
    return _impl.kron_terms(a, b)


def scalar_terms(a: dict, b: dict):
    """z-weighted scalar product of two term maps, as a Fraction."""
    return _impl.scalar_terms(a, b)


def zstat(parts) -> int:
    """Backend z statistic (same value as partitions.z)."""
    return _impl.zstat(parts)
