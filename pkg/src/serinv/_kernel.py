"""Kernel backend selection: compiled extension when available, else pure Python.

Set ``SERINV_PURE=1`` to force the pure-Python kernel.  ``use()`` switches
backends at runtime; it exists for the benchmark script and the test
suite and is not thread-safe.
"""

from __future__ import annotations

import os

from . import _kernel_py

_backends = {"python": _kernel_py}
try:
    from . import _kernel_cy  # type: ignore[attr-defined]

    _backends["compiled"] = _kernel_cy
except ImportError:
    _kernel_cy = None


def _default_name() -> str:
    if os.environ.get("SERINV_PURE"):
        return "python"
    return "compiled" if "compiled" in _backends else "python"


mul_terms = None
divexact_terms = None
_active_name = None


def use(name: str) -> str:
    """Activate a kernel backend ("python", "compiled" or "auto")."""
    global mul_terms, divexact_terms, _active_name
    if name == "auto":
        name = _default_name()
    if name not in _backends:
        raise ValueError(f"kernel backend {name!r} not available")
    module = _backends[name]
    mul_terms = module.mul_terms
    divexact_terms = module.divexact_terms
    _active_name = name
    return name


def backend_name() -> str:
    """Name of the active kernel backend."""
    return _active_name


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_backends))


use("auto")
