"""Backend choice for the dense factor-search kernels.

The compiled extension covers the common case where every intermediate fits
in a signed 64-bit integer; larger inputs, or builds without the extension,
run on the pure-Python twin with arbitrary precision.  The choice happens
per call: a cheap bound check routes obviously big inputs straight to pure
Python, and overflow-checked arithmetic in the extension catches the rest,
triggering a rerun on the pure side.

Set BIGRAPHPOLY_PURE=1 in the environment to ignore the extension entirely.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import _kernel_py as _py

try:
    from . import _kernel as _cy
except ImportError:  # built without the extension
    _cy = None

if os.environ.get("BIGRAPHPOLY_PURE", "") not in ("", "0"):
    _cy = None

#: Backend picked at import time: "compiled" or "python".
BACKEND = "compiled" if _cy is not None else "python"

_active = BACKEND

# Stay comfortably inside signed 64-bit during the checked arithmetic.
_BOUND = 1 << 56


def current_backend() -> str:
    return _active


@contextmanager
def backend_override(name: str):
    """Force a backend inside the block; for benchmarks and parity tests."""
    global _active
    if name not in ("python", "compiled"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and _cy is None:
        raise RuntimeError("compiled kernel is not available")
    prev = _active
    _active = name
    try:
        yield
    finally:
        _active = prev


def _maxabs(xs):
    return max((abs(x) for x in xs), default=0)


def _compiled_ok(*bounds):
    if _active != "compiled":
        return False
    return all(b < _BOUND for b in bounds)


def mul_dense(a, b):
    if _compiled_ok(_maxabs(a) * _maxabs(b) * min(len(a), len(b), 1 << 16)):
        try:
            return _cy.mul_dense(a, b)
        except OverflowError:
            pass
    return _py.mul_dense(a, b)


def eval_dense(coeffs, t):
    est_bits = max(len(coeffs) - 1, 0) * max(int(t).bit_length(), 1)
    if _compiled_ok(_maxabs(coeffs), abs(t)) and est_bits < 56:
        try:
            return _cy.eval_dense(coeffs, t)
        except OverflowError:
            pass
    return _py.eval_dense(coeffs, t)


def div_exact_dense(p, q):
    if _compiled_ok(_maxabs(p), _maxabs(q)):
        try:
            return _cy.div_exact_dense(p, q)
        except OverflowError:
            pass
    return _py.div_exact_dense(p, q)


def kron_degree_search(core, d, divisor_lists, lag, scale, budget):
    # Largest interpolation sum that any tuple can produce.
    ubound = sum(
        _maxabs(divs) * _maxabs(row) for divs, row in zip(divisor_lists, lag)
    )
    if _compiled_ok(_maxabs(core), ubound, scale, budget):
        try:
            return _cy.kron_degree_search(core, d, divisor_lists, lag, scale, budget)
        except OverflowError:
            pass
    return _py.kron_degree_search(core, d, divisor_lists, lag, scale, budget)
