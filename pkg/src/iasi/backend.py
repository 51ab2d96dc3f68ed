"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the pure-Python
kernel is a drop-in replacement with identical scan order and results, only
slower. Set ``IASI_BACKEND=python`` or ``IASI_BACKEND=compiled`` to force a
choice (forcing ``compiled`` raises if the extension is unavailable).
"""

from __future__ import annotations

import os

from . import _pykernel

RUN_FIRST = _pykernel.RUN_FIRST
RUN_COUNT = _pykernel.RUN_COUNT
RUN_COLLECT = _pykernel.RUN_COLLECT
FINAL_NONE = _pykernel.FINAL_NONE
FINAL_ALL = _pykernel.FINAL_ALL
FINAL_EXISTS_FAIL = _pykernel.FINAL_EXISTS_FAIL
FINAL_K_NOT_ALL_EQUAL = _pykernel.FINAL_K_NOT_ALL_EQUAL
FINAL_K_MIXED = _pykernel.FINAL_K_MIXED


def _load() -> tuple[str, object]:
    choice = os.environ.get("IASI_BACKEND", "").strip().lower()
    if choice not in ("", "compiled", "python"):
        raise RuntimeError(f"IASI_BACKEND must be 'compiled' or 'python', got {choice!r}")
    if choice == "python":
        return "python", _pykernel.enumerate_labelings
    try:
        from . import _kernel
    except ImportError:
        if choice == "compiled":
            raise RuntimeError("IASI_BACKEND=compiled but the extension is not built")
        return "python", _pykernel.enumerate_labelings
    return "compiled", _kernel.enumerate_labelings


BACKEND, enumerate_labelings = _load()
