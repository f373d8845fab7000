"""Backend selection for the sparse elimination kernel.

The compiled kernel is used when it imports; set ``PROP_REWRITER_PURE=1``
to force the pure-Python one.  Rows whose entries outgrow 63 bits are
handed to the Python kernel transparently.
"""
from __future__ import annotations

import os

from . import _pyelim

try:
    if os.environ.get("PROP_REWRITER_PURE"):
        raise ImportError
    from . import _celim
except ImportError:
    _celim = None

DEFAULT_BACKEND = "cython" if _celim is not None else "python"


class Echelon:
    """Fraction-free echelon form; see :class:`prop_rewriter._pyelim.Echelon`."""

    def __init__(self, ncols: int, backend: str | None = None):
        backend = backend or DEFAULT_BACKEND
        if backend == "cython" and _celim is None:
            raise ValueError("the compiled kernel is not available")
        if backend not in ("cython", "python"):
            raise ValueError(f"unknown backend {backend!r}")
        self.ncols = ncols
        self._rows: list[tuple[list[int], list[int]]] = []
        self._impl = _celim.Echelon(ncols) if backend == "cython" else _pyelim.Echelon(ncols)

    @property
    def backend(self) -> str:
        return self._impl.backend

    @property
    def rank(self) -> int:
        return self._impl.rank

    def _fallback(self) -> None:
        py = _pyelim.Echelon(self.ncols)
        for cols, vals in self._rows:
            py.insert(cols, vals)
        self._impl = py

    def insert(self, cols, vals) -> bool:
        if self._impl.backend == "cython":
            try:
                grew = self._impl.insert(cols, vals)
            except OverflowError:
                self._fallback()
                return self._impl.insert(cols, vals)
            if grew:
                self._rows.append((list(cols), list(vals)))
            return grew
        return self._impl.insert(cols, vals)

    def contains(self, cols, vals) -> bool:
        if self._impl.backend == "cython":
            try:
                return self._impl.contains(cols, vals)
            except OverflowError:
                self._fallback()
        return self._impl.contains(cols, vals)
