"""Sparse fraction-free row echelon form over the integers (pure Python).

Rows are parallel lists ``cols`` (strictly increasing) and ``vals``
(nonzero ints).  The leading entry of a row is its smallest column.
Every stored row is primitive (content 1) with a positive leading entry.
"""
from __future__ import annotations

from math import gcd


def _primitive(cols: list[int], vals: list[int]) -> tuple[list[int], list[int]]:
    g = gcd(*vals)
    if vals[0] < 0:
        g = -g
    if g != 1:
        vals = [v // g for v in vals]
    return cols, vals


class Echelon:
    backend = "python"

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, tuple[list[int], list[int]]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, cols, vals) -> tuple[list[int], list[int]]:
        cols, vals = list(cols), list(vals)
        pivots = self.pivots
        while cols:
            piv = pivots.get(cols[0])
            if piv is None:
                break
            pc, pv = piv
            a, b = pv[0], vals[0]
            # a*row - b*pivot; the leading entries cancel
            nc: list[int] = []
            nv: list[int] = []
            i, j, li, lj = 1, 1, len(cols), len(pc)
            while i < li and j < lj:
                ci, cj = cols[i], pc[j]
                if ci < cj:
                    nc.append(ci)
                    nv.append(a * vals[i])
                    i += 1
                elif cj < ci:
                    nc.append(cj)
                    nv.append(-b * pv[j])
                    j += 1
                else:
                    v = a * vals[i] - b * pv[j]
                    if v:
                        nc.append(ci)
                        nv.append(v)
                    i += 1
                    j += 1
            while i < li:
                nc.append(cols[i])
                nv.append(a * vals[i])
                i += 1
            while j < lj:
                nc.append(pc[j])
                nv.append(-b * pv[j])
                j += 1
            if not nc:
                return [], []
            cols, vals = _primitive(nc, nv)
        return cols, vals

    def insert(self, cols, vals) -> bool:
        """Add a row; True when it raised the rank."""
        if not cols:
            return False
        cols, vals = self.reduce(cols, vals)
        if not cols:
            return False
        cols, vals = _primitive(cols, vals)
        self.pivots[cols[0]] = (cols, vals)
        return True

    def contains(self, cols, vals) -> bool:
        return not self.reduce(cols, vals)[0]
