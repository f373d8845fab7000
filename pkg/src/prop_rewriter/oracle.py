"""Linear-algebra oracle for the Leibniz quotients.

Independent of the rewriting engines: a bidegree ``(n, t)`` piece of the
two-sided ideal is spanned inside free ``Sym (x) Mag`` by
``sigma * d * g * d'`` (``sigma`` a permutation, ``d`` and ``d'`` face
words in Mag normal form, ``g`` a generator).  Right multiplication by a
permutation permutes generators up to a left permutation, which
:func:`right_closure_holds` checks; that keeps ``d'`` face-only.

Exact integer elimination then gives ranks, quotient dimensions and
membership.  Products of pairs use a closed formula for moving a face
past a permutation instead of the case-by-case law.
"""
from __future__ import annotations

import time
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .core import Element, Kind, Word, bigrade
from .elimination import Echelon
from .groups import Permutation, all_perms, chi_word_of_perm, compose, inverse, perm_of_letters
from .laws import DEFAULT, Laws
from .rewrite import del_word, mag_tails, straighten

LEIB = "leib"
LEIBOP = "leibop"

# pair: (perm images at the target level, Mag subscripts, source level)
Pair = tuple


class BoundExceeded(RuntimeError):
    """The requested oracle would exceed its resource bound."""


@lru_cache(maxsize=None)
def del_past_perm(i: int, p: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """``d[u,i] * p == q * d[u,i']``; returns ``(q, i')``.

    ``p`` lives at level ``u`` and ``q`` at level ``u + 1``.
    """
    mu = inverse(p)
    i2 = mu[i]
    nu = []
    for x in range(len(p) + 1):
        if x == i:
            nu.append(i2)
        elif x == i + 1:
            nu.append(i2 + 1)
        else:
            y = mu[x if x < i else x - 1]
            nu.append(y if y < i2 else y + 1)
    return inverse(nu), i2


def pair_mul(a: Pair, b: Pair) -> Pair:
    """Product of two normal pairs in free ``Sym (x) Mag``."""
    p, s, m = a
    q, r, n = b
    if n + len(r) != m:
        raise ValueError("pairs are not composable")
    s2 = list(s)
    for idx in range(len(s) - 1, -1, -1):
        q, s2[idx] = del_past_perm(s[idx], q)
    return compose(p, q), straighten(tuple(s2) + tuple(r), False), n


def _gen_pairs(side: str, m: int, j: int, laws: Laws) -> dict[Pair, int]:
    table = laws.leib if side == LEIB else laws.leibop
    out: dict[Pair, int] = {}
    for c, letters, a, b in table(m, j):
        key = (perm_of_letters(m + 2, letters), straighten((a, b), False), m)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def _mul_combo(x: dict[Pair, int], y: Pair, left: bool) -> dict[Pair, int]:
    out: dict[Pair, int] = {}
    for k, c in x.items():
        key = pair_mul(y, k) if left else pair_mul(k, y)
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def _left_perm(sigma: tuple[int, ...], x: dict[Pair, int]) -> dict[Pair, int]:
    return {(compose(sigma, p), s, n): c for (p, s, n), c in x.items()}


def right_closure_holds(side: str, m: int, laws: Laws = DEFAULT) -> bool:
    """Every ``g_j * x[m,i]`` equals ``sigma * g_k`` for some ``sigma`` and ``k``."""
    gens = [_gen_pairs(side, m, j, laws) for j in range(m + 1)]
    for g in gens:
        for i in range(m):
            prod = _mul_combo(g, (perm_of_letters(m, (i,)), (), m), left=False)
            if not any(_matches(prod, h) for h in gens):
                return False
    return True


def _matches(x: dict[Pair, int], g: dict[Pair, int]) -> bool:
    (p0, s0, n0), c0 = next(iter(g.items()))
    for (p, s, n), c in x.items():
        if s == s0 and n == n0:
            scale = Fraction(c, c0)
            y = {k: scale * v for k, v in _left_perm(compose(p, inverse(p0)), g).items()}
            if y == x:
                return True
    return False


def word_pair(w: Word) -> Pair:
    """A d/x word as a normal pair, without using the case table."""
    acc: Pair = (tuple(range(w.source + 1)), (), w.source)
    for g in reversed(w.gens):
        if g.kind == Kind.CHI:
            left = (perm_of_letters(g.level, (g.index,)), (), g.level)
        elif g.kind == Kind.DEL:
            left = (tuple(range(g.level + 2)), (g.index,), g.level)
        else:
            raise ValueError("the oracle takes d/x elements; expand r symbols first")
        acc = pair_mul(left, acc)
    return acc


def element_pairs(x: Element) -> dict[Pair, Fraction]:
    out: dict[Pair, Fraction] = {}
    for w, c in x.terms.items():
        key = word_pair(w)
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def free_dimension(n: int, t: int) -> int:
    return len(all_perms(t)) * len(mag_tails(n, t))


class QuotientOracle:
    """The ``(n, t)`` piece of ``I_Leib`` or ``I_LeibOp`` as an echelon basis."""

    def __init__(self, side: str, n: int, t: int, laws: Laws = DEFAULT,
                 max_columns: int | None = 2_000_000, backend: str | None = None):
        if side not in (LEIB, LEIBOP):
            raise ValueError(f"unknown side {side!r}")
        if t < n:
            raise ValueError("target level must be at least the source level")
        self.side, self.n, self.t, self.laws = side, n, t, laws
        self.perms = all_perms(t)
        self.tails = mag_tails(n, t)
        self.ncols = len(self.perms) * len(self.tails)
        if max_columns is not None and self.ncols > max_columns:
            raise BoundExceeded(f"{self.ncols} columns at ({n},{t}) exceed the bound {max_columns}")
        self._perm_rank = {p: k for k, p in enumerate(self.perms)}
        self._tail_rank = {s: k for k, s in enumerate(self.tails)}
        self.echelon = Echelon(self.ncols, backend=backend)
        self.rows = 0
        start = time.perf_counter()
        self._build()
        self.elapsed = time.perf_counter() - start

    def column(self, perm: tuple[int, ...], tail: tuple[int, ...]) -> int:
        return self._tail_rank[tail] * len(self.perms) + self._perm_rank[perm]

    def spanning(self):
        """The products ``d * g * d'`` as pair dicts; with left permutations they span the ideal piece."""
        n, t = self.n, self.t
        ident_t = tuple(range(t + 1))
        for m in range(n, t - 1):
            closed = right_closure_holds(self.side, m, self.laws)
            rights = mag_tails(n, m)
            right_perms = [tuple(range(m + 1))] if closed else all_perms(m)
            for j in range(m + 1):
                g = _gen_pairs(self.side, m, j, self.laws)
                for dl in mag_tails(m + 2, t):
                    gl = _mul_combo(g, (ident_t, dl, m + 2), left=True)
                    for rp in right_perms:
                        for dr in rights:
                            x = _mul_combo(gl, (rp, dr, n), left=False)
                            if x:
                                yield x

    def _build(self) -> None:
        nperm = len(self.perms)
        pr = self._perm_rank
        for x in self.spanning():
            items = [(self._tail_rank[s], p, c) for (p, s, _), c in x.items()]
            for sigma in self.perms:
                row: dict[int, int] = {}
                for tr, p, c in items:
                    col = tr * nperm + pr[compose(sigma, p)]
                    row[col] = row.get(col, 0) + c
                cols = sorted(k for k, v in row.items() if v)
                self.rows += 1
                self.echelon.insert(cols, [row[k] for k in cols])

    @property
    def rank(self) -> int:
        return self.echelon.rank

    @property
    def quotient_dimension(self) -> int:
        return self.ncols - self.rank

    def _vector(self, x: Element) -> tuple[list[int], list[int]]:
        row: dict[int, Fraction] = {}
        for (p, tail, n), c in element_pairs(x).items():
            if n != self.n or len(p) != self.t + 1:
                raise ValueError(f"term outside bidegree ({self.n},{self.t})")
            row[self.column(p, tail)] = Fraction(c)
        cols = sorted(row)
        den = lcm(*(row[k].denominator for k in cols)) if cols else 1
        return cols, [int(row[k] * den) for k in cols]

    def contains(self, x: Element) -> bool:
        """Whether ``x`` (a d/x element of this bidegree) lies in the ideal."""
        cols, vals = self._vector(x)
        return self.echelon.contains(cols, vals)


_CACHE: dict[tuple, QuotientOracle] = {}


def oracle(side: str, n: int, t: int, laws: Laws = DEFAULT, **kw) -> QuotientOracle:
    key = (side, n, t, laws)
    if key not in _CACHE:
        _CACHE[key] = QuotientOracle(side, n, t, laws, **kw)
    return _CACHE[key]


def _bounded(t: int, t_max: int | None) -> None:
    if t_max is not None and t > t_max:
        raise BoundExceeded(f"target level {t} exceeds the bound {t_max}")


def quotient_dimension_oracle(side: str, n: int, t: int, laws: Laws = DEFAULT,
                              t_max: int | None = 5) -> int:
    _bounded(t, t_max)
    return oracle(side, n, t, laws).quotient_dimension


def ideal_membership_oracle(side: str, x: Element, t_max: int | None = 7,
                            laws: Laws = DEFAULT) -> bool:
    """True when every homogeneous piece of ``x`` lies in the ideal."""
    pieces = bigrade(x)
    for _, t in pieces:
        _bounded(t, t_max)
    for (n, t), piece in pieces.items():
        if not oracle(side, n, t, laws).contains(piece):
            return False
    return True


def pairs_element(x: dict[Pair, int]) -> Element:
    """A pair dict as an element of d/x words."""
    acc = {}
    for (p, s, n), c in x.items():
        w = Word(chi_word_of_perm(Permutation(p)).gens + del_word(n, s).gens, n)
        acc[w] = acc.get(w, 0) + c
    return Element(acc)
