"""Normal forms for Mag, Simp and their twisted products with Sym.

Face words are handled through their subscripts, leftmost first.  In Mag
an adjacent pair ``(a, b)`` with ``a < b`` becomes ``(b + 1, a)``, leaving
non-increasing subscripts.  Simp also rewrites ``a == b``, leaving
strictly decreasing subscripts.  Both rules send a word to one word.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator, NamedTuple, Sequence

from .core import Element, Generator, Kind, Word, linear_map
from .groups import Permutation, all_perms, chi_word_of_perm, perm_of_letters
from .laws import DEFAULT, Laws

MAG = "mag"
SIMP = "simp"


def del_subscripts(w: Word) -> tuple[int, ...]:
    for g in w.gens:
        if g.kind != Kind.DEL:
            raise ValueError(f"{g} is not a face; expected a d-only word")
    return tuple(g.index for g in w.gens)


def del_word(source: int, subs: Sequence[int]) -> Word:
    top = source + len(subs) - 1
    return Word(tuple(Generator(Kind.DEL, top - k, j) for k, j in enumerate(subs)), source)


def straighten(subs: Sequence[int], strict: bool) -> tuple[int, ...]:
    """Bubble the subscripts into non-increasing (or strictly decreasing) order."""
    s = list(subs)
    changed = True
    while changed:
        changed = False
        for p in range(len(s) - 1):
            a, b = s[p], s[p + 1]
            if a < b or (strict and a == b):
                s[p], s[p + 1] = b + 1, a
                changed = True
    return tuple(s)


def is_mag_normal(subs: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(subs, subs[1:]))


def is_simp_normal(subs: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(subs, subs[1:]))


def _normalize_dels(x: Element, strict: bool) -> Element:
    def one(w: Word) -> Element:
        return Element._raw({del_word(w.source, straighten(del_subscripts(w), strict)): 1})

    return linear_map(x, one)


def mag_normalize(x: Element) -> Element:
    return _normalize_dels(x, strict=False)


def simp_normalize(x: Element) -> Element:
    return _normalize_dels(x, strict=True)


def zeta_gen(d: Generator, c: Generator, laws: Laws = DEFAULT) -> Element:
    """The distributive law on a single ``d[n,i]*x[n,j]``."""
    if d.kind != Kind.DEL or c.kind != Kind.CHI:
        raise ValueError("zeta takes a face followed by a crossing")
    if d.level != c.level:
        raise ValueError(f"{d} and {c} are not composable")
    letters, k = laws.zeta(d.level, d.index, c.index)
    n = d.level
    gens = tuple(Generator(Kind.CHI, n + 1, a) for a in letters) + (Generator(Kind.DEL, n, k),)
    return Element._raw({Word(gens, n): 1})


@lru_cache(maxsize=None)
def _zeta_word(w: Word, laws: Laws) -> Word:
    gens = list(w.gens)
    while True:
        for p in range(len(gens) - 1):
            if gens[p].kind == Kind.DEL and gens[p + 1].kind == Kind.CHI:
                d, c = gens[p], gens[p + 1]
                letters, k = laws.zeta(d.level, d.index, c.index)
                gens[p:p + 2] = [Generator(Kind.CHI, d.level + 1, a) for a in letters] + [
                    Generator(Kind.DEL, d.level, k)
                ]
                break
        else:
            return Word(tuple(gens), w.source)


def zeta_move_left(x: Element, laws: Laws = DEFAULT) -> Element:
    """Move every crossing left of every face, leftmost adjacency first."""
    for w in x.terms:
        if Kind.RHO in w.kinds():
            raise ValueError("zeta acts on d/x words; use the Leibniz engine for r symbols")
    return linear_map(x, lambda w: Element._raw({_zeta_word(w, laws): 1}))


class NormalPair(NamedTuple):
    """A permutation followed by a straightened face word."""

    perm: Permutation
    tail: Word
    flavor: str

    @property
    def source(self) -> int:
        return self.tail.source

    @property
    def target(self) -> int:
        return self.tail.target

    def to_word(self) -> Word:
        return Word(chi_word_of_perm(self.perm).gens + self.tail.gens, self.tail.source)

    def to_element(self) -> Element:
        return Element._raw({self.to_word(): 1})


def split_ordered(w: Word) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Chi letters and face subscripts of a word already in crossing-first order."""
    k = 0
    while k < len(w.gens) and w.gens[k].kind == Kind.CHI:
        k += 1
    return tuple(g.index for g in w.gens[:k]), del_subscripts(Word(w.gens[k:], w.source))


@lru_cache(maxsize=None)
def _pair_of_word(w: Word, flavor: str, laws: Laws) -> NormalPair:
    ordered = _zeta_word(w, laws)
    letters, subs = split_ordered(ordered)
    t = ordered.target
    perm = Permutation(perm_of_letters(t, letters))
    tail = del_word(w.source, straighten(subs, strict=flavor == SIMP))
    return NormalPair(perm, tail, flavor)


def normal_pairs(x: Element, flavor: str = MAG, laws: Laws = DEFAULT) -> dict[NormalPair, object]:
    acc: dict[NormalPair, object] = {}
    for w, c in x.terms.items():
        if Kind.RHO in w.kinds():
            raise ValueError("twisted products take d/x words only")
        p = _pair_of_word(w, flavor, laws)
        v = acc.get(p, 0) + c
        if v:
            acc[p] = v
        else:
            del acc[p]
    return acc


def pairs_to_element(pairs: dict[NormalPair, object]) -> Element:
    return Element({p.to_word(): c for p, c in pairs.items()})


def symmag_normalize(x: Element, laws: Laws = DEFAULT) -> Element:
    return pairs_to_element(normal_pairs(x, MAG, laws))


def symsimp_normalize(x: Element, laws: Laws = DEFAULT) -> Element:
    return pairs_to_element(normal_pairs(x, SIMP, laws))


def twisted_multiply(a: NormalPair, b: NormalPair, laws: Laws = DEFAULT) -> Element:
    """Product in Sym (x) Mag or Sym (x) Simp; incomposable pairs give 0."""
    if a.flavor != b.flavor:
        raise ValueError("pairs from different algebras")
    prod = a.to_element() * b.to_element()
    return pairs_to_element(normal_pairs(prod, a.flavor, laws))


class OrderPresSurj(NamedTuple):
    """A nondecreasing surjection ``{0..m} -> {0..n}`` as its value list."""

    values: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.values) - 1

    @property
    def n(self) -> int:
        return self.values[-1]

    @classmethod
    def checked(cls, values: Sequence[int]) -> "OrderPresSurj":
        values = tuple(values)
        if not values or values[0] != 0:
            raise ValueError("a surjection onto {0..n} must start at 0")
        for a, b in zip(values, values[1:]):
            if b not in (a, a + 1):
                raise ValueError(f"{values} is not a nondecreasing surjection")
        return cls(values)

    @classmethod
    def identity(cls, n: int) -> "OrderPresSurj":
        return cls(tuple(range(n + 1)))

    def after(self, other: "OrderPresSurj") -> "OrderPresSurj":
        """``self`` after ``other``."""
        return OrderPresSurj(tuple(self.values[v] for v in other.values))


def degeneracy(n: int, j: int) -> OrderPresSurj:
    """``{0..n+1} -> {0..n}`` sending ``j`` and ``j + 1`` to ``j``."""
    return OrderPresSurj(tuple(x if x <= j else x - 1 for x in range(n + 2)))


def surjection_of_simp_word(w: Word) -> OrderPresSurj:
    subs = del_subscripts(w)
    if not is_simp_normal(subs):
        raise ValueError(f"{w} is not in Simp normal form")
    f = OrderPresSurj.identity(w.source)
    # a face word acts contravariantly: the leftmost face is the first map
    for g in reversed(w.gens):
        f = f.after(degeneracy(g.level, g.index))
    return f


def simp_word_of_surjection(f: OrderPresSurj) -> Word:
    f = OrderPresSurj.checked(f.values)
    merges = [x for x in range(f.m) if f.values[x] == f.values[x + 1]]
    return del_word(f.n, tuple(reversed(merges)))


def surjections(m: int, n: int) -> list[OrderPresSurj]:
    """All nondecreasing surjections ``{0..m} -> {0..n}``, lexicographic."""
    out = []
    for merges in combinations(range(m), m - n):
        vals, v, ms = [0], 0, set(merges)
        for x in range(m):
            v += 0 if x in ms else 1
            vals.append(v)
        out.append(OrderPresSurj(tuple(vals)))
    return sorted(out)


def mag_tails(source: int, target: int) -> list[tuple[int, ...]]:
    """Non-increasing subscripts ``j_{t-1} >= ... >= j_n`` with ``j_u <= u``."""
    if target < source:
        return []
    levels = list(range(source, target))
    out = []
    for combo in combinations_with_replacement(range(target), len(levels)):
        # combo is nondecreasing and pairs with levels n..t-1
        if all(j <= u for j, u in zip(combo, levels)):
            out.append(tuple(reversed(combo)))
    return sorted(out)


def simp_tails(source: int, target: int) -> list[tuple[int, ...]]:
    if target < source:
        return []
    levels = list(range(source, target))
    out = []
    for combo in combinations(range(target), len(levels)):
        if all(j <= u for j, u in zip(combo, levels)):
            out.append(tuple(reversed(combo)))
    return sorted(out)


def enumerate_basis(algebra: str, source: int, target: int) -> list:
    """Normal-form monomials of one bidegree, in a fixed order.

    ``mag``/``simp`` give words; ``symmag``/``symsimp`` give
    :class:`NormalPair` sorted by permutation images, then tail.
    """
    if target < source:
        raise ValueError("target level must be at least the source level")
    if algebra in (MAG, SIMP):
        tails = mag_tails(source, target) if algebra == MAG else simp_tails(source, target)
        return [del_word(source, s) for s in tails]
    if algebra in ("symmag", "symsimp"):
        flavor = MAG if algebra == "symmag" else SIMP
        tails = mag_tails(source, target) if flavor == MAG else simp_tails(source, target)
        return [
            NormalPair(Permutation(p), del_word(source, s), flavor)
            for p in all_perms(target)
            for s in tails
        ]
    raise ValueError(f"unknown algebra {algebra!r}")


def iter_del_words(level: int, length: int) -> Iterator[Word]:
    """Every free face word of the given length starting at ``level``."""

    def rec(n: int, k: int, acc: tuple[Generator, ...]):
        if k == 0:
            yield Word(acc, level)
            return
        for j in range(n + 1):
            yield from rec(n + 1, k - 1, (Generator(Kind.DEL, n, j),) + acc)

    yield from rec(level, length, ())
