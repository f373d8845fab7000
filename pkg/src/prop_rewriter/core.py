"""Graded generators, composable words and exact linear combinations.

Words are stored in composition order: the leftmost generator is applied
last, so ``d[1,1]*d[0,0]`` goes from level 0 to level 2.  A level ``n``
object has ``n + 1`` strands labelled ``0..n``.

Composition of two words that do not meet at the same level is zero, not
an error.  Elements may mix bidegrees freely.
"""
from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, NamedTuple

Scalar = Fraction


class Kind(IntEnum):
    DEL = 0
    CHI = 1
    RHO = 2


_LETTER = {Kind.DEL: "d", Kind.CHI: "x", Kind.RHO: "r"}


class Generator(NamedTuple):
    """A single ``d[n,j]``, ``x[n,i]`` or ``r[n,j]`` symbol.

    ``Del`` and ``Rho`` raise the level by one, ``Chi`` keeps it.
    """

    kind: Kind
    level: int
    index: int

    @property
    def source(self) -> int:
        return self.level

    @property
    def target(self) -> int:
        return self.level if self.kind == Kind.CHI else self.level + 1

    def __str__(self) -> str:
        return f"{_LETTER[self.kind]}[{self.level},{self.index}]"


def _checked(kind: Kind, n: int, i: int) -> Generator:
    if n < 0:
        raise ValueError(f"negative level {n}")
    if kind == Kind.CHI:
        if n < 1 or not 0 <= i <= n - 1:
            raise ValueError(f"x[{n},{i}] out of range")
    elif not 0 <= i <= n:
        raise ValueError(f"{_LETTER[kind]}[{n},{i}] out of range")
    return Generator(kind, n, i)


def Del(n: int, j: int) -> Generator:
    return _checked(Kind.DEL, n, j)


def Chi(n: int, i: int) -> Generator:
    return _checked(Kind.CHI, n, i)


def Rho(n: int, j: int) -> Generator:
    return _checked(Kind.RHO, n, j)


class Word(NamedTuple):
    """A composable sequence of generators.

    ``source`` is the level the word starts from (its rightmost end); for
    the empty word it is the level of the identity ``1[source]``.
    """

    gens: tuple[Generator, ...]
    source: int

    @classmethod
    def of(cls, *gens: Generator, source: int | None = None) -> "Word":
        gens = tuple(gens)
        if not gens:
            if source is None:
                raise ValueError("empty word needs an explicit level")
            return cls((), source)
        for left, right in zip(gens, gens[1:]):
            if left.source != right.target:
                raise ValueError(f"{left} cannot follow {right}")
        src = gens[-1].source
        if source is not None and source != src:
            raise ValueError(f"word starts at level {src}, not {source}")
        return cls(gens, src)

    @classmethod
    def identity(cls, n: int) -> "Word":
        if n < 0:
            raise ValueError(f"negative level {n}")
        return cls((), n)

    @property
    def target(self) -> int:
        return self.gens[0].target if self.gens else self.source

    def __len__(self) -> int:  # type: ignore[override]
        return len(self.gens)

    def kinds(self) -> set[Kind]:
        return {g.kind for g in self.gens}

    def sort_key(self) -> tuple:
        return (self.source, self.target, len(self.gens), self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return f"1[{self.source}]"
        return "*".join(str(g) for g in self.gens)


def concat(left: Word, right: Word) -> Word | None:
    """``left`` after ``right``, or ``None`` when the levels do not meet."""
    if left.source != right.target:
        return None
    return Word(left.gens + right.gens, right.source)


def _scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"scalars must be exact rationals, got {type(c).__name__}")


class Element:
    """A finitely supported rational combination of words.

    Instances are treated as immutable; every operation returns a new
    element and zero coefficients are never stored.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        acc: dict[Word, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            c = _scalar(c)
            if c:
                acc[w] = acc.get(w, 0) + c
        self.terms = {w: c for w, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Word, Fraction]) -> "Element":
        # caller guarantees no zero coefficients
        e = cls.__new__(cls)
        e.terms = terms
        e._hash = None
        return e

    @classmethod
    def word(cls, w: Word, coef=1) -> "Element":
        return cls({w: coef})

    @classmethod
    def gen(cls, g: Generator) -> "Element":
        return cls({Word((g,), g.source): 1})

    @classmethod
    def identity(cls, n: int) -> "Element":
        return cls({Word.identity(n): 1})

    @classmethod
    def zero(cls) -> "Element":
        return cls._raw({})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda t: t[0].sort_key()))

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            v = acc.get(w, 0) + c
            if v:
                acc[w] = v
            else:
                acc.pop(w, None)
        return Element._raw(acc)

    def __neg__(self) -> "Element":
        return Element._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Element):
            return compose(self, other)
        try:
            return scale(other, self)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return scale(other, self)
        except TypeError:
            return NotImplemented

    def kinds(self) -> set[Kind]:
        out: set[Kind] = set()
        for w in self.terms:
            out |= w.kinds()
        return out

    def __str__(self) -> str:
        from .expr import format_element

        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({str(self)!r})"


def compose(x: Element, y: Element) -> Element:
    """Bilinear extension of word concatenation; mismatched levels give 0."""
    acc: dict[Word, Fraction] = {}
    by_target: dict[int, list[tuple[Word, Fraction]]] = {}
    for w, c in y.terms.items():
        by_target.setdefault(w.target, []).append((w, c))
    for u, a in x.terms.items():
        for v, b in by_target.get(u.source, ()):
            w = Word(u.gens + v.gens, v.source)
            acc[w] = acc.get(w, 0) + a * b
    return Element._raw({w: c for w, c in acc.items() if c})


def add(x: Element, y: Element) -> Element:
    return x + y


def scale(c, x: Element) -> Element:
    c = _scalar(c)
    if not c:
        return Element.zero()
    return Element._raw({w: c * v for w, v in x.terms.items()})


def bigrade(x: Element) -> dict[tuple[int, int], Element]:
    """Split ``x`` into its ``(source, target)`` components."""
    parts: dict[tuple[int, int], dict[Word, Fraction]] = {}
    for w, c in x.terms.items():
        parts.setdefault((w.source, w.target), {})[w] = c
    return {k: Element._raw(v) for k, v in sorted(parts.items())}


def free_equal(x: Element, y: Element) -> bool:
    """Equality in the free algebra, before any relation is imposed."""
    return x.terms == y.terms


def linear_map(x: Element, fn) -> Element:
    """Apply ``fn: Word -> Element`` to every word and sum with coefficients."""
    acc: dict[Word, Fraction] = {}
    for w, c in x.terms.items():
        for v, b in fn(w).terms.items():
            acc[v] = acc.get(v, 0) + c * b
    return Element._raw({w: c for w, c in acc.items() if c})


def multiplicative_map(x: Element, fn) -> Element:
    """Extend ``fn: Generator -> Element`` multiplicatively and linearly.

    Identities map to identities at the same level.
    """

    def on_word(w: Word) -> Element:
        out = Element.identity(w.source)
        for g in reversed(w.gens):
            out = fn(g) * out
        return out

    return linear_map(x, on_word)
