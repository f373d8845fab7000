"""Sym and Braid: permutations and positive braid words.

Permutations act on strand positions ``0..n``.  A chi word maps to the
composite of its adjacent transpositions in composition order, so
``x[2,0]*x[2,1]`` is ``(0 1)`` after ``(1 2)``.

Equality of positive braid words is decided through the Artin action on
the free group of rank ``n + 1``.  The positive monoid embeds in the
braid group, so equal images mean equal braids.
"""
from __future__ import annotations

from itertools import permutations as _iter_perms
from typing import NamedTuple, Sequence

from .core import Element, Generator, Kind, Word


class Permutation(NamedTuple):
    """A bijection of ``{0..n}`` given by its images."""

    images: tuple[int, ...]

    @property
    def level(self) -> int:
        return len(self.images) - 1

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n + 1)))

    @classmethod
    def checked(cls, images: Sequence[int]) -> "Permutation":
        images = tuple(images)
        if sorted(images) != list(range(len(images))) or not images:
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")
        return cls(images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self`` after ``other``."""
        return Permutation(compose(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(inverse(self.images))

    def inversions(self) -> int:
        return inversions(self.images)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def inversions(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def all_perms(n: int) -> list[tuple[int, ...]]:
    """All of ``S_{n+1}`` in lexicographic order of images."""
    return list(_iter_perms(range(n + 1)))


def perm_of_letters(n: int, letters: Sequence[int]) -> tuple[int, ...]:
    p = list(range(n + 1))
    for c in letters:
        p[c], p[c + 1] = p[c + 1], p[c]
    return tuple(p)


def reduced_letters(p: Sequence[int]) -> tuple[int, ...]:
    """Selection-sort word for ``p``: the value bound for position 0 moves first."""
    arr = list(range(len(p)))
    where = list(range(len(p)))
    out: list[int] = []
    for pos, v in enumerate(p):
        k = where[v]
        while k > pos:
            out.append(k - 1)
            u = arr[k - 1]
            arr[k - 1], arr[k] = v, u
            where[v], where[u] = k - 1, k
            k -= 1
    return tuple(out)


def _chi_letters(w: Word) -> tuple[int, tuple[int, ...]]:
    for g in w.gens:
        if g.kind != Kind.CHI:
            raise ValueError(f"{g} is not a crossing; only chi words map to permutations")
    return w.source, tuple(g.index for g in w.gens)


def perm_of_chi_word(w: Word) -> Permutation:
    n, letters = _chi_letters(w)
    return Permutation(perm_of_letters(n, letters))


def chi_word_of_perm(p: Permutation) -> Word:
    n = p.level
    return Word(tuple(Generator(Kind.CHI, n, c) for c in reduced_letters(p.images)), n)


def chi_word(n: int, letters: Sequence[int]) -> Word:
    return Word(tuple(Generator(Kind.CHI, n, c) for c in letters), n)


def sym_normalize(x: Element) -> Element:
    """Canonical form in Sym: each chi word becomes the reduced word of its permutation."""
    acc: dict[Word, object] = {}
    for w, c in x.terms.items():
        v = chi_word_of_perm(perm_of_chi_word(w))
        acc[v] = acc.get(v, 0) + c
    return Element(acc)


class BraidWord(NamedTuple):
    level: int
    letters: tuple[int, ...]

    @classmethod
    def checked(cls, level: int, letters: Sequence[int]) -> "BraidWord":
        letters = tuple(letters)
        for c in letters:
            if not 0 <= c <= level - 1:
                raise ValueError(f"letter {c} out of range at level {level}")
        return cls(level, letters)

    @classmethod
    def of_word(cls, w: Word) -> "BraidWord":
        n, letters = _chi_letters(w)
        return cls(n, letters)


# A free group word is a tuple of (strand, exponent) pairs, freely reduced.
FreeGroupWord = tuple


def _mul(u: FreeGroupWord, v: FreeGroupWord) -> FreeGroupWord:
    out = list(u)
    for s, e in v:
        if out and out[-1][0] == s and out[-1][1] == -e:
            out.pop()
        else:
            out.append((s, e))
    return tuple(out)


def _inv(u: FreeGroupWord) -> FreeGroupWord:
    return tuple((s, -e) for s, e in reversed(u))


def artin_action(b: BraidWord) -> tuple[FreeGroupWord, ...]:
    """Images of ``x_0..x_n`` under the automorphism of ``b``.

    Letter ``i`` sends ``x_i`` to ``x_i x_{i+1} x_i^-1`` and ``x_{i+1}`` to
    ``x_i``; a word acts as the composite of its letters in word order.
    """
    imgs = [((s, 1),) for s in range(b.level + 1)]
    for i in b.letters:
        a, c = imgs[i], imgs[i + 1]
        imgs[i] = _mul(_mul(a, c), _inv(a))
        imgs[i + 1] = a
    return tuple(imgs)


def braid_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.level != v.level:
        raise ValueError(f"braids at levels {u.level} and {v.level}")
    if u.letters == v.letters:
        return True
    # the length is a homomorphism to Z, so a cheap first filter
    if len(u.letters) != len(v.letters):
        return False
    return artin_action(u) == artin_action(v)
