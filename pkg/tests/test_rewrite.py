from itertools import product
from math import comb

import pytest

from prop_rewriter import (
    Chi,
    Del,
    Element,
    OrderPresSurj,
    Word,
    enumerate_basis,
    mag_normalize,
    parse,
    simp_normalize,
    simp_word_of_surjection,
    surjection_of_simp_word,
    symmag_normalize,
    symsimp_normalize,
    twisted_multiply,
    zeta_gen,
    zeta_move_left,
)
from prop_rewriter.rewrite import degeneracy, del_subscripts, del_word, iter_del_words, surjections

P = parse


def word(text: str) -> Word:
    (w,) = parse(text).terms
    return w


def rewrite_closure(w: Word, strict: bool) -> set[tuple[int, ...]]:
    """Terminal subscript tuples reachable by rewriting at any position in any order."""
    start = del_subscripts(w)
    seen, stack, terminal = {start}, [start], set()
    while stack:
        s = stack.pop()
        moved = False
        for k in range(len(s) - 1):
            a, b = s[k], s[k + 1]
            if a < b or (strict and a == b):
                moved = True
                t = s[:k] + (b + 1, a) + s[k + 2:]
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        if not moved:
            terminal.add(s)
    return terminal


def test_mag_examples():
    assert mag_normalize(P("d[2,0]*d[1,1]")) == P("d[2,2]*d[1,0]")
    assert mag_normalize(P("d[2,2]*d[1,0]")) == P("d[2,2]*d[1,0]")
    (w,) = mag_normalize(P("d[3,0]*d[2,1]*d[1,0]")).terms
    s = del_subscripts(w)
    assert list(s) == sorted(s, reverse=True)


def test_simp_examples():
    assert simp_normalize(P("d[1,0]*d[0,0]")) == P("d[1,1]*d[0,0]")
    assert simp_normalize(P("d[1,1]*d[0,0]")) == P("d[1,1]*d[0,0]")
    (w,) = simp_normalize(P("d[2,1]*d[1,1]*d[0,0]")).terms
    s = del_subscripts(w)
    assert all(a > b for a, b in zip(s, s[1:]))


@pytest.mark.parametrize("strict", [False, True])
def test_straightening_is_confluent(strict):
    norm = simp_normalize if strict else mag_normalize
    for level in range(3):
        for length in range(1, 5):
            for w in iter_del_words(level, length):
                (terminal,) = rewrite_closure(w, strict)
                assert norm(Element.word(w)) == Element.word(del_word(level, terminal))


def test_normalizers_reject_crossings():
    with pytest.raises(ValueError):
        mag_normalize(P("x[1,0]*d[0,0]"))


@pytest.mark.parametrize("d, c, expected", [
    ("d[1,0]", "x[1,0]", "x[2,1]*x[2,0]*d[1,1]"),
    ("d[2,0]", "x[2,1]", "x[3,2]*d[2,0]"),
    ("d[2,2]", "x[2,0]", "x[3,0]*d[2,2]"),
    ("d[2,1]", "x[2,0]", "x[3,0]*x[3,1]*d[2,0]"),
])
def test_zeta_four_cases(d, c, expected):
    (dw,), (cw,) = P(d).terms, P(c).terms
    assert zeta_gen(dw.gens[0], cw.gens[0]) == P(expected)


def test_zeta_move_left():
    assert zeta_move_left(P("d[1,0]*x[1,0]")) == P("x[2,1]*x[2,0]*d[1,1]")
    assert zeta_move_left(P("x[1,0]*d[0,0]")) == P("x[1,0]*d[0,0]")
    (w,) = zeta_move_left(P("d[2,0]*d[1,0]*x[1,0]")).terms
    kinds = [g.kind for g in w.gens]
    assert kinds == sorted(kinds, key=lambda k: k.name != "CHI")


def test_symmag_examples():
    assert symmag_normalize(P("x[1,0]*x[1,0]*d[0,0]")) == P("d[0,0]")
    assert symmag_normalize(P("d[1,0]*x[1,0]")) == P("x[2,1]*x[2,0]*d[1,1]")
    assert symsimp_normalize(P("d[1,0]*d[0,0]")) == P("d[1,1]*d[0,0]")


def test_twisted_multiply():
    (a,) = enumerate_basis("symsimp", 1, 2)[:1]
    unit = enumerate_basis("symsimp", 2, 2)[0]
    assert twisted_multiply(unit, a) == a.to_element()
    pairs = {p.tail: p for p in enumerate_basis("symsimp", 0, 1) if p.perm.is_identity()}
    pairs.update({p.tail: p for p in enumerate_basis("symsimp", 1, 2) if p.perm.is_identity()})
    d10, d00 = pairs[word("d[1,0]")], pairs[word("d[0,0]")]
    assert twisted_multiply(d10, d00) == P("d[1,1]*d[0,0]")


def test_twisted_multiply_associative(rng):
    basis = {n: enumerate_basis("symmag", n, n + 1) for n in range(3)}
    for _ in range(50):
        a, b, c = rng.choice(basis[2]), rng.choice(basis[1]), rng.choice(basis[0])
        left = symmag_normalize(twisted_multiply(a, b) * c.to_element())
        right = symmag_normalize(a.to_element() * twisted_multiply(b, c))
        assert left == right


def test_mag_basis_0_to_3():
    subs = [del_subscripts(w) for w in enumerate_basis("mag", 0, 3)]
    assert subs == [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 0, 0), (2, 1, 0)]


@pytest.mark.parametrize("t, catalan", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42)])
def test_mag_counts_from_zero_are_catalan(t, catalan):
    assert len(enumerate_basis("mag", 0, t)) == catalan


def test_simp_counts():
    assert len(enumerate_basis("simp", 1, 3)) == 3
    assert enumerate_basis("simp", 2, 2) == [Word.identity(2)]
    for n, t in product(range(5), repeat=2):
        if n <= t:
            assert len(enumerate_basis("simp", n, t)) == comb(t, n)


def test_surjection_correspondence():
    assert surjection_of_simp_word(Word.identity(2)) == OrderPresSurj.identity(2)
    assert surjection_of_simp_word(word("d[1,1]")) == degeneracy(1, 1)
    assert simp_word_of_surjection(degeneracy(2, 0)) == word("d[2,0]")
    assert len(surjections(3, 1)) == len(enumerate_basis("simp", 1, 3)) == 3


def test_surjection_rejects_non_normal():
    with pytest.raises(ValueError):
        surjection_of_simp_word(word("d[1,0]*d[0,0]"))
