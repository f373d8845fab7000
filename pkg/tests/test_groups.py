from itertools import product

import pytest

from prop_rewriter import (
    BraidWord,
    Permutation,
    Word,
    artin_action,
    braid_equal,
    chi_word_of_perm,
    parse,
    perm_of_chi_word,
    sym_normalize,
)
from prop_rewriter.groups import all_perms, chi_word, compose, inversions


def word(text: str) -> Word:
    (w,) = parse(text).terms
    return w


def test_square_is_identity():
    assert perm_of_chi_word(word("x[1,0]*x[1,0]")) == Permutation((0, 1))


def test_empty_word_is_identity():
    assert perm_of_chi_word(Word.identity(2)).is_identity()


def test_product_of_two_crossings():
    assert perm_of_chi_word(word("x[2,0]*x[2,1]")) == Permutation((1, 2, 0))


def test_identity_to_empty_word():
    assert chi_word_of_perm(Permutation((0, 1, 2, 3))) == Word.identity(3)


@pytest.mark.parametrize("i", range(3))
def test_transposition_to_single_crossing(i):
    images = list(range(4))
    images[i], images[i + 1] = images[i + 1], images[i]
    assert chi_word_of_perm(Permutation(tuple(images))) == word(f"x[3,{i}]")


@pytest.mark.parametrize("p", all_perms(3))
def test_reduced_word_length_is_inversion_count(p):
    w = chi_word_of_perm(Permutation(p))
    assert len(w.gens) == inversions(p)
    assert perm_of_chi_word(w) == Permutation(p)


def test_perm_of_chi_word_is_a_homomorphism():
    for n in range(1, 5):
        for a in range(3):
            for b in range(3):
                for u in product(range(n), repeat=a):
                    for v in product(range(n), repeat=b):
                        pu, pv = perm_of_chi_word(chi_word(n, u)), perm_of_chi_word(chi_word(n, v))
                        puv = perm_of_chi_word(chi_word(n, u + v))
                        assert puv.images == compose(pu.images, pv.images)


def test_artin_action_empty_and_single():
    x0, x1 = ((0, 1),), ((1, 1),)
    assert artin_action(BraidWord(1, ())) == (x0, x1)
    assert artin_action(BraidWord(1, (0,))) == (((0, 1), (1, 1), (0, -1)), x0)


def test_braid_relation():
    assert artin_action(BraidWord(2, (0, 1, 0))) == artin_action(BraidWord(2, (1, 0, 1)))


def test_braid_equality():
    assert braid_equal(BraidWord(3, (0, 2)), BraidWord(3, (2, 0)))
    assert not braid_equal(BraidWord(2, (0,)), BraidWord(2, (1,)))
    assert not braid_equal(BraidWord(1, (0, 0)), BraidWord(1, ()))


def test_sym_normalize_applies_braid_relation():
    assert sym_normalize(parse("x[2,0]*x[2,1]*x[2,0] - x[2,1]*x[2,0]*x[2,1]")) == 0
    assert sym_normalize(parse("x[1,0]*x[1,0]")) == parse("1[1]")


def test_braid_letters_validated():
    with pytest.raises(ValueError):
        BraidWord.checked(1, (1,))
