from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from prop_rewriter import Chi, Del, Element, ParseError, Word, bigrade, compose, format_element, free_equal, parse

P = parse


def test_identity_is_unit():
    assert compose(Element.identity(3), P("d[2,0]")) == P("d[2,0]")


def test_composable_concatenation():
    x = compose(P("d[2,0]"), P("x[2,0]"))
    assert format_element(x) == "d[2,0]*x[2,0]"


def test_mismatched_levels_compose_to_zero():
    assert compose(P("d[3,0]"), P("d[0,0]")) == Element.zero()


def test_scalar_laws():
    d = P("d[0,0]")
    assert d + (-1) * d == Element.zero()
    assert 2 * (Fraction(1, 2) * d) == d
    assert (P("d[1,0] + d[1,1]") + P("d[1,0]")) == P("2*d[1,0] + d[1,1]")


def test_bigrade():
    assert bigrade(P("d[0,0] + x[1,0]")) == {(0, 1): P("d[0,0]"), (1, 1): P("x[1,0]")}
    assert bigrade(Element.zero()) == {}
    assert bigrade(P("d[1,1]*d[0,0]")) == {(0, 2): P("d[1,1]*d[0,0]")}


def test_free_equal():
    assert free_equal(P("d[0,0]"), P("d[0,0]"))
    assert not free_equal(P("d[1,0]*d[0,0]"), P("d[1,1]*d[0,0]"))
    assert free_equal(P("d[0,0] + x[1,0]"), P("x[1,0] + d[0,0]"))


@pytest.mark.parametrize("bad", ["x[0,0]", "d[1,2]", "x[2,2]", "d[-1,0]"])
def test_out_of_range_generators(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_generator_constructors_validate():
    with pytest.raises(ValueError):
        Chi(0, 0)
    with pytest.raises(ValueError):
        Del(1, 2)


@pytest.mark.parametrize("bad", ["d[1,0]*", "d[1,0", "2**d[0,0]", "q[0,0]", ""])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_noncomposable_product_in_text_is_zero():
    assert parse("d[0,0]*d[0,0]") == Element.zero()


def test_identity_syntax():
    assert parse("1[2]") == Element.identity(2)
    assert format_element(Element.identity(2)) == "1[2]"
    assert format_element(Element.zero()) == "0"


def test_word_levels():
    w = Word.of(Del(1, 1), Del(0, 0))
    assert (w.source, w.target) == (0, 2)


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False))
def test_print_parse_round_trip(r):
    from conftest import random_element
    x = random_element(r, kinds="dxr")
    assert parse(format_element(x)) == x


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_compose_associative_and_bilinear(r):
    from conftest import random_element
    a, b, c, d = (random_element(r, terms=3) for _ in range(4))
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a + d, b) == compose(a, b) + compose(d, b)
    assert compose(a, b + d) == compose(a, b) + compose(a, d)
