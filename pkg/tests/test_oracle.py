import random
from fractions import Fraction
from math import comb, factorial

import pytest

from prop_rewriter import (
    Element,
    bigrade,
    ideal_generators,
    ideal_membership_oracle,
    leib_normalize,
    leibop_normalize,
    parse,
    quotient_dimension_oracle,
    symmag_normalize,
)
from prop_rewriter.elimination import DEFAULT_BACKEND, Echelon
from prop_rewriter.oracle import (
    BoundExceeded,
    QuotientOracle,
    del_past_perm,
    element_pairs,
    free_dimension,
    pairs_element,
    right_closure_holds,
    word_pair,
)
from prop_rewriter.rewrite import normal_pairs
from conftest import random_element, random_word

# frozen from the oracle itself, then cross-checked against (t+1)! C(t,n)
DIMENSIONS = {
    (0, 0): 1, (0, 1): 2, (1, 1): 2, (0, 2): 6, (1, 2): 12, (2, 2): 6,
    (0, 3): 24, (1, 3): 72, (2, 3): 72, (3, 3): 24,
    (0, 4): 120, (1, 4): 480, (2, 4): 720, (3, 4): 480, (4, 4): 120,
}


@pytest.mark.parametrize("side", ["leib", "leibop"])
@pytest.mark.parametrize("n, t", sorted(DIMENSIONS))
def test_quotient_dimensions(side, n, t):
    d = quotient_dimension_oracle(side, n, t)
    assert d == DIMENSIONS[n, t] == factorial(t + 1) * comb(t, n)


def test_free_dimension():
    assert free_dimension(0, 2) == 12
    assert free_dimension(0, 5) == 720 * 42


def test_bound_enforced():
    with pytest.raises(BoundExceeded):
        quotient_dimension_oracle("leib", 0, 6)
    with pytest.raises(BoundExceeded):
        QuotientOracle("leib", 0, 5, max_columns=10)


@pytest.mark.parametrize("side", ["leib", "leibop"])
def test_generators_are_members(side):
    for g in ideal_generators(side, 2):
        assert ideal_membership_oracle(side, g.expand())
    assert not ideal_membership_oracle(side, parse("d[1,1]*d[0,0]"))


@pytest.mark.parametrize("side", ["leib", "leibop"])
@pytest.mark.parametrize("m", range(5))
def test_right_closure(side, m):
    assert right_closure_holds(side, m)


def test_del_past_perm_matches_case_table(rng):
    for _ in range(1000):
        w = random_word(rng, rng.randint(0, 2), rng.randint(1, 5))
        (nw,) = normal_pairs(Element.word(w))
        perm, subs, source = word_pair(w)
        assert perm == nw.perm.images
        assert source == w.source
        assert pairs_element({(perm, subs, source): 1}) == nw.to_element()
    assert del_past_perm(0, (0,)) == ((0, 1), 0)


def _ending_at(rng, target: int) -> Element:
    """A random d/x word whose target level is ``target``."""
    source = rng.randint(0, target)
    gens = [("d", None)] * (target - source) + [("x", None)] * rng.randint(0, 2)
    rng.shuffle(gens)
    text, level = [], source
    for k, _ in gens:
        if k == "x" and level >= 1:
            text.append(f"x[{level},{rng.randrange(level)}]")
        elif k == "d":
            text.append(f"d[{level},{rng.randrange(level + 1)}]")
            level += 1
    return parse("*".join(reversed(text))) if text else Element.identity(target)


def _corpus(rng, side, t_max=4, size=120):
    gens = ideal_generators(side, 1)
    for _ in range(size):
        x = random_element(rng, top=t_max, terms=3)
        if rng.random() < 0.5:
            gen = rng.choice(gens)
            g = gen.expand()
            b = _ending_at(rng, gen.n)
            w = next(iter(g.terms))
            a = Element.word(random_word(rng, w.target, rng.randint(0, t_max - w.target), top=t_max))
            x = a * g * b + (x if rng.random() < 0.3 else Element.zero())
        for (n, t), piece in bigrade(x).items():
            if t <= t_max:
                yield piece


@pytest.mark.parametrize("side, normalize", [("leib", leib_normalize), ("leibop", leibop_normalize)])
def test_oracle_agrees_with_normalizer(rng, side, normalize):
    members = 0
    for piece in _corpus(rng, side):
        member = ideal_membership_oracle(side, piece)
        assert member == (normalize(piece) == 0), piece
        members += member
    assert members > 10


def _random_rows(r: random.Random, nrows: int, ncols: int, big: bool = False):
    for _ in range(nrows):
        cols = sorted(r.sample(range(ncols), r.randint(1, min(6, ncols))))
        span = 10**12 if big else 3
        vals = [r.choice([v for v in range(-span, span + 1, max(1, span // 5)) if v]) for _ in cols]
        yield cols, vals


def _fraction_rank(rows, ncols):
    mat = []
    for cols, vals in rows:
        dense = [Fraction(0)] * ncols
        for c, v in zip(cols, vals):
            dense[c] = Fraction(v)
        mat.append(dense)
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][c]:
                f = mat[i][c] / mat[rank][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


@pytest.mark.parametrize("big", [False, True])
def test_kernels_agree(big):
    if DEFAULT_BACKEND != "cython":
        pytest.skip("compiled kernel not built")
    r = random.Random(7)
    for trial in range(30):
        ncols = r.randint(3, 25)
        rows = list(_random_rows(r, r.randint(1, 30), ncols, big))
        py, cy = Echelon(ncols, "python"), Echelon(ncols, "cython")
        for cols, vals in rows:
            assert py.insert(cols, vals) == cy.insert(cols, vals)
        assert py.rank == cy.rank == _fraction_rank(rows, ncols)
        probe_cols, probe_vals = next(_random_rows(r, 1, ncols, big))
        assert py.contains(probe_cols, probe_vals) == cy.contains(probe_cols, probe_vals)


def test_overflow_falls_back_to_python():
    if DEFAULT_BACKEND != "cython":
        pytest.skip("compiled kernel not built")
    e = Echelon(3, "cython")
    e.insert([0, 1], [3, 2**40])
    e.insert([0, 2], [2**40 + 1, 5])
    e.insert([1, 2], [7, 2**41])
    assert e.backend == "python"
    assert e.rank == _fraction_rank([([0, 1], [3, 2**40]), ([0, 2], [2**40 + 1, 5]), ([1, 2], [7, 2**41])], 3)


def test_oracle_backends_agree():
    if DEFAULT_BACKEND != "cython":
        pytest.skip("compiled kernel not built")
    for n, t in [(0, 3), (1, 4)]:
        a = QuotientOracle("leib", n, t, backend="python").quotient_dimension
        b = QuotientOracle("leib", n, t, backend="cython").quotient_dimension
        assert a == b == DIMENSIONS[n, t]


def test_element_pairs_ignore_ordering():
    x = parse("d[1,0]*x[1,0] - x[2,1]*x[2,0]*d[1,1]")
    assert element_pairs(x) == {}
    assert symmag_normalize(x) == 0
