import random
from fractions import Fraction

import pytest

from prop_rewriter.core import Chi, Del, Element, Rho, Word


def random_word(rng: random.Random, source: int, length: int, kinds: str = "dx", top: int = 4) -> Word:
    """A composable word read right to left, never above level ``top``."""
    gens = []
    level = source
    for _ in range(length):
        options = []
        if level < top:
            options += [k for k in kinds if k in "dr"]
        if level >= 1 and "x" in kinds:
            options.append("x")
        if not options:
            break
        k = rng.choice(options)
        if k == "x":
            gens.append(Chi(level, rng.randrange(level)))
        elif k == "d":
            gens.append(Del(level, rng.randrange(level + 1)))
            level += 1
        else:
            gens.append(Rho(level, rng.randrange(level + 1)))
            level += 1
    return Word(tuple(reversed(gens)), source)


def random_element(rng: random.Random, kinds: str = "dx", top: int = 4, terms: int = 4) -> Element:
    x = Element.zero()
    for _ in range(rng.randint(0, terms)):
        w = random_word(rng, rng.randint(0, 2), rng.randint(0, 4), kinds, top)
        x = x + Element.word(w, rng.choice([1, -1, 2, -3, Fraction(1, 2)]))
    return x


@pytest.fixture
def rng():
    return random.Random(20240601)
