"""Case tables for the two distributive laws and the Leibniz ideal generators.

Every engine takes a ``laws`` argument defaulting to :data:`DEFAULT`.
:data:`MUTATIONS` holds single-case corruptions used to show that the
verification suites can fail.

Chi letters are listed leftmost first and live one level up from the
input; e.g. ``zeta(n, i, j) == ((c1, c2), k)`` stands for
``x[n+1,c1]*x[n+1,c2]*d[n,k]``.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

ZetaCase = tuple[tuple[int, ...], int]
# (coefficient, chi letters, rho index)
OmegaTerm = tuple[int, tuple[int, ...], int]
# (coefficient, chi letters at level n+2, left subscript, right subscript)
IdealTerm = tuple[int, tuple[int, ...], int, int]


def zeta(n: int, i: int, j: int) -> ZetaCase:
    """``d[n,i]*x[n,j]`` rewritten as chi letters followed by one ``d``."""
    if i < j:
        return (j + 1,), i
    if i == j:
        return (i + 1, i), i + 1
    if i == j + 1:
        return (i - 1, i), i - 1
    return (j,), i


def omega(n: int, i: int, j: int) -> list[OmegaTerm]:
    """``r[n,i]*x[n,j]`` as chi prefixes times a single ``r``; ``r[n,-1]`` is dropped."""
    if j > i:
        return [(1, (j + 1,), i)]
    if j < i:
        return [(1, (j,), i)]
    out = [(1, (i + 1, i), i + 1), (-1, (i + 1, i, i + 1), i)]
    if i > 0:
        out.append((1, (i, i + 1), i - 1))
    return out


def leib_generator(n: int, j: int) -> list[IdealTerm]:
    """``d[n+1,j+1]*d[n,j] - (1 - x[n+2,j+1])*d[n+1,j]*d[n,j]``."""
    return [(1, (), j + 1, j), (-1, (), j, j), (1, (j + 1,), j, j)]


def leibop_generator(n: int, j: int) -> list[IdealTerm]:
    """``d[n+1,j]*d[n,j] - (1 - x[n+2,j])*d[n+1,j+1]*d[n,j]``.

    The crossing sits on the first two inputs, mirroring the Leibniz
    generator; this is the image of that generator under ``alpha``.
    """
    return [(1, (), j, j), (-1, (), j + 1, j), (1, (j,), j + 1, j)]


@dataclass(frozen=True)
class Laws:
    name: str = "default"
    zeta: Callable[[int, int, int], ZetaCase] = zeta
    omega: Callable[[int, int, int], list[OmegaTerm]] = omega
    leib: Callable[[int, int], list[IdealTerm]] = leib_generator
    leibop: Callable[[int, int], list[IdealTerm]] = leibop_generator


DEFAULT = Laws()


def _zeta_patch(case: str, value: Callable[[int, int, int], ZetaCase]):
    def patched(n, i, j):
        hit = {
            "lt": i < j,
            "eq": i == j,
            "succ": i == j + 1,
            "gt": i > j + 1,
        }[case]
        return value(n, i, j) if hit else zeta(n, i, j)

    return patched


def _omega_patch(case: str, value: Callable[[int, int, int], list[OmegaTerm]]):
    def patched(n, i, j):
        hit = {"gt": j > i, "lt": j < i, "eq": j == i}[case]
        return value(n, i, j) if hit else omega(n, i, j)

    return patched


def _flip_middle(n, i, j):
    terms = omega(n, i, j)
    if i != j:
        return terms
    c, letters, k = terms[1]
    return [terms[0], (-c, letters, k)] + terms[2:]


MUTATIONS: dict[str, Laws] = {
    # zeta, i < j: lift the wrong crossing
    "zeta-lt-index": replace(DEFAULT, name="zeta-lt-index", zeta=_zeta_patch("lt", lambda n, i, j: ((j,), i))),
    # zeta, i = j: crossings in the wrong order
    "zeta-eq-order": replace(DEFAULT, name="zeta-eq-order", zeta=_zeta_patch("eq", lambda n, i, j: ((i, i + 1), i + 1))),
    # zeta, i = j: keep the old face index
    "zeta-eq-face": replace(DEFAULT, name="zeta-eq-face", zeta=_zeta_patch("eq", lambda n, i, j: ((i + 1, i), i))),
    # zeta, i = j + 1: crossings in the wrong order
    "zeta-succ-order": replace(DEFAULT, name="zeta-succ-order", zeta=_zeta_patch("succ", lambda n, i, j: ((i, i - 1), i - 1))),
    # zeta, i > j + 1: shift the crossing
    "zeta-gt-index": replace(DEFAULT, name="zeta-gt-index", zeta=_zeta_patch("gt", lambda n, i, j: ((j + 1,), i))),
    # omega, j > i: crossing not shifted
    "omega-gt-index": replace(DEFAULT, name="omega-gt-index", omega=_omega_patch("gt", lambda n, i, j: [(1, (j,), i)])),
    # omega, j < i: crossing shifted
    "omega-lt-index": replace(DEFAULT, name="omega-lt-index", omega=_omega_patch("lt", lambda n, i, j: [(1, (j + 1,), i)])),
    # omega, j = i: sign of the middle term
    "omega-eq-sign": replace(DEFAULT, name="omega-eq-sign", omega=_flip_middle),
    # Leibniz generator with (1 + x) in place of (1 - x)
    "leib-sign": replace(
        DEFAULT,
        name="leib-sign",
        leib=lambda n, j: [(1, (), j + 1, j), (-1, (), j, j), (-1, (j + 1,), j, j)],
    ),
    # opposite Leibniz generator with (1 + x) in place of (1 - x)
    "leibop-sign": replace(
        DEFAULT,
        name="leibop-sign",
        leibop=lambda n, j: [(1, (), j, j), (-1, (), j + 1, j), (-1, (j,), j + 1, j)],
    ),
}
