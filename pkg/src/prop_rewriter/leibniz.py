"""The Leibniz quotients of Sym (x) Mag and their two normalizers.

``leib_normalize`` rewrites faces into ``r`` symbols, pushes crossings to
the left with the omega law and straightens the ``r`` word.
``leibop_normalize`` stays with faces and replaces an equal adjacent pair
``d[u+1,a]*d[u,a]`` by ``(1 - x[u+2,a])*d[u+1,a+1]*d[u,a]``.  The
automorphism :func:`alpha` exchanges the two ideals, so each normalizer
can be checked against the other.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .core import Element, Generator, Kind, Word, linear_map, multiplicative_map
from .groups import Permutation, chi_word_of_perm, compose, perm_of_letters, reduced_letters
from .laws import DEFAULT, Laws
from .rewrite import MAG, _zeta_word, del_word, normal_pairs, simp_tails, split_ordered, straighten

LEIB = "leib"
LEIBOP = "leibop"

# (permutation images, subscripts) -> coefficient; the source level is carried separately
State = dict


def _chi(n: int, letters) -> tuple[Generator, ...]:
    return tuple(Generator(Kind.CHI, n, a) for a in letters)


def rho_word(source: int, subs) -> Word:
    top = source + len(subs) - 1
    return Word(tuple(Generator(Kind.RHO, top - k, j) for k, j in enumerate(subs)), source)


class IdealGenerator(NamedTuple):
    side: str
    n: int
    j: int

    def terms(self, laws: Laws = DEFAULT):
        table = laws.leib if self.side == LEIB else laws.leibop
        return table(self.n, self.j)

    def expand(self, laws: Laws = DEFAULT) -> Element:
        n = self.n
        if not 0 <= self.j <= n:
            raise ValueError(f"ideal generator index {self.j} out of range at level {n}")
        acc = {}
        for c, letters, a, b in self.terms(laws):
            w = Word(_chi(n + 2, letters) + (Generator(Kind.DEL, n + 1, a), Generator(Kind.DEL, n, b)), n)
            acc[w] = acc.get(w, 0) + c
        return Element(acc)


def ideal_generators(side: str, n_max: int) -> list[IdealGenerator]:
    return [IdealGenerator(side, n, j) for n in range(n_max + 1) for j in range(n + 1)]


def rho(n: int, j: int) -> Element:
    """``r[n,j]`` written in faces and crossings (closed form)."""
    if not -1 <= j <= n:
        raise ValueError(f"rho index {j} out of range at level {n}")
    if j == -1:
        return Element.zero()
    acc = {Word((Generator(Kind.DEL, n, j),), n): 1}
    for a in range(1, j + 1):
        letters = tuple(range(j, a - 1, -1))
        acc[Word(_chi(n + 1, letters) + (Generator(Kind.DEL, n, a - 1),), n)] = 1
    return Element(acc)


def rho_recursive(n: int, j: int) -> Element:
    if not -1 <= j <= n:
        raise ValueError(f"rho index {j} out of range at level {n}")
    out = Element.zero()
    for k in range(j + 1):
        out = Element.gen(Generator(Kind.DEL, n, k)) + (
            Element.gen(Generator(Kind.CHI, n + 1, k)) * out if k else Element.zero()
        )
    return out


def del_in_rho(n: int, j: int) -> Element:
    """``d[n,j] = r[n,j] - x[n+1,j]*r[n,j-1]``."""
    if not 0 <= j <= n:
        raise ValueError(f"face index {j} out of range at level {n}")
    out = Element.gen(Generator(Kind.RHO, n, j))
    if j > 0:
        out = out - Element.gen(Generator(Kind.CHI, n + 1, j)) * Element.gen(Generator(Kind.RHO, n, j - 1))
    return out


def expand_rho(x: Element) -> Element:
    """Replace every ``r`` symbol by its face/crossing expansion."""
    return multiplicative_map(
        x, lambda g: rho(g.level, g.index) if g.kind == Kind.RHO else Element.gen(g)
    )


def omega_gen(r: Generator, c: Generator, laws: Laws = DEFAULT) -> Element:
    if r.kind != Kind.RHO or c.kind != Kind.CHI:
        raise ValueError("omega takes an r symbol followed by a crossing")
    if r.level != c.level:
        raise ValueError(f"{r} and {c} are not composable")
    n = r.level
    acc = {}
    for coef, letters, k in laws.omega(n, r.index, c.index):
        w = Word(_chi(n + 1, letters) + (Generator(Kind.RHO, n, k),), n)
        acc[w] = acc.get(w, 0) + coef
    return Element(acc)


@lru_cache(maxsize=None)
def _omega_word(w: Word, laws: Laws) -> tuple:
    out: dict = {}
    todo = {w: Fraction(1)}
    while todo:
        v, c = todo.popitem()
        gens = v.gens
        for p in range(len(gens) - 1):
            if gens[p].kind == Kind.RHO and gens[p + 1].kind == Kind.CHI:
                r, x = gens[p], gens[p + 1]
                for coef, letters, k in laws.omega(r.level, r.index, x.index):
                    new = Word(gens[:p] + _chi(r.level + 1, letters) + (Generator(Kind.RHO, r.level, k),) + gens[p + 2:], v.source)
                    s = todo.get(new, 0) + c * coef
                    if s:
                        todo[new] = s
                    else:
                        todo.pop(new, None)
                break
        else:
            s = out.get(v, 0) + c
            if s:
                out[v] = s
            else:
                out.pop(v, None)
    return tuple(out.items())


def omega_move_left(x: Element, laws: Laws = DEFAULT) -> Element:
    """Move every crossing left of every ``r`` symbol, leftmost adjacency first."""
    acc: dict = {}
    for w, c in x.terms.items():
        if Kind.DEL in w.kinds():
            raise ValueError("omega acts on r/x words; rewrite faces with del_in_rho first")
        for v, k in _omega_word(w, laws):
            acc[v] = acc.get(v, 0) + c * k
    return Element(acc)


def rho_straighten(x: Element) -> Element:
    """Strictly decreasing ``r`` subscripts via ``r_i r_j -> r_{j+1} r_i`` for ``i <= j``."""

    def one(w: Word) -> Element:
        k = 0
        while k < len(w.gens) and w.gens[k].kind == Kind.CHI:
            k += 1
        rest = w.gens[k:]
        if any(g.kind != Kind.RHO for g in rest):
            raise ValueError(f"{w} is not a crossing prefix followed by r symbols")
        subs = straighten([g.index for g in rest], strict=True)
        return Element._raw({Word(w.gens[:k] + rho_word(w.source, subs).gens, w.source): 1})

    return linear_map(x, one)


# ---------------------------------------------------------------- Leib


@lru_cache(maxsize=None)
def _rho_past_perm(n: int, i: int, p: tuple[int, ...], laws: Laws) -> tuple:
    """``r[n,i]`` times the permutation ``p`` as ``sum c * p' * r[n,i']``."""
    states = {(tuple(range(n + 2)), i): Fraction(1)}
    for c in reduced_letters(p):
        nxt: dict = {}
        for (q, k), coef in states.items():
            for c2, letters, k2 in laws.omega(n, k, c):
                key = (compose(q, perm_of_letters(n + 1, letters)), k2)
                v = nxt.get(key, 0) + coef * c2
                if v:
                    nxt[key] = v
                else:
                    nxt.pop(key, None)
        states = nxt
    return tuple(states.items())


def _swap(t: int, c: int, p: tuple[int, ...]) -> tuple[int, ...]:
    # x[t,c] after p
    return tuple(c + 1 if v == c else c if v == c + 1 else v for v in p)


def _leib_left(g: Generator, state: State, laws: Laws) -> State:
    out: dict = {}

    def put(key, v):
        s = out.get(key, 0) + v
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    if g.kind == Kind.CHI:
        for (p, r), c in state.items():
            put((_swap(g.level, g.index, p), r), c)
        return out
    if g.kind == Kind.RHO:
        for (p, r), c in state.items():
            for (p2, i2), c2 in _rho_past_perm(g.level, g.index, p, laws):
                put((p2, straighten((i2,) + r, strict=True)), c * c2)
        return out
    # a face is r[n,j] - x[n+1,j]*r[n,j-1]
    out = _leib_left(Generator(Kind.RHO, g.level, g.index), state, laws)
    if g.index > 0:
        lower = _leib_left(Generator(Kind.RHO, g.level, g.index - 1), state, laws)
        lower = _leib_left(Generator(Kind.CHI, g.level + 1, g.index), lower, laws)
        for key, v in lower.items():
            s = out.get(key, 0) - v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def _leib_word(w: Word, laws: Laws) -> tuple:
    state: State = {(tuple(range(w.source + 1)), ()): Fraction(1)}
    for g in reversed(w.gens):
        state = _leib_left(g, state, laws)
    return tuple(state.items())


def leib_pairs(x: Element, laws: Laws = DEFAULT) -> dict:
    """Leib normal form as ``{(perm images, r subscripts, source): coef}``."""
    acc: dict = {}
    for w, c in x.terms.items():
        for (p, r), v in _leib_word(w, laws):
            key = (p, r, w.source)
            s = acc.get(key, 0) + c * v
            if s:
                acc[key] = s
            else:
                del acc[key]
    return acc


def _pairs_element(pairs: dict, kind: Kind) -> Element:
    make = rho_word if kind == Kind.RHO else del_word
    acc = {}
    for (p, subs, source), c in pairs.items():
        w = Word(chi_word_of_perm(Permutation(p)).gens + make(source, subs).gens, source)
        acc[w] = c
    return Element(acc)


def leib_normalize(x: Element, laws: Laws = DEFAULT) -> Element:
    """Canonical ``sum c * sigma * r-word`` with strictly decreasing ``r`` subscripts."""
    return _pairs_element(leib_pairs(x, laws), Kind.RHO)


# -------------------------------------------------------------- Leib^op

_MAX_REPLACEMENTS = 1_000_000


@lru_cache(maxsize=None)
def _leibop_tail(source: int, subs: tuple[int, ...], laws: Laws) -> tuple:
    """Leib^op normal form of ``1 * d-word`` for a Mag-normal tail."""
    t = source + len(subs)
    done: dict = {}
    todo: dict = {(tuple(range(t + 1)), subs): Fraction(1)}
    steps = 0
    while todo:
        (p, s), c = todo.popitem()
        eq = [k for k in range(len(s) - 1) if s[k] == s[k + 1]]
        if not eq:
            v = done.get((p, s), 0) + c
            if v:
                done[(p, s)] = v
            else:
                done.pop((p, s), None)
            continue
        steps += 1
        if steps > _MAX_REPLACEMENTS:
            raise RuntimeError(f"Leib^op rewriting did not terminate on {subs} from level {source}")
        k = eq[-1]
        a = s[k]
        prefix, rest = s[:k], s[k + 2:]
        # level of the lower face in the pair
        u = t - k - 2
        for coef, letters, hi, lo in _leibop_replacement(u, a, laws):
            new_mid = (hi, lo)
            if letters:
                top_src = u + 2
                w = Word(
                    del_word(top_src, prefix).gens + _chi(top_src, letters),
                    top_src,
                )
                moved = _zeta_word(w, laws)
                chi_letters, new_prefix = split_ordered(moved)
                q = compose(p, perm_of_letters(t, chi_letters))
            else:
                q, new_prefix = p, prefix
            key = (q, straighten(new_prefix + new_mid + rest, strict=False))
            v = todo.get(key, 0) + c * coef
            if v:
                todo[key] = v
            else:
                todo.pop(key, None)
    return tuple(done.items())


@lru_cache(maxsize=None)
def _leibop_replacement(u: int, a: int, laws: Laws) -> tuple:
    """Solve the Leib^op generator at ``(u, a)`` for its ``d[u+1,a]*d[u,a]`` term."""
    terms = laws.leibop(u, a)
    lead = [t for t in terms if t[1] == () and (t[2], t[3]) == (a, a)]
    if len(lead) != 1:
        raise ValueError("Leib^op generator has no unique d[u+1,a]*d[u,a] term")
    c0 = lead[0][0]
    return tuple((Fraction(-c, c0), letters, hi, lo) for c, letters, hi, lo in terms if (c, letters, hi, lo) != lead[0])


def leibop_pairs(x: Element, laws: Laws = DEFAULT) -> dict:
    """Leib^op normal form as ``{(perm images, d subscripts, source): coef}``; ``r`` symbols are expanded."""
    if Kind.RHO in x.kinds():
        x = expand_rho(x)
    acc: dict = {}
    for pair, c in normal_pairs(x, MAG, laws).items():
        src = pair.tail.source
        subs = tuple(g.index for g in pair.tail.gens)
        sigma = pair.perm.images
        for (p, s), v in _leibop_tail(src, subs, laws):
            key = (compose(sigma, p), s, src)
            w = acc.get(key, 0) + c * v
            if w:
                acc[key] = w
            else:
                del acc[key]
    return acc


def leibop_normalize(x: Element, laws: Laws = DEFAULT) -> Element:
    """Canonical ``sum c * sigma * d-word`` with strictly decreasing subscripts."""
    return _pairs_element(leibop_pairs(x, laws), Kind.DEL)


# ------------------------------------------------------- maps and equality


def alpha(x: Element) -> Element:
    """The automorphism fixing crossings and sending ``d[n,j]`` to ``x[n+1,j]*d[n,j]``."""

    def on_gen(g: Generator) -> Element:
        if g.kind == Kind.RHO:
            raise ValueError("alpha is defined on faces and crossings only")
        if g.kind == Kind.DEL:
            return Element._raw({Word((Generator(Kind.CHI, g.level + 1, g.index), g), g.level): 1})
        return Element.gen(g)

    return multiplicative_map(x, on_gen)


def shift(x: Element, k: int) -> Element:
    """Raise every level by ``k``; subscripts are unchanged."""
    if k < 0:
        raise ValueError("shift amount must be non-negative")
    if k == 0:
        return x
    return linear_map(
        x,
        lambda w: Element._raw(
            {Word(tuple(Generator(g.kind, g.level + k, g.index) for g in w.gens), w.source + k): 1}
        ),
    )


def leib_equal(x: Element, y: Element, laws: Laws = DEFAULT) -> bool:
    return not leib_pairs(x - y, laws)


def leibop_equal(x: Element, y: Element, laws: Laws = DEFAULT) -> bool:
    return not leibop_pairs(x - y, laws)


def leib_basis(source: int, target: int) -> list[Word]:
    """Crossing word of each permutation followed by each strictly decreasing ``r`` word."""
    from .groups import all_perms

    return [
        Word(chi_word_of_perm(Permutation(p)).gens + rho_word(source, s).gens, source)
        for p in all_perms(target)
        for s in simp_tails(source, target)
    ]
