"""Verification suites with machine-readable reports.

Each suite enumerates every instance inside its bounds and records a
:class:`CheckInstance`.  Failing instances carry a counterexample pair
written in the expression grammar, so they can be replayed with the CLI.
All suites accept a ``laws`` table, which is how the mutation tests
inject corrupted case tables.
"""
from __future__ import annotations

import json
import time
from fractions import Fraction
from itertools import product
from dataclasses import dataclass, field
from math import comb, factorial, lcm
from typing import Callable, Iterable

from .core import Element, Generator, Kind, Word
from .elimination import Echelon
from .expr import format_element
from .groups import (
    BraidWord,
    Permutation,
    all_perms,
    braid_equal,
    chi_word,
    chi_word_of_perm,
    compose,
    perm_of_letters,
    reduced_letters,
)
from .laws import DEFAULT, Laws
from .leibniz import (
    LEIB,
    LEIBOP,
    _rho_past_perm,
    alpha,
    expand_rho,
    ideal_generators,
    leib_basis,
    leib_equal,
    leib_pairs,
    leibop_pairs,
    omega_gen,
    rho_word,
)
from .oracle import oracle, pairs_element
from .rewrite import (
    MAG,
    SIMP,
    _zeta_word,
    del_word,
    enumerate_basis,
    iter_del_words,
    mag_tails,
    simp_normalize,
    simp_word_of_surjection,
    split_ordered,
    straighten,
    surjection_of_simp_word,
    surjections,
    symmag_normalize,
)

SUITES = ("zeta-braid", "zeta-simp-sym", "transpositions", "alpha", "rho", "main-theorem", "delta-plus")


@dataclass
class CheckInstance:
    suite: str
    name: str
    paper_ref: str
    params: dict
    passed: bool
    counterexample: tuple[str, str] | None = None

    def __post_init__(self):
        if self.passed == (self.counterexample is not None):
            raise ValueError("a counterexample is present exactly when the check fails")

    def to_json(self) -> dict:
        out = {"name": self.name, "paper_ref": self.paper_ref, "params": self.params, "passed": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = {"lhs": self.counterexample[0], "rhs": self.counterexample[1]}
        return out


@dataclass
class Report:
    suite: str
    bounds: dict
    checks: list[CheckInstance] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckInstance]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "bounds": self.bounds,
            "checks": [c.to_json() for c in self.checks],
            "passed": self.passed,
            "elapsed_ms": self.elapsed_ms,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


class _Builder:
    def __init__(self, suite: str, bounds: dict):
        self.report = Report(suite, bounds)
        self._start = time.perf_counter()

    def add(self, name: str, ref: str, params: dict, lhs, rhs, equal: bool | None = None) -> None:
        """Record one check; ``lhs``/``rhs`` are elements or grammar strings."""
        if equal is None:
            equal = lhs == rhs
        cx = None
        if not equal:
            cx = tuple(x if isinstance(x, str) else format_element(x) for x in (lhs, rhs))
        self.report.checks.append(CheckInstance(self.report.suite, name, ref, params, equal, cx))

    def done(self) -> Report:
        self.report.checks.sort(key=lambda c: (c.name, tuple(c.params.values())))
        self.report.elapsed_ms = round((time.perf_counter() - self._start) * 1000, 3)
        return self.report


def _gens(*specs) -> Word:
    """A word from ``(kind, level, index)`` triples, leftmost first."""
    gens = tuple(Generator(k, n, i) for k, n, i in specs)
    return Word(gens, gens[-1].source)


D, X, R = Kind.DEL, Kind.CHI, Kind.RHO


def _count_scalar(k: int, t: int) -> str:
    # numbers in a counterexample are written as multiples of an identity
    return f"{k}*1[{t}]" if k else "0"


# ------------------------------------------------------------- zeta suites


def _braid_side(w: Word, laws: Laws, strict: bool) -> tuple[BraidWord, tuple[int, ...], Word]:
    ordered = _zeta_word(w, laws)
    letters, subs = split_ordered(ordered)
    return BraidWord(ordered.target, letters), straighten(subs, strict), ordered


def _braid_pair_check(b: _Builder, name: str, ref: str, params: dict, u: Word, v: Word,
                      laws: Laws, strict: bool) -> None:
    bu, su, ou = _braid_side(u, laws, strict)
    bv, sv, ov = _braid_side(v, laws, strict)
    ok = braid_equal(bu, bv) and su == sv
    shown = []
    for br, s in ((bu, su), (bv, sv)):
        shown.append(Element.word(Word(chi_word(br.level, br.letters).gens + del_word(u.source, s).gens, u.source)))
    b.add(name, ref, params, shown[0], shown[1], ok)


def check_zeta_preserves_braid(n_max: int = 6, laws: Laws = DEFAULT) -> Report:
    """The face/crossing law respects the far-commutation, braid and Mag relations."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    b = _Builder("zeta-braid", {"n_max": n_max})
    for n in range(n_max + 1):
        for i in range(n + 1):
            for j in range(n):
                for k in range(j + 2, n):
                    _braid_pair_check(
                        b, "commutation", "zeta respects far commutation",
                        {"n": n, "i": i, "j": j, "k": k},
                        _gens((D, n, i), (X, n, j), (X, n, k)),
                        _gens((D, n, i), (X, n, k), (X, n, j)), laws, False)
            for j in range(n - 1):
                _braid_pair_check(
                    b, "braid", "zeta respects the braid relation",
                    {"n": n, "i": i, "j": j},
                    _gens((D, n, i), (X, n, j), (X, n, j + 1), (X, n, j)),
                    _gens((D, n, i), (X, n, j + 1), (X, n, j), (X, n, j + 1)), laws, False)
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                for k in range(n):
                    _braid_pair_check(
                        b, "mag-relation", "zeta respects the Mag relation (right transposition)",
                        {"n": n, "i": i, "j": j, "k": k},
                        _gens((D, n + 1, i), (D, n, j), (X, n, k)),
                        _gens((D, n + 1, j + 1), (D, n, i), (X, n, k)), laws, False)
    return b.done()


def check_zeta_simp_and_sym(n_max: int = 6, laws: Laws = DEFAULT) -> Report:
    """The law respects the Simp relation over Braid and the involution of Sym."""
    b = _Builder("zeta-simp-sym", {"n_max": n_max})
    for n in range(n_max + 1):
        for i in range(n + 1):
            for k in range(n):
                _braid_pair_check(
                    b, "simp-relation", "zeta respects the Simp relation",
                    {"n": n, "i": i, "k": k},
                    _gens((D, n + 1, i), (D, n, i), (X, n, k)),
                    _gens((D, n + 1, i + 1), (D, n, i), (X, n, k)), laws, True)
            for j in range(n):
                w = _gens((D, n, i), (X, n, j), (X, n, j))
                lhs = symmag_normalize(Element.word(w), laws)
                rhs = Element.gen(Generator(D, n, i))
                b.add("sym-involution", "zeta respects the square relation of Sym",
                      {"n": n, "i": i, "j": j}, lhs, rhs)
            lhs = Element.word(_zeta_word(Word((Generator(D, n, i),), n), laws))
            b.add("unit", "zeta is unital", {"n": n, "i": i}, lhs, Element.gen(Generator(D, n, i)))
    return b.done()


# ------------------------------------------------------ transposition diagrams


class _Law:
    """A law ``B (x) A -> A (x) B`` with outputs ``{(perm, subs): coef}``."""

    def __init__(self, name: str, laws: Laws):
        self.name = name
        self.laws = laws
        self.kind = R if name == "omega-leib" else D
        self.strict = name != "zeta-symmag"

    def b_words(self, level: int, length: int, top: int) -> Iterable[Word]:
        if level + length - 1 > top:
            return
        for w in iter_del_words(level, length):
            yield Word(tuple(Generator(self.kind, g.level, g.index) for g in w.gens), level)

    def mult_b(self, bs: Word, bs2: Word) -> tuple[int, ...]:
        return straighten([g.index for g in bs.gens + bs2.gens], self.strict)

    def apply(self, bw: Word, letters: tuple[int, ...]) -> dict:
        """Move the crossing word (at the source of ``bw``) left through ``bw``."""
        if self.kind == D:
            w = Word(bw.gens + chi_word(bw.source, letters).gens, bw.source) if letters else bw
            v = _zeta_word(w, self.laws)
            lets, subs = split_ordered(v)
            return {(perm_of_letters(v.target, lets), straighten(subs, self.strict)): 1}
        # the group factor stays a permutation while it passes each r symbol
        state = {(perm_of_letters(bw.source, letters), ()): Fraction(1)}
        for g in reversed(bw.gens):
            nxt: dict = {}
            for (p, subs), c in state.items():
                for (p2, k), c2 in _rho_past_perm(g.level, g.index, p, self.laws):
                    key = (p2, (k,) + subs)
                    v = nxt.get(key, 0) + c * c2
                    if v:
                        nxt[key] = v
                    else:
                        nxt.pop(key, None)
            state = nxt
        out: dict = {}
        for (p, subs), c in state.items():
            key = (p, straighten(subs, True))
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return out

    def render(self, x: dict, source: int) -> Element:
        make = rho_word if self.kind == R else del_word
        acc = {}
        for (p, subs), c in x.items():
            w = Word(chi_word_of_perm(Permutation(p)).gens + make(source, subs).gens, source)
            acc[w] = acc.get(w, 0) + c
        return Element(acc)

    def same(self, x: dict, y: dict, source: int) -> bool:
        if x == y:
            return True
        if self.kind == R:
            return leib_equal(self.render(x, source), self.render(y, source), self.laws)
        return x == y


def _chi_words(level: int, len_max: int) -> Iterable[tuple[int, ...]]:
    for length in range(len_max + 1):
        if level == 0 and length:
            return
        yield from product(range(level), repeat=length)


def check_transposition_diagrams(law: str = "zeta-symmag", n_max: int = 4, len_max: int = 3,
                                 laws: Laws = DEFAULT) -> Report:
    """Both right-transposition squares and unitality for a distributive law.

    ``law`` is ``zeta-symmag``, ``zeta-symsimp`` or ``omega-leib``.  Words of
    length up to ``len_max`` are used, with generators at levels up to
    ``n_max``.
    """
    if law not in ("zeta-symmag", "zeta-symsimp", "omega-leib"):
        raise ValueError(f"unknown law {law!r}")
    if n_max < 1 or len_max < 1:
        raise ValueError("bounds must be at least 1")
    L = _Law(law, laws)
    b = _Builder("transpositions", {"law": law, "n_max": n_max, "len_max": len_max})
    ref_b = "right transposition: product in the face factor"
    ref_a = "right transposition: product in the group factor"
    for n in range(n_max + 1):
        chis = list(_chi_words(n, len_max))
        for l1 in range(len_max + 1):
            for b1 in L.b_words(n, l1, n_max):
                m = b1.target
                for l2 in range(len_max + 1):
                    for b2 in L.b_words(m, l2, n_max):
                        full = _word_of(L, n, L.mult_b(b2, b1))
                        for a in chis:
                            lhs = L.apply(full, a)
                            rhs: dict = {}
                            for (p1, s1), c1 in L.apply(b1, a).items():
                                a1 = reduced_letters(p1)
                                for (p2, s2), c2 in L.apply(b2, a1).items():
                                    key = (p2, straighten(s2 + s1, L.strict))
                                    v = rhs.get(key, 0) + c1 * c2
                                    if v:
                                        rhs[key] = v
                                    else:
                                        rhs.pop(key, None)
                            b.add("square-b", ref_b,
                                  {"n": n, "outer": _show(b2), "inner": _show(b1), "a": list(a)},
                                  L.render(lhs, n), L.render(rhs, n), L.same(lhs, rhs, n))
        # product in the group factor
        for l1 in range(1, len_max + 1):
            for b1 in L.b_words(n, l1, n_max):
                for a in chis:
                    for a2 in chis:
                        joined = reduced_letters(perm_of_letters(n, a + a2))
                        lhs = L.apply(b1, joined)
                        rhs = {}
                        for (p1, s1), c1 in L.apply(b1, a).items():
                            tail = _word_of(L, n, s1)
                            for (p2, s2), c2 in L.apply(tail, a2).items():
                                key = (compose(p1, p2), s2)
                                v = rhs.get(key, 0) + c1 * c2
                                if v:
                                    rhs[key] = v
                                else:
                                    rhs.pop(key, None)
                        b.add("square-a", ref_a,
                              {"n": n, "b": _show(b1), "left": list(a), "right": list(a2)},
                              L.render(lhs, n), L.render(rhs, n), L.same(lhs, rhs, n))
        # unitality
        for a in chis:
            got = L.apply(Word((), n), a)
            want = {(perm_of_letters(n, a), ()): 1}
            b.add("unit-b", "unitality in the face factor", {"n": n, "a": list(a)},
                  L.render(got, n), L.render(want, n), got == want)
        for l1 in range(1, len_max + 1):
            for b1 in L.b_words(n, l1, n_max):
                got = L.apply(b1, ())
                want = {(tuple(range(b1.target + 1)), straighten([g.index for g in b1.gens], L.strict)): 1}
                b.add("unit-a", "unitality in the group factor", {"n": n, "b": _show(b1)},
                      L.render(got, n), L.render(want, n), got == want)
    return b.done()


def _word_of(L: _Law, source: int, subs) -> Word:
    make = rho_word if L.kind == R else del_word
    return make(source, tuple(subs))


def _show(w: Word) -> str:
    return format_element(Element.word(w))


# ----------------------------------------------------------------- alpha


def _gens_at(n_max: int) -> Iterable[Generator]:
    for n in range(n_max + 1):
        for j in range(n + 1):
            yield Generator(D, n, j)
        for i in range(n):
            yield Generator(X, n, i)


def check_alpha(n_max: int = 5, laws: Laws = DEFAULT) -> Report:
    """The automorphism respects every relation and swaps the two ideals."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    b = _Builder("alpha", {"n_max": n_max})

    def sm(x):
        return symmag_normalize(x, laws)

    gens = list(_gens_at(n_max))
    for g2 in gens:
        for g1 in gens:
            if g1.source != g2.target or g1.level > n_max:
                continue
            w = Word((g1, g2), g2.source)
            p = {"left": str(g1), "right": str(g2)}
            b.add("multiplicative", "alpha is multiplicative", p,
                  sm(alpha(Element.word(w))), sm(alpha(Element.gen(g1)) * alpha(Element.gen(g2))))
            b.add("involution-pair", "alpha squared is the identity", p,
                  sm(alpha(alpha(Element.word(w)))), sm(Element.word(w)))
            if g1.kind == D and g2.kind == X:
                # mixed relation: d*x equals its zeta rewrite
                lhs = alpha(Element.word(w))
                rhs = alpha(Element.word(_zeta_word(w, laws)))
                b.add("mixed-relation", "alpha respects the face/crossing law", p, sm(lhs), sm(rhs))
    for g in gens:
        b.add("involution", "alpha squared is the identity", {"gen": str(g)},
              sm(alpha(alpha(Element.gen(g)))), sm(Element.gen(g)))
    for n in range(n_max):
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                lhs = alpha(Element.word(_gens((D, n + 1, i), (D, n, j))))
                rhs = alpha(Element.word(_gens((D, n + 1, j + 1), (D, n, i))))
                b.add("mag-relation", "alpha respects the Mag relation", {"n": n, "i": i, "j": j}, sm(lhs), sm(rhs))
    for n in range(n_max + 1):
        b.add("unit", "alpha fixes identities", {"n": n},
              alpha(Element.identity(n)), Element.identity(n))
    for g in ideal_generators(LEIB, n_max):
        img = alpha(g.expand(laws))
        b.add("leib-to-leibop", "alpha carries the Leibniz ideal into the opposite one",
              {"n": g.n, "j": g.j}, pairs_element(leibop_pairs(img, laws)), Element.zero())
    for g in ideal_generators(LEIBOP, n_max):
        img = alpha(g.expand(laws))
        b.add("leibop-to-leib", "alpha carries the opposite ideal into the Leibniz one",
              {"n": g.n, "j": g.j}, rho_pairs_element(leib_pairs(img, laws)), Element.zero())
    return b.done()


def rho_pairs_element(pairs: dict) -> Element:
    acc = {}
    for (p, subs, source), c in pairs.items():
        acc[Word(chi_word_of_perm(Permutation(p)).gens + rho_word(source, subs).gens, source)] = c
    return Element(acc)


# ------------------------------------------------------------------- rho


def _rho_routes(diff: Element, n: int, t: int, laws: Laws) -> tuple[bool, bool]:
    by_alpha = not leibop_pairs(alpha(diff), laws)
    by_oracle = oracle(LEIB, n, t, laws).contains(diff)
    return by_alpha, by_oracle


def check_rho(n_max: int = 5, laws: Laws = DEFAULT) -> Report:
    """The r/crossing law and the presimplicial r relation hold in Leib.

    Each identity is expanded to faces and crossings and its difference is
    tested twice: through ``alpha`` and the opposite normalizer, and by
    the linear-algebra oracle.  An instance passes when both routes say
    the difference lies in the ideal.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    b = _Builder("rho", {"n_max": n_max})

    def record(name, ref, params, lhs, rhs, n, t):
        diff = expand_rho(lhs) - expand_rho(rhs)
        by_alpha, by_oracle = _rho_routes(diff, n, t, laws)
        params = dict(params, alpha_route=by_alpha, oracle_route=by_oracle)
        b.add(name, ref, params, expand_rho(lhs), expand_rho(rhs), by_alpha and by_oracle)

    for n in range(1, n_max + 1):
        for i in range(n + 1):
            for j in range(n):
                r, c = Generator(R, n, i), Generator(X, n, j)
                record("omega", "r/crossing distributive law", {"n": n, "i": i, "j": j},
                       Element.word(Word((r, c), n)), omega_gen(r, c, laws), n, n + 1)
    for n in range(n_max + 1):
        for i in range(n + 2):
            for j in range(i, n + 1):
                lhs = Element.word(_gens((R, n + 1, i), (R, n, j)))
                rhs = Element.word(_gens((R, n + 1, j + 1), (R, n, i)))
                record("rho-simp", "presimplicial relation for r", {"n": n, "i": i, "j": j}, lhs, rhs, n, n + 2)
    return b.done()


# ---------------------------------------------------------- main theorem


def _normal_rank(pairs_of: Callable[[Element], dict], n: int, t: int) -> int:
    """Rank of the normal forms of every free basis monomial at ``(n, t)``."""
    cols: dict = {}
    target = factorial(t + 1) * comb(t, n)
    rows = []
    for pair in enumerate_basis("symmag", n, t):
        out = pairs_of(pair.to_element())
        row = {}
        for (p, subs, _), c in out.items():
            key = (p, subs)
            if key not in cols:
                cols[key] = len(cols)
            row[cols[key]] = c
        rows.append(row)
    ech = Echelon(max(len(cols), 1))
    for row in rows:
        keys = sorted(row)
        vals = [row[k] for k in keys]
        den = lcm(*(Fraction(v).denominator for v in vals))
        ech.insert(keys, [int(v * den) for v in vals])
        if ech.rank == target or ech.rank == len(cols):
            break
    return ech.rank


def check_main_theorem(t_max: int = 5, laws: Laws = DEFAULT,
                       pairs: Iterable[tuple[int, int]] | None = None) -> Report:
    """Quotient dimensions, basis counts and normalizer kernels agree at every bidegree."""
    if pairs is None:
        pairs = [(n, t) for t in range(t_max + 1) for n in range(t + 1)]
    pairs = sorted(pairs)
    b = _Builder("main-theorem", {"t_max": max(t for _, t in pairs) if pairs else 0})
    ref = "Leib is the twisted product of Sym and Simp"
    for n, t in pairs:
        expected = factorial(t + 1) * comb(t, n)
        counts = {
            "formula": expected,
            "oracle_leib": oracle(LEIB, n, t, laws).quotient_dimension,
            "oracle_leibop": oracle(LEIBOP, n, t, laws).quotient_dimension,
            "rho_basis": len(leib_basis(n, t)),
            "symsimp_basis": len(enumerate_basis("symsimp", n, t)),
            "leib_rank": _normal_rank(lambda x: leib_pairs(x, laws), n, t),
            "leibop_rank": _normal_rank(lambda x: leibop_pairs(x, laws), n, t),
        }
        for key, v in counts.items():
            if key != "formula":
                b.add(f"dimension-{key}", ref, {"n": n, "t": t, "expected": expected, "got": v},
                      _count_scalar(v, t), _count_scalar(expected, t), v == expected)
        # the normalizers kill the ideal they are built for
        for side, pairs_of in ((LEIB, leib_pairs), (LEIBOP, leibop_pairs)):
            bad = None
            for x in oracle(side, n, t, laws).spanning():
                e = pairs_element(x)
                if pairs_of(e, laws):
                    bad = e
                    break
            b.add(f"kills-{side}-ideal", "normal forms vanish on the ideal", {"n": n, "t": t},
                  bad if bad is not None else "0", "0", bad is None)
    return b.done()


# -------------------------------------------------------------- delta plus


def check_delta_plus(t_max: int = 6) -> Report:
    """Simp words and nondecreasing surjections compose the same way."""
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    b = _Builder("delta-plus", {"t_max": t_max})
    ref = "Simp is the opposite of the surjection category"
    for m in range(t_max + 1):
        for n in range(m + 1):
            bad = None
            for f in surjections(m, n):
                w = simp_word_of_surjection(f)
                if surjection_of_simp_word(w) != f or (w.source, w.target) != (n, m):
                    bad = (Element.word(w), f)
                    break
            b.add("bijection", ref, {"m": m, "n": n},
                  bad[0] if bad else "0", "0", bad is None)
            for k in range(n, m + 1):
                lhs_bad = None
                for f in surjections(m, k):
                    for g in surjections(k, n):
                        wf, wg = simp_word_of_surjection(f), simp_word_of_surjection(g)
                        prod = simp_normalize(Element.word(wf) * Element.word(wg))
                        want = Element.word(simp_word_of_surjection(g.after(f)))
                        if prod != want:
                            lhs_bad = (prod, want)
                            break
                    if lhs_bad:
                        break
                b.add("composition", ref, {"m": m, "k": k, "n": n},
                      lhs_bad[0] if lhs_bad else "0", lhs_bad[1] if lhs_bad else "0", lhs_bad is None)
    return b.done()


# ------------------------------------------------------------------ driver


def run_suite(name: str, level: int | None = None, laws: Laws = DEFAULT) -> list[Report]:
    """Run one suite (or ``all``) with its default bounds, or ``level`` for all of them."""
    def lv(default):
        return default if level is None else level

    table = {
        "zeta-braid": lambda: [check_zeta_preserves_braid(max(2, lv(6)), laws)],
        "zeta-simp-sym": lambda: [check_zeta_simp_and_sym(lv(6), laws)],
        "transpositions": lambda: [
            check_transposition_diagrams(law, max(1, lv(4)), 3, laws)
            for law in ("zeta-symmag", "zeta-symsimp", "omega-leib")
        ],
        "alpha": lambda: [check_alpha(max(1, lv(5)), laws)],
        "rho": lambda: [check_rho(max(1, lv(5)), laws)],
        "main-theorem": lambda: [check_main_theorem(lv(5), laws)],
        "delta-plus": lambda: [check_delta_plus(max(1, lv(6)))],
    }
    if name == "all":
        return [r for key in SUITES for r in table[key]()]
    if name not in table:
        raise KeyError(name)
    return table[name]()
