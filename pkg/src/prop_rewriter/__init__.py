"""Exact rewriting for face/crossing diagram algebras and their Leibniz quotients.

>>> from prop_rewriter import parse, mag_normalize, leib_normalize
>>> print(mag_normalize(parse("d[2,0]*d[1,1]")))
d[2,2]*d[1,0]
>>> print(leib_normalize(parse("d[1,1]*d[0,0] - d[1,0]*d[0,0] + x[2,1]*d[1,0]*d[0,0]")))
0
"""
from .core import (
    Chi,
    Del,
    Element,
    Generator,
    Kind,
    Rho,
    Word,
    add,
    bigrade,
    compose,
    free_equal,
    scale,
)
from .expr import ParseError, format_element, parse
from .groups import (
    BraidWord,
    Permutation,
    artin_action,
    braid_equal,
    chi_word_of_perm,
    perm_of_chi_word,
    sym_normalize,
)
from .laws import DEFAULT, MUTATIONS, Laws
from .leibniz import (
    IdealGenerator,
    alpha,
    del_in_rho,
    expand_rho,
    ideal_generators,
    leib_basis,
    leib_equal,
    leib_normalize,
    leibop_equal,
    leibop_normalize,
    omega_gen,
    omega_move_left,
    rho,
    rho_straighten,
    shift,
)
from .oracle import BoundExceeded, ideal_membership_oracle, quotient_dimension_oracle
from .rewrite import (
    NormalPair,
    OrderPresSurj,
    enumerate_basis,
    mag_normalize,
    simp_normalize,
    simp_word_of_surjection,
    surjection_of_simp_word,
    symmag_normalize,
    symsimp_normalize,
    twisted_multiply,
    zeta_gen,
    zeta_move_left,
)
from .verify import CheckInstance, Report, run_suite
