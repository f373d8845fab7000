import json

import pytest

from prop_rewriter import MUTATIONS, CheckInstance, Report, parse, run_suite
from prop_rewriter.verify import (
    SUITES,
    check_alpha,
    check_delta_plus,
    check_main_theorem,
    check_rho,
    check_transposition_diagrams,
    check_zeta_preserves_braid,
    check_zeta_simp_and_sym,
)


def test_zeta_braid_small():
    r = check_zeta_preserves_braid(3)
    assert r.passed and len(r.checks) == 40
    assert {c.name for c in r.checks} == {"braid", "commutation", "mag-relation"}
    assert any(c.name == "braid" and c.params == {"n": 2, "i": 2, "j": 0} and c.passed for c in r.checks)


def test_zeta_simp_sym_small():
    r = check_zeta_simp_and_sym(4)
    assert r.passed
    assert any(c.name == "sym-involution" and c.params == {"n": 1, "i": 0, "j": 0} for c in r.checks)
    assert any(c.name == "unit" for c in r.checks)


@pytest.mark.parametrize("law", ["zeta-symmag", "zeta-symsimp", "omega-leib"])
def test_transpositions_small(law):
    r = check_transposition_diagrams(law, 3, 2)
    assert r.passed and r.checks


def test_alpha_small():
    r = check_alpha(3)
    assert r.passed
    assert {"leib-to-leibop", "leibop-to-leib", "involution", "unit"} <= {c.name for c in r.checks}


def test_rho_small_records_both_routes():
    r = check_rho(3)
    assert r.passed
    assert all(c.params["alpha_route"] and c.params["oracle_route"] for c in r.checks)


def test_main_theorem_small():
    r = check_main_theorem(3)
    assert r.passed
    dims = {(c.params["n"], c.params["t"]): c.params["got"] for c in r.checks if c.name == "dimension-leib_rank"}
    assert dims[1, 3] == 72 and dims[0, 2] == 6


def test_delta_plus_small():
    assert check_delta_plus(4).passed


def test_report_is_deterministic():
    a = check_zeta_simp_and_sym(3).to_json()
    b = check_zeta_simp_and_sym(3).to_json()
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_json_schema():
    r = check_zeta_preserves_braid(2, MUTATIONS["zeta-eq-order"])
    data = json.loads(r.dumps())
    assert set(data) == {"suite", "bounds", "checks", "passed", "elapsed_ms"}
    assert data["passed"] is False
    for c in data["checks"]:
        assert {"name", "paper_ref", "params", "passed"} <= set(c)
        assert ("counterexample" in c) == (not c["passed"])
        if not c["passed"]:
            parse(c["counterexample"]["lhs"]), parse(c["counterexample"]["rhs"])


def test_counterexample_invariant():
    with pytest.raises(ValueError):
        CheckInstance("s", "n", "ref", {}, True, ("0", "1"))
    with pytest.raises(ValueError):
        CheckInstance("s", "n", "ref", {}, False, None)
    assert Report("s", {}).passed


def test_run_suite_names():
    with pytest.raises(KeyError):
        run_suite("nope")
    assert len(SUITES) == 7


@pytest.mark.parametrize("name", sorted(MUTATIONS))
def test_every_mutation_is_caught(name):
    laws = MUTATIONS[name]
    failures = []
    for suite in ("zeta-braid", "alpha", "rho"):
        for r in run_suite(suite, 3, laws):
            failures += r.failures()
    assert failures
    for c in failures:
        lhs, rhs = c.counterexample
        assert parse(lhs) != parse(rhs) or c.name.startswith("dimension")
