import json
import random

import pytest

from quintic_monodromy.constants import (A, A_TILDE, COUNTEREXAMPLE_X, P, T, T_INF,
                                         invariant_form)
from quintic_monodromy.group_engine import (Word, enumerate_gamma_hat, evaluate_word, member,
                                            random_word, symplectic_transvection)
from quintic_monodromy.matrix_core import IntMatrix, ModMatrix, charpoly, conjugate_exact
from quintic_monodromy.verification import (CHECK_NAMES, INT_GENS, PHI5, CheckResult,
                                            apow_closed_form, charpoly_census,
                                            check_Apow_formula, check_conjugation_display,
                                            check_cor52, check_finite_order_classification,
                                            check_lemma1, check_sp_order_oracle,
                                            check_symplectic_generators, check_theorem41,
                                            conjugation_display, gamma55_member,
                                            gamma55_tilde_member, level55_pattern, run_all,
                                            run_checks, search_t_inf_words)

I4 = IntMatrix.identity(4)


def test_constants_anchor_entries():
    assert A[0, 0] == 11 and T[1, 3] == -1 and T_INF[0, 0] == -9 and P[2, 0] == 10


def test_failed_result_needs_witness():
    with pytest.raises(ValueError):
        CheckResult("x", False, "no witness")


def test_symplectic_generators():
    assert check_symplectic_generators().passed


def test_lemma1_passes():
    r = check_lemma1()
    assert r.passed and "[5, 5, 5, -4]" in r.details


def test_lemma1_detects_perturbed_P():
    rows = [list(r) for r in P.rows]
    rows[0][0] = 6
    r = check_lemma1(IntMatrix(rows))
    assert not r.passed and r.witness is not None


def test_apow_closed_form_values():
    assert apow_closed_form(1) == A_TILDE
    assert apow_closed_form(5) == ModMatrix.identity(4, 5)
    for n in range(5):
        assert (3 * n * (n + 4) - 3 * n * n - 2 * n) % 5 == 0
    assert check_Apow_formula(25).passed


def test_theorem41():
    r = check_theorem41()
    assert r.passed
    assert "order 625" in r.details and "order 5" in r.details


def test_theorem41_cap_is_failure():
    r = check_theorem41(cap=100)
    assert not r.passed and r.witness["partial_order"] == 101


def test_census_single_words():
    A_word = evaluate_word(INT_GENS, Word.parse("A"))
    assert charpoly(A_word) == PHI5
    c = charpoly(evaluate_word(INT_GENS, Word.parse("T")))
    assert c.descending()[1:] == (-4, 6, -4, 1)
    assert -4 % 5 == 1 and 6 % 5 == 1


def test_census():
    assert charpoly_census(1000, 12, 42).passed


def test_finite_orders():
    assert charpoly(A ** 2) == PHI5
    r = check_finite_order_classification(12, 0)
    assert r.passed and "of finite order" in r.details


def test_gamma55_membership():
    assert gamma55_member(I4)
    assert gamma55_member(A) and gamma55_member(T)
    assert not gamma55_member(I4 + IntMatrix.unit(4, 1, 0))


def test_gamma55_pattern_allows_multiples_of_five():
    x = I4 + 5 * IntMatrix.unit(4, 1, 0)
    assert level55_pattern(x)
    assert not level55_pattern(I4 + IntMatrix.unit(4, 1, 0))
    # x alone is not symplectic; the block-diagonal completion diag(B, B^-T) is
    assert not gamma55_member(x)
    completed = x - 5 * IntMatrix.unit(4, 2, 3)
    assert gamma55_member(completed)


def test_gamma55_tilde_membership():
    assert gamma55_tilde_member(A) and gamma55_tilde_member(T)
    assert gamma55_tilde_member(I4)
    assert not gamma55_tilde_member(COUNTEREXAMPLE_X)
    assert gamma55_member(COUNTEREXAMPLE_X)


def test_membership_coherence_and_subgroup_property():
    rng = random.Random(9)
    xs = [evaluate_word(INT_GENS, random_word(rng, ("A", "T"), 8)) for _ in range(60)]
    for x in xs:
        if gamma55_tilde_member(x):
            assert gamma55_member(x)
    for _ in range(60):
        x, y = rng.choice(xs), rng.choice(xs)
        assert gamma55_member(x @ y) and gamma55_tilde_member(x @ y)


def test_display_identity_and_A():
    assert conjugation_display(I4) == ModMatrix.identity(4, 5)
    assert conjugate_exact(P, A).reduce(5) == conjugation_display(A)
    assert member(enumerate_gamma_hat(), conjugation_display(A))


def test_conjugation_display_check():
    assert check_conjugation_display(500, 7).passed


def test_theorem_containment_pointwise():
    gh = enumerate_gamma_hat()
    rng = random.Random(4)
    for _ in range(100):
        x = evaluate_word(INT_GENS, random_word(rng, ("A", "T"), 12))
        assert member(gh, conjugate_exact(P, x).reduce(5))


def test_cor52():
    r = check_cor52()
    assert r.passed and "1 0 0 0\n0 1 0 0\n5 0 1 0" in r.details


def test_transvection_basis_vector():
    M = symplectic_transvection((1, 0, 0, 0), 25, invariant_form())
    assert M.reduce(25).is_identity()
    assert gamma55_tilde_member(M)


def test_sp_order_oracle():
    assert check_sp_order_oracle().passed


def test_t_inf_search():
    assert search_t_inf_words(3) == ["A^-1 T^-1"]
    assert evaluate_word(INT_GENS, Word.parse("A^-1 T^-1")) == T_INF


def test_report_structure():
    r = run_all(0)
    assert r.all_passed
    assert [c.name for c in r.results] == list(CHECK_NAMES)
    assert len(r.results) >= 9
    obj = json.loads(r.to_json())
    assert set(obj) >= {"seed", "checks", "all_passed"}
    assert obj["all_passed"] is True
    assert all(set(c) == {"name", "passed", "details", "witness"} for c in obj["checks"])
    assert "timings" not in obj


def test_report_deterministic():
    a, b = run_all(3), run_all(3)
    assert a == b
    assert a.to_json() == b.to_json()
    assert a.to_text() == b.to_text()


def test_run_checks_subset_and_unknown():
    r = run_checks(["theorem41", "lemma1"], seed=0, observe=False)
    assert [c.name for c in r.results] == ["lemma1", "theorem41"]
    with pytest.raises(KeyError):
        run_checks(["nope"])


def test_failure_rendering():
    from quintic_monodromy.verification import VerificationReport
    bad = CheckResult("demo", False, "broken", {"k": 1})
    rep = VerificationReport(0, (bad,))
    assert not rep.all_passed
    assert "FAIL" in rep.to_text() and '"k": 1' in rep.to_text()
    assert json.loads(rep.to_json())["all_passed"] is False
