"""Exit criteria.  Exact arithmetic: every comparison is equality, no tolerance.

Run alone with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import random
import time

import pytest

from quintic_monodromy.constants import (A, A_NORMAL, A_TILDE, COUNTEREXAMPLE_X, E1, E1_WORD, E2,
                                         E2_WORD, P, T, T_INF, T_NORMAL, T_TILDE)
from quintic_monodromy.group_engine import (GeneratorSet, Word, closure, decode, element_order,
                                            encode, enumerate_gamma_hat, evaluate_word, member,
                                            random_word, sp_order, symplectic_transvection)
from quintic_monodromy.matrix_core import (IntMatrix, SymplecticForm, charpoly, conjugate_exact,
                                           det, find_invariant_form, inverse_unimodular,
                                           is_symplectic, mat_pow, reduce_mod)
from quintic_monodromy.verification import (INT_GENS, MOD_GENS, PHI5, apow_closed_form,
                                            charpoly_census, check_conjugation_display,
                                            check_finite_order_classification, conjugation_display,
                                            gamma55_member, gamma55_tilde_member)

from oracles import cofactor_charpoly, count_form_preserving

criterion = pytest.mark.criterion


@criterion(1, "closure of {A~, T~} has 625 elements and equals the pattern group (< 1 s)")
def test_theorem_41():
    t0 = time.perf_counter()
    g = closure(MOD_GENS, 10_000)
    elapsed = time.perf_counter() - t0
    assert g.closed and g.order == 625
    assert g.elements == enumerate_gamma_hat().elements
    assert elapsed < 1.0


@criterion(2, "P^-1 A^-1 P and P^-1 T^-1 P equal the displayed matrices over Z")
def test_lemma_31():
    assert conjugate_exact(P, inverse_unimodular(A)) == A_NORMAL
    assert conjugate_exact(P, inverse_unimodular(T)) == T_NORMAL


@criterion(3, "E2 = A~ T~ A~^4 T~^4 and E1 = (E2^2 A~^2 T~^4 A~^3 T~)^4 mod 5")
def test_word_identities():
    assert evaluate_word(MOD_GENS, Word.parse(E2_WORD)) == E2
    gens = GeneratorSet(("A", "T", "E2"), (A_TILDE, T_TILDE, E2))
    assert evaluate_word(gens, Word.parse(E1_WORD)) == E1
    expanded = Word.parse(E1_WORD).substitute({"E2": Word.parse(E2_WORD)})
    assert evaluate_word(MOD_GENS, expanded) == E1


@criterion(4, "closed form of A~^n matches mat_pow for n in [0, 25]; A~^5 = I")
def test_power_formula():
    for n in range(26):
        assert mat_pow(A_TILDE, n) == apow_closed_form(n)
    assert mat_pow(A_TILDE, 5).is_identity()


@criterion(5, "1000 words of length <= 12: palindromic charpoly, c0 = 1, c3 = c1 = 1, c2 = 1 mod 5"
              " (< 10 s)")
def test_charpoly_census():
    t0 = time.perf_counter()
    rng = random.Random(42)
    for _ in range(1000):
        w = random_word(rng, ("A", "T"), 12)
        c0, c1, c2, c3 = charpoly(evaluate_word(INT_GENS, w)).coefficients
        assert c0 == 1 and c3 == c1 and c3 % 5 == 1 and c2 % 5 == 1, str(w)
    assert charpoly_census(1000, 12, 42).passed
    assert time.perf_counter() - t0 < 10.0


@criterion(6, "order(A) = 5 with charpoly Phi_5; T has no finite order up to 100; "
              "finite-order words have order 5")
def test_order_classification():
    assert element_order(A) == 5
    assert charpoly(A) == PHI5
    assert str(charpoly(A)) == "x^4 + x^3 + x^2 + x + 1"
    assert element_order(T, 100) is None
    r = check_finite_order_classification(12, 0)
    assert r.passed, r.details


@criterion(7, "invariant forms of A, T, T_inf: 1-dimensional, unimodular antisymmetric, preserved")
def test_symplectic_invariance():
    forms = find_invariant_form([A, T, T_INF])
    assert len(forms) == 1
    J = forms[0]
    assert J.T == -J and det(J) == 1
    form = SymplecticForm(J)
    for x in (A, T, T_INF):
        assert x.T @ J @ x == J
        assert is_symplectic(x, form)


@criterion(8, "A, T in refined subgroup; I + 5E31 in level-(5,5) but not refined; "
              "100 level-25 transvections refined")
def test_corollary_52():
    assert gamma55_tilde_member(A) and gamma55_tilde_member(T)
    X = COUNTEREXAMPLE_X
    assert X == IntMatrix.identity(4) + 5 * IntMatrix.unit(4, 2, 0)
    form = SymplecticForm(find_invariant_form([A, T, T_INF])[0])
    assert is_symplectic(X, form) and gamma55_member(X) and not gamma55_tilde_member(X)
    rng = random.Random(0)
    vectors = [(1, 0, 0, 0)]
    while len(vectors) < 100:
        v = tuple(rng.randint(-5, 5) for _ in range(4))
        if any(v):
            vectors.append(v)
    for v in vectors:
        M = symplectic_transvection(v, 25, form)
        assert is_symplectic(M, form)
        assert reduce_mod(M, 25).is_identity()
        assert gamma55_tilde_member(M, form)


@criterion(9, "500 words: P^-1 X P integral, residue matches display, lies in pattern group")
def test_conjugation_display():
    gh = enumerate_gamma_hat()
    rng = random.Random(7)
    for _ in range(500):
        x = evaluate_word(INT_GENS, random_word(rng, ("A", "T"), 12, min_len=0))
        y = conjugate_exact(P, x)            # raises unless integral
        assert y.reduce(5) == conjugation_display(x)
        assert member(gh, y.reduce(5))
    assert check_conjugation_display(500, 7).passed


@criterion(10, "sp_order matches brute force for Sp(2, F_2), Sp(2, F_3); |Sp(4, F_5)| = 9,360,000")
def test_order_formula():
    assert count_form_preserving(2, 2) == sp_order(1, 2, 1) == 6
    assert count_form_preserving(2, 3) == sp_order(1, 3, 1) == 24
    assert sp_order(2, 5, 1) == 9_360_000


@criterion(11, "codes biject; Cayley-Hamilton and Berkowitz = cofactor on 100 matrices; "
               "reduction homomorphism on 200 pairs")
def test_infrastructure_properties():
    rng = random.Random(2024)
    for _ in range(1000):
        c = rng.randrange(5**16)
        assert encode(decode(c, 4, 5)) == c

    def rand_matrix():
        return IntMatrix([[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)])

    for _ in range(100):
        a = rand_matrix()
        cp = charpoly(a)
        assert cp.evaluate(a) == IntMatrix.zero(4)
        assert list(cp.coefficients) + [1] == cofactor_charpoly([list(r) for r in a.rows])

    for _ in range(200):
        a, b, m = rand_matrix(), rand_matrix(), rng.choice([2, 3, 5, 7, 25])
        assert reduce_mod(a @ b, m) == reduce_mod(a, m) @ reduce_mod(b, m)
