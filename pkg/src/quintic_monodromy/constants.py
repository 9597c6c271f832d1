"""Monodromy matrices of the quintic-mirror family and the objects derived from them.

A, T, T_INF act on H^3 in the basis (beta^1, beta^2, alpha_1, alpha_2);
P is the rational change of basis that puts A^-1 and T^-1 in near-triangular form.
"""

from __future__ import annotations

from functools import lru_cache

from .matrix_core import (IntMatrix, ModMatrix, SymplecticForm, conjugate_exact,
                          find_invariant_form, inverse_unimodular)

A = IntMatrix([[11, 8, -5, 0],
               [5, -4, -3, 1],
               [20, 15, -9, 0],
               [5, -5, -3, 1]])

T = IntMatrix([[1, 0, 0, 0],
               [0, 1, 0, -1],
               [0, 0, 1, 0],
               [0, 0, 0, 1]])

T_INF = IntMatrix([[-9, -3, 5, 0],
                   [0, 1, 0, 0],
                   [-20, -5, 11, 0],
                   [-15, 5, 8, 1]])

P = IntMatrix([[5, -3, 0, 0],
               [0, 0, 1, 0],
               [10, -5, 0, 0],
               [0, 0, 0, 1]])

# expected P^-1 A^-1 P and P^-1 T^-1 P
A_NORMAL = IntMatrix([[1, 1, 0, 0],
                      [0, 1, 1, -1],
                      [0, 0, 1, -1],
                      [5, 5, 5, -4]])

T_NORMAL = IntMatrix([[1, 0, 0, 0],
                      [0, 1, 0, 0],
                      [0, 0, 1, 1],
                      [0, 0, 0, 1]])

E1 = ModMatrix([[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], 5)
E2 = ModMatrix([[1, 0, 0, 0], [0, 1, 0, 1], [0, 0, 1, 0], [0, 0, 0, 1]], 5)

# symplectic, in the level-(5,5) subgroup, but violating the refined conditions
COUNTEREXAMPLE_X = IntMatrix([[1, 0, 0, 0],
                              [0, 1, 0, 0],
                              [5, 0, 1, 0],
                              [0, 0, 0, 1]])

# words evaluated in the mod-5 generators named A (for A~) and T (for T~)
E2_WORD = "A T A^4 T^4"
E1_WORD = "(E2^2 A^2 T^4 A^3 T)^4"


def a_tilde(p: IntMatrix = P) -> ModMatrix:
    return conjugate_exact(p, inverse_unimodular(A)).reduce(5)


def t_tilde(p: IntMatrix = P) -> ModMatrix:
    return conjugate_exact(p, inverse_unimodular(T)).reduce(5)


A_TILDE = a_tilde()
T_TILDE = t_tilde()


@lru_cache(maxsize=None)
def invariant_form() -> SymplecticForm:
    """The unique (up to sign) content-1 form preserved by A, T and T_INF."""
    forms = find_invariant_form([A, T, T_INF])
    if len(forms) != 1:
        raise ValueError(f"expected a 1-dimensional space of invariant forms, got {len(forms)}")
    return SymplecticForm(forms[0])
