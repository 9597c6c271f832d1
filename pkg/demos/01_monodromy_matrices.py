"""Local monodromies of the quintic-mirror family, over the integers.

Walks through the three generators, the symplectic form they preserve,
the rational change of basis P, and the characteristic polynomials.
"""

from quintic_monodromy.constants import A, P, T, T_INF
from quintic_monodromy.formats import format_matrix
from quintic_monodromy.group_engine import element_order
from quintic_monodromy.matrix_core import (SymplecticForm, charpoly, conjugate_exact, det,
                                           find_invariant_form, inverse_unimodular,
                                           is_symplectic)


if __name__ == '__main__':

    for name, x in (("A", A), ("T", T), ("T_inf", T_INF)):
        print(f"{name} =\n{x}\n  det {det(x)}, charpoly {charpoly(x)}, "
              f"order {element_order(x, 100) or 'infinite (up to 100)'}\n")

    # The cup-product form is never written down; recover it from the generators.
    forms = find_invariant_form([A, T, T_INF])
    print(f"{len(forms)} invariant antisymmetric form(s); J =\n{forms[0]}")
    J = SymplecticForm(forms[0])
    print("A, T, T_inf symplectic:", all(is_symplectic(x, J) for x in (A, T, T_INF)))

    # T_inf is not independent: it closes the loop around the three punctures.
    print("T_inf == A^-1 T^-1:", T_INF == inverse_unimodular(A) @ inverse_unimodular(T))

    print(f"\ndet P = {det(P)}, so P is only rationally invertible")
    print("P^-1 A^-1 P =")
    print(format_matrix(conjugate_exact(P, inverse_unimodular(A))))
    print("P^-1 T^-1 P =")
    print(format_matrix(conjugate_exact(P, inverse_unimodular(T))))
