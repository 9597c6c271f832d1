"""The image of the monodromy group in GL(4, Z/5Z).

Reduces the normalised generators mod 5, closes them under multiplication,
and compares with the explicit 625-element unitriangular family.
"""

import time
from collections import Counter

from quintic_monodromy.constants import A_TILDE, E1, E1_WORD, E2, E2_WORD, T_TILDE
from quintic_monodromy.group_engine import (GeneratorSet, Word, closure, element_order,
                                            enumerate_gamma_hat, evaluate_word,
                                            gamma_hat_element)


if __name__ == '__main__':

    gens = GeneratorSet(("A", "T"), (A_TILDE, T_TILDE))
    print("A~ =", A_TILDE.rows)
    print("T~ =", T_TILDE.rows)
    print("A~ is the pattern element with n=1, a=0, b=4, c=4:",
          A_TILDE == gamma_hat_element(1, 0, 4, 4))

    start = time.time()
    image = closure(gens)
    print(f"\nclosure: {image.order} elements in {time.time() - start:.3f} s")
    pattern = enumerate_gamma_hat()
    print("equal to the pattern group:", image.elements == pattern.elements)

    print("\nE2 from", E2_WORD, ":", evaluate_word(gens, Word.parse(E2_WORD)) == E2)
    with_e2 = GeneratorSet(("A", "T", "E2"), (A_TILDE, T_TILDE, E2))
    print("E1 from", E1_WORD, ":", evaluate_word(with_e2, Word.parse(E1_WORD)) == E1)

    orders = Counter(element_order(x, 25) for x in image.matrices())
    print("\nelement orders in the image:", dict(sorted(orders.items())))
