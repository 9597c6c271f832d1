"""Level-(5,5) congruence subgroups of Sp(4, Z) and the refined subgroup.

Checks membership of the generators, exhibits the matrix separating the two
subgroups, and samples the principal congruence subgroup of level 25.
"""

import random

from quintic_monodromy.constants import A, COUNTEREXAMPLE_X, T, invariant_form
from quintic_monodromy.group_engine import sp_order, symplectic_transvection
from quintic_monodromy.verification import gamma55_member, gamma55_tilde_member


if __name__ == '__main__':

    J = invariant_form()
    for name, x in (("A", A), ("T", T), ("X", COUNTEREXAMPLE_X)):
        print(f"{name}: level (5,5) {gamma55_member(x, J)}, refined {gamma55_tilde_member(x, J)}")

    rng = random.Random(0)
    hits = 0
    for _ in range(200):
        v = [rng.randint(-9, 9) for _ in range(4)]
        M = symplectic_transvection(v, 25, J)
        hits += gamma55_tilde_member(M, J)
    print(f"\n{hits}/200 level-25 transvections lie in the refined subgroup")

    for p, k in ((5, 1), (5, 2)):
        print(f"|Sp(4, Z/{p ** k}Z)| = {sp_order(2, p, k):,}")
