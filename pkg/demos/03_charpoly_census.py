"""Characteristic polynomials of random elements of the monodromy group.

Every element should have charpoly x^4 + (5m+1)x^3 + (5n+1)x^2 + (5m+1)x + 1.
We tabulate which (m, n) actually occur for short words.
"""

import random
from collections import Counter

from quintic_monodromy.group_engine import evaluate_word, random_word
from quintic_monodromy.matrix_core import charpoly
from quintic_monodromy.verification import INT_GENS


if __name__ == '__main__':

    rng = random.Random(42)
    seen = Counter()
    largest = 0
    for _ in range(2000):
        w = random_word(rng, ("A", "T"), 12)
        x = evaluate_word(INT_GENS, w)
        largest = max(largest, max(abs(e) for e in x.entries()))
        c0, c1, c2, c3 = charpoly(x).coefficients
        assert c0 == 1 and c1 == c3 and c3 % 5 == 1 and c2 % 5 == 1
        seen[(c3 - 1) // 5, (c2 - 1) // 5] += 1

    print(f"largest entry seen: {largest} ({largest.bit_length()} bits)")
    print(f"{len(seen)} distinct (m, n); most common:")
    for (m, n), count in seen.most_common(10):
        print(f"  m={m:>6} n={n:>8}  x{count}")
    print("(m, n) = (0, 0) is Phi_5, the finite-order case:", seen[0, 0], "words")
