"""Small codes shared by the distance tests."""

import itertools

import numpy as np

from sdcodes.codes import CyclicCode, LinearCode
from sdcodes.gf import field_of_order
from sdcodes.polyring import Polynomial, factor_xn_minus_1


def divisors(F, N):
    facs = [f for _, f in factor_xn_minus_1(F, N)]
    for mask in itertools.product([0, 1], repeat=len(facs)):
        g = Polynomial.one(F)
        for bit, f in zip(mask, facs):
            if bit:
                g = g * f
        yield g


def cyclic_corpus(max_words=2**20):
    """Every cyclic code with 1 <= q^k <= max_words for a few (q, N)."""
    for q, N in [(2, 7), (2, 9), (2, 15), (2, 17), (2, 21), (3, 8), (3, 13), (4, 5), (4, 7), (4, 9), (5, 6), (9, 8)]:
        F = field_of_order(q)
        for g in divisors(F, N):
            C = CyclicCode(F, N, g)
            if 1 <= C.dimension and q**C.dimension <= max_words:
                yield f"{q}:{N}:{list(g.coeffs)}", C.linear


def brute_min_weight(C: LinearCode) -> int:
    """Scalar-arithmetic enumeration of every nonzero message."""
    F = C.field
    best = C.n + 1
    G = [[int(c) for c in row] for row in C.G]
    for msg in itertools.product(range(F.order), repeat=C.k):
        if not any(msg):
            continue
        word = [0] * C.n
        for m, row in zip(msg, G):
            if m:
                word = [F.add(w, F.mul(m, r)) for w, r in zip(word, row)]
        best = min(best, sum(1 for w in word if w))
    return best


def random_code(q, n, k, seed):
    F = field_of_order(q)
    rng = np.random.default_rng(seed)
    return LinearCode(F, rng.integers(0, q, size=(k, n)), n)
