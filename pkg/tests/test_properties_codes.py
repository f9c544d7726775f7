"""Code-level property suite (runnable on its own with pytest)."""

import numpy as np
import pytest

from corpus import cyclic_corpus, divisors
from sdcodes import mindist as md
from sdcodes.codes import CyclicCode, is_dual_containing, qr_code
from sdcodes.construct import (
    dual_containing_bch_euclidean,
    plotkin,
    selfdual_from_dualcontaining,
    van_lint_cyclic,
    van_lint_permutation,
)
from sdcodes.gf import make_prime_field

F2 = make_prime_field(2)


def binary_codeword_set(G: np.ndarray) -> np.ndarray:
    """All codewords of a binary code of length <= 64, as sorted uint64 bit masks."""
    k, n = G.shape
    assert n <= 64
    weights = np.uint64(1) << np.arange(n, dtype=np.uint64)
    rows = (G.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
    lo = min(k, 12)
    table = np.zeros(1, dtype=np.uint64)
    for r in rows[:lo]:
        table = np.concatenate([table, table ^ r])
    high = np.zeros(1, dtype=np.uint64)
    for r in rows[lo:]:
        high = np.concatenate([high, high ^ r])
    return np.sort((table[None, :] ^ high[:, None]).ravel())


def permuted_plotkin_equals_cyclic(C: CyclicCode):
    Cp = van_lint_cyclic(C)
    src = van_lint_permutation(C.N)
    P = plotkin(C, C.dual())
    left = binary_codeword_set(P.G[:, list(src)])
    right = binary_codeword_set(Cp.linear.G)
    return left.size, bool(np.array_equal(left, right))


def test_permutation_equivalence_n7():
    C, _ = dual_containing_bch_euclidean(2, 3, 1)
    size, equal = permuted_plotkin_equals_cyclic(C)
    assert size == 128 and equal


@pytest.mark.parametrize("n", [7, 23])
def test_permutation_equivalence_qr(n):
    size, equal = permuted_plotkin_equals_cyclic(qr_code(n))
    assert size == 2**n and equal


def test_bz_matches_exhaustive_on_corpus():
    count = 0
    for name, C in cyclic_corpus(2**20):
        ex = md.exhaustive_min_weight(C)
        bz = md.brouwer_zimmermann(C)
        assert bz.exact and bz.d == ex.d, name
        assert md.verify_witness(C, bz) and md.verify_witness(C, ex), name
        count += 1
    # the doubled pipeline outputs and their halves at small sizes
    for C in (van_lint_cyclic(qr_code(7)).linear, qr_code(23).linear, qr_code(23).dual().linear,
              van_lint_cyclic(dual_containing_bch_euclidean(2, 3, 1)[0]).linear):
        assert md.brouwer_zimmermann(C).d == md.exhaustive_min_weight(C).d
        count += 1
    assert count > 300


def binary_self_dual_outputs(max_k=20):
    """Doublings of every binary dual-containing cyclic code of odd length up to 15, plus QR(7)."""
    for N in (3, 5, 7, 9, 15):
        for g in divisors(F2, N):
            C = CyclicCode(F2, N, g)
            if is_dual_containing(C):
                yield f"N={N} g={list(g.coeffs)}", van_lint_cyclic(C).linear
                yield f"plotkin N={N} g={list(g.coeffs)}", selfdual_from_dualcontaining(C)
    yield "qr7", van_lint_cyclic(qr_code(7)).linear


def test_even_weights_on_binary_self_dual_outputs():
    seen = 0
    for name, L in binary_self_dual_outputs():
        if L.k > 20:
            continue
        words = binary_codeword_set(L.G)
        weights = np.bitwise_count(words)
        assert np.all(weights % 2 == 0), name
        seen += 1
    assert seen >= 6
