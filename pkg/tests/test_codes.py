import itertools

import numpy as np
import pytest

from sdcodes import linalg
from sdcodes.codes import (
    EUCLIDEAN,
    HERMITIAN,
    CyclicCode,
    LinearCode,
    code_from_descriptor,
    cyclic_from_polynomial,
    defining_set,
    dual_generator,
    encode,
    is_dual_containing,
    is_dual_containing_linear,
    is_self_dual_linear,
    negation_free_criterion,
    qr_code,
    qr_generator_idempotent,
    quadratic_residues,
    subfield_root,
)
from sdcodes.cyclo import DefiningSet, cyclotomic_cosets
from sdcodes.errors import BadLength, InputError, LengthMismatch, NotADivisor, NotASquareField, ZeroPolynomial
from sdcodes.gf import field_of_order, make_prime_field
from sdcodes.polyring import Polynomial, factor_xn_minus_1, reciprocal_normalized

F2 = make_prime_field(2)
F4 = field_of_order(4)

HAMMING = CyclicCode(F2, 7, Polynomial(F2, [1, 1, 0, 1]))


def all_divisors(F, N):
    facs = [f for _, f in factor_xn_minus_1(F, N)]
    for mask in itertools.product([0, 1], repeat=len(facs)):
        g = Polynomial.one(F)
        for bit, f in zip(mask, facs):
            if bit:
                g = g * f
        yield g


def test_hamming_dual_and_containment():
    D = HAMMING.dual()
    assert D.generator.coeffs == (1, 0, 1, 1, 1)
    assert D.dimension == 3
    assert is_dual_containing(HAMMING)
    assert not is_dual_containing(D)
    assert set(defining_set(HAMMING).elements) in ({1, 2, 4}, {3, 5, 6})


def test_generator_must_divide():
    with pytest.raises(NotADivisor):
        CyclicCode(F2, 7, Polynomial(F2, [1, 1, 1]))
    C = cyclic_from_polynomial(F2, 7, Polynomial(F2, [1, 1, 1]))
    assert C.generator == Polynomial.one(F2)
    with pytest.raises(ZeroPolynomial):
        cyclic_from_polynomial(F2, 7, Polynomial.zero(F2))


def test_dual_generator_matches_nullspace():
    # cyclic dual agrees with the linear-algebra dual on every divisor of x^15 - 1
    for g in all_divisors(F2, 15):
        C = CyclicCode(F2, 15, g)
        assert C.dual().linear == C.linear.dual()


def test_hermitian_dual_matches_linear():
    for g in all_divisors(F4, 9):
        C = CyclicCode(F4, 9, g)
        assert C.hermitian_dual().linear == C.linear.hermitian_dual()


@pytest.mark.parametrize("q,N", [(2, 15), (2, 21), (4, 15), (4, 21)])
def test_dual_containing_matches_linear_check(q, N):
    F = field_of_order(q)
    for g in all_divisors(F, N):
        C = CyclicCode(F, N, g)
        assert is_dual_containing(C, EUCLIDEAN) == is_dual_containing_linear(C.linear, EUCLIDEAN)
        if q == 4:
            assert is_dual_containing(C, HERMITIAN) == is_dual_containing_linear(C.linear, HERMITIAN)


def test_repeated_root_code():
    # length 14 over F_2: (x^7 - 1)^2 factors with multiplicity two
    g = Polynomial(F2, [1, 1, 0, 1]) ** 2 * Polynomial(F2, [1, 1])
    C = CyclicCode(F2, 14, g)
    assert not C.is_simple_root()
    assert C.dimension == 7
    assert C.dual().dimension == 7


def test_subfield_root():
    assert subfield_root(F4) == 2
    assert subfield_root(field_of_order(9)) == 3
    with pytest.raises(NotASquareField):
        subfield_root(field_of_order(8))


def test_negation_free_criterion_examples():
    part7 = cyclotomic_cosets(2, 7)
    assert negation_free_criterion(DefiningSet.of(7, [1, 2, 4]), part7)
    assert not negation_free_criterion(DefiningSet.of(7, [0, 1, 2, 4]), part7)
    # 15: coset of 5 = {5, 10} holds both a and -a
    assert not negation_free_criterion(DefiningSet.of(15, [1, 2, 4, 8]), cyclotomic_cosets(2, 15))


def test_negation_free_is_sufficient():
    for N in (7, 15, 21, 23, 31):
        part = cyclotomic_cosets(2, N)
        for g in all_divisors(F2, N):
            C = CyclicCode(F2, N, g)
            if negation_free_criterion(defining_set(C), part):
                assert is_dual_containing(C)


@pytest.mark.parametrize("n", [7, 23, 31, 47, 71, 79, 103])
def test_qr_code(n):
    C = qr_code(n)
    assert C.dimension == (n + 1) // 2
    assert is_dual_containing(C)
    idem = qr_generator_idempotent(n)
    assert C.generator in (idem, reciprocal_normalized(idem))


def test_qr_defining_set_is_residues_or_nonresidues():
    for n in (7, 23, 31, 47):
        T = set(defining_set(qr_code(n)).elements)
        Q = set(quadratic_residues(n))
        assert T == Q or T == set(range(1, n)) - Q


def test_qr_bad_length():
    for n in (17, 15, 41):
        with pytest.raises(BadLength):
            qr_code(n)


def test_linear_code_basics():
    L = HAMMING.linear
    assert (L.n, L.k) == (7, 4)
    assert L.dual() == HAMMING.dual().linear
    w = encode(L, [1, 0, 1, 1])
    assert L.contains(w) and HAMMING.contains(w)
    with pytest.raises(LengthMismatch):
        encode(L, [1, 0])
    assert LinearCode(F2, np.vstack([L.G, L.G])).k == 4


def test_self_dual_linear_extended_hamming():
    L = HAMMING.linear
    ext = np.hstack([L.G, (L.G.sum(axis=1) % 2)[:, None]])
    assert is_self_dual_linear(LinearCode(F2, ext), EUCLIDEAN)


def test_descriptor_round_trip_and_canonicalization():
    C = HAMMING.dual()
    C2, notes = code_from_descriptor(C.to_descriptor())
    assert C2 == C and notes == []
    obj = {"kind": "cyclic", "q": 2, "N": 7, "generator": [1, 0, 0, 1, 1, 1, 0, 1]}
    C3, notes = code_from_descriptor(obj)
    assert C3.generator == Polynomial.xn_minus_1(F2, 7).gcd(Polynomial(F2, obj["generator"]))
    assert notes
    L, _ = code_from_descriptor(HAMMING.linear.to_descriptor())
    assert L == HAMMING.linear
    with pytest.raises(InputError):
        code_from_descriptor({"kind": "cyclic", "q": 6, "N": 7, "generator": [1]})
    with pytest.raises(InputError):
        code_from_descriptor({"kind": "cyclic", "q": 2})


def test_rref_and_nullspace():
    F = field_of_order(9)
    rng = np.random.default_rng(1)
    for _ in range(20):
        M = rng.integers(0, 9, size=(4, 9))
        N = linalg.nullspace(F, M)
        assert not np.any(linalg.matmul(F, M, N.T.copy()))
        assert linalg.rank(F, M) + N.shape[0] == 9
