from math import gcd

import pytest
from hypothesis import given, strategies as st

from sdcodes.cyclo import DefiningSet, cyclotomic_cosets, defining_set_of, gcd_lemma, ord_mod, set_algebra
from sdcodes.errors import NotADivisor, NotCoprime
from sdcodes.gf import make_prime_field
from sdcodes.polyring import Polynomial, splitting_field

F2 = make_prime_field(2)


def test_cosets_mod_15():
    part = cyclotomic_cosets(2, 15)
    assert part.cosets == ((0,), (1, 2, 4, 8), (3, 6, 9, 12), (5, 10), (7, 11, 13, 14))
    assert part.leaders == (0, 1, 3, 5, 7)
    assert part.coset_of(9) == (3, 6, 9, 12)


def test_cosets_q4_n63_sizes():
    part = cyclotomic_cosets(4, 63)
    assert sum(len(c) for c in part.cosets) == 63
    assert sorted({len(c) for c in part.cosets}) == [1, 3]


@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(2, 200))
def test_cosets_partition_and_closure(q, n):
    if gcd(q, n) != 1:
        with pytest.raises(NotCoprime):
            cyclotomic_cosets(q, n)
        return
    part = cyclotomic_cosets(q, n)
    seen = sorted(r for c in part.cosets for r in c)
    assert seen == list(range(n))
    m = ord_mod(n, q)
    for c in part.cosets:
        assert {(r * q) % n for r in c} == set(c)
        assert m % len(c) == 0


def test_ord_mod():
    assert ord_mod(7, 2) == 3
    assert ord_mod(71, 2) == 35
    assert ord_mod(79, 2) == 39
    assert ord_mod(103, 2) == 51
    with pytest.raises(NotCoprime):
        ord_mod(6, 2)


def test_defining_set_algebra():
    T = DefiningSet.of(7, [1, 2, 4])
    alg = set_algebra(T, q1=2)
    assert alg["inverse"].elements == (3, 5, 6)
    assert alg["complement"].elements == (0, 3, 5, 6)
    assert alg["q1_inverse"].elements == (3, 5, 6)
    assert T.is_union_of_cosets(cyclotomic_cosets(2, 7))
    assert not DefiningSet.of(7, [1, 2]).is_union_of_cosets(cyclotomic_cosets(2, 7))


def test_defining_set_of_hamming():
    _, beta = splitting_field(F2, 7)
    g = Polynomial(F2, [1, 1, 0, 1])
    T = defining_set_of(g, beta, 7)
    assert T.elements in ((1, 2, 4), (3, 5, 6))
    with pytest.raises(NotADivisor):
        defining_set_of(Polynomial(F2, [1, 1, 1]), beta, 7)
