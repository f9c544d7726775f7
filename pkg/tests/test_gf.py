import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sdcodes.errors import (
    BadParameters,
    BudgetExceeded,
    NotADivisor,
    NotInSubfield,
    ReducibleModulus,
    ZeroInverse,
)
from sdcodes.gf import (
    FieldElement,
    element_arithmetic,
    factorize,
    field_from_literal,
    field_of_order,
    field_to_literal,
    frobenius_power,
    is_prime,
    make_extension,
    make_prime_field,
    nth_root_of_unity,
    prime_power,
    primitive_element,
    project_to_base,
)

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27]


def poly_mulmod_oracle(a, b, mod, p):
    """Independent schoolbook product of coefficient lists modulo a monic polynomial."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    d = len(mod) - 1
    for i in range(len(prod) - 1, d - 1, -1):
        c = prod[i]
        if c:
            for j in range(d + 1):
                prod[i - d + j] = (prod[i - d + j] - c * mod[j]) % p
    return (prod + [0] * d)[:d]


def test_number_theory():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert prime_power(64) == (2, 6)
    assert prime_power(12) is None


def test_default_moduli():
    F2 = make_prime_field(2)
    assert make_extension(F2, 3).modulus == (1, 1, 0, 1)
    assert make_extension(F2, 2).modulus == (1, 1, 1)
    F3 = make_prime_field(3)
    assert make_extension(F3, 2).modulus == (1, 0, 1)


def test_f4_multiplication():
    F = field_of_order(4)
    w = F(2)
    assert (w * w).value == 3  # w^2 = w + 1
    assert primitive_element(F).value == 2


def test_f8_primitive_element_order():
    F = field_of_order(8)
    a = primitive_element(F)
    assert a.value == 2
    assert (a**7).value == 1 and all((a**k).value != 1 for k in range(1, 7))


def test_prime_field_inverse():
    F = make_prime_field(5)
    assert primitive_element(F).value == 2
    assert F.inv(2) == 3
    with pytest.raises(ZeroInverse):
        F.inv(0)


def test_reducible_modulus_rejected():
    F2 = make_prime_field(2)
    with pytest.raises(ReducibleModulus):
        make_extension(F2, 2, [1, 0, 1])  # (x+1)^2


def test_extension_matches_oracle():
    for p, k in [(2, 3), (2, 4), (3, 2), (5, 2), (3, 3)]:
        Fp = make_prime_field(p)
        F = make_extension(Fp, k)
        mod = list(F.modulus)
        for a, b in itertools.product(range(F.order), repeat=2):
            ca, cb = F.coords(a), F.coords(b)
            assert F.coords(F.mul(a, b)) == poly_mulmod_oracle(ca, cb, mod, p)


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    els = range(q)
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a


@given(st.sampled_from(SMALL_ORDERS + [64, 81, 256]), st.data())
def test_field_ring_laws(q, data):
    F = field_of_order(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.pow(a, q) == a  # Frobenius fixes F_q


def test_tower_embedding_and_subfields():
    F4 = field_of_order(4)
    F64 = make_extension(F4, 3)
    assert F64.order == 64 and F64.p == 2
    assert [L.order for L in F64.tower()] == [2, 4, 64]
    # base elements keep their codes and their arithmetic
    for a, b in itertools.product(range(4), repeat=2):
        assert F64.mul(a, b) == F4.mul(a, b)
        assert F64.add(a, b) == F4.add(a, b)
    assert F64.is_subfield_order(4) and F64.is_subfield_order(8) and not F64.is_subfield_order(16)
    for c in range(64):
        in_f4 = F64.pow(c, 4) == c
        assert in_f4 == (c < 4)
        if in_f4:
            assert project_to_base(FieldElement(F64, c)).value == c
        else:
            with pytest.raises(NotInSubfield):
                project_to_base(FieldElement(F64, c))


def test_frobenius_is_additive_automorphism():
    F = field_of_order(16)
    for a, b in itertools.product(range(16), repeat=2):
        fa, fb = frobenius_power(F(a), 4), frobenius_power(F(b), 4)
        assert (fa + fb) == frobenius_power(F(a) + F(b), 4)
        assert (fa * fb) == frobenius_power(F(a) * F(b), 4)
    with pytest.raises(BadParameters):
        frobenius_power(F(3), 8)


def test_nth_root_of_unity_orders():
    F64 = make_extension(field_of_order(4), 3)
    beta = nth_root_of_unity(F64, 21)
    assert beta.order() == 21
    with pytest.raises(NotADivisor):
        nth_root_of_unity(F64, 10)


def test_element_operators():
    F = field_of_order(9)
    t = F(3)  # code 3 = t over F_3
    assert (t * t).value == F.neg(1)
    ops = element_arithmetic(F(4), F(5))
    assert ops["div"] * F(5) == F(4)
    assert "div" not in element_arithmetic(F(4), F(0))
    with pytest.raises(TypeError):
        F(1) + 1.5
    assert F(2) + 1 == F(F.add(2, 1))


def test_field_literal_round_trip():
    F64 = make_extension(field_of_order(4), 3)
    lit = field_to_literal(F64)
    assert lit == {"p": 2, "tower": [{"degree": 2, "modulus": [1, 1, 1]},
                                     {"degree": 3, "modulus": [[0, 1], [0, 0], [0, 0], [1, 0]]}]}
    assert field_from_literal(lit) == F64
    with pytest.raises(BadParameters):
        field_from_literal({"tower": []})


def test_large_field_budget():
    F2 = make_prime_field(2)
    F = make_extension(F2, 23)
    assert F.order == 2**23
    with pytest.raises(BudgetExceeded):
        primitive_element(F, budget=2**20)


def test_vector_ops_match_scalar():
    for q in [3, 4, 9, 16]:
        F = field_of_order(q)
        V = F.vec
        a = np.arange(q).repeat(q)
        b = np.tile(np.arange(q), q)
        assert list(V.add(a, b)) == [F.add(int(x), int(y)) for x, y in zip(a, b)]
        assert list(V.mul(a, b)) == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
        assert list(V.sub(a, b)) == [F.sub(int(x), int(y)) for x, y in zip(a, b)]
