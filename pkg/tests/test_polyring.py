import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sdcodes.errors import (
    CoefficientNotInBase,
    DivisionByZero,
    FieldMismatch,
    NotCoprime,
    NotDivisible,
    ZeroConstantTerm,
)
from sdcodes.gf import field_of_order, make_prime_field
from sdcodes.polyring import (
    Polynomial,
    coefficientwise_power,
    factor_xn_minus_1,
    minimal_polynomial,
    poly_arithmetic,
    reciprocal_normalized,
    splitting_field,
)

F2 = make_prime_field(2)
F4 = field_of_order(4)


def coeffs(q, max_len=8):
    return st.lists(st.integers(0, q - 1), max_size=max_len)


def conv_oracle(a, b, p):
    if not a or not b:
        return []
    c = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)) % p
    out = [int(x) for x in c]
    while out and out[-1] == 0:
        out.pop()
    return out


@given(st.sampled_from([2, 3, 5, 7]), st.data())
def test_prime_field_mul_matches_convolution(p, data):
    F = make_prime_field(p)
    a = data.draw(coeffs(p))
    b = data.draw(coeffs(p))
    assert list((Polynomial(F, a) * Polynomial(F, b)).coeffs) == conv_oracle(a, b, p)


@given(st.sampled_from([2, 3, 4, 5, 8, 9]), st.data())
def test_division_identity(q, data):
    F = field_of_order(q)
    f = Polynomial(F, data.draw(coeffs(q, 10)))
    g = Polynomial(F, data.draw(coeffs(q, 6)))
    if g.is_zero():
        with pytest.raises(DivisionByZero):
            divmod(f, g)
        return
    quo, rem = divmod(f, g)
    assert quo * g + rem == f
    assert rem.degree < g.degree


@given(st.sampled_from([2, 3, 4, 5]), st.data())
def test_gcd_divides_both(q, data):
    F = field_of_order(q)
    f = Polynomial(F, data.draw(coeffs(q)))
    g = Polynomial(F, data.draw(coeffs(q)))
    d = f.gcd(g)
    if f.is_zero() and g.is_zero():
        assert d.is_zero()
        return
    assert d.is_monic()
    assert d.divides(f) and d.divides(g)
    if not f.is_zero() and not g.is_zero():
        l = f.lcm(g)
        assert (l * d).monic() == (f * g).monic()


def test_exact_div_and_divides():
    x3 = Polynomial.xn_minus_1(F2, 7)
    g = Polynomial(F2, [1, 1, 0, 1])
    assert x3.exact_div(g) * g == x3
    with pytest.raises(NotDivisible):
        x3.exact_div(Polynomial(F2, [1, 1, 1]))
    assert Polynomial.zero(F2).degree == -1


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Polynomial(F2, [1, 1]) + Polynomial(F4, [1, 1])


def test_evaluation_in_extension():
    E, beta = splitting_field(F2, 7)
    g = Polynomial(F2, [1, 1, 0, 1])
    roots = [j for j in range(7) if g(E(E.pow(beta.value, j))).value == 0]
    assert len(roots) == 3


def test_minimal_polynomial_needs_closed_set():
    E, beta = splitting_field(F2, 7)
    assert minimal_polynomial(beta, [1, 2, 4]).field == F2
    with pytest.raises(CoefficientNotInBase):
        minimal_polynomial(beta, [1, 2])


def test_factor_x7_minus_1():
    facs = dict(factor_xn_minus_1(F2, 7))
    assert facs[0].coeffs == (1, 1)
    assert facs[1].coeffs == (1, 1, 0, 1)
    assert facs[3].coeffs == (1, 0, 1, 1)


def test_factor_requires_coprime_length():
    with pytest.raises(NotCoprime):
        factor_xn_minus_1(F2, 14)


def test_reciprocal_zero_constant():
    with pytest.raises(ZeroConstantTerm):
        reciprocal_normalized(Polynomial(F2, [0, 1]))


def test_coefficientwise_power_is_involution_over_f4():
    for cs in itertools.product(range(4), repeat=4):
        f = Polynomial(F4, cs)
        assert coefficientwise_power(coefficientwise_power(f, 2), 2) == f


def test_json_round_trip():
    F64 = splitting_field(F4, 63)[0]
    f = Polynomial(F64, [5, 0, 17, 63, 1])
    assert Polynomial.from_json(F64, f.to_json()) == f
    assert str(Polynomial(F2, [1, 1, 0, 1])) == "1 + x + x^3"


def test_poly_arithmetic_bundle():
    f, g = Polynomial(F2, [1, 0, 1]), Polynomial(F2, [1, 1])
    out = poly_arithmetic(f, g)
    assert out["divrem"] == (Polynomial(F2, [1, 1]), Polynomial.zero(F2))
    assert out["gcd"] == g and out["lcm"] == f
