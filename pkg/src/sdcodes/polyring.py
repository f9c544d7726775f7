"""Dense univariate polynomials over a :class:`~sdcodes.gf.Field`.

Also home to minimal polynomials of powers of an n-th root of unity and
the factorization of x^n - 1 obtained from cyclotomic cosets.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from . import _rawpoly as rp
from .errors import (
    CoefficientNotInBase,
    DivisionByZero,
    FieldMismatch,
    NotCoprime,
    NotDivisible,
    ZeroConstantTerm,
)
from .gf import Field, FieldElement, element_from_json, element_to_json, make_extension, nth_root_of_unity


class Polynomial:
    """Immutable polynomial with ascending coefficient codes."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise FieldMismatch(f"coefficient from {c.field}, expected {field}")
                cs.append(c.value)
            else:
                cs.append(field(c).value)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(rp.trim(cs)))

    @classmethod
    def _raw(cls, field: Field, codes: Sequence[int]) -> "Polynomial":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "coeffs", tuple(codes))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # constructors
    @classmethod
    def zero(cls, field):
        return cls._raw(field, ())

    @classmethod
    def one(cls, field):
        return cls._raw(field, (1,))

    @classmethod
    def x_power(cls, field, k: int) -> "Polynomial":
        return cls._raw(field, (0,) * k + (1,))

    @classmethod
    def xn_minus_1(cls, field, n: int) -> "Polynomial":
        if n == 0:
            return cls.zero(field)
        return cls._raw(field, (field.neg(1),) + (0,) * (n - 1) + (1,))

    # structure
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lc == 1

    def monic(self) -> "Polynomial":
        return Polynomial._raw(self.field, rp.monic(self.field, list(self.coeffs)))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"polynomials over {self.field} and {other.field}")
        return other

    # arithmetic
    def __add__(self, other):
        other = self._check(other)
        return Polynomial._raw(self.field, rp.add(self.field, list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other):
        other = self._check(other)
        return Polynomial._raw(self.field, rp.sub(self.field, list(self.coeffs), list(other.coeffs)))

    def __neg__(self):
        return Polynomial._raw(self.field, rp.neg(self.field, list(self.coeffs)))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other.value)
        other = self._check(other)
        return Polynomial._raw(self.field, rp.mul(self.field, list(self.coeffs), list(other.coeffs)))

    def scale(self, c: int) -> "Polynomial":
        return Polynomial._raw(self.field, rp.scale(self.field, c, list(self.coeffs)))

    def __pow__(self, e: int):
        result = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        q, r = rp.divmod_(self.field, list(self.coeffs), list(other.coeffs))
        return Polynomial._raw(self.field, q), Polynomial._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise NotDivisible("nonzero remainder")
        return q

    def divides(self, other: "Polynomial") -> bool:
        """True iff self | other."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def gcd(self, other: "Polynomial") -> "Polynomial":
        other = self._check(other)
        return Polynomial._raw(self.field, rp.gcd(self.field, list(self.coeffs), list(other.coeffs)))

    def lcm(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field)
        return (self * other).exact_div(self.gcd(other)).monic()

    def __call__(self, x: FieldElement) -> FieldElement:
        """Evaluate at an element of the coefficient field or an extension of it.

        Coefficient codes embed unchanged into any extension in the tower.
        """
        E = x.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = E.add(E.mul(acc, x.value), c)
        return FieldElement(E, acc)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)} over GF({self.field.order}))"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        F = self.field
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if c == 1:
                cs = "" if i else "1"
            else:
                cs = str(c) if F.base is None else f"<{c}>"
            if i == 0:
                terms.append(cs or "1")
            elif i == 1:
                terms.append(f"{cs}x")
            else:
                terms.append(f"{cs}x^{i}")
        return " + ".join(terms)

    # serialisation
    def to_json(self) -> list:
        return [element_to_json(self.field, c) for c in self.coeffs]

    @classmethod
    def from_json(cls, field: Field, obj: list) -> "Polynomial":
        return cls._raw(field, rp.trim([element_from_json(field, c) for c in obj]))


def poly_arithmetic(f: Polynomial, g: Polynomial) -> dict[str, object]:
    """All binary operations at once; divrem/gcd/lcm need g nonzero."""
    out: dict[str, object] = {"add": f + g, "mul": f * g, "gcd": f.gcd(g), "lcm": f.lcm(g)}
    if not g.is_zero():
        out["divrem"] = divmod(f, g)
    return out


def reciprocal_normalized(f: Polynomial) -> Polynomial:
    """x^deg(f) f(1/x) / f(0)."""
    if f.is_zero() or f.coeffs[0] == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    F = f.field
    rev = list(reversed(f.coeffs))
    return Polynomial._raw(F, rp.scale(F, F.inv(f.coeffs[0]), rev))


def coefficientwise_power(f: Polynomial, q1: int) -> Polynomial:
    F = f.field
    if not F.is_subfield_order(q1):
        raise ValueError(f"{q1} is not a subfield order of {F}")
    return Polynomial._raw(F, tuple(F.pow(c, q1) for c in f.coeffs))


def minimal_polynomial(beta: FieldElement, coset: Iterable[int]) -> Polynomial:
    """prod_{j in coset} (x - beta^j), returned over the base field of beta's field."""
    E = beta.field
    if E.base is None:
        raise ValueError("beta must live in an extension field")
    acc = [1]
    for j in sorted(set(coset)):
        root = E.pow(beta.value, j)
        acc = rp.mul(E, acc, [E.neg(root), 1])
    Q = E.base.order
    for c in acc:
        if c >= Q:
            raise CoefficientNotInBase(f"coefficient {c} is not in GF({Q}); the exponent set is not Frobenius-closed")
    return Polynomial._raw(E.base, tuple(acc))


@lru_cache(maxsize=None)
def splitting_field(F: Field, n: int) -> tuple[Field, FieldElement]:
    """The extension F_{q^m}, m = ord_n(q), built over F, and its root beta.

    For m == 1 a degree-1 extension is still built so that beta lives in a
    field whose base is F.
    """
    from .cyclo import ord_mod

    if n % F.p == 0:
        raise NotCoprime(f"{n} is divisible by the characteristic {F.p}")
    m = 1 if n == 1 else ord_mod(n, F.order)
    E = make_extension(F, m)
    return E, nth_root_of_unity(E, n)


@lru_cache(maxsize=None)
def factor_xn_minus_1(F: Field, n: int) -> list[tuple[int, Polynomial]]:
    """Minimal-polynomial factors of x^n - 1 keyed by ascending coset leader."""
    from .cyclo import cyclotomic_cosets

    if n % F.p == 0:
        raise NotCoprime(f"{n} is divisible by the characteristic {F.p}")
    part = cyclotomic_cosets(F.order, n)
    _, beta = splitting_field(F, n)
    return [(leader, minimal_polynomial(beta, coset)) for leader, coset in zip(part.leaders, part.cosets)]
