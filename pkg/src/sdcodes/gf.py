"""Finite fields F_p and polynomial-basis extension towers.

Elements are stored as integer codes.  For an extension of degree ``k``
over a base field of order ``Q`` the element with coordinate vector
``(c_0, ..., c_{k-1})`` (``c_i`` base-field codes) has code
``sum(c_i * Q**i)``.  Two consequences are used throughout the package:

* a base-field element keeps its code when embedded in the extension, so
  subfield membership is ``code < Q``;
* integer order of codes is the fixed element ordering (lexicographic on
  coordinate vectors, most-significant coordinate last).

In characteristic 2 addition of codes is plain XOR at every tower level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _rawpoly as rp
from .errors import (
    BadParameters,
    BudgetExceeded,
    FieldMismatch,
    NonPrimeModulus,
    NotADivisor,
    NotInSubfield,
    ReducibleModulus,
    ZeroInverse,
)

ENUMERATION_BUDGET = 2**31
TABLE_LIMIT = 2**16
VECTOR_TABLE_LIMIT = 2**12


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, s)`` with ``q == p**s`` or None."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    ((p, s),) = f.items()
    return p, s


class Field:
    """A finite field given as a prime field or a tower of extensions.

    Instances are immutable; the arithmetic tables built at construction
    are caches that never change results.
    """

    def __init__(self, p: int, base: "Field | None" = None, modulus: Sequence[int] | None = None):
        self.p = p
        self.base = base
        if base is None:
            self.degree = 1
            self.modulus = None
            self.order = p
            self.total_degree = 1
        else:
            self.degree = len(modulus) - 1
            self.modulus = tuple(int(c) for c in modulus)
            self.order = base.order**self.degree
            self.total_degree = base.total_degree * self.degree
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._primitive: int | None = None
        self._vec: VecOps | None = None
        self._setup()

    # -- construction helpers -------------------------------------------
    def _setup(self):
        p = self.p
        if self.base is None:
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: (-a) % p
            self.mul = lambda a, b: (a * b) % p
            return
        if p == 2:
            self.add = self.sub = lambda a, b: a ^ b
            self.neg = lambda a: a
        else:
            self.add = self._add_digits
            self.sub = lambda a, b: self._add_digits(a, self._neg_digits(b))
            self.neg = self._neg_digits
        if self.base.order == 2:
            m = sum(1 << i for i, c in enumerate(self.modulus) if c)
            deg = self.degree
            self._mul_slow = lambda a, b: _clmul_mod(a, b, m, deg)
        else:
            self._mul_slow = self._mul_poly
        self.mul = self._mul_slow
        if self.order <= TABLE_LIMIT:
            self._build_tables()

    def _add_digits(self, a, b):
        Q, badd = self.base.order, self.base.add
        out, w = 0, 1
        for _ in range(self.degree):
            out += badd(a % Q, b % Q) * w
            a //= Q
            b //= Q
            w *= Q
        return out

    def _neg_digits(self, a):
        Q, bneg = self.base.order, self.base.neg
        out, w = 0, 1
        for _ in range(self.degree):
            out += bneg(a % Q) * w
            a //= Q
            w *= Q
        return out

    def _mul_poly(self, a, b):
        prod = rp.mul(self.base, self.coords(a), self.coords(b))
        return self.from_coords(rp.mod(self.base, prod, list(self.modulus)))

    def _build_tables(self):
        N = self.order - 1
        alpha = self._search_primitive()
        exp = [0] * (2 * N)
        log = [0] * self.order
        x = 1
        for i in range(N):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, alpha)
        exp[N:] = exp[:N]
        self._exp, self._log = exp, log
        self.mul = self._mul_table

    def _mul_table(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    # -- scalar arithmetic on codes -------------------------------------
    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("zero has no inverse")
        if self.base is None:
            return pow(a, -1, self.p)
        if self._exp is not None:
            return self._exp[(self.order - 1) - self._log[a]]
        return self.pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        N = self.order - 1
        if self.base is None:
            return pow(a, e, self.p)
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % N]
        e %= N
        if e == 0:
            return 1
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    # -- representation -------------------------------------------------
    def coords(self, a: int) -> list[int]:
        """Coordinate vector (base-field codes) of the element with code a."""
        if self.base is None:
            return [a]
        Q = self.base.order
        out = []
        for _ in range(self.degree):
            out.append(a % Q)
            a //= Q
        return out

    def from_coords(self, cs: Iterable[int]) -> int:
        if self.base is None:
            (c,) = cs
            return int(c) % self.p
        Q = self.base.order
        cs = list(cs)
        if len(cs) > self.degree:
            raise ValueError("too many coordinates")
        out, w = 0, 1
        for c in cs:
            out += int(c) * w
            w *= Q
        return out

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} is not {self}")
            return value
        if isinstance(value, (list, tuple)):
            if self.base is None:
                raise ValueError("prime-field elements are integers")
            return FieldElement(self, self.from_coords(self.base(v).value for v in value))
        value = int(value)
        if self.base is None:
            return FieldElement(self, value % self.p)
        if not 0 <= value < self.order:
            raise ValueError(f"element code {value} out of range for {self}")
        return FieldElement(self, value)

    def elements(self):
        return (FieldElement(self, a) for a in range(self.order))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def prime_field(self) -> "Field":
        F = self
        while F.base is not None:
            F = F.base
        return F

    def tower(self) -> list["Field"]:
        """Fields from the prime field up to self."""
        out, F = [], self
        while F is not None:
            out.append(F)
            F = F.base
        return out[::-1]

    def is_subfield_order(self, q1: int) -> bool:
        pp = prime_power(q1)
        return pp is not None and pp[0] == self.p and self.total_degree % pp[1] == 0

    def embed_int(self, k: int) -> int:
        """Code of k * 1 (the image of an integer)."""
        return k % self.p

    # -- primitive elements -----------------------------------------------
    def _search_primitive(self) -> int:
        N = self.order - 1
        if N == 1:
            return 1
        primes = list(factorize(N))
        powf = self._pow_slow
        for a in range(1, self.order):
            if all(powf(a, N // r) != 1 for r in primes):
                return a
        raise AssertionError("no primitive element found")

    def _pow_slow(self, a, e):
        if self.base is None:
            return pow(a, e, self.p)
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_slow(result, base)
            e >>= 1
            if e:
                base = self._mul_slow(base, base)
        return result

    def primitive_code(self) -> int:
        if self._primitive is None:
            if self._exp is not None:
                self._primitive = self._exp[1] if self.order > 2 else 1
            else:
                self._primitive = self._search_primitive()
        return self._primitive

    # -- numpy arithmetic -------------------------------------------------
    @property
    def vec(self) -> "VecOps":
        if self._vec is None:
            self._vec = VecOps(self)
        return self._vec

    # -- identity ----------------------------------------------------------
    def _key(self):
        return (self.p, self.base._key() if self.base else None, self.modulus)

    def __eq__(self, other):
        return self is other or (isinstance(other, Field) and self._key() == other._key())

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.base is None:
            return f"GF({self.p})"
        return f"GF({self.order}) over GF({self.base.order}) mod {list(self.modulus)}"


def _clmul_mod(a: int, b: int, m: int, deg: int) -> int:
    r = 0
    top = 1 << deg
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= m
    return r


class VecOps:
    """Elementwise arithmetic on numpy arrays of element codes."""

    def __init__(self, F: Field):
        q = F.order
        if q > VECTOR_TABLE_LIMIT:
            raise BudgetExceeded(f"vector tables unavailable for fields of order {q}")
        self.field = F
        self.q = q
        self.p = F.p
        if F.base is None:
            self.kind = "prime"
        elif F.p == 2:
            self.kind = "xor"
        else:
            self.kind = "table"
        codes = range(q)
        self.mul_tab = np.array([[F.mul(a, b) for b in codes] for a in codes], dtype=np.int64)
        self.neg_tab = np.array([F.neg(a) for a in codes], dtype=np.int64)
        self.inv_tab = np.array([0] + [F.inv(a) for a in range(1, q)], dtype=np.int64)
        if self.kind == "table":
            self.add_tab = np.array([[F.add(a, b) for b in codes] for a in codes], dtype=np.int64)
        self._pow_maps: dict[int, np.ndarray] = {}

    def add(self, a, b):
        if self.kind == "prime":
            return (a + b) % self.p
        if self.kind == "xor":
            return np.bitwise_xor(a, b)
        return self.add_tab[a, b]

    def neg(self, a):
        if self.kind == "prime":
            return (-a) % self.p
        if self.kind == "xor":
            return a
        return self.neg_tab[a]

    def sub(self, a, b):
        if self.kind == "prime":
            return (a - b) % self.p
        if self.kind == "xor":
            return np.bitwise_xor(a, b)
        return self.add_tab[a, self.neg_tab[b]]

    def mul(self, a, b):
        if self.kind == "prime":
            return (a * b) % self.p
        return self.mul_tab[a, b]

    def power_map(self, e: int) -> np.ndarray:
        """Array whose entry a is a**e."""
        if e not in self._pow_maps:
            F = self.field
            self._pow_maps[e] = np.array([F.pow(a, e) for a in range(self.q)], dtype=np.int64)
        return self._pow_maps[e]

    def sum(self, a, axis):
        """Field sum along an axis."""
        if self.kind == "prime":
            return a.sum(axis=axis) % self.p
        if self.kind == "xor":
            return np.bitwise_xor.reduce(a, axis=axis)
        a = np.moveaxis(a, axis, 0)
        acc = np.zeros(a.shape[1:], dtype=np.int64)
        for row in a:
            acc = self.add_tab[acc, row]
        return acc


@dataclass(frozen=True)
class FieldElement:
    """An element of a :class:`Field`, stored by its integer code."""

    field: Field
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field.embed_int(int(other))
        raise TypeError(f"cannot combine a field element with {type(other).__name__}")

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, int(e)))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    @property
    def vector(self) -> tuple["FieldElement", ...]:
        """Coordinates over the base field (empty tower: the element itself)."""
        F = self.field
        if F.base is None:
            return (self,)
        return tuple(FieldElement(F.base, c) for c in F.coords(self.value))

    def order(self) -> int:
        """Multiplicative order."""
        if self.value == 0:
            raise ZeroInverse("zero has no multiplicative order")
        N = self.field.order - 1
        d = N
        for r in factorize(N):
            while d % r == 0 and self.field.pow(self.value, d // r) == 1:
                d //= r
        return d

    def __repr__(self):
        F = self.field
        if F.base is None:
            return f"{self.value}"
        return f"<{self.value} in GF({F.order}): {list(F.coords(self.value))}>"


# -- public constructors ---------------------------------------------------

@lru_cache(maxsize=None)
def make_prime_field(p: int) -> Field:
    if not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    return Field(p)


def _modulus_codes(base: Field, modulus) -> tuple[int, ...]:
    coeffs = getattr(modulus, "coeffs", modulus)
    out = []
    for c in coeffs:
        if isinstance(c, FieldElement):
            if c.field != base:
                raise FieldMismatch("modulus coefficients must lie in the base field")
            out.append(c.value)
        else:
            out.append(base(c).value)
    return tuple(rp.trim(out))


def make_extension(base: Field, k: int, modulus=None) -> Field:
    """Degree-k extension of ``base``.

    Without a modulus the lexicographically smallest monic irreducible
    polynomial (in code order) is used, so the result is reproducible.
    """
    if k < 1:
        raise BadParameters("extension degree must be positive")
    if base.order**k > ENUMERATION_BUDGET:
        raise BudgetExceeded(f"field of order {base.order}^{k} exceeds the enumeration budget")
    if modulus is None:
        return _default_extension(base, k)
    codes = _modulus_codes(base, modulus)
    if len(codes) != k + 1 or codes[-1] != 1:
        raise BadParameters(f"modulus must be monic of degree {k}")
    return _extension(base, codes)


@lru_cache(maxsize=None)
def _extension(base: Field, modulus: tuple[int, ...]) -> Field:
    if not rp.is_irreducible(base, list(modulus)):
        raise ReducibleModulus(f"{list(modulus)} is reducible over {base}")
    return Field(base.p, base, modulus)


@lru_cache(maxsize=None)
def _default_extension(base: Field, k: int) -> Field:
    Q = base.order
    for idx in range(Q**k):
        cs = []
        t = idx
        for _ in range(k):
            cs.append(t % Q)
            t //= Q
        if k > 1 and cs[0] == 0:
            continue
        if rp.is_irreducible(base, cs + [1]):
            return _extension(base, tuple(cs + [1]))
    raise AssertionError("no irreducible polynomial found")


def field_of_order(q: int) -> Field:
    """The default field of order q = p^s (degree-s extension of F_p)."""
    pp = prime_power(q)
    if pp is None:
        raise BadParameters(f"{q} is not a prime power")
    p, s = pp
    F = make_prime_field(p)
    return F if s == 1 else make_extension(F, s)


def element_arithmetic(a: FieldElement, b: FieldElement) -> dict[str, FieldElement]:
    """Sum, difference, product and (when b != 0) quotient of two elements."""
    out = {"add": a + b, "sub": a - b, "mul": a * b}
    if b.value:
        out["div"] = a / b
    return out


def frobenius_power(a: FieldElement, q1: int) -> FieldElement:
    if not a.field.is_subfield_order(q1):
        raise BadParameters(f"{q1} is not the order of a subfield of {a.field}")
    return a**q1


def primitive_element(F: Field, budget: int = ENUMERATION_BUDGET) -> FieldElement:
    if F.order > budget:
        raise BudgetExceeded(f"field order {F.order} exceeds budget {budget}")
    return FieldElement(F, F.primitive_code())


def nth_root_of_unity(F: Field, n: int) -> FieldElement:
    N = F.order - 1
    if n < 1 or N % n:
        raise NotADivisor(f"{n} does not divide {N}")
    alpha = primitive_element(F)
    return alpha ** (N // n)


def project_to_base(a: FieldElement) -> FieldElement:
    F = a.field
    if F.base is None:
        raise NotInSubfield("a prime field has no base field")
    if a.value >= F.base.order:
        raise NotInSubfield(f"{a} has nonzero higher coordinates")
    return FieldElement(F.base, a.value)


# -- JSON literals -----------------------------------------------------------

def element_to_json(F: Field, code: int):
    if F.base is None:
        return int(code)
    return [element_to_json(F.base, c) for c in F.coords(code)]


def element_from_json(F: Field, obj) -> int:
    if F.base is None:
        if not isinstance(obj, int):
            raise BadParameters(f"expected an integer for {F}, got {obj!r}")
        return obj % F.p
    if isinstance(obj, int):
        if not 0 <= obj < F.order:
            raise BadParameters(f"element code {obj} out of range for {F}")
        return obj
    if not isinstance(obj, list) or len(obj) > F.degree:
        raise BadParameters(f"bad element literal {obj!r} for {F}")
    return F.from_coords(element_from_json(F.base, c) for c in obj)


def field_to_literal(F: Field) -> dict:
    tower = []
    for level in F.tower()[1:]:
        tower.append({
            "degree": level.degree,
            "modulus": [element_to_json(level.base, c) for c in level.modulus],
        })
    return {"p": F.p, "tower": tower}


def field_from_literal(obj: dict) -> Field:
    try:
        F = make_prime_field(int(obj["p"]))
        for level in obj.get("tower", []):
            k = int(level["degree"])
            if "modulus" in level and level["modulus"] is not None:
                codes = [element_from_json(F, c) for c in level["modulus"]]
                F = make_extension(F, k, codes)
            else:
                F = make_extension(F, k)
    except (KeyError, TypeError) as exc:
        raise BadParameters(f"malformed field literal: {exc}") from exc
    return F
