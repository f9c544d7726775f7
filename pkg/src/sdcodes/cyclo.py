"""Cyclotomic cosets, defining sets and the gcd identities used to size them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable

from .errors import NotADivisor, NotCoprime
from .gf import FieldElement
from .polyring import Polynomial


def ord_mod(n: int, q: int) -> int:
    """Least l >= 1 with q^l = 1 (mod n)."""
    if n < 2:
        raise ValueError("ord_mod needs n > 1")
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    l, x = 1, q % n
    while x != 1:
        x = (x * q) % n
        l += 1
    return l


@dataclass(frozen=True)
class CyclotomicPartition:
    n: int
    q: int
    cosets: tuple[tuple[int, ...], ...]
    leaders: tuple[int, ...]

    def coset_of(self, i: int) -> tuple[int, ...]:
        return self.cosets[self._index[i % self.n]]

    @property
    def _index(self) -> dict[int, int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {r: k for k, c in enumerate(self.cosets) for r in c}
            object.__setattr__(self, "_idx", idx)
        return idx

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "cosets": [list(c) for c in self.cosets]}


@lru_cache(maxsize=None)
def cyclotomic_cosets(q: int, n: int) -> CyclotomicPartition:
    if gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    seen = [False] * n
    cosets = []
    for i in range(n):
        if seen[i]:
            continue
        c, j = [], i
        while not seen[j]:
            seen[j] = True
            c.append(j)
            j = (j * q) % n
        cosets.append(tuple(sorted(c)))
    return CyclotomicPartition(n, q, tuple(cosets), tuple(c[0] for c in cosets))


@dataclass(frozen=True)
class DefiningSet:
    n: int
    elements: tuple[int, ...]

    @classmethod
    def of(cls, n: int, residues: Iterable[int]) -> "DefiningSet":
        return cls(n, tuple(sorted({r % n for r in residues})))

    def __contains__(self, i):
        return i % self.n in set(self.elements)

    def __len__(self):
        return len(self.elements)

    def inverse_set(self) -> "DefiningSet":
        return DefiningSet.of(self.n, (self.n - i for i in self.elements))

    def q1_inverse_set(self, q1: int) -> "DefiningSet":
        return DefiningSet.of(self.n, (self.n - q1 * i for i in self.elements))

    def complement(self) -> "DefiningSet":
        s = set(self.elements)
        return DefiningSet(self.n, tuple(i for i in range(self.n) if i not in s))

    def intersection(self, other: "DefiningSet") -> "DefiningSet":
        return DefiningSet(self.n, tuple(sorted(set(self.elements) & set(other.elements))))

    def is_union_of_cosets(self, partition: CyclotomicPartition) -> bool:
        s = set(self.elements)
        return all(set(partition.coset_of(i)) <= s for i in s)


def set_algebra(T: DefiningSet, q1: int | None = None) -> dict[str, DefiningSet]:
    out = {"inverse": T.inverse_set(), "complement": T.complement()}
    if q1 is not None:
        out["q1_inverse"] = T.q1_inverse_set(q1)
    return out


def gcd_lemma(q: int, a: int, b: int, sign: int) -> int:
    """Closed form of gcd(q^a + 1, q^b - 1) (sign=+1) or gcd(q^a - 1, q^b - 1) (sign=-1)."""
    g = gcd(a, b)
    if sign == -1:
        return q**g - 1
    if sign != 1:
        raise ValueError("sign must be +1 or -1")
    if (b // g) % 2 == 0:
        return q**g + 1
    return 1 if q % 2 == 0 else 2


def defining_set_of(g: Polynomial, beta: FieldElement, n: int) -> DefiningSet:
    """{i in Z_n : g(beta^i) = 0} for a divisor g of x^n - 1.

    g has coefficients in the base field, so its zero set is Frobenius
    closed and one evaluation per coset leader decides the whole coset.
    """
    F = g.field
    if not g.divides(Polynomial.xn_minus_1(F, n)):
        raise NotADivisor("g does not divide x^n - 1")
    part = cyclotomic_cosets(F.order, n)
    E = beta.field
    out = []
    for leader, coset in zip(part.leaders, part.cosets):
        if g(FieldElement(E, E.pow(beta.value, leader))).value == 0:
            out.extend(coset)
    return DefiningSet.of(n, out)
