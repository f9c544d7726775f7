"""Cyclic and linear codes, their Euclidean and Hermitian duals.

Cyclic codes are kept as canonical monic generator polynomials dividing
x^N - 1, which covers repeated-root lengths as well.  Linear codes are
generator matrices of element codes (see :mod:`sdcodes.gf`).
"""

from __future__ import annotations

from functools import cached_property
from math import gcd

import numpy as np

from . import linalg
from .cyclo import CyclotomicPartition, DefiningSet, cyclotomic_cosets, defining_set_of, ord_mod
from .errors import (
    BadLength,
    BudgetExceeded,
    CodeError,
    FieldMismatch,
    InputError,
    LengthMismatch,
    NotASquareField,
    NotADivisor,
    TheoremViolation,
    ZeroPolynomial,
)
from .gf import (
    ENUMERATION_BUDGET,
    Field,
    element_from_json,
    element_to_json,
    field_from_literal,
    field_of_order,
    field_to_literal,
    is_prime,
    make_prime_field,
    prime_power,
)
from .polyring import (
    Polynomial,
    coefficientwise_power,
    minimal_polynomial,
    reciprocal_normalized,
    splitting_field,
)

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"


def subfield_root(F: Field) -> int:
    """q1 with |F| = q1^2, or NotASquareField."""
    pp = prime_power(F.order)
    if pp is None or pp[1] % 2:
        raise NotASquareField(f"GF({F.order}) is not a square-order field")
    return pp[0] ** (pp[1] // 2)


class LinearCode:
    """Linear code spanned by the rows of G (reduced to full row rank)."""

    def __init__(self, field: Field, G, n: int | None = None):
        G = linalg.as_matrix(G, n)
        if G.ndim != 2:
            raise ValueError("generator matrix must be two-dimensional")
        R, piv = linalg.rref(field, G) if G.shape[0] else (G, [])
        if len(piv) < G.shape[0]:
            G = R[: len(piv)]
        self.field = field
        self.G = G
        self.n = G.shape[1]
        self.k = G.shape[0]
        self.rref = R[: len(piv)]
        self.pivots = tuple(piv)

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over GF({self.field.order}))"

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.k == other.k
            and np.array_equal(self.rref, other.rref)
        )

    def encode(self, message) -> np.ndarray:
        return encode(self, message)

    def contains(self, word) -> bool:
        word = np.asarray(word, dtype=np.int64)
        if word.shape != (self.n,):
            return False
        return linalg.in_rowspace(self.field, self.rref, word)

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, linalg.nullspace(self.field, self.G, self.n), self.n)

    def hermitian_dual(self) -> "LinearCode":
        q1 = subfield_root(self.field)
        D = linalg.nullspace(self.field, self.G, self.n)
        return LinearCode(self.field, linalg.conjugate(self.field, D, q1), self.n)

    def permuted(self, src) -> "LinearCode":
        """Code whose coordinate j is coordinate src[j] of this code."""
        return LinearCode(self.field, self.G[:, list(src)], self.n)

    def to_descriptor(self) -> dict:
        F = self.field
        return {
            "kind": "linear",
            "q": F.order,
            "n": self.n,
            "field": field_to_literal(F),
            "G": [[element_to_json(F, int(c)) for c in row] for row in self.G],
        }


class CyclicCode:
    """Cyclic code of length N with canonical monic generator g | x^N - 1."""

    def __init__(self, field: Field, N: int, generator: Polynomial):
        if generator.field != field:
            raise FieldMismatch("generator polynomial over the wrong field")
        if generator.is_zero() or not generator.is_monic():
            raise InputError("generator must be monic and nonzero")
        if not generator.divides(Polynomial.xn_minus_1(field, N)):
            raise NotADivisor(f"generator does not divide x^{N} - 1")
        self.field = field
        self.N = N
        self.generator = generator

    @property
    def dimension(self) -> int:
        return self.N - self.generator.degree

    k = dimension

    @property
    def check_polynomial(self) -> Polynomial:
        return Polynomial.xn_minus_1(self.field, self.N).exact_div(self.generator)

    def is_simple_root(self) -> bool:
        return gcd(self.N, self.field.p) == 1

    def __eq__(self, other):
        return (
            isinstance(other, CyclicCode)
            and self.field == other.field
            and self.N == other.N
            and self.generator == other.generator
        )

    def __hash__(self):
        return hash((self.field, self.N, self.generator))

    def __repr__(self):
        return f"CyclicCode([{self.N}, {self.dimension}] over GF({self.field.order}), g={list(self.generator.coeffs)})"

    @cached_property
    def linear(self) -> LinearCode:
        return generator_matrix(self)

    def contains(self, word) -> bool:
        word = [int(c) for c in word]
        if len(word) != self.N:
            return False
        return self.generator.divides(Polynomial._raw(self.field, _trimmed(word)))

    def dual(self) -> "CyclicCode":
        return CyclicCode(self.field, self.N, dual_generator(self))

    def hermitian_dual(self) -> "CyclicCode":
        return CyclicCode(self.field, self.N, hermitian_dual_generator(self))

    def to_descriptor(self) -> dict:
        F = self.field
        return {
            "kind": "cyclic",
            "q": F.order,
            "N": self.N,
            "field": field_to_literal(F),
            "generator": self.generator.to_json(),
        }


def _trimmed(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def cyclic_from_polynomial(F: Field, N: int, f: Polynomial) -> CyclicCode:
    """The cyclic code generated by f in F[x]/(x^N - 1); generator gcd(x^N - 1, f)."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial does not define a generator")
    return CyclicCode(F, N, Polynomial.xn_minus_1(F, N).gcd(f))


def dual_generator(C: CyclicCode) -> Polynomial:
    return reciprocal_normalized(C.check_polynomial)


def hermitian_dual_generator(C: CyclicCode) -> Polynomial:
    q1 = subfield_root(C.field)
    return coefficientwise_power(dual_generator(C), q1)


def defining_set(C: CyclicCode, beta=None) -> DefiningSet:
    """Defining set w.r.t. the deterministic n-th root of unity (or ``beta``)."""
    if beta is None:
        _, beta = splitting_field(C.field, C.N)
    return defining_set_of(C.generator, beta, C.N)


def _defining_set_feasible(C: CyclicCode) -> bool:
    if not C.is_simple_root() or C.N < 2:
        return False
    return C.field.order ** ord_mod(C.N, C.field.order) <= ENUMERATION_BUDGET


def is_dual_containing(C: CyclicCode, mode: str = EUCLIDEAN, cross_check: bool = True) -> bool:
    """C^perp (or C^perp_H) is contained in C, i.e. g divides the dual generator.

    For simple-root codes whose splitting field is within budget the answer
    is recomputed from the defining set, and a disagreement is reported as
    a TheoremViolation.
    """
    if mode == EUCLIDEAN:
        dg = dual_generator(C)
    elif mode == HERMITIAN:
        dg = hermitian_dual_generator(C)
    else:
        raise InputError(f"unknown duality mode {mode!r}")
    result = C.generator.divides(dg)
    if cross_check and _defining_set_feasible(C):
        try:
            T = defining_set(C)
        except BudgetExceeded:
            return result
        if mode == EUCLIDEAN:
            other = T.inverse_set()
        else:
            other = T.q1_inverse_set(subfield_root(C.field))
        by_sets = len(T.intersection(other)) == 0
        if by_sets != result:
            raise TheoremViolation("polynomial and defining-set dual-containment tests disagree")
    return result


def negation_free_criterion(T: DefiningSet, partition: CyclotomicPartition) -> bool:
    """Sufficient test for Euclidean dual-containment of the code with defining set T.

    (a) no coset holds both a and n - a, for a = 1..n-1;
    (b) no a in Z_n has both a and (n - a) mod n in T.
    """
    n = T.n
    for a in range(1, n):
        if (n - a) in partition.coset_of(a):
            return False
    s = set(T.elements)
    return not any((n - a) % n in s for a in s)


def quadratic_residues(n: int) -> list[int]:
    return sorted({(i * i) % n for i in range(1, n)})


def qr_generator_idempotent(n: int) -> Polynomial:
    """gcd(x^n - 1, sum_{r in QR} x^r): an odd-like binary QR generator.

    Needs no extension field; its defining set is the residue set with
    respect to a suitable primitive n-th root of unity.
    """
    F2 = make_prime_field(2)
    e = [0] * n
    for r in quadratic_residues(n):
        e[r] = 1
    return Polynomial.xn_minus_1(F2, n).gcd(Polynomial(F2, e))


def qr_code(n: int) -> CyclicCode:
    """Odd-like binary quadratic-residue code of prime length n = 7 (mod 8)."""
    if not (is_prime(n) and n % 8 == 7):
        raise BadLength(f"{n} is not a prime congruent to 7 mod 8")
    F2 = make_prime_field(2)
    Q = set(quadratic_residues(n))
    if 2 ** ord_mod(n, 2) <= ENUMERATION_BUDGET:
        _, beta = splitting_field(F2, n)
        part = cyclotomic_cosets(2, n)
        g = Polynomial.one(F2)
        for coset in part.cosets:
            if coset[0] in Q:
                g = g * minimal_polynomial(beta, coset)
    else:
        g = qr_generator_idempotent(n)
    C = CyclicCode(F2, n, g)
    if C.dimension != (n + 1) // 2:
        raise TheoremViolation(f"QR code of length {n} has dimension {C.dimension}")
    return C


def generator_matrix(C: CyclicCode) -> LinearCode:
    """Rows x^i g(x) for i < k."""
    k, N = C.dimension, C.N
    G = np.zeros((k, N), dtype=np.int64)
    g = np.array(C.generator.coeffs, dtype=np.int64)
    for i in range(k):
        G[i, i : i + len(g)] = g
    return LinearCode(C.field, G, N)


def _gram(C: LinearCode, mode: str) -> np.ndarray:
    F = C.field
    if mode == EUCLIDEAN:
        right = C.G
    elif mode == HERMITIAN:
        right = linalg.conjugate(F, C.G, subfield_root(F))
    else:
        raise InputError(f"unknown duality mode {mode!r}")
    return linalg.matmul(F, C.G, right.T.copy())


def is_self_orthogonal_linear(C: LinearCode, mode: str = EUCLIDEAN) -> bool:
    return not np.any(_gram(C, mode))


def is_self_dual_linear(C: LinearCode, mode: str = EUCLIDEAN) -> bool:
    if C.n % 2 or 2 * C.k != C.n:
        return False
    return is_self_orthogonal_linear(C, mode)


def is_self_dual_cyclic(C: CyclicCode, mode: str = EUCLIDEAN) -> bool:
    if C.N % 2 or 2 * C.generator.degree != C.N:
        return False
    if mode == EUCLIDEAN:
        return C.generator == dual_generator(C)
    if mode == HERMITIAN:
        return C.generator == hermitian_dual_generator(C)
    raise InputError(f"unknown duality mode {mode!r}")


def is_dual_containing_linear(C: LinearCode, mode: str = EUCLIDEAN) -> bool:
    D = C.dual() if mode == EUCLIDEAN else C.hermitian_dual()
    if D.k > C.k:
        return False
    return D.k == 0 or linalg.rank(C.field, np.vstack([C.rref, D.G])) == C.k


def encode(C: LinearCode, message) -> np.ndarray:
    m = np.asarray(message, dtype=np.int64)
    if m.shape != (C.k,):
        raise LengthMismatch(f"message length {m.size} != dimension {C.k}")
    if C.k == 0:
        return np.zeros(C.n, dtype=np.int64)
    return linalg.vecmat(C.field, m, C.G)


# -- descriptors -------------------------------------------------------------

def _descriptor_field(obj: dict) -> Field:
    if "field" in obj and obj["field"] is not None:
        F = field_from_literal(obj["field"])
        if "q" in obj and int(obj["q"]) != F.order:
            raise InputError("q does not match the field literal")
        return F
    return field_of_order(int(obj["q"]))


def code_from_descriptor(obj: dict):
    """Build a code from its JSON descriptor.

    Returns ``(code, notes)``; notes mention any canonicalization that was
    applied (a cyclic generator not dividing x^N - 1 is replaced by the gcd).
    """
    notes: list[str] = []
    try:
        kind = obj.get("kind", "cyclic")
        F = _descriptor_field(obj)
        if kind == "cyclic":
            N = int(obj["N"])
            f = Polynomial.from_json(F, obj["generator"])
            C = cyclic_from_polynomial(F, N, f)
            if C.generator != f:
                notes.append("generator canonicalized to gcd(x^N - 1, f)")
            return C, notes
        if kind == "linear":
            rows = [[element_from_json(F, c) for c in row] for row in obj["G"]]
            n = int(obj.get("n", len(rows[0]) if rows else 0))
            C = LinearCode(F, np.array(rows, dtype=np.int64).reshape(len(rows), n), n)
            if C.k < len(rows):
                notes.append("dependent rows dropped")
            return C, notes
    except CodeError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"malformed code descriptor: {exc}") from exc
    raise InputError(f"unknown code kind {kind!r}")
