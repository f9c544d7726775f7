"""BCH codes, Plotkin sums and the self-dual constructions built from them.

Every theorem-level conclusion (dual containment, self-duality, the
dimension of the doubled cyclic code) is recomputed on each instance; a
failed check raises :class:`~sdcodes.errors.TheoremViolation`.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import linalg
from . import mindist as md
from .codes import (
    EUCLIDEAN,
    HERMITIAN,
    CyclicCode,
    LinearCode,
    cyclic_from_polynomial,
    defining_set,
    dual_generator,
    hermitian_dual_generator,
    is_dual_containing,
    is_dual_containing_linear,
    is_self_dual_cyclic,
    is_self_dual_linear,
    negation_free_criterion,
    qr_code,
    quadratic_residues,
    subfield_root,
)
from .cyclo import DefiningSet, cyclotomic_cosets, ord_mod
from .errors import (
    BadLambda,
    BadParameters,
    EvenLength,
    FieldMismatch,
    LengthMismatch,
    NoSquareRoot,
    NotDualContaining,
    OddCharacteristic,
    TheoremViolation,
    WrongResidue,
)
from .gf import (
    ENUMERATION_BUDGET,
    Field,
    FieldElement,
    element_to_json,
    field_of_order,
    field_to_literal,
    prime_power,
)
from .polyring import Polynomial, minimal_polynomial, splitting_field

VERIFIED_EXACT = "verified-exact"
VERIFIED_BOUND = "verified-bound"
WITNESS_ONLY = "witness-only"
UNVERIFIED = "unverified"


# -- BCH codes -----------------------------------------------------------------

@dataclass(frozen=True)
class BchSpec:
    q: int
    n: int
    delta: int
    b: int = 1
    beta: FieldElement | None = None
    m: int = 0

    @classmethod
    def make(cls, q: int, n: int, delta: int, b: int = 1, F: Field | None = None) -> "BchSpec":
        if delta < 2:
            raise BadParameters(f"designed distance {delta} < 2")
        if n < 2 or math.gcd(n, q) != 1:
            raise BadParameters(f"length {n} must exceed 1 and be coprime to {q}")
        F = F or field_of_order(q)
        _, beta = splitting_field(F, n)
        return cls(q, n, delta, b, beta, ord_mod(n, q))

    @property
    def field(self) -> Field:
        return self.beta.field.base

    def exponents(self) -> list[int]:
        return [(self.b + i) % self.n for i in range(self.delta - 1)]


def bch_generator(spec: BchSpec) -> CyclicCode:
    """lcm of the minimal polynomials of beta^b, ..., beta^(b+delta-2)."""
    if spec.delta < 2:
        raise BadParameters(f"designed distance {spec.delta} < 2")
    part = cyclotomic_cosets(spec.q, spec.n)
    leaders = sorted({part.coset_of(e)[0] for e in spec.exponents()})
    g = Polynomial.one(spec.field)
    for leader in leaders:
        g = g * minimal_polynomial(spec.beta, part.coset_of(leader))
    return CyclicCode(spec.field, spec.n, g)


def _proper_divisor(mu: int, N: int) -> None:
    if mu < 1 or N % mu or mu == N:
        raise BadParameters(f"mu={mu} is not a proper divisor of {N}")


def dual_containing_bch_euclidean(q: int, m: int, mu: int) -> tuple[CyclicCode, int]:
    """The BCH code of length (q^m-1)/mu and designed distance floor((q^((m+1)/2)-q+1)/mu)."""
    if prime_power(q) is None:
        raise BadParameters(f"{q} is not a prime power")
    if m < 1 or m % 2 == 0:
        raise BadParameters(f"m={m} must be odd")
    _proper_divisor(mu, q**m - 1)
    n = (q**m - 1) // mu
    if n <= 4:
        raise BadParameters(f"length {n} <= 4")
    delta = (q ** ((m + 1) // 2) - q + 1) // mu
    if delta < 2:
        raise BadParameters(f"designed distance {delta} < 2")
    C = bch_generator(BchSpec.make(q, n, delta))
    if not is_dual_containing(C, EUCLIDEAN):
        raise TheoremViolation(f"BCH code q={q} n={n} delta={delta} is not Euclidean dual-containing")
    return C, delta


def dual_containing_bch_hermitian(q1: int, m: int, mu: int) -> tuple[CyclicCode, int]:
    """The BCH code over GF(q1^2) of length (q1^(2m)-1)/mu and designed distance (q1^m-1)/mu."""
    if prime_power(q1) is None:
        raise BadParameters(f"{q1} is not a prime power")
    if m < 1 or m % 2 == 0:
        raise BadParameters(f"m={m} must be odd")
    _proper_divisor(mu, q1**m - 1)
    q = q1 * q1
    n = (q**m - 1) // mu
    delta = (q1**m - 1) // mu
    if n <= 4:
        raise BadParameters(f"length {n} <= 4")
    if delta < 2:
        raise BadParameters(f"designed distance {delta} < 2")
    C = bch_generator(BchSpec.make(q, n, delta))
    if not is_dual_containing(C, HERMITIAN):
        raise TheoremViolation(f"BCH code q={q} n={n} delta={delta} is not Hermitian dual-containing")
    return C, delta


def bch_bound_holds(C: CyclicCode, delta: int, b: int = 1) -> bool | None:
    """Whether the defining set contains b..b+delta-2; None when it is too costly to compute."""
    if not C.is_simple_root() or C.field.order ** ord_mod(C.N, C.field.order) > ENUMERATION_BUDGET:
        return None
    T = set(defining_set(C).elements)
    return all((b + i) % C.N in T for i in range(delta - 1))


# -- Plotkin sums and self-dual doublings ----------------------------------------

def _linear(C) -> LinearCode:
    return C.linear if isinstance(C, CyclicCode) else C


def plotkin(C1, C2) -> LinearCode:
    """[u | u + v] with u in C1, v in C2."""
    C1, C2 = _linear(C1), _linear(C2)
    if C1.field != C2.field:
        raise FieldMismatch("Plotkin sum of codes over different fields")
    if C1.n != C2.n:
        raise LengthMismatch(f"lengths {C1.n} and {C2.n} differ")
    n = C1.n
    top = np.hstack([C1.G, C1.G])
    bottom = np.hstack([np.zeros((C2.k, n), dtype=np.int64), C2.G])
    return LinearCode(C1.field, np.vstack([top, bottom]).reshape(C1.k + C2.k, 2 * n), 2 * n)


def _dual_of(C, mode: str):
    if isinstance(C, CyclicCode):
        return C.dual() if mode == EUCLIDEAN else C.hermitian_dual()
    return C.dual() if mode == EUCLIDEAN else C.hermitian_dual()


def _dual_containing(C, mode: str) -> bool:
    if isinstance(C, CyclicCode):
        return is_dual_containing(C, mode)
    return is_dual_containing_linear(C, mode)


def selfdual_from_dualcontaining(C, mode: str = EUCLIDEAN) -> LinearCode:
    """Plotkin(C, dual of C); self-dual whenever C contains its dual in characteristic 2."""
    if C.field.p != 2:
        raise OddCharacteristic("the [u | u + v] doubling is self-dual only in characteristic 2")
    if not _dual_containing(C, mode):
        raise NotDualContaining(f"code is not {mode} dual-containing")
    S = plotkin(C, _dual_of(C, mode))
    if not is_self_dual_linear(S, mode):
        raise TheoremViolation("Plotkin doubling of a dual-containing code is not self-dual")
    return S


def find_lambda(F: Field) -> FieldElement:
    """First element (in code order) whose square is -1."""
    if F.p == 2:
        return FieldElement(F, 1)
    if F.order % 4 != 1:
        raise NoSquareRoot(f"-1 is not a square in GF({F.order})")
    target = F.neg(1)
    for c in range(1, F.order):
        if F.mul(c, c) == target:
            return FieldElement(F, c)
    raise NoSquareRoot(f"no square root of -1 in GF({F.order})")


def lambda_construction(C, lam: FieldElement) -> LinearCode:
    """[u | lambda u + v], u in C, v in C^perp, for lambda^2 = -1."""
    F = C.field
    if F.order % 4 != 1:
        raise WrongResidue(f"q={F.order} is not 1 mod 4")
    if lam.field != F:
        raise FieldMismatch("lambda lies in a different field")
    if F.mul(lam.value, lam.value) != F.neg(1):
        raise BadLambda(f"lambda={lam.value} does not square to -1")
    if not _dual_containing(C, EUCLIDEAN):
        raise NotDualContaining("code is not Euclidean dual-containing")
    L, D = _linear(C), _linear(_dual_of(C, EUCLIDEAN))
    n = L.n
    top = np.hstack([L.G, F.vec.mul(lam.value, L.G)])
    bottom = np.hstack([np.zeros((D.k, n), dtype=np.int64), D.G])
    S = LinearCode(F, np.vstack([top, bottom]).reshape(L.k + D.k, 2 * n), 2 * n)
    if not is_self_dual_linear(S, EUCLIDEAN):
        raise TheoremViolation("lambda construction did not produce a self-dual code")
    return S


def van_lint_permutation(n: int) -> tuple[int, ...]:
    """Source indices mapping Plotkin coordinates (a | b) to the cyclic ordering.

    Output j < n takes a_j for even j and b_j for odd j; output n + t takes
    b_t for even t and a_t for odd t.  Index i < n is a_i, index n + i is b_i.
    """
    if n < 1 or n % 2 == 0:
        raise EvenLength(f"length {n} must be odd")
    head = [j if j % 2 == 0 else n + j for j in range(n)]
    tail = [n + t if t % 2 == 0 else t for t in range(n)]
    return tuple(head + tail)


def doubled_cyclic(C1: CyclicCode, C2: CyclicCode) -> CyclicCode:
    """Length-2n cyclic code with generator gcd(x^(2n)-1, g1 * g2) for a cyclic subcode C2 of C1."""
    if C1.field.p != 2:
        raise OddCharacteristic("the repeated-root realization needs characteristic 2")
    if C1.N % 2 == 0:
        raise EvenLength(f"length {C1.N} must be odd")
    if C1.field != C2.field or C1.N != C2.N:
        raise LengthMismatch("codes must share field and length")
    if not C1.generator.divides(C2.generator):
        raise NotDualContaining("second code is not a subcode of the first")
    F, n = C1.field, C1.N
    Cp = cyclic_from_polynomial(F, 2 * n, C1.generator * C2.generator)
    g1, g2 = C1.generator, C2.generator.exact_div(C1.generator)
    expect = 2 * n - 2 * g1.degree - g2.degree + g1.gcd(g2).degree
    if Cp.dimension != expect or Cp.dimension != C1.dimension + C2.dimension:
        raise TheoremViolation(f"doubled code has dimension {Cp.dimension}, expected {expect}")
    return Cp


def van_lint_cyclic(C: CyclicCode, mode: str = EUCLIDEAN) -> CyclicCode:
    """Self-dual cyclic code of length 2n generated by g * (generator of the dual)."""
    if C.N % 2 == 0:
        raise EvenLength(f"length {C.N} must be odd")
    if C.field.p != 2:
        raise OddCharacteristic("the repeated-root realization needs characteristic 2")
    if not is_dual_containing(C, mode):
        raise NotDualContaining(f"code is not {mode} dual-containing")
    Cp = doubled_cyclic(C, _dual_of(C, mode))
    if Cp.dimension != C.N:
        raise TheoremViolation(f"doubled code has dimension {Cp.dimension}, expected {C.N}")
    if not is_self_dual_cyclic(Cp, mode):
        raise TheoremViolation("doubled cyclic code is not self-dual")
    return Cp


def permutation_equivalent(C1: CyclicCode, C2: CyclicCode, Cp: CyclicCode) -> bool:
    """The van Lint permutation maps Plotkin(C1, C2) onto Cp as a set."""
    P = plotkin(C1, C2).permuted(van_lint_permutation(C1.N))
    return P == Cp.linear


def lift_plotkin_word(F: Field, u, v, src=None, lam: int | None = None) -> np.ndarray:
    """(u | u + v), or (u | lam*u + v), optionally reordered by the source-index tuple."""
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    scaled = u if lam is None else F.vec.mul(lam, u)
    right = F.vec.add(scaled, v)
    w = np.concatenate([u, right])
    return w if src is None else w[list(src)]


# -- distance strategies -------------------------------------------------------------

def _merge(a: md.DistanceResult, b: md.DistanceResult) -> md.DistanceResult:
    lb = max(a.lb, b.lb)
    best = a if a.ub <= b.ub else b
    ub = best.ub
    r = md.DistanceResult(
        "exact" if lb >= ub else "bounds",
        min(lb, ub) if ub != md.INF else lb,
        ub,
        best.witness,
        a.work + b.work,
        (a.budget_exhausted or b.budget_exhausted) and lb < ub,
        a.engine if a.engine == b.engine else f"{a.engine}+{b.engine}",
    )
    return r


def _with_bound(r: md.DistanceResult, lower_bound: int, even: bool) -> md.DistanceResult:
    lb = max(r.lb, lower_bound)
    if even and lb != md.INF:
        lb += lb % 2
    ub = r.ub
    out = md.DistanceResult("exact" if lb >= ub else "bounds", min(lb, ub), ub, r.witness, r.work,
                            r.budget_exhausted and lb < ub, r.engine, list(r.notes))
    return out


def code_distance(
    C: LinearCode,
    engine: str = "auto",
    lower_bound: int = 1,
    even: bool = False,
    budget: int | None = None,
    witness_budget: int = 100,
    seed: int = 0,
) -> md.DistanceResult:
    """Distance of one code with an optional structural lower bound.

    ``auto``: exhaustive for tiny codes; a quick witness hunt at the
    structural bound (exact if it succeeds); otherwise BZ, followed by a
    seeded witness hunt when BZ stops at bounds.
    """
    q, k = C.field.order, C.k
    bz_budget = budget or md.BZ_BUDGET
    if engine == "exhaustive":
        return md.exhaustive_min_weight(C, budget or md.EXHAUSTIVE_BUDGET)
    if engine == "witness":
        target = max(lower_bound, 1)
        return md.witness_search(C, target, seed=seed, budget=budget or witness_budget,
                                 lower_bound=lower_bound, even_weights=even)
    if engine == "bz":
        r = md.brouwer_zimmermann(C, bz_budget, lower_bound=lower_bound, even_weights=even)
        return _with_bound(r, lower_bound, even)
    if engine != "auto":
        raise BadParameters(f"unknown engine {engine!r}")
    if k == 0 or q**k <= 2**16:
        return md.exhaustive_min_weight(C)
    if lower_bound > 1:
        w = md.witness_search(C, lower_bound, seed=seed, budget=witness_budget,
                              lower_bound=lower_bound, even_weights=even)
        if w.exact:
            return w
    r = _with_bound(md.brouwer_zimmermann(C, bz_budget, lower_bound=lower_bound, even_weights=even), lower_bound, even)
    if not r.exact:
        w = md.witness_search(C, int(r.lb), seed=seed, budget=witness_budget,
                              lower_bound=int(r.lb), even_weights=even)
        r = _merge(r, w)
    return r


# -- reports ---------------------------------------------------------------------------

@dataclass
class Claim:
    name: str
    value: Any
    status: str

    def to_json(self):
        return {"name": self.name, "value": self.value, "status": self.status}


@dataclass
class ConstructionReport:
    construction: str
    params: dict
    code: CyclicCode | LinearCode
    n2: int
    k: int
    delta: int
    bound_kind: str
    bound: int
    mode: str = EUCLIDEAN
    self_dual: bool = False
    checks: dict = field(default_factory=dict)
    claims: list = field(default_factory=list)
    distance: md.DistanceResult | None = None
    components: dict = field(default_factory=dict)
    beta: FieldElement | None = None
    notes: list = field(default_factory=list)
    runtime_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.self_dual and all(self.checks.values())

    def distance_summary(self) -> tuple[str, Any]:
        if self.distance is None:
            return "not computed", None
        r = self.distance
        return r.status, (None if r.ub == md.INF else int(r.ub))

    def to_json(self) -> dict:
        """Deterministic report (runtime excluded so reruns are byte-identical)."""
        out = {
            "construction": self.construction,
            "params": self.params,
            "code": self.code.to_descriptor(),
            "mode": self.mode,
            "n2": self.n2,
            "k": self.k,
            "delta": self.delta,
            "bound": {"kind": self.bound_kind, "value": self.bound},
            "self_dual": self.self_dual,
            "checks": dict(self.checks),
            "claims": [c.to_json() for c in self.claims],
            "distance": None if self.distance is None else self.distance.to_json(),
            "components": self.components,
        }
        if self.beta is not None:
            out["beta"] = {
                "field": field_to_literal(self.beta.field),
                "value": element_to_json(self.beta.field, self.beta.value),
            }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _distance_claims(r: md.DistanceResult | None, bound: int, bound_kind: str, bound_checked: bool | None) -> list[Claim]:
    claims = []
    if r is None:
        status = VERIFIED_BOUND if bound_checked else UNVERIFIED
        claims.append(Claim(f"d >= {bound} ({bound_kind})", bound, status))
        return claims
    certified = r.lb != md.INF and r.lb >= bound
    status = VERIFIED_BOUND if (certified or bound_checked) else UNVERIFIED
    claims.append(Claim(f"d >= {bound} ({bound_kind})", bound, status))
    if r.exact:
        claims.append(Claim("d", None if r.ub == md.INF else int(r.ub), VERIFIED_EXACT))
    else:
        claims.append(Claim("d lower bound", int(r.lb), VERIFIED_BOUND))
        if r.ub != md.INF:
            claims.append(Claim("d upper bound", int(r.ub), WITNESS_ONLY))
    return claims


def _component_json(C, r: md.DistanceResult | None) -> dict:
    return {
        "code": C.to_descriptor(),
        "n": C.N if isinstance(C, CyclicCode) else C.n,
        "k": C.dimension if isinstance(C, CyclicCode) else C.k,
        "distance": None if r is None else r.to_json(),
    }


ROUTES = ("auto", "direct", "halves", "none")


def _route(route: str, default: str) -> str:
    """direct: distance of the doubled code itself; halves: from C and its dual; none: skip."""
    if route not in ROUTES:
        raise BadParameters(f"unknown distance route {route!r}")
    return default if route == "auto" else route


def _halves(C: CyclicCode, D, Cp, mode: str, src, lower_C: int, even_C: bool, even_D: bool, even_total: bool,
            engine, budget, witness_budget, seed, lift_lam=None):
    """Distances of C and its dual, combined and lifted to a witness of Cp."""
    rC = code_distance(C.linear, engine, lower_bound=lower_C, even=even_C, budget=budget,
                       witness_budget=witness_budget, seed=seed)
    Dl = _linear(D)
    rD = code_distance(Dl, engine, lower_bound=max(1, int(rC.lb)) if mode == EUCLIDEAN else 1,
                       even=even_D, budget=budget, witness_budget=witness_budget, seed=seed)
    total = md.selfdual_distance_via_halves(rC, rD, even_weights=even_total)
    F, n = C.field, C.N
    zero = np.zeros(n, dtype=np.int64)
    if 2 * rC.ub <= rD.ub and rC.witness is not None:
        w = lift_plotkin_word(F, rC.witness, zero, src, lift_lam)
    elif rD.witness is not None:
        v = np.asarray(rD.witness, dtype=np.int64)
        w = lift_plotkin_word(F, zero, v, src, None)
    else:
        w = None
    if w is not None:
        if not Cp.contains(w) or linalg.weight(w) != total.ub:
            raise TheoremViolation("lifted witness is not a codeword of the expected weight")
        total.witness = tuple(int(c) for c in w)
    return rC, rD, total


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.runtime_ms = (time.perf_counter() - t0) * 1000.0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def build_euclidean_cyclic(q: int, m: int, mu: int, route: str = "auto", engine: str = "auto", budget: int | None = None,
                           witness_budget: int = 100, seed: int = 0) -> ConstructionReport:
    """Euclidean self-dual cyclic code of length 2(q^m-1)/mu over GF(q), q even."""
    if q % 2 or prime_power(q) is None:
        raise BadParameters(f"q={q} must be a power of 2")
    C, delta = dual_containing_bch_euclidean(q, m, mu)
    D = C.dual()
    Cp = van_lint_cyclic(C, EUCLIDEAN)
    n = C.N
    bound, kind = delta, "bch"
    if q == 2 and mu == 1:
        bound, kind = max(delta, delta + delta % 2), "bch+even"
    rep = ConstructionReport("thm51", {"q": q, "m": m, "mu": mu}, Cp, 2 * n, Cp.dimension, delta, kind, bound,
                             EUCLIDEAN, beta=splitting_field(C.field, n)[1])
    rep.self_dual = is_self_dual_cyclic(Cp, EUCLIDEAN)
    rep.checks["dual_containing"] = True
    rep.checks["dimension"] = Cp.dimension == n
    bch_ok = bch_bound_holds(C, delta)
    if bch_ok is not None:
        rep.checks["bch_defining_set"] = bch_ok
    if C.field.order ** n <= 2**20:
        rep.checks["permutation_equivalent"] = permutation_equivalent(C, D, Cp)
    even = q == 2
    route = _route(route, "direct")
    r = None
    if route == "direct":
        r = code_distance(Cp.linear, engine, even=even, budget=budget, witness_budget=witness_budget, seed=seed)
    elif route == "halves":
        rC, rD, r = _halves(C, D, Cp, EUCLIDEAN, van_lint_permutation(n), delta, False, False, even,
                            engine, budget, witness_budget, seed)
        rep.components = {"C": _component_json(C, rC), "C_perp": _component_json(D, rD)}
    if not rep.components:
        rep.components = {"C": _component_json(C, None), "C_perp": _component_json(D, None)}
    rep.distance = r
    rep.claims = [Claim("dimension", Cp.dimension, VERIFIED_EXACT), Claim("self_dual", rep.self_dual, VERIFIED_EXACT)]
    rep.claims += _distance_claims(r, bound, kind, bch_ok)
    if r is not None and r.exact and r.ub < bound:
        raise TheoremViolation(f"distance {r.ub} below the designed bound {bound}")
    return _finalize(rep)


@_timed
def build_hermitian_cyclic(q1: int, m: int, mu: int, route: str = "auto", engine: str = "auto", budget: int | None = None,
                           witness_budget: int = 100, seed: int = 0) -> ConstructionReport:
    """Hermitian self-dual cyclic code of length 2(q1^(2m)-1)/mu over GF(q1^2), q1 even."""
    if q1 % 2 or prime_power(q1) is None:
        raise BadParameters(f"q1={q1} must be a power of 2")
    C, delta = dual_containing_bch_hermitian(q1, m, mu)
    DH = C.hermitian_dual()
    D = C.dual()
    Cp = van_lint_cyclic(C, HERMITIAN)
    n = C.N
    rep = ConstructionReport("thm52", {"q1": q1, "m": m, "mu": mu}, Cp, 2 * n, Cp.dimension, delta, "bch", delta,
                             HERMITIAN, beta=splitting_field(C.field, n)[1])
    rep.self_dual = is_self_dual_cyclic(Cp, HERMITIAN)
    rep.checks["dual_containing"] = True
    rep.checks["dimension"] = Cp.dimension == n
    bch_ok = bch_bound_holds(C, delta)
    if bch_ok is not None:
        rep.checks["bch_defining_set"] = bch_ok
    if C.field.order ** n <= 2**20:
        rep.checks["permutation_equivalent"] = permutation_equivalent(C, DH, Cp)
    route = _route(route, "halves")
    r = None
    comps = {"C": _component_json(C, None), "C_perp": _component_json(D, None)}
    if route == "direct":
        r = code_distance(Cp.linear, engine, lower_bound=delta, budget=budget, witness_budget=witness_budget, seed=seed)
    elif route == "halves":
        # weights of the Hermitian dual equal those of the Euclidean dual (entrywise Frobenius)
        rC, rD, r = _halves_hermitian(C, D, Cp, delta, engine, budget, witness_budget, seed)
        comps = {"C": _component_json(C, rC), "C_perp": _component_json(D, rD)}
    rep.components = comps
    rep.distance = r
    rep.claims = [Claim("dimension", Cp.dimension, VERIFIED_EXACT), Claim("self_dual", rep.self_dual, VERIFIED_EXACT)]
    rep.claims += _distance_claims(r, delta, "bch", bch_ok)
    return _finalize(rep)


def _halves_hermitian(C, D, Cp, delta, engine, budget, witness_budget, seed):
    F, n = C.field, C.N
    q1 = subfield_root(F)
    rC = code_distance(C.linear, engine, lower_bound=delta, budget=budget, witness_budget=witness_budget, seed=seed)
    rD = code_distance(D.linear, engine, budget=budget, witness_budget=witness_budget, seed=seed)
    total = md.selfdual_distance_via_halves(rC, rD)
    src = van_lint_permutation(n)
    zero = np.zeros(n, dtype=np.int64)
    w = None
    if 2 * rC.ub <= rD.ub and rC.witness is not None:
        w = lift_plotkin_word(F, rC.witness, zero, src, None)
    elif rD.witness is not None:
        v = linalg.conjugate(F, np.asarray(rD.witness, dtype=np.int64), q1)
        w = lift_plotkin_word(F, zero, v, src, None)
    if w is not None:
        if not Cp.contains(w) or linalg.weight(w) != total.ub:
            raise TheoremViolation("lifted witness is not a codeword of the expected weight")
        total.witness = tuple(int(c) for c in w)
    return rC, rD, total


@_timed
def build_lambda_linear(q: int, m: int, mu: int, route: str = "auto", engine: str = "auto", budget: int | None = None,
                        witness_budget: int = 100, seed: int = 0) -> ConstructionReport:
    """Self-dual [2n, n] code over odd GF(q), q = 1 mod 4, from the dual-containing BCH code."""
    pp = prime_power(q)
    if pp is None:
        raise BadParameters(f"{q} is not a prime power")
    if q % 2 == 0:
        raise BadParameters(f"q={q} must be odd")
    if q % 4 != 1:
        raise WrongResidue(f"q={q} is not 1 mod 4")
    C, delta = dual_containing_bch_euclidean(q, m, mu)
    F = C.field
    lam = find_lambda(F)
    S = lambda_construction(C, lam)
    D = C.dual()
    n = C.N
    rep = ConstructionReport("thm62", {"q": q, "m": m, "mu": mu}, S, 2 * n, S.k, delta, "bch", delta,
                             EUCLIDEAN, beta=splitting_field(F, n)[1])
    gram = linalg.matmul(F, S.G, S.G.T.copy())
    rep.checks["gram_zero"] = not np.any(gram)
    rep.checks["rank"] = linalg.rank(F, S.G) == n
    rep.checks["dual_containing"] = True
    rep.self_dual = is_self_dual_linear(S, EUCLIDEAN)
    bch_ok = bch_bound_holds(C, delta)
    if bch_ok is not None:
        rep.checks["bch_defining_set"] = bch_ok
    rep.params["lambda"] = element_to_json(F, lam.value)
    route = _route(route, "direct")
    r = None
    comps = {"C": _component_json(C, None), "C_perp": _component_json(D, None)}
    if route == "direct":
        r = code_distance(S, engine, budget=budget, witness_budget=witness_budget, seed=seed)
    elif route == "halves":
        rC, rD, r = _halves_lambda(C, D, S, lam, delta, engine, budget, witness_budget, seed)
        comps = {"C": _component_json(C, rC), "C_perp": _component_json(D, rD)}
    rep.components = comps
    rep.distance = r
    rep.claims = [Claim("dimension", S.k, VERIFIED_EXACT), Claim("self_dual", rep.self_dual, VERIFIED_EXACT)]
    rep.claims += _distance_claims(r, delta, "bch", bch_ok)
    if r is not None and r.exact and r.ub < delta:
        raise TheoremViolation(f"distance {r.ub} below the designed bound {delta}")
    return _finalize(rep)


def _halves_lambda(C, D, S, lam, delta, engine, budget, witness_budget, seed):
    F, n = C.field, C.N
    rC = code_distance(C.linear, engine, lower_bound=delta, budget=budget, witness_budget=witness_budget, seed=seed)
    rD = code_distance(D.linear, engine, lower_bound=max(1, int(rC.lb)), budget=budget,
                       witness_budget=witness_budget, seed=seed)
    total = md.selfdual_distance_via_halves(rC, rD)
    zero = np.zeros(n, dtype=np.int64)
    w = None
    if 2 * rC.ub <= rD.ub and rC.witness is not None:
        w = lift_plotkin_word(F, rC.witness, zero, None, lam.value)
    elif rD.witness is not None:
        w = lift_plotkin_word(F, zero, rD.witness, None, lam.value)
    if w is not None:
        if not S.contains(w) or linalg.weight(w) != total.ub:
            raise TheoremViolation("lifted witness is not a codeword of the expected weight")
        total.witness = tuple(int(c) for c in w)
    return rC, rD, total


def qr_defining_set(C: CyclicCode) -> DefiningSet:
    """Defining set of a QR code: computed from the deterministic root when the
    splitting field is small enough, otherwise the residue set (the code is
    the residue code for a suitable primitive n-th root of unity)."""
    n = C.N
    if 2 ** ord_mod(n, 2) <= ENUMERATION_BUDGET:
        return defining_set(C)
    return DefiningSet.of(n, quadratic_residues(n))


@_timed
def build_qr_cyclic(n: int, route: str = "auto", engine: str = "auto", budget: int | None = None,
                    witness_budget: int = 100, seed: int = 0) -> ConstructionReport:
    """Binary self-dual cyclic code of length 2n from the odd-like QR code of prime length n = 7 mod 8."""
    C = qr_code(n)
    part = cyclotomic_cosets(2, n)
    T = qr_defining_set(C)
    Q = set(quadratic_residues(n))
    nonres = set(range(1, n)) - Q
    D = C.dual()
    Cp = van_lint_cyclic(C, EUCLIDEAN)
    sq = math.isqrt(n - 1) + 1 if n > 1 else 1
    bound = sq + sq % 2
    rep = ConstructionReport("thm72", {"n": n}, Cp, 2 * n, Cp.dimension, sq, "sqrt+even", bound, EUCLIDEAN)
    if 2 ** ord_mod(n, 2) <= ENUMERATION_BUDGET:
        rep.beta = splitting_field(C.field, n)[1]
    else:
        rep.notes.append("generator from the residue idempotent; defining set taken as the residues")
    rep.checks["defining_set_is_qr_or_qnr"] = set(T.elements) in (Q, nonres)
    rep.checks["negation_free_criterion"] = negation_free_criterion(T, part)
    rep.checks["dual_containing"] = True
    rep.checks["dimension"] = Cp.dimension == n
    if 2**n <= 2**20:
        rep.checks["permutation_equivalent"] = permutation_equivalent(C, D, Cp)
    if not rep.checks["negation_free_criterion"]:
        raise TheoremViolation(f"QR defining set for n={n} fails the negation-free criterion")
    rep.self_dual = is_self_dual_cyclic(Cp, EUCLIDEAN)
    route = _route(route, "halves")
    r = None
    comps = {"C": _component_json(C, None), "C_perp": _component_json(D, None)}
    if route == "direct":
        r = code_distance(Cp.linear, engine, lower_bound=1, even=True, budget=budget,
                          witness_budget=witness_budget, seed=seed)
    elif route == "halves":
        rC, rD, r = _halves(C, D, Cp, EUCLIDEAN, van_lint_permutation(n), 1, False, True, True,
                            engine, budget, witness_budget, seed)
        comps = {"C": _component_json(C, rC), "C_perp": _component_json(D, rD)}
    rep.components = comps
    rep.distance = r
    rep.claims = [Claim("dimension", Cp.dimension, VERIFIED_EXACT), Claim("self_dual", rep.self_dual, VERIFIED_EXACT)]
    rep.claims += _distance_claims(r, bound, "sqrt+even", None)
    if r is not None and r.exact and r.ub < bound:
        raise TheoremViolation(f"distance {r.ub} below the square-root bound {bound}")
    return _finalize(rep)


def _finalize(rep: ConstructionReport) -> ConstructionReport:
    if not rep.self_dual:
        raise TheoremViolation(f"{rep.construction} output is not self-dual")
    failed = [k for k, v in rep.checks.items() if not v]
    if failed:
        raise TheoremViolation(f"{rep.construction} failed checks: {', '.join(failed)}")
    if rep.distance is not None and rep.distance.witness is not None:
        code = rep.code
        w = np.asarray(rep.distance.witness, dtype=np.int64)
        if not code.contains(w) or linalg.weight(w) != rep.distance.ub:
            raise TheoremViolation("distance witness failed re-verification")
    return rep


PIPELINES = {
    "thm51": build_euclidean_cyclic,
    "thm52": build_hermitian_cyclic,
    "thm62": build_lambda_linear,
    "thm72": build_qr_cyclic,
}

QR_PRIMES = (7, 23, 31, 47, 71, 79, 103)
