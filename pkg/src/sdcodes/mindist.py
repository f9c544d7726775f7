"""Minimum-distance engines.

* :func:`exhaustive_min_weight` enumerates the whole message space.
* :func:`brouwer_zimmermann` is the certified information-set algorithm:
  it enumerates low-weight messages over disjoint information sets and
  raises a lower bound until it meets the best codeword weight found.
* :func:`witness_search` samples random information sets for low-weight
  codewords (upper bounds only).
* :func:`selfdual_distance_via_halves` combines distances of a
  dual-containing code and its dual by d = min{2 d(C), d(C^perp)}.

Codewords are packed internally: characteristic-2 fields as bit planes in
uint64 words (addition is XOR, weight is a popcount of the OR of the
planes), odd prime fields as small-integer vectors.  The representation
never changes a result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import linalg
from .codes import LinearCode
from .errors import BudgetExceeded, InputError
from .gf import Field

EXHAUSTIVE_BUDGET = 2**26
BZ_BUDGET = 10**9
WITNESS_BUDGET = 10**7
INF = math.inf


@dataclass
class DistanceResult:
    """Exact distance or a certified interval [lb, ub].

    ``ub`` is the weight of ``witness`` when one is present; an empty
    code has no nonzero codeword and reports lb = ub = inf.
    """

    status: str
    lb: float
    ub: float
    witness: tuple[int, ...] | None = None
    work: int = 0
    budget_exhausted: bool = False
    engine: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def d(self):
        return self.ub if self.status == "exact" else None

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def to_json(self, include_witness: bool = True) -> dict:
        def num(x):
            return None if x == INF else int(x)

        out = {"status": self.status}
        if self.exact:
            out["d"] = num(self.ub)
        out["lb"] = num(self.lb)
        out["ub"] = num(self.ub)
        if include_witness:
            out["witness"] = None if self.witness is None else [int(c) for c in self.witness]
        out["work"] = int(self.work)
        out["engine"] = self.engine
        if self.budget_exhausted:
            out["budget_exhausted"] = True
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "DistanceResult":
        def num(x):
            return INF if x is None else int(x)

        w = obj.get("witness")
        return cls(
            status=obj["status"],
            lb=num(obj.get("lb")),
            ub=num(obj.get("ub")),
            witness=None if w is None else tuple(w),
            work=int(obj.get("work", 0)),
            budget_exhausted=bool(obj.get("budget_exhausted", False)),
            engine=obj.get("engine", ""),
        )


def _finish(lb, ub, witness, work, exhausted, engine, even=False) -> DistanceResult:
    if even and lb != INF:
        lb += lb % 2
    if ub != INF:
        lb = min(lb, ub)
    status = "exact" if lb >= ub else "bounds"
    return DistanceResult(status, lb, ub, witness, work, exhausted, engine)


def _empty(engine) -> DistanceResult:
    return DistanceResult("exact", INF, INF, None, 0, False, engine)


# -- packed codeword arithmetic --------------------------------------------

class _XorPacker:
    """Bit-plane packing for a field of order 2^s."""

    def __init__(self, F: Field, n: int):
        self.F = F
        self.n = n
        self.s = F.total_degree
        self.W = (n + 63) // 64
        self.bytes_per_word = self.s * self.W * 8

    def pack(self, rows: np.ndarray) -> np.ndarray:
        r = rows.shape[0]
        pad = self.W * 64
        out = np.zeros((r, self.s, self.W), dtype=np.uint64)
        for b in range(self.s):
            bits = np.zeros((r, pad), dtype=np.uint8)
            bits[:, : self.n] = (rows >> b) & 1
            out[:, b, :] = np.packbits(bits, axis=1, bitorder="little").view("<u8")
        return out

    def unpack(self, word: np.ndarray) -> np.ndarray:
        codes = np.zeros(self.n, dtype=np.int64)
        for b in range(self.s):
            bits = np.unpackbits(word[b].astype("<u8").view(np.uint8), bitorder="little")[: self.n]
            codes |= bits.astype(np.int64) << b
        return codes

    def zero(self, shape=()):
        return np.zeros(shape + (self.s, self.W), dtype=np.uint64)

    def add(self, a, b):
        return a ^ b

    def add_into(self, acc, b):
        np.bitwise_xor(acc, b, out=acc)
        return acc

    def weights(self, acc: np.ndarray) -> np.ndarray:
        planes = acc[..., 0, :] if self.s == 1 else np.bitwise_or.reduce(acc, axis=-2)
        return np.bitwise_count(planes).sum(axis=-1, dtype=np.int64)

    def finalize(self, acc):
        return acc


class _ModPacker:
    """Integer vectors for an odd prime field; reduction is deferred."""

    def __init__(self, F: Field, n: int):
        self.F = F
        self.n = n
        self.p = F.p
        self.bytes_per_word = 2 * n

    def pack(self, rows):
        return rows.astype(np.int16)

    def unpack(self, word):
        return (word.astype(np.int64)) % self.p

    def zero(self, shape=()):
        return np.zeros(shape + (self.n,), dtype=np.int16)

    def add(self, a, b):
        return (a + b) % self.p

    def add_into(self, acc, b):
        np.add(acc, b, out=acc)
        return acc

    def weights(self, acc):
        return np.count_nonzero(acc % self.p, axis=-1).astype(np.int64)

    def finalize(self, acc):
        return acc % self.p


class _TablePacker:
    """Element codes with table addition, for odd prime-power fields."""

    def __init__(self, F: Field, n: int):
        self.F = F
        self.n = n
        self.tab = F.vec.add_tab.astype(np.int16)
        self.bytes_per_word = 2 * n

    def pack(self, rows):
        return rows.astype(np.int16)

    def unpack(self, word):
        return word.astype(np.int64)

    def zero(self, shape=()):
        return np.zeros(shape + (self.n,), dtype=np.int16)

    def add(self, a, b):
        return self.tab[a, b]

    def add_into(self, acc, b):
        acc[...] = self.tab[acc, b]
        return acc

    def weights(self, acc):
        return np.count_nonzero(acc, axis=-1).astype(np.int64)

    def finalize(self, acc):
        return acc


def _packer(F: Field, n: int):
    if F.p == 2:
        return _XorPacker(F, n)
    if F.base is None:
        return _ModPacker(F, n)
    return _TablePacker(F, n)


def _bank(packer, F: Field, G: np.ndarray) -> np.ndarray:
    """bank[c - 1, i] = packed(c * G[i]) for every nonzero scalar code c."""
    V = F.vec
    return np.stack([packer.pack(V.mul(c, G)) for c in range(1, F.order)])


# -- combination enumeration ---------------------------------------------------

def _level_cost(k: int, w: int, q: int) -> int:
    if w < 1 or w > k:
        return 0
    return math.comb(k, w) * (q - 1) ** (w - 1)


def _extend(combos: np.ndarray, k: int) -> np.ndarray:
    last = combos[:, -1].astype(np.int64)
    counts = k - 1 - last
    rep = np.repeat(combos, counts, axis=0)
    starts = np.repeat(last + 1, counts)
    offs = np.arange(int(counts.sum())) - np.repeat(np.cumsum(counts) - counts, counts)
    return np.hstack([rep, (starts + offs).astype(combos.dtype)[:, None]])


def _combo_chunks(k: int, w: int, chunk: int, prefixes: np.ndarray | None = None) -> Iterator[np.ndarray]:
    """All w-subsets of range(k) in lexicographic order, in arrays of <= ~chunk rows."""
    if prefixes is None:
        prefixes = np.arange(k - w + 1, dtype=np.int16).reshape(-1, 1)
    t = prefixes.shape[1]
    if t == w:
        yield prefixes
        return
    r = w - t
    sizes = np.array([math.comb(k - 1 - int(l), r) for l in prefixes[:, -1]], dtype=np.int64)
    keep = sizes > 0
    prefixes, sizes = prefixes[keep], sizes[keep]
    start = 0
    while start < len(prefixes):
        cum = np.cumsum(sizes[start:])
        end = start + max(1, int(np.searchsorted(cum, chunk, side="right")))
        group = prefixes[start:end]
        if end - start == 1 and sizes[start] > chunk:
            yield from _combo_chunks(k, w, chunk, _extend(group, k))
        else:
            while group.shape[1] < w:
                group = _extend(group, k)
            yield group
        start = end


class _Best:
    def __init__(self):
        self.weight = INF
        self.word = None

    def offer(self, weights: np.ndarray, words_fn):
        if weights.size == 0:
            return
        i = int(np.argmin(weights))
        wt = int(weights[i])
        if wt < self.weight:
            self.weight = wt
            self.word = words_fn(i)


def _enumerate_level(packer, bank, k, w, q, best: _Best, chunk: int, stop=None) -> tuple[int, bool]:
    """Visit every projective message of weight w; returns (work, stopped_early)."""
    work = 0
    for idx in _combo_chunks(k, w, chunk):
        B = idx.shape[0]
        first = bank[0][idx[:, 0]]

        def dfs(acc, j):
            nonlocal work
            if j == w:
                weights = packer.weights(acc)
                best.offer(weights, lambda i: packer.finalize(acc[i].copy()))
                work += B
                return
            col = idx[:, j]
            for c in range(q - 1):
                nxt = packer.add_into(acc.copy(), bank[c][col]) if j < w - 1 or c < q - 2 else packer.add_into(acc, bank[c][col])
                dfs(nxt, j + 1)

        dfs(first if w > 1 else first.copy(), 1)
        if stop is not None and stop():
            return work, True
    return work, False


def _chunk_size(packer) -> int:
    return int(max(256, min(2**17, (2**24) // max(1, packer.bytes_per_word))))


# -- engines -------------------------------------------------------------------

def _check_even(C: LinearCode):
    if C.field.order != 2:
        raise InputError("the even-weight rule applies to binary codes only")
    if np.any(np.count_nonzero(C.G, axis=1) % 2):
        raise InputError("code has a generator of odd weight; even-weight rule does not apply")


def exhaustive_min_weight(C: LinearCode, budget: int = EXHAUSTIVE_BUDGET, table_limit: int = 2**16) -> DistanceResult:
    """Exact minimum weight by enumerating every message.

    The low rows are expanded into a table of all their combinations; the
    high rows are walked as a base-q counter that changes one row's
    contribution per step.
    """
    F, k, n, q = C.field, C.k, C.n, C.field.order
    if k == 0:
        return _empty("exhaustive")
    total = q**k
    if total > budget:
        raise BudgetExceeded(f"{q}^{k} codewords exceed the exhaustive budget {budget}")
    packer = _packer(F, n)
    rows = packer.pack(C.G)
    k_low = 1
    while k_low < k and q ** (k_low + 1) <= table_limit:
        k_low += 1
    bank = _bank(packer, F, C.G[:k_low])
    table = packer.zero((1,))
    for i in range(k_low):
        parts = [table] + [packer.add(table, bank[c][i][None]) for c in range(q - 1)]
        table = np.concatenate(parts)
    table = packer.finalize(table)
    best = _Best()
    w0 = packer.weights(table)
    w0[0] = n + 1
    best.offer(w0, lambda i: table[i].copy())
    work = table.shape[0] - 1
    # high digits advance as a base-q counter; bumping digit j from element
    # code c to c + 1 (mod q) adds ((c + 1) - c) * row_j to the offset
    offset = packer.zero()
    digits = [0] * (k - k_low)
    for t in range(1, q ** (k - k_low)):
        j, u = 0, t
        while u % q == 0:
            u //= q
            j += 1
        old, new = digits[j], (digits[j] + 1) % q
        digits[j] = new
        diff = F.sub(new, old)
        step = rows[k_low + j] if diff == 1 else packer.pack(F.vec.mul(diff, C.G[k_low + j][None]))[0]
        offset = packer.finalize(packer.add(offset, step))
        words = packer.add(table, offset[None])
        best.offer(packer.weights(words), lambda i: words[i].copy())
        work += table.shape[0]
    witness = tuple(int(c) for c in packer.unpack(best.word))
    return DistanceResult("exact", best.weight, best.weight, witness, work, False, "exhaustive")


@dataclass
class InformationSet:
    matrix: np.ndarray
    columns: tuple[int, ...]
    deficiency: int


def information_sets(F: Field, G: np.ndarray) -> list[InformationSet]:
    """Disjoint pivot sets from repeated elimination on unused columns (leftmost first)."""
    k, n = G.shape
    remaining = list(range(n))
    out = []
    M = G
    while remaining:
        R, piv = linalg.rref(F, M, col_order=remaining)
        if not piv:
            break
        out.append(InformationSet(R, tuple(piv), k - len(piv)))
        used = set(piv)
        remaining = [c for c in remaining if c not in used]
        M = R
    return out


def brouwer_zimmermann(
    C: LinearCode,
    budget: int = BZ_BUDGET,
    lower_bound: int = 1,
    even_weights: bool = False,
) -> DistanceResult:
    """Certified minimum distance, or bounds when the budget runs out.

    ``lower_bound`` is a structural bound supplied by the caller (e.g. the
    BCH bound); ``even_weights`` asserts that the code is binary with all
    weights even, which lets odd lower bounds be rounded up.
    """
    F, k, n, q = C.field, C.k, C.n, C.field.order
    if k == 0:
        return _empty("bz")
    if even_weights:
        _check_even(C)
    sets = information_sets(F, C.G)
    packer = _packer(F, n)
    banks = [_bank(packer, F, s.matrix) for s in sets]
    sigma = [s.deficiency for s in sets]
    done = [0] * len(sets)
    best = _Best()
    work = 0
    chunk = _chunk_size(packer)
    exhausted = False

    def unseen_lb():
        if any(d >= k and s == 0 for d, s in zip(done, sigma)):
            return INF
        return sum(max(0, d + 1 - s) for d, s in zip(done, sigma))

    def certified():
        lb = max(lower_bound, min(unseen_lb(), best.weight))
        if even_weights and lb != INF:
            lb += lb % 2
        return lb

    def finished():
        return best.weight <= certified()

    for w in range(1, k + 1):
        if finished():
            break
        todo = [(i, l) for i in range(len(sets)) if sigma[i] <= w for l in range(done[i] + 1, w + 1)]
        cost = sum(_level_cost(k, l, q) for _, l in todo)
        if work + cost > budget:
            exhausted = True
            break
        stopped = False
        for i, l in todo:
            spent, stopped = _enumerate_level(packer, banks[i], k, l, q, best, chunk, stop=finished)
            work += spent
            if stopped:
                break
            done[i] = l
        if stopped:
            break
    witness = None
    if best.word is not None:
        witness = tuple(int(c) for c in packer.unpack(best.word))
    res = _finish(certified(), best.weight, witness, work, exhausted and not finished(), "bz")
    return res


def _default_witness_weight(k: int, q: int, cap: int = 2**15) -> int:
    p, total = 0, 0
    while p < k:
        nxt = total + _level_cost(k, p + 1, q)
        if nxt > cap and p >= 1:
            break
        total = nxt
        p += 1
    return max(1, p)


def witness_search(
    C: LinearCode,
    target: int,
    seed: int = 0,
    budget: int = WITNESS_BUDGET,
    max_weight: int | None = None,
    lower_bound: int = 1,
    even_weights: bool = False,
) -> DistanceResult:
    """Seeded random information-set search for a codeword of weight <= target.

    Claims no lower bound beyond ``lower_bound`` (with even rounding when
    ``even_weights``); the result is exact only when the best weight found
    meets that bound.
    """
    F, k, n, q = C.field, C.k, C.n, C.field.order
    if k == 0 or target < 1:
        return DistanceResult("bounds", max(1, lower_bound), INF, None, 0, False, "witness")
    if even_weights:
        _check_even(C)
    lb = max(1, lower_bound)
    if even_weights:
        lb += lb % 2
    p = max_weight or _default_witness_weight(k, q)
    rng = np.random.default_rng(seed)
    packer = _packer(F, n)
    chunk = _chunk_size(packer)
    best = _Best()
    work = 0
    samples = 0
    while samples < budget and best.weight > target and best.weight > lb:
        perm = rng.permutation(n)
        R, piv = linalg.rref(F, C.G, col_order=perm)
        bank = _bank(packer, F, R)
        for l in range(1, p + 1):
            spent, _ = _enumerate_level(packer, bank, k, l, q, best, chunk)
            work += spent
        samples += 1
    witness = None
    if best.word is not None:
        witness = tuple(int(c) for c in packer.unpack(best.word))
    res = _finish(lb, best.weight, witness, work, best.weight > target, "witness")
    res.notes.append(f"{samples} information sets sampled")
    return res


def selfdual_distance_via_halves(dC: DistanceResult, dCdual: DistanceResult, even_weights: bool = False) -> DistanceResult:
    """Distance of Plotkin(C, C^perp) (or its permutation-equivalent cyclic form)."""
    lb = min(2 * dC.lb, dCdual.lb)
    ub = min(2 * dC.ub, dCdual.ub)
    res = _finish(lb, ub, None, dC.work + dCdual.work, dC.budget_exhausted or dCdual.budget_exhausted, "halves", even_weights)
    return res


def minimum_distance(C: LinearCode, engine: str = "auto", budget: int | None = None, **kw) -> DistanceResult:
    """Dispatch to an engine by name (auto: exhaustive when small, else BZ)."""
    if engine == "auto":
        engine = "exhaustive" if C.field.order**C.k <= 2**16 else "bz"
    if engine == "exhaustive":
        return exhaustive_min_weight(C, budget or EXHAUSTIVE_BUDGET)
    if engine == "bz":
        return brouwer_zimmermann(C, budget or BZ_BUDGET, **kw)
    if engine == "witness":
        target = kw.pop("target", 1)
        return witness_search(C, target, budget=budget or WITNESS_BUDGET, **kw)
    raise InputError(f"unknown engine {engine!r}")


def verify_witness(C: LinearCode, result: DistanceResult) -> bool:
    """The witness is a codeword of weight ub."""
    if result.witness is None:
        return result.ub == INF or result.engine == "halves"
    w = np.asarray(result.witness, dtype=np.int64)
    return linalg.weight(w) == result.ub and C.contains(w)
