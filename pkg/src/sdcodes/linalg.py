"""Matrix arithmetic over small finite fields on numpy arrays of codes."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .gf import Field


def as_matrix(rows, n: int | None = None) -> np.ndarray:
    M = np.asarray(rows, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(0, n or 0) if M.size == 0 else M.reshape(1, -1)
    return M


def rref(F: Field, M: np.ndarray, col_order: Sequence[int] | None = None):
    """Reduced row echelon form.

    Pivots are chosen greedily along ``col_order`` (default: left to right).
    Returns ``(R, pivots)``; the first ``len(pivots)`` rows of R carry the
    pivots, the remaining rows are zero on every column of ``col_order``.
    """
    V = F.vec
    A = np.array(M, dtype=np.int64, copy=True)
    rows = A.shape[0]
    pivots: list[int] = []
    r = 0
    cols = range(A.shape[1]) if col_order is None else col_order
    for c in cols:
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        piv = int(A[r, c])
        if piv != 1:
            A[r] = V.mul(F.inv(piv), A[r])
        col = A[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            A[others] = V.sub(A[others], V.mul(col[others, None], A[r][None, :]))
        pivots.append(int(c))
        r += 1
    return A, pivots


def rank(F: Field, M: np.ndarray) -> int:
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def matmul(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    V = F.vec
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    if V.kind == "prime":
        return (A @ B) % F.p
    acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        acc = V.add(acc, V.mul(A[:, t][:, None], B[t][None, :]))
    return acc


def vecmat(F: Field, v: np.ndarray, M: np.ndarray) -> np.ndarray:
    return matmul(F, np.asarray(v, dtype=np.int64).reshape(1, -1), M)[0]


def nullspace(F: Field, M: np.ndarray, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : M x^T = 0}."""
    n = M.shape[1] if n is None else n
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(F, M)
    free = [c for c in range(n) if c not in set(piv)]
    V = F.vec
    out = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        for r, pc in enumerate(piv):
            out[i, pc] = V.neg(R[r, f])
    return out


def conjugate(F: Field, M: np.ndarray, q1: int) -> np.ndarray:
    """Entrywise q1-th power."""
    return F.vec.power_map(q1)[M]


def in_rowspace(F: Field, G: np.ndarray, v: np.ndarray) -> bool:
    k = G.shape[0]
    if k == 0:
        return not np.any(v)
    return rank(F, np.vstack([G, np.asarray(v, dtype=np.int64)[None, :]])) == rank(F, G)


def weight(v) -> int:
    return int(np.count_nonzero(v))
