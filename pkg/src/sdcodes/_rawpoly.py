"""Low-level dense polynomial routines on lists of element codes.

Coefficients are ascending by degree and are the integer codes used by
:class:`sdcodes.gf.Field`.  Every function takes the coefficient field as
its first argument and returns trimmed lists (no trailing zeros; the zero
polynomial is ``[]``).
"""

from __future__ import annotations


def trim(a: list[int]) -> list[int]:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    if n != len(a):
        a = a[:n]
    return a


def add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    fadd = F.add
    for i, c in enumerate(b):
        out[i] = fadd(out[i], c)
    return trim(out)


def neg(F, a):
    return [F.neg(c) for c in a]


def sub(F, a, b):
    return add(F, a, neg(F, b))


def scale(F, c, a):
    if c == 0:
        return []
    fmul = F.mul
    return trim([fmul(c, x) for x in a])


def mul(F, a, b):
    if not a or not b:
        return []
    if F.p == F.order:
        return _mul_prime(F.p, a, b)
    fadd, fmul = F.add, F.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = fadd(out[i + j], fmul(x, y))
    return trim(out)


def _mul_prime(p, a, b):
    if p == 2:
        # carry-less product of bit masks
        ia = sum(1 << i for i, c in enumerate(a) if c)
        ib = sum(1 << i for i, c in enumerate(b) if c)
        r = 0
        while ib:
            if ib & 1:
                r ^= ia
            ia <<= 1
            ib >>= 1
        return [(r >> i) & 1 for i in range(r.bit_length())]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_(F, a, b):
    """Quotient and remainder; ``b`` must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], trim(a)
    inv_lc = F.inv(b[-1])
    fsub, fmul = F.sub, F.mul
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        t = fmul(c, inv_lc)
        q[i - db] = t
        off = i - db
        for j, y in enumerate(b):
            if y:
                a[off + j] = fsub(a[off + j], fmul(t, y))
    return trim(q), trim(a[:db])


def mod(F, a, b):
    return divmod_(F, a, b)[1]


def monic(F, a):
    if not a or a[-1] == 1:
        return list(a)
    return scale(F, F.inv(a[-1]), a)


def gcd(F, a, b):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def mulmod(F, a, b, m):
    return mod(F, mul(F, a, b), m)


def powmod(F, a, e, m):
    result = [1]
    base = mod(F, a, m)
    while e:
        if e & 1:
            result = mulmod(F, result, base, m)
        e >>= 1
        if e:
            base = mulmod(F, base, base, m)
    return result


def is_irreducible(F, f) -> bool:
    """Rabin's test for a monic ``f`` over the finite field ``F``."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    Q = F.order
    x = [0, 1]

    def frob_power(i):
        r = x
        for _ in range(i):
            r = powmod(F, r, Q, f)
        return r

    if frob_power(k) != mod(F, x, f):
        return False
    for r in _prime_factors(k):
        h = sub(F, frob_power(k // r), x)
        if len(gcd(F, h, f)) != 1:
            return False
    return True


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
