"""Exact arithmetic in the tower F_p < F_q < F_{q^m}, plus F_q linear algebra.

Representation.  An element of F_q (q = p^s) is an int in [0, q) whose
base-p digits are its coordinates over the prime field.  An element of
F_{q^m} is an int in [0, q^m) whose base-q digits are its coordinates in
the polynomial basis B = (1, a, ..., a^(m-1)), a being the class of X
modulo ``ext_modulus``.  The two packings agree (both are base-p digit
strings), so addition of packed values is digit-wise mod p at every level,
plain XOR in characteristic two.  Multiplication goes through log/antilog
tables whenever the field has at most 2**18 elements, and through explicit
polynomial arithmetic modulo the defining polynomial otherwise.

Moduli are chosen deterministically when omitted: the monic irreducible
polynomial whose non-leading coefficients, read high to low as a base-q
(resp. base-p) integer, are smallest.  Two contexts built from the same
(q, m) therefore carry identical arithmetic.

A matrix over F_q is a list of rows, each row a list of packed ints.
``rref``/``rank``/``kernel_basis``/``solve`` use deterministic
first-nonzero pivoting so every downstream computation, decoders included,
is reproducible bit for bit.

FieldCtx is immutable after construction and safe to share between
threads; every function in this module is pure.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DependentPoints,
    InternalInconsistency,
    NotPrimePower,
    ReducibleModulus,
)

__all__ = [
    "FieldCtx",
    "field_create",
    "Subspace",
    "subspace_from_vectors",
    "subspace_elements",
    "subspace_perp",
    "ext",
    "col_support",
    "row_support",
    "rank_weight",
    "rank",
    "rref",
    "kernel_basis",
    "solve",
]

# Log/antilog tables are built only up to this many field elements.
_TABLE_CAP = 1 << 18


# ---------------------------------------------------------------------------
# integer helpers


def _factorize(n: int) -> list[int]:
    """Distinct prime factors of n, ascending (trial division)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _prime_power(q: int) -> tuple[int, int] | None:
    """(p, s) with q = p**s, or None if q is not a prime power."""
    if q < 2:
        return None
    fac = _factorize(q)
    if len(fac) != 1:
        return None
    p = fac[0]
    s = 0
    v = q
    while v > 1:
        v //= p
        s += 1
    return p, s


def _unpack_base(v: int, base: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(v % base)
        v //= base
    return out


def _digitwise_add(x: int, y: int, p: int) -> int:
    # packed values are base-p digit strings at every tower level
    if p == 2:
        return x ^ y
    out = 0
    shift = 1
    while x or y:
        out += ((x % p) + (y % p)) % p * shift
        x //= p
        y //= p
        shift *= p
    return out


def _digitwise_neg(x: int, p: int) -> int:
    if p == 2:
        return x
    out = 0
    shift = 1
    while x:
        d = x % p
        if d:
            out += (p - d) * shift
        x //= p
        shift *= p
    return out


# ---------------------------------------------------------------------------
# polynomials over an arbitrary level of the tower
#
# Coefficient lists are little-endian with no trailing zeros; the ops
# object supplies scalar arithmetic (duck type: size, p, add, sub, neg,
# mul, inv).


def _ptrim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _psub(F, a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out.append(F.sub(ai, bi))
    return _ptrim(out)


def _pmul(F, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return _ptrim(out)


def _pdivmod(F, a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lead_inv = F.inv(b[-1])
    q = [0] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        e = len(r) - 1
        c = F.mul(r[-1], lead_inv)
        q[e - db] = c
        for i, bi in enumerate(b):
            if bi:
                r[e - db + i] = F.sub(r[e - db + i], F.mul(c, bi))
        _ptrim(r)
    return q, r


def _pgcd(F, a: Sequence[int], b: Sequence[int]) -> list[int]:
    a = _ptrim(list(a))
    b = _ptrim(list(b))
    while b:
        a, b = b, _pdivmod(F, a, b)[1]
    return a


def _pmulmod(F, a, b, mod) -> list[int]:
    return _pdivmod(F, _pmul(F, a, b), mod)[1]


def _ppowmod(F, base: Sequence[int], e: int, mod: Sequence[int]) -> list[int]:
    result = [1]
    acc = _pdivmod(F, list(base), mod)[1]
    while e:
        if e & 1:
            result = _pmulmod(F, result, acc, mod)
        acc = _pmulmod(F, acc, acc, mod)
        e >>= 1
    return result


def _pinvmod(F, a: Sequence[int], mod: Sequence[int]) -> list[int]:
    # extended Euclid; gcd(a, mod) must be a unit
    r0, r1 = _ptrim(list(mod)), _ptrim(list(a))
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(F, r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, _psub(F, t0, _pmul(F, q, t1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible modulo the modulus")
    c = F.inv(r0[0])
    return _ptrim([F.mul(c, v) for v in t0])


def _is_irreducible(F, f: Sequence[int]) -> bool:
    """gcd test: f (monic, over the field described by F) has no factor of
    degree i for any i <= deg(f)/2, hence is irreducible."""
    deg = len(f) - 1
    if deg <= 0 or f[-1] != 1:
        return False
    if deg == 1:
        return True
    x = [0, 1]
    cur = x
    for _ in range(deg // 2):
        cur = _ppowmod(F, cur, F.size, f)
        if len(_pgcd(F, _psub(F, cur, x), f)) != 1:
            return False
    return True


def _smallest_irreducible(F, deg: int) -> tuple[int, ...]:
    for packed in range(F.size**deg):
        f = _unpack_base(packed, F.size, deg) + [1]
        if _is_irreducible(F, f):
            return tuple(f)
    raise InternalInconsistency(
        f"no irreducible polynomial of degree {deg} found"
    )  # pragma: no cover


# ---------------------------------------------------------------------------
# tower levels


class _PrimeOps:
    """Arithmetic of the prime field F_p on ints in [0, p)."""

    __slots__ = ("p", "size")

    def __init__(self, p: int):
        self.p = p
        self.size = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)


def _elt_pow(ops, x: int, e: int) -> int:
    result = 1
    acc = x
    while e:
        if e & 1:
            result = ops._mul_slow(result, acc)
        acc = ops._mul_slow(acc, acc)
        e >>= 1
    return result


def _find_generator(ops) -> int:
    period = ops.size - 1
    if period == 1:
        return 1
    primes = _factorize(period)
    for cand in range(2, ops.size):
        if all(_elt_pow(ops, cand, period // r) != 1 for r in primes):
            return cand
    raise InternalInconsistency("multiplicative group has no generator")  # pragma: no cover


class _ExtOps:
    """Arithmetic of ground[X]/(modulus) on packed ints."""

    __slots__ = ("ground", "p", "extdeg", "size", "modulus", "exp", "log", "period")

    def __init__(self, ground, modulus: Sequence[int]):
        self.ground = ground
        self.p = ground.p
        self.extdeg = len(modulus) - 1
        self.size = ground.size**self.extdeg
        self.modulus = tuple(modulus)
        self.exp: list[int] | None = None
        self.log: list[int] | None = None
        self.period = self.size - 1
        if self.size <= _TABLE_CAP:
            self._build_tables()

    def unpack(self, x: int) -> list[int]:
        return _unpack_base(x, self.ground.size, self.extdeg)

    def pack(self, digits: Iterable[int]) -> int:
        out = 0
        shift = 1
        for d in digits:
            out += d * shift
            shift *= self.ground.size
        return out

    def add(self, a, b):
        return _digitwise_add(a, b, self.p)

    def sub(self, a, b):
        return _digitwise_add(a, _digitwise_neg(b, self.p), self.p)

    def neg(self, a):
        return _digitwise_neg(a, self.p)

    def _mul_slow(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        g = self.ground
        d = self.extdeg
        a = self.unpack(x)
        b = self.unpack(y)
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] = g.add(conv[i + j], g.mul(ai, bj))
        for e in range(2 * d - 2, d - 1, -1):
            c = conv[e]
            if c:
                conv[e] = 0
                off = e - d
                for i in range(d):
                    mi = self.modulus[i]
                    if mi:
                        conv[off + i] = g.sub(conv[off + i], g.mul(c, mi))
        return self.pack(conv[:d])

    def _build_tables(self) -> None:
        gen = _find_generator(self)
        exp = [0] * max(self.period, 1)
        log = [-1] * self.size
        acc = 1
        for i in range(self.period):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_slow(acc, gen)
        if acc != 1:  # pragma: no cover
            raise InternalInconsistency("generator order mismatch")
        self.exp = exp
        self.log = log

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        if self.exp is not None:
            return self.exp[(self.log[x] + self.log[y]) % self.period]
        return self._mul_slow(x, y)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.exp is not None:
            return self.exp[(-self.log[x]) % self.period]
        g = self.ground
        digits = _pinvmod(g, _ptrim(self.unpack(x)), list(self.modulus))
        return self.pack(digits + [0] * (self.extdeg - len(digits)))


# ---------------------------------------------------------------------------
# the public context


class FieldCtx:
    """Immutable description of the tower F_q < F_{q^m}.

    Exposes arithmetic on packed ints: ``add``/``sub``/``neg``/``mul``/
    ``inv``/``div``/``pow``/``frob``/``trace``/``smul`` act on F_{q^m};
    the q-prefixed variants act on F_q.  Since F_q sits inside F_{q^m} as
    the constant-coefficient elements, a base-field int is also a valid
    extension-field int and the additive ops agree on it.

    Instances are shareable between threads; construct via field_create,
    which caches per (q, m, moduli).
    """

    __slots__ = (
        "q",
        "p",
        "s",
        "m",
        "order",
        "base_modulus",
        "ext_modulus",
        "basis",
        "_base",
        "_ext",
        "_qexp",
        "_qpows",
        "_frob_cols",
    )

    def __init__(self, q, m, base_modulus=None, ext_modulus=None):
        pp = _prime_power(q)
        if pp is None:
            raise NotPrimePower(f"{q} is not a prime power")
        p, s = pp
        if m < 1:
            raise ValueError("extension degree m must be at least 1")
        self.q = q
        self.p = p
        self.s = s
        self.m = m
        self.order = q**m

        prime = _PrimeOps(p)
        if base_modulus is None:
            base_modulus = (0, 1) if s == 1 else _smallest_irreducible(prime, s)
        else:
            base_modulus = tuple(int(c) for c in base_modulus)
            if len(base_modulus) != s + 1 or any(not 0 <= c < p for c in base_modulus):
                raise ReducibleModulus(
                    f"base modulus must be monic of degree {s} with coefficients in [0, {p})"
                )
            if not _is_irreducible(prime, base_modulus):
                raise ReducibleModulus("base modulus is reducible over the prime field")
        self.base_modulus = base_modulus
        self._base = prime if s == 1 else _ExtOps(prime, base_modulus)

        if ext_modulus is None:
            ext_modulus = (0, 1) if m == 1 else _smallest_irreducible(self._base, m)
        else:
            ext_modulus = tuple(int(c) for c in ext_modulus)
            if len(ext_modulus) != m + 1 or any(not 0 <= c < q for c in ext_modulus):
                raise ReducibleModulus(
                    f"extension modulus must be monic of degree {m} with coefficients in [0, {q})"
                )
            if not _is_irreducible(self._base, ext_modulus):
                raise ReducibleModulus("extension modulus is reducible over F_q")
        self.ext_modulus = ext_modulus
        self._ext = self._base if m == 1 else _ExtOps(self._base, ext_modulus)

        self.basis = tuple(q**a for a in range(m))
        self._qpows = tuple(q**a for a in range(m + 1))
        if m > 1 and isinstance(self._ext, _ExtOps) and self._ext.exp is not None:
            self._qexp = tuple(pow(q, i, self._ext.period) for i in range(m))
        else:
            self._qexp = None
        self._frob_cols = self._build_frob_columns()

    def _build_frob_columns(self):
        # columns of x -> x^(q^i) in basis B, for table-less contexts only
        if self.m == 1 or self._qexp is not None:
            return None
        ext_ops = self._ext
        m = self.m
        cols1 = tuple(
            tuple(self.digits(_elt_pow(ext_ops, self.basis[a], self.q))) for a in range(m)
        )
        mats = [tuple(tuple(1 if r == a else 0 for r in range(m)) for a in range(m)), cols1]
        for _ in range(2, m):
            prev = mats[-1]
            nxt = []
            for a in range(m):
                acc = [0] * m
                for b, coeff in enumerate(prev[a]):
                    if coeff:
                        col = cols1[b]
                        for r in range(m):
                            if col[r]:
                                acc[r] = self.qadd(acc[r], self.qmul(coeff, col[r]))
                nxt.append(tuple(acc))
            mats.append(tuple(nxt))
        return tuple(mats)

    # -- extension field ops ------------------------------------------------

    def add(self, x: int, y: int) -> int:
        return _digitwise_add(x, y, self.p)

    def sub(self, x: int, y: int) -> int:
        return _digitwise_add(x, _digitwise_neg(y, self.p), self.p)

    def neg(self, x: int) -> int:
        return _digitwise_neg(x, self.p)

    def mul(self, x: int, y: int) -> int:
        return self._ext.mul(x, y)

    def inv(self, x: int) -> int:
        return self._ext.inv(x)

    def div(self, x: int, y: int) -> int:
        return self._ext.mul(x, self._ext.inv(y))

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(x), -e)
        if x == 0:
            return 1 if e == 0 else 0
        ext_ops = self._ext
        if isinstance(ext_ops, _ExtOps):
            if ext_ops.exp is not None:
                return ext_ops.exp[(ext_ops.log[x] * e) % ext_ops.period]
            return _elt_pow(ext_ops, x, e)
        return pow(x, e, self.p)

    def frob(self, x: int, i: int = 1) -> int:
        """x raised to the q^i power (the i-fold Frobenius)."""
        i %= self.m
        if i == 0 or x == 0 or self.m == 1:
            return x
        ext_ops = self._ext
        if self._qexp is not None:
            return ext_ops.exp[(ext_ops.log[x] * self._qexp[i]) % ext_ops.period]
        cols = self._frob_cols[i]
        acc = [0] * self.m
        for a, d in enumerate(self.digits(x)):
            if d:
                col = cols[a]
                for r in range(self.m):
                    if col[r]:
                        acc[r] = self.qadd(acc[r], self.qmul(d, col[r]))
        return self.pack(acc)

    def trace(self, x: int) -> int:
        """Trace down to F_q: the sum of all Frobenius images of x."""
        acc = x
        cur = x
        for _ in range(self.m - 1):
            cur = self.frob(cur, 1)
            acc = self.add(acc, cur)
        assert acc < self.q, "trace landed outside the base field"
        return acc

    def smul(self, c: int, x: int) -> int:
        """Scalar action of c in F_q on x in F_{q^m} (coefficient-wise)."""
        if c == 0 or x == 0:
            return 0
        if c == 1:
            return x
        return self.pack(self.qmul(c, d) for d in self.digits(x))

    def digits(self, x: int) -> tuple[int, ...]:
        """Coordinates of x in the polynomial basis B (little-endian)."""
        q = self.q
        return tuple((x // self._qpows[a]) % q for a in range(self.m))

    def digit(self, x: int, a: int) -> int:
        return (x // self._qpows[a]) % self.q

    def pack(self, digits: Iterable[int]) -> int:
        out = 0
        for a, d in enumerate(digits):
            if d:
                out += d * self._qpows[a]
        return out

    # -- base field ops -----------------------------------------------------

    def qadd(self, a: int, b: int) -> int:
        return self._base.add(a, b)

    def qsub(self, a: int, b: int) -> int:
        return self._base.sub(a, b)

    def qneg(self, a: int) -> int:
        return self._base.neg(a)

    def qmul(self, a: int, b: int) -> int:
        return self._base.mul(a, b)

    def qinv(self, a: int) -> int:
        return self._base.inv(a)

    def qdiv(self, a: int, b: int) -> int:
        return self._base.mul(a, self._base.inv(b))

    # -- plumbing -----------------------------------------------------------

    def is_elem(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.order

    def check_word(self, word: Sequence[int]) -> None:
        for x in word:
            if not self.is_elem(x):
                raise ValueError(f"{x!r} is not an element of F_{self.q}^{self.m}")

    def elem_to_coeffs(self, x: int) -> list[int]:
        """Little-endian base-field coefficient list of length m."""
        return list(self.digits(x))

    def elem_from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.m or any(not 0 <= c < self.q for c in coeffs):
            raise ValueError(f"expected {self.m} coefficients in [0, {self.q})")
        return self.pack(coeffs)

    def word_to_coeffs(self, word: Sequence[int]) -> list[list[int]]:
        return [self.elem_to_coeffs(x) for x in word]

    def word_from_coeffs(self, rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
        return tuple(self.elem_from_coeffs(r) for r in rows)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "base_modulus": list(self.base_modulus),
            "ext_modulus": list(self.ext_modulus),
        }

    @staticmethod
    def from_json(obj: dict) -> "FieldCtx":
        return field_create(
            obj["q"], obj["m"], obj.get("base_modulus"), obj.get("ext_modulus")
        )

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and self.q == other.q
            and self.m == other.m
            and self.base_modulus == other.base_modulus
            and self.ext_modulus == other.ext_modulus
        )

    def __hash__(self):
        return hash((self.q, self.m, self.base_modulus, self.ext_modulus))

    def __repr__(self):
        return f"FieldCtx(q={self.q}, m={self.m})"


@functools.lru_cache(maxsize=None)
def _field_cached(q, m, base_modulus, ext_modulus):
    return FieldCtx(q, m, base_modulus, ext_modulus)


def field_create(q: int, m: int, base_modulus=None, ext_modulus=None) -> FieldCtx:
    """Build (or fetch from cache) the arithmetic context for F_q < F_{q^m}.

    Omitted moduli are chosen deterministically, so (q, m) alone pins down
    every packed value this context will ever produce.
    """
    bm = tuple(int(c) for c in base_modulus) if base_modulus is not None else None
    em = tuple(int(c) for c in ext_modulus) if ext_modulus is not None else None
    return _field_cached(q, m, bm, em)


# ---------------------------------------------------------------------------
# linear algebra over F_q


def _gf2_pack_rows(rows: Sequence[Sequence[int]]) -> list[int]:
    out = []
    for row in rows:
        v = 0
        for j, b in enumerate(row):
            if b:
                v |= 1 << j
        out.append(v)
    return out


def _gf2_rref(packed: list[int], ncols: int) -> list[int]:
    """In-place RREF of bit-packed rows; returns the pivot column list."""
    pivots = []
    r = 0
    nrows = len(packed)
    for c in range(ncols):
        bit = 1 << c
        pr = -1
        for i in range(r, nrows):
            if packed[i] & bit:
                pr = i
                break
        if pr < 0:
            continue
        packed[r], packed[pr] = packed[pr], packed[r]
        prow = packed[r]
        for i in range(nrows):
            if i != r and packed[i] & bit:
                packed[i] ^= prow
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _generic_rref(ctx: FieldCtx, rows: list[list[int]]) -> list[int]:
    """In-place RREF over F_q with first-nonzero pivoting; returns pivots."""
    qsub, qmul, qinv = ctx.qsub, ctx.qmul, ctx.qinv
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = qinv(rows[r][c])
        if inv != 1:
            rows[r] = [qmul(inv, v) for v in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [qsub(v, qmul(f, pj)) for v, pj in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _rref_with_pivots(ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    if not rows:
        return [], []
    ncols = len(rows[0])
    if ctx.q == 2:
        packed = _gf2_pack_rows(rows)
        pivots = _gf2_rref(packed, ncols)
        out = [[(v >> j) & 1 for j in range(ncols)] for v in packed]
        return out, pivots
    work = [list(r) for r in rows]
    pivots = _generic_rref(ctx, work)
    return work, pivots


def _gf2_kernel_packed(packed: list[int], ncols: int) -> list[int]:
    """Kernel basis of bit-packed rows, as bit-packed vectors (canonical)."""
    pivots = _gf2_rref(packed, ncols)
    pivot_set = set(pivots)
    vecs = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        fbit = 1 << f
        for idx, c in enumerate(pivots):
            if packed[idx] & fbit:
                v |= 1 << c
        vecs.append(v)
    if vecs:
        _gf2_rref(vecs, ncols)  # vectors are independent, so no zero rows appear
    return vecs


def rref(ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Reduced row echelon form (idempotent, shape preserved)."""
    return _rref_with_pivots(ctx, rows)[0]


def rank(ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    if ctx.q == 2:
        packed = _gf2_pack_rows(rows)
        return len(_gf2_rref(packed, len(rows[0])))
    work = [list(r) for r in rows]
    return len(_generic_rref(ctx, work))


def kernel_basis(ctx: FieldCtx, rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Echelonized basis of the right null space {v : rows . v = 0}.

    Deterministic: the same matrix always yields the same basis, in the
    same order.
    """
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(rows[0])
    if not rows:
        vecs = [[1 if j == f else 0 for j in range(ncols)] for f in range(ncols)]
        return vecs
    if ctx.q == 2:
        packed = _gf2_kernel_packed(_gf2_pack_rows(rows), ncols)
        return [[(v >> j) & 1 for j in range(ncols)] for v in packed]
    reduced, pivots = _rref_with_pivots(ctx, rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    vecs = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for idx, c in enumerate(pivots):
            coeff = reduced[idx][f]
            if coeff:
                v[c] = ctx.qneg(coeff)
        vecs.append(v)
    if not vecs:
        return []
    return [row for row in rref(ctx, vecs) if any(row)]


def solve(ctx: FieldCtx, rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[int] | None:
    """One solution of rows . v = rhs (free variables zero), or None."""
    if len(rows) != len(rhs):
        raise ValueError("rhs length must match the number of rows")
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = _rref_with_pivots(ctx, aug)
    if ncols in pivots:
        return None  # inconsistent: pivot in the rhs column
    v = [0] * ncols
    for idx, c in enumerate(pivots):
        v[c] = reduced[idx][ncols]
    return v


def _mat_inverse(ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> list[list[int]] | None:
    n = len(rows)
    aug = [list(r) + [1 if j == i else 0 for j in range(n)] for i, r in enumerate(rows)]
    reduced, pivots = _rref_with_pivots(ctx, aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in reduced[:n]]


# ---------------------------------------------------------------------------
# matrix expansion, supports, subspaces


def ext(ctx: FieldCtx, word: Sequence[int], basis: Sequence[int] | None = None) -> list[list[int]]:
    """m x n expansion of a word: column j holds the coordinates of word[j].

    With ``basis`` given (m independent elements of F_{q^m}), coordinates
    are taken with respect to it instead of the polynomial basis.
    """
    m = ctx.m
    if basis is None:
        cols = [ctx.digits(x) for x in word]
    else:
        if len(basis) != m:
            raise ValueError(f"basis must have exactly {m} elements")
        t_rows = [[ctx.digit(basis[a], r) for a in range(m)] for r in range(m)]
        t_inv = _mat_inverse(ctx, t_rows)
        if t_inv is None:
            raise DependentPoints("the supplied elements do not form a basis")
        cols = []
        for x in word:
            d = ctx.digits(x)
            cols.append(
                tuple(
                    functools.reduce(
                        ctx.qadd, (ctx.qmul(t_inv[r][a], d[a]) for a in range(m)), 0
                    )
                    for r in range(m)
                )
            )
    return [[col[r] for col in cols] for r in range(m)]


def rank_weight(ctx: FieldCtx, word: Sequence[int]) -> int:
    """Rank of the matrix expansion of the word."""
    if not word:
        return 0
    return rank(ctx, ext(ctx, word))


@dataclass(frozen=True)
class Subspace:
    """F_q-subspace given by its canonical echelon basis.

    Canonical means: equal subspaces compare equal as plain data.  Rows
    are coordinate tuples of length ``ambient`` (for subspaces of F_{q^m}
    the coordinates are taken in the polynomial basis, so a row packs
    directly into a field element).
    """

    ambient: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, ctx: FieldCtx, vec: Sequence[int]) -> bool:
        v = list(vec)
        for row in self.basis:
            lead = next(i for i, x in enumerate(row) if x)
            c = v[lead]
            if c:
                v = [ctx.qsub(a, ctx.qmul(c, b)) for a, b in zip(v, row)]
        return not any(v)


def subspace_from_vectors(ctx: FieldCtx, ambient: int, vectors: Iterable[Sequence[int]]) -> Subspace:
    rows = [list(v) for v in vectors]
    if not rows:
        return Subspace(ambient, ())
    reduced, pivots = _rref_with_pivots(ctx, rows)
    return Subspace(ambient, tuple(tuple(reduced[i]) for i in range(len(pivots))))


def subspace_elements(ctx: FieldCtx, space: Subspace) -> Iterator[tuple[int, ...]]:
    """All coordinate vectors of the subspace (q**dim of them)."""
    basis = space.basis
    for coeffs in itertools.product(range(ctx.q), repeat=space.dim):
        v = [0] * space.ambient
        for c, row in zip(coeffs, basis):
            if c:
                v = [ctx.qadd(a, ctx.qmul(c, b)) for a, b in zip(v, row)]
        yield tuple(v)


def col_support(ctx: FieldCtx, word: Sequence[int]) -> Subspace:
    """F_q-span of the word entries, as a subspace of F_{q^m}."""
    return subspace_from_vectors(ctx, ctx.m, (ctx.digits(x) for x in word))


def row_support(ctx: FieldCtx, word: Sequence[int]) -> Subspace:
    """Row space of the word's matrix expansion, a subspace of F_q^n."""
    return subspace_from_vectors(ctx, len(word), ext(ctx, word))


def subspace_perp(ctx: FieldCtx, space: Subspace) -> Subspace:
    """Orthogonal complement under the trace form (x, y) -> Tr(x y)."""
    m = ctx.m
    if space.ambient != m:
        raise ValueError("perp is defined for subspaces of the extension field")
    if space.dim == 0:
        ident = tuple(tuple(1 if j == i else 0 for j in range(m)) for i in range(m))
        return Subspace(m, ident)
    t_rows = []
    for row in space.basis:
        v = ctx.pack(row)
        t_rows.append([ctx.trace(ctx.mul(v, ctx.basis[a])) for a in range(m)])
    kern = kernel_basis(ctx, t_rows, m)
    return Subspace(m, tuple(tuple(r) for r in kern))
