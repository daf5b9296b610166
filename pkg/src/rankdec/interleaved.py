"""Interleaved Gabidulin codes: u codewords hit by errors with one shared
row support.

Because the error rows share a t-dimensional row support, one locator of
q-degree <= t annihilates every row interpolator at once, so the decoder
solves a single homogeneous system with a shared locator block and one
numerator block per row: u*n*m scalar equations in m*(t+1+u*(k+t)) scalar
unknowns.  Counting equations against unknowns gives the decoding radius
floor(u*(n-k)/(u+1)); past the row-wise unique radius the kernel can pick
up spurious directions, so decoding failure is a legitimate, diagnosed
outcome there.  When the error matrix is F_{q^m}-rank deficient (rank
zeta < u), rows contribute dependent equations and the system goes
underdetermined exactly when zeta < t/(n-k-t); failure_predicate tests
that condition.

Codes of length n < m are lifted row by row through the same
co-interpolator transform as the plain decoder (the shared row support
survives the transform), decoded at full length, and divided back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DegreeTooLarge,
    InternalInconsistency,
    InvalidRegime,
    RadiusTooLarge,
    WrongCount,
)
from .field import FieldCtx, col_support, ext, rank
from .gabidulin import (
    DecodeOutcome,
    GabidulinCode,
    _locator_candidates,
    encode,
)
from .qpoly import QPoly, co_interpolator, interpolate

__all__ = [
    "InterleavedCode",
    "icode_new",
    "iencode",
    "fqm_rank",
    "stacked_rank",
    "idecode",
    "max_radius",
    "failure_predicate",
    "effective_equations",
    "iword_to_json",
    "iword_from_json",
]


@dataclass(frozen=True)
class InterleavedCode:
    """u parallel codewords of one Gabidulin code."""

    base: GabidulinCode
    u: int

    @property
    def ctx(self) -> FieldCtx:
        return self.base.ctx

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def k(self) -> int:
        return self.base.k

    def __repr__(self):
        b = self.base
        return f"InterleavedCode(q={b.ctx.q}, m={b.ctx.m}, n={b.n}, k={b.k}, u={self.u})"


def icode_new(base: GabidulinCode, u: int) -> InterleavedCode:
    if u < 1:
        raise ValueError("interleaving order u must be at least 1")
    return InterleavedCode(base, u)


def _check_word_matrix(icode: InterleavedCode, mat: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(r) for r in mat)
    if len(rows) != icode.u:
        raise WrongCount(f"expected {icode.u} rows, got {len(rows)}")
    for row in rows:
        if len(row) != icode.n:
            raise ValueError(f"row length {len(row)} does not match n={icode.n}")
        icode.ctx.check_word(row)
    return rows


def iencode(icode: InterleavedCode, msgs: Sequence[QPoly]) -> tuple[tuple[int, ...], ...]:
    """Row i of the result encodes msgs[i] in the base code."""
    if len(msgs) != icode.u:
        raise WrongCount(f"expected {icode.u} message polynomials, got {len(msgs)}")
    for msg in msgs:
        if msg.qdeg is not None and msg.qdeg >= icode.k:
            raise DegreeTooLarge(f"message q-degree {msg.qdeg} is not below k={icode.k}")
    return tuple(encode(icode.base, msg) for msg in msgs)


def fqm_rank(ctx: FieldCtx, mat: Sequence[Sequence[int]]) -> int:
    """Rank of a matrix with entries in F_{q^m}, over F_{q^m}."""
    rows = [list(r) for r in mat]
    if not rows:
        return 0
    ncols = len(rows[0])
    rk = 0
    for c in range(ncols):
        piv = -1
        for i in range(rk, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = ctx.inv(rows[rk][c])
        prow = [ctx.mul(inv, v) for v in rows[rk]]
        rows[rk] = prow
        for i in range(len(rows)):
            if i != rk and rows[i][c]:
                f = rows[i][c]
                rows[i] = [ctx.sub(v, ctx.mul(f, pv)) for v, pv in zip(rows[i], prow)]
        rk += 1
        if rk == len(rows):
            break
    return rk


def stacked_rank(ctx: FieldCtx, mat: Sequence[Sequence[int]]) -> int:
    """F_q-rank of the u*m x n expansion obtained by expanding every row."""
    stacked: list[list[int]] = []
    for row in mat:
        stacked.extend(ext(ctx, row))
    if not stacked:
        return 0
    return rank(ctx, stacked)


def max_radius(icode: InterleavedCode) -> int:
    """floor(u * (n - k) / (u + 1)), the interleaved decoding radius."""
    return icode.u * (icode.n - icode.k) // (icode.u + 1)


def failure_predicate(n: int, k: int, t: int, zeta: int) -> bool:
    """True iff zeta < t / (n - k - t): the regime where an error of
    F_{q^m}-rank zeta leaves the decoder with more unknowns than
    equations.  Requires t < n - k; the boundary itself does not fail."""
    if not 0 <= t < n - k:
        raise InvalidRegime(f"t={t} must satisfy 0 <= t < n - k = {n - k}")
    if zeta < 1:
        raise InvalidRegime("zeta must be at least 1")
    return zeta * (n - k - t) < t


def _idecode_core(icode: InterleavedCode, word, t: int) -> DecodeOutcome:
    """Full-length (n = m) interleaved decoding at radius t."""
    ctx = icode.ctx
    base = icode.base
    n, k, u = icode.n, icode.k, icode.u
    interps = [interpolate(ctx, base.g, row) for row in word]
    cands, diag = _locator_candidates(ctx, base.g, interps, k, t)
    tried = 0
    for lam, nums in cands:
        if lam.is_zero:
            # k + t stays below n for every admissible radius
            assert all(num.is_zero for num in nums), "zero locator with nonzero numerator"
            continue
        tried += 1
        msgs = []
        for num in nums:
            quot, rem = num.rdiv(lam)
            if not rem.is_zero or (quot.qdeg is not None and quot.qdeg >= k):
                msgs = None
                break
            msgs.append(quot)
        if msgs is None:
            continue
        codewords = tuple(encode(base, msg) for msg in msgs)
        errs = tuple(
            tuple(ctx.sub(a, b) for a, b in zip(wrow, crow))
            for wrow, crow in zip(word, codewords)
        )
        if stacked_rank(ctx, errs) > t:
            continue
        return DecodeOutcome(
            ok=True,
            reason=None,
            messages=tuple(msgs),
            codewords=codewords,
            errors=errs,
            locator=lam,
            diagnostics={**diag, "candidates_tried": tried},
        )
    reason = (
        "system underdetermined (kernel dimension exceeded m)"
        if diag["underdetermined"]
        else "no kernel candidate validated at radius t"
    )
    return DecodeOutcome(ok=False, reason=reason, diagnostics={**diag, "candidates_tried": tried})


def _idecode_at(icode: InterleavedCode, word, t: int) -> DecodeOutcome:
    ctx = icode.ctx
    n, k, m, u = icode.n, icode.k, icode.ctx.m, icode.u
    if n == m:
        return _idecode_core(icode, word, t)
    # lift to full length through a co-interpolator of the evaluation span
    span_g = col_support(ctx, icode.base.g)
    g_poly = co_interpolator(ctx, span_g)
    lifted_rows = []
    for row in word:
        y_poly = interpolate(ctx, icode.base.g, row)
        lifted = y_poly.compose(g_poly)
        lifted_rows.append(tuple(lifted.eval(b) for b in ctx.basis))
    inner_base = GabidulinCode(ctx, ctx.basis, k + m - n)
    inner = _idecode_core(InterleavedCode(inner_base, u), tuple(lifted_rows), t)
    if not inner.ok:
        return inner
    msgs = []
    for inner_msg in inner.messages:
        quot, rem = inner_msg.rdiv(g_poly)
        if not rem.is_zero:
            raise InternalInconsistency(
                "recovered polynomial is not right-divisible by the co-interpolator"
            )
        if quot.qdeg is not None and quot.qdeg >= k:
            return DecodeOutcome(
                ok=False,
                reason="recovered message exceeds the code dimension",
                diagnostics=inner.diagnostics,
            )
        msgs.append(quot)
    codewords = tuple(encode(icode.base, msg) for msg in msgs)
    errs = tuple(
        tuple(ctx.sub(a, b) for a, b in zip(wrow, crow))
        for wrow, crow in zip(word, codewords)
    )
    if stacked_rank(ctx, errs) > t:
        return DecodeOutcome(
            ok=False,
            reason="validated inner solution does not match the received word",
            diagnostics=inner.diagnostics,
        )
    return DecodeOutcome(
        ok=True,
        reason=None,
        messages=tuple(msgs),
        codewords=codewords,
        errors=errs,
        locator=inner.locator,
        diagnostics=inner.diagnostics,
    )


def idecode(
    icode: InterleavedCode,
    word: Sequence[Sequence[int]],
    t: int | None = None,
    retry: bool = False,
) -> DecodeOutcome:
    """Joint decoding of all u rows at radius t (default: max_radius).

    Beyond the row-wise unique radius floor((n-k)/2) failure is a
    legitimate outcome; with ``retry`` the radius is decremented down to
    that floor after a failure, and the first success wins.
    """
    word = _check_word_matrix(icode, word)
    top = max_radius(icode)
    if t is None:
        t = top
    if not 0 <= t <= top:
        raise RadiusTooLarge(f"radius t={t} outside [0, {top}]")
    out = _idecode_at(icode, word, t)
    if out.ok or not retry:
        return out
    floor_r = (icode.n - icode.k) // 2
    for lower in range(t - 1, floor_r - 1, -1):
        attempt = _idecode_at(icode, word, lower)
        if attempt.ok:
            return DecodeOutcome(
                ok=True,
                reason=None,
                messages=attempt.messages,
                codewords=attempt.codewords,
                errors=attempt.errors,
                locator=attempt.locator,
                diagnostics={**attempt.diagnostics, "retried_t": lower},
            )
    return out


def effective_equations(
    icode: InterleavedCode,
    mat: Sequence[Sequence[int]],
    t: int | None = None,
) -> int:
    """Number of independent equations the error structure leaves, as a
    multiple of n.

    With ``t`` omitted, ``mat`` is the error matrix itself and the count
    is fqm_rank(mat) * n.  With ``t`` given, ``mat`` is a received word:
    the locator system is assembled at radius t and the F_{q^m}-rank of
    the error is inferred from the kernel dimension (meaningful in the
    underdetermined regime, where the kernel grows by m*(n-k-t) per lost
    equation block)."""
    ctx = icode.ctx
    n, k, m, u = icode.n, icode.k, icode.ctx.m, icode.u
    mat = _check_word_matrix(icode, mat)
    if t is None:
        return fqm_rank(ctx, mat) * n
    if not 0 < t < n - k:
        raise InvalidRegime(f"t={t} must satisfy 0 < t < n - k = {n - k}")
    interps = [interpolate(ctx, icode.base.g, row) for row in mat]
    _, diag = _locator_candidates(ctx, icode.base.g, interps, k, t)
    deficiency = diag["kernel_dim"]
    zeta_hat = round((m * (t + 1) - deficiency) / (m * (n - k - t)))
    return max(0, min(u, zeta_hat)) * n


def iword_to_json(ctx: FieldCtx, mat: Sequence[Sequence[int]]) -> list[list[list[int]]]:
    return [ctx.word_to_coeffs(row) for row in mat]


def iword_from_json(ctx: FieldCtx, obj: Sequence[Sequence[Sequence[int]]]) -> tuple[tuple[int, ...], ...]:
    return tuple(ctx.word_from_coeffs(row) for row in obj)
