"""Gabidulin codes: construction, encoding, and rank-error decoding.

The decoder localizes errors from the right: interpolate the received
word into a q-polynomial Y, then look for a locator L (q-degree <= t) and
a numerator N (q-degree <= k+t-1) with (Y o L)(g_i) = N(g_i) at every
evaluation point.  Composition with the unknown L is only F_q-linear, so
the system is expanded over an F_q basis of F_{q^m}: m scalar equations
per point, m scalar unknowns per polynomial coefficient.  Any kernel
vector with nonzero locator is a candidate; the message is the exact
right quotient N / L and every candidate is validated (zero remainder,
degree below k, rank of the residual error at most t) before being
accepted, so out-of-model inputs surface as diagnosed failures instead of
silent miscorrections.

Codes of length n < m are decoded by composing Y with a co-interpolator
G whose image is the span of the evaluation points; that turns the word
into one of a full-length code of dimension k + m - n with the same error
rank, and the message comes back out by exact right division by G.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import (
    DegreeTooLarge,
    DependentEvaluationPoints,
    DimensionTooLarge,
    InternalInconsistency,
    RadiusTooLarge,
)
from .field import FieldCtx, _gf2_kernel_packed, col_support, kernel_basis, rank_weight
from .qpoly import QPoly, _fast_evaluator, co_interpolator, interpolate

__all__ = [
    "GabidulinCode",
    "DecodeOutcome",
    "code_new",
    "encode",
    "decode_full",
    "decode_general",
    "code_to_json",
    "code_from_json",
]


@dataclass(frozen=True)
class GabidulinCode:
    """Evaluations of all q-polynomials of q-degree < k at the points g."""

    ctx: FieldCtx
    g: tuple[int, ...]
    k: int

    @property
    def n(self) -> int:
        return len(self.g)

    def __repr__(self):
        return f"GabidulinCode(q={self.ctx.q}, m={self.ctx.m}, n={self.n}, k={self.k})"


def code_new(ctx: FieldCtx, g: Sequence[int], k: int) -> GabidulinCode:
    """Validated code object; g entries must be F_q-independent, 1 <= k <= n."""
    g = tuple(g)
    ctx.check_word(g)
    n = len(g)
    if n < 1:
        raise ValueError("evaluation vector must be nonempty")
    if rank_weight(ctx, g) != n:
        raise DependentEvaluationPoints(
            "evaluation vector entries are F_q-dependent (note n <= m is required)"
        )
    if not 1 <= k <= n:
        raise DimensionTooLarge(f"dimension k={k} must satisfy 1 <= k <= n={n}")
    return GabidulinCode(ctx, g, k)


def encode(code: GabidulinCode, msg: QPoly) -> tuple[int, ...]:
    """Codeword (msg(g_1), ..., msg(g_n)); msg must have q-degree < k."""
    if msg.ctx != code.ctx:
        raise ValueError("message polynomial belongs to a different field context")
    if msg.qdeg is not None and msg.qdeg >= code.k:
        raise DegreeTooLarge(f"message q-degree {msg.qdeg} is not below k={code.k}")
    return tuple(msg.eval(gj) for gj in code.g)


@dataclass(frozen=True)
class DecodeOutcome:
    """Decoding result: recovered data on success, a diagnosed reason otherwise.

    ``messages``/``codewords``/``errors`` hold one entry per interleaved
    row (a single entry for plain codes; the singular properties are
    shortcuts for that case).  ``diagnostics`` reports the assembled
    system shape, the kernel dimension, whether the system was
    underdetermined (kernel dimension above m) and how many candidates
    were tried.
    """

    ok: bool
    reason: str | None
    messages: tuple[QPoly, ...] = ()
    codewords: tuple[tuple[int, ...], ...] = ()
    errors: tuple[tuple[int, ...], ...] = ()
    locator: QPoly | None = None
    diagnostics: dict = dc_field(default_factory=dict)

    @property
    def message(self) -> QPoly:
        return self.messages[0]

    @property
    def codeword(self) -> tuple[int, ...]:
        return self.codewords[0]

    @property
    def error(self) -> tuple[int, ...]:
        return self.errors[0]


def _locator_candidates(
    ctx: FieldCtx,
    points: Sequence[int],
    interps: Sequence[QPoly],
    k: int,
    t: int,
) -> tuple[list[tuple[QPoly, list[QPoly]]], dict]:
    """Kernel of the F_q linearization of (Y_i o L)(g_j) = N_i(g_j).

    Unknowns: the t+1 coefficients of the shared locator L and the k+t
    coefficients of each numerator N_i, all expanded into m base-field
    coordinates.  Returns the decoded (locator, numerators) candidates in
    deterministic echelon order, plus system diagnostics.
    """
    m = ctx.m
    n = len(points)
    u = len(interps)
    blk = k + t
    ncols = m * (t + 1 + u * blk)
    max_e = max(t, blk - 1)
    frob_pts = [[ctx.frob(gj, e) for e in range(max_e + 1)] for gj in points]
    basis = ctx.basis
    lam_args = [
        [[ctx.mul(basis[a], frob_pts[j][e]) for a in range(m)] for e in range(t + 1)]
        for j in range(n)
    ]
    num_vals = [
        [[ctx.neg(ctx.mul(basis[c], frob_pts[j][l])) for c in range(m)] for l in range(blk)]
        for j in range(n)
    ]
    evaluators = [_fast_evaluator(y_poly) for y_poly in interps]

    def equation_coeffs(i, j):
        # F_{q^m} coefficient per scalar unknown, for the (row i, point j) equation
        kvals = [0] * ncols
        pos = 0
        ev = evaluators[i]
        for e in range(t + 1):
            for arg in lam_args[j][e]:
                kvals[pos] = ev(arg)
                pos += 1
        base = m * (t + 1) + i * m * blk
        for l in range(blk):
            vals = num_vals[j][l]
            kvals[base + l * m : base + (l + 1) * m] = vals
        return kvals

    if ctx.q == 2:
        # emit the m scalar rows of each equation directly in bit-packed form
        packed_rows: list[int] = []
        for i in range(u):
            for j in range(n):
                rowbuf = [0] * m
                for col, v in enumerate(equation_coeffs(i, j)):
                    while v:
                        low = v & -v
                        rowbuf[low.bit_length() - 1] |= 1 << col
                        v ^= low
                packed_rows.extend(rowbuf)
        n_rows = len(packed_rows)
        assert n_rows == u * n * m and ncols == m * (t + 1 + u * (k + t))
        kern_packed = _gf2_kernel_packed(packed_rows, ncols)
        mask = (1 << m) - 1
        kern_dim = len(kern_packed)
        cands = []
        for vec in kern_packed:
            lam = QPoly(ctx, [(vec >> (e * m)) & mask for e in range(t + 1)])
            nums = []
            for i in range(u):
                off = m * (t + 1) + i * m * blk
                nums.append(QPoly(ctx, [(vec >> (off + l * m)) & mask for l in range(blk)]))
            cands.append((lam, nums))
    else:
        digit = ctx.digit
        rows: list[list[int]] = []
        for i in range(u):
            for j in range(n):
                kvals = equation_coeffs(i, j)
                for d in range(m):
                    rows.append([digit(v, d) for v in kvals])
        n_rows = len(rows)
        assert n_rows == u * n * m and ncols == m * (t + 1 + u * (k + t))
        kern = kernel_basis(ctx, rows, ncols)
        kern_dim = len(kern)
        cands = []
        for vec in kern:
            lam = QPoly(ctx, [ctx.pack(vec[e * m : (e + 1) * m]) for e in range(t + 1)])
            nums = []
            for i in range(u):
                off = m * (t + 1) + i * m * blk
                nums.append(
                    QPoly(ctx, [ctx.pack(vec[off + l * m : off + (l + 1) * m]) for l in range(blk)])
                )
            cands.append((lam, nums))
    diag = {
        "system_rows": n_rows,
        "system_cols": ncols,
        "kernel_dim": kern_dim,
        "underdetermined": kern_dim > m,
    }
    return cands, diag


def decode_full(code: GabidulinCode, received: Sequence[int], t: int | None = None) -> DecodeOutcome:
    """Decode a full-length (n = m) code up to t rank errors.

    t defaults to the unique-decoding radius floor((n-k)/2); larger values
    are rejected.  Within the radius, whenever a codeword at rank distance
    at most t from the received word exists, it is found and every
    validated candidate yields the same message.
    """
    ctx = code.ctx
    n, k = code.n, code.k
    if n != ctx.m:
        raise ValueError("decode_full requires a full-length code (n = m)")
    max_t = (n - k) // 2
    if t is None:
        t = max_t
    if not 0 <= t <= max_t:
        raise RadiusTooLarge(f"radius t={t} outside [0, {max_t}]")
    received = tuple(received)
    if len(received) != n:
        raise ValueError(f"received word has length {len(received)}, expected {n}")
    ctx.check_word(received)

    y_poly = interpolate(ctx, code.g, received)
    cands, diag = _locator_candidates(ctx, code.g, (y_poly,), k, t)
    tried = 0
    for lam, (num,) in cands:
        if lam.is_zero:
            # with k + t <= n a zero locator forces a zero numerator
            assert num.is_zero, "zero locator with nonzero numerator"
            continue
        tried += 1
        quot, rem = num.rdiv(lam)
        if not rem.is_zero:
            continue
        if quot.qdeg is not None and quot.qdeg >= k:
            continue
        codeword = encode(code, quot)
        error = tuple(ctx.sub(a, b) for a, b in zip(received, codeword))
        if rank_weight(ctx, error) > t:
            continue
        return DecodeOutcome(
            ok=True,
            reason=None,
            messages=(quot,),
            codewords=(codeword,),
            errors=(error,),
            locator=lam,
            diagnostics={**diag, "candidates_tried": tried},
        )
    return DecodeOutcome(
        ok=False,
        reason="no kernel candidate validated at radius t",
        diagnostics={**diag, "candidates_tried": tried},
    )


def decode_general(code: GabidulinCode, received: Sequence[int], t: int | None = None) -> DecodeOutcome:
    """Decode any length n <= m up to t <= floor((n-k)/2) rank errors.

    Full-length codes go straight to decode_full.  Otherwise the word is
    carried into a full-length code of dimension k + m - n by composing
    its interpolator with a co-interpolator G of the evaluation span, and
    the recovered polynomial is divided back by G (exactly; a nonzero
    remainder would mean the inner decoder validated a word outside the
    image structure, which cannot happen for in-model inputs).
    """
    ctx = code.ctx
    n, k, m = code.n, code.k, ctx.m
    if n == m:
        return decode_full(code, received, t)
    max_t = (n - k) // 2
    if t is None:
        t = max_t
    if not 0 <= t <= max_t:
        raise RadiusTooLarge(f"radius t={t} outside [0, {max_t}]")
    received = tuple(received)
    if len(received) != n:
        raise ValueError(f"received word has length {len(received)}, expected {n}")
    ctx.check_word(received)

    y_poly = interpolate(ctx, code.g, received)
    span_g = col_support(ctx, code.g)
    g_poly = co_interpolator(ctx, span_g)
    lifted = y_poly.compose(g_poly)
    inner_code = GabidulinCode(ctx, ctx.basis, k + m - n)
    inner_word = tuple(lifted.eval(b) for b in ctx.basis)
    inner = decode_full(inner_code, inner_word, t)
    if not inner.ok:
        return DecodeOutcome(ok=False, reason=inner.reason, diagnostics=inner.diagnostics)
    quot, rem = inner.message.rdiv(g_poly)
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
    codeword = encode(code, quot)
    error = tuple(ctx.sub(a, b) for a, b in zip(received, codeword))
    if rank_weight(ctx, error) > t:
        return DecodeOutcome(
            ok=False,
            reason="validated inner solution does not match the received word",
            diagnostics=inner.diagnostics,
        )
    return DecodeOutcome(
        ok=True,
        reason=None,
        messages=(quot,),
        codewords=(codeword,),
        errors=(error,),
        locator=inner.locator,
        diagnostics=inner.diagnostics,
    )


def code_to_json(code: GabidulinCode) -> dict:
    return {
        "field": code.ctx.to_json(),
        "g": code.ctx.word_to_coeffs(code.g),
        "k": code.k,
    }


def code_from_json(obj: dict) -> GabidulinCode:
    ctx = FieldCtx.from_json(obj["field"])
    return code_new(ctx, ctx.word_from_coeffs(obj["g"]), obj["k"])
