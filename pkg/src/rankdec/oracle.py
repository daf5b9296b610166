"""Brute-force reference implementations for validating the fast paths.

Everything here enumerates, with hard caps (TooLarge) instead of silent
long runs.  These routines deliberately avoid the decoder and annihilator
construction code paths they are used to check.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import NoneFound, NotUnique, RankMismatch, TooLarge
from .field import rank_weight, subspace_elements
from .gabidulin import GabidulinCode
from .qpoly import QPoly

__all__ = [
    "brute_min_distance",
    "brute_nearest",
    "brute_right_annihilator",
]

_ENUM_CAP = 1 << 20


def _codeword_iter(code: GabidulinCode):
    """All codewords via direct evaluation of every message coefficient tuple."""
    ctx = code.ctx
    frobs = [[ctx.frob(gj, l) for gj in code.g] for l in range(code.k)]
    for coeffs in itertools.product(range(ctx.order), repeat=code.k):
        word = []
        for j in range(code.n):
            acc = 0
            for l in range(code.k):
                c = coeffs[l]
                if c:
                    acc = ctx.add(acc, ctx.mul(c, frobs[l][j]))
            word.append(acc)
        yield coeffs, tuple(word)


def _check_enum_cap(count: int) -> None:
    if count > _ENUM_CAP:
        raise TooLarge(f"enumeration of {count} objects exceeds the cap of {_ENUM_CAP}")


def brute_min_distance(code: GabidulinCode) -> int:
    """Exact minimum rank weight over all nonzero codewords."""
    ctx = code.ctx
    _check_enum_cap(ctx.order**code.k)
    best = code.n + 1
    for coeffs, word in _codeword_iter(code):
        if any(coeffs):
            w = rank_weight(ctx, word)
            if w < best:
                best = w
                if best == 1:
                    break
    return best


def brute_nearest(code: GabidulinCode, word: Sequence[int]) -> list[tuple[tuple[int, ...], int]]:
    """All codewords at minimal rank distance from the word, with that distance."""
    ctx = code.ctx
    _check_enum_cap(ctx.order**code.k)
    word = tuple(word)
    best = code.n + 1
    hits: list[tuple[tuple[int, ...], int]] = []
    for _, cand in _codeword_iter(code):
        d = rank_weight(ctx, tuple(ctx.sub(a, b) for a, b in zip(word, cand)))
        if d < best:
            best = d
            hits = [(cand, d)]
        elif d == best:
            hits.append((cand, d))
    return hits


def brute_right_annihilator(poly: QPoly, t: int) -> QPoly:
    """Unique monic L with q-degree <= t and poly o L = 0, by enumeration.

    Requires rank(poly) == t, the regime in which uniqueness holds; raises
    NoneFound / NotUnique if the search contradicts that."""
    ctx = poly.ctx
    m = ctx.m
    if not 0 <= t < m:
        raise ValueError(f"rank must lie in [0, {m})")
    _check_enum_cap(ctx.order ** (t + 1))
    actual = poly.rank()
    if actual != t:
        raise RankMismatch(f"declared rank {t} but the map has rank {actual}")
    # poly o L = 0 exactly when L maps every basis element into ker(poly);
    # testing values lets the scan bail out at the first basis vector.
    kernel_elems = {ctx.pack(v) for v in subspace_elements(ctx, poly.kernel())}
    found = []
    for deg in range(t + 1):
        for low in itertools.product(range(ctx.order), repeat=deg):
            cand = QPoly(ctx, list(low) + [1])
            if all(cand.eval(b) in kernel_elems for b in ctx.basis):
                found.append(cand)
                if len(found) > 1:
                    raise NotUnique("two monic right annihilators found")
    if not found:
        raise NoneFound("no monic right annihilator found")
    return found[0]
