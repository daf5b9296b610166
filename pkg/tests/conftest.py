"""Shared helpers: seeded randomness so every test is reproducible."""

from rankdec import QPoly, field_create, rank_weight
from rankdec.channel import Prng


def rand_elem(ctx, rng):
    return rng.elem(ctx)


def rand_nonzero(ctx, rng):
    while True:
        x = rng.elem(ctx)
        if x:
            return x


def rand_qpoly(ctx, rng, ncoeffs, monic=False):
    coeffs = [rng.elem(ctx) for _ in range(ncoeffs)]
    if monic:
        coeffs[-1] = 1
    return QPoly(ctx, coeffs)


def rand_independent(ctx, rng, count):
    while True:
        cand = tuple(rng.elem(ctx) for _ in range(count))
        if rank_weight(ctx, cand) == count:
            return cand


def make_rng(seed):
    return Prng(seed)
