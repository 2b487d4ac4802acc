"""Shared test helpers: context construction and seeded random contexts."""

from __future__ import annotations

import random

from kexit import DegreePattern, GroupOrder, KExitContext, primes_below, validate

PRIME_POOL = primes_below(10_000)
_ODD_POOL = PRIME_POOL[1:]


def make_context(pairs, degrees, **kwargs) -> KExitContext:
    return validate(GroupOrder(tuple(pairs)), DegreePattern(tuple(degrees)), **kwargs)


def random_context(
    rng: random.Random,
    *,
    min_primes: int = 3,
    max_primes: int = 8,
    max_exponent: int = 10,
    include_two_prob: float = 0.3,
    pool=None,
) -> KExitContext:
    """One random valid context: distinct primes, exponents, graphical-ish degrees."""
    pool = _ODD_POOL if pool is None else [p for p in pool if p != 2]
    k = rng.randint(min_primes, max_primes)
    primes = sorted(rng.sample(pool, k))
    if rng.random() < include_two_prob:
        primes[0] = 2  # keep k fixed; list stays sorted, 2 below every odd prime
    pairs = tuple((p, rng.randint(1, max_exponent)) for p in primes)
    degrees = [rng.randint(0, k - 1) for _ in range(k)]
    if sum(degrees) % 2:
        i = rng.randrange(k)
        degrees[i] += 1 if degrees[i] < k - 1 else -1
    return make_context(pairs, degrees)


def random_contexts(count: int, seed: int = 20250810, **kwargs) -> list[KExitContext]:
    rng = random.Random(seed)
    return [random_context(rng, **kwargs) for _ in range(count)]
