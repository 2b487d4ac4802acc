"""Brute-force cross-check of kexit.core using exact big-integer arithmetic.

These functions transcribe the witness-set definitions literally: they build
the full integers p^i - 1 (and lcm(1..m) itself) and test divisibility by
exact division. They deliberately share none of the modular shortcuts used by
kexit.core, so a bug in either route shows up as a set mismatch. Speed is a
non-goal here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from . import core
from .model import KExitContext


def theta_by_bigint(ctx: KExitContext, p: int) -> tuple[int, ...]:
    m = ctx.power_of(p)
    values = [p**i - 1 for i in range(1, m + 1)]
    return tuple(
        q
        for q in ctx.primes
        if q != p and all(v % q != 0 for v in values)
    )


def theta_bar_by_bigint(ctx: KExitContext, p: int) -> tuple[int, ...]:
    value = p ** ctx.power_of(p) - 1
    return tuple(q for q in ctx.primes if q != p and value % q != 0)


def page_by_bigint(ctx: KExitContext, p: int) -> tuple[int, ...]:
    return tuple(
        q for q in theta_by_bigint(ctx, p) if p in theta_bar_by_bigint(ctx, q)
    )


def l_by_bigint(ctx: KExitContext, p: int) -> tuple[int, ...]:
    m = ctx.power_of(p)
    window = lcm(*range(1, m + 1))
    members = []
    for q in ctx.primes:
        if q == p:
            continue
        n = ctx.power_of(q)
        if (q**n - 1) % p == 0:
            continue
        if (p ** gcd(window, q - 1) - 1) % q == 0:
            continue
        members.append(q)
    return tuple(members)


@dataclass(frozen=True)
class CellMismatch:
    """A cell where the fast route and the brute-force route disagree."""

    cell: str
    prime: int
    computed: tuple[int, ...]
    oracle: tuple[int, ...]


_CELLS = (
    ("theta", core.theta, theta_by_bigint),
    ("theta_bar", core.theta_bar, theta_bar_by_bigint),
    ("page", core.page_set, page_by_bigint),
    ("l_set", core.l_set, l_by_bigint),
)


def compare_with_core(ctx: KExitContext) -> tuple[CellMismatch, ...]:
    """Recompute every witness set both ways; return the disagreements."""
    mismatches = []
    for p in ctx.primes:
        for name, fast, slow in _CELLS:
            a = fast(ctx, p)
            b = slow(ctx, p)
            if a != b:
                mismatches.append(CellMismatch(name, p, a, b))
    return tuple(mismatches)
