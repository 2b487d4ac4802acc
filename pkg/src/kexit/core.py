"""The K-Exit method: per-prime witness sets and exit verdicts.

For a prime p dividing |G| with m = power_of(p), the method builds nested
witness sets from the other prime divisors q of |G|:

  theta(p)     q divides none of p^1 - 1, ..., p^m - 1
               (equivalently, the order of p mod q exceeds m),
  theta_bar(p) q does not divide p^m - 1,
  H(p, G)      q in theta(p) with p not dividing q^n - 1, n = power_of(q)
               ("the page of p"),
  L(p, G)      q with p not dividing q^n - 1 and q not dividing
               p^gcd(lcm(1..m), q-1) - 1.

Always theta(p) is contained in theta_bar(p) and L(p, G) in H(p, G). A prime
p "exits" when its prime-graph degree is smaller than the chosen witness set:
d_G(p) < |H(p, G)| (method "H") or d_G(p) < |L(p, G)| (method "L") proves
that p divides no normal solvable subgroup order of G.

Divisibility of p^i - 1 by q is always decided inside [0, q) by modular
arithmetic; the huge values p^i - 1 are never materialized. The independent
transcription in kexit.oracle does materialize them, on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import gcd_lcm_range, mod_pow
from .model import KExitContext

METHOD_H = "H"
METHOD_L = "L"
METHOD_BOTH = "both"
METHODS = (METHOD_H, METHOD_L, METHOD_BOTH)


def _check_method(method: str) -> None:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")


@dataclass(frozen=True)
class KExitRow:
    """One table row: every witness set and verdict for a single prime."""

    prime: int
    power: int
    theta: tuple[int, ...]
    theta_bar: tuple[int, ...]
    page: tuple[int, ...]
    l_set: tuple[int, ...]
    degree: int
    exits_by_h: bool
    exits_by_l: bool

    def exits(self, method: str) -> bool:
        _check_method(method)
        if method == METHOD_H:
            return self.exits_by_h
        if method == METHOD_L:
            return self.exits_by_l
        return self.exits_by_h or self.exits_by_l


@dataclass(frozen=True)
class KExitTable:
    """All rows in ascending prime order plus the excluded primes."""

    rows: tuple[KExitRow, ...]
    excluded: tuple[int, ...]
    method: str


@dataclass(frozen=True)
class ExitVerdict:
    exits: bool
    witness_size: int
    degree: int


def power_of(ctx: KExitContext, p: int) -> int:
    """Exponent of p in |G|; the largest i with p^i dividing the order."""
    return ctx.power_of(p)


def _hits_power_window(p: int, m: int, q: int) -> bool:
    """True iff q divides p^i - 1 for some 1 <= i <= m.

    Runs the power sequence p, p^2, ..., p^m inside [0, q) and watches for a
    residue of 1, so no value ever exceeds q^2.
    """
    r = p % q
    if r == 0:
        return False
    acc = 1
    for _ in range(m):
        acc = acc * r % q
        if acc == 1:
            return True
    return False


def theta(ctx: KExitContext, p: int) -> tuple[int, ...]:
    """Primes q of the order, q != p, dividing none of p^1 - 1 .. p^m - 1."""
    m = ctx.power_of(p)
    return tuple(
        q for q in ctx.primes if q != p and not _hits_power_window(p, m, q)
    )


def theta_bar(ctx: KExitContext, p: int) -> tuple[int, ...]:
    """Primes q of the order, q != p, not dividing p^m - 1."""
    m = ctx.power_of(p)
    return tuple(q for q in ctx.primes if q != p and mod_pow(p, m, q) != 1)


def page_set(ctx: KExitContext, p: int) -> tuple[int, ...]:
    """H(p, G): members q of theta(p) whose full power q^n - 1 misses p."""
    return tuple(
        q for q in theta(ctx, p) if mod_pow(q, ctx.power_of(q), p) != 1
    )


def l_set(ctx: KExitContext, p: int) -> tuple[int, ...]:
    """L(p, G): the lcm-window variant of the page.

    Membership requires p not dividing q^n - 1 and q not dividing
    p^gcd(lcm(1..m), q-1) - 1. The second condition forces the order of p
    mod q outside lcm(1..m), which is stronger than exceeding m, hence
    L(p, G) is always contained in H(p, G).
    """
    m = ctx.power_of(p)
    members = []
    for q in ctx.primes:
        if q == p:
            continue
        if mod_pow(q, ctx.power_of(q), p) == 1:
            continue
        if mod_pow(p, gcd_lcm_range(m, q - 1), q) == 1:
            continue
        members.append(q)
    return tuple(members)


def exit_verdict(ctx: KExitContext, p: int, method: str = METHOD_BOTH) -> ExitVerdict:
    """Decide whether p exits pi(K) under the chosen witness rule.

    The verdict compares d_G(p) with the witness set size; for "both" the
    rules are combined by disjunction and the larger witness is reported.
    """
    _check_method(method)
    degree = ctx.degree_of(p)
    sizes = []
    if method in (METHOD_H, METHOD_BOTH):
        sizes.append(len(page_set(ctx, p)))
    if method in (METHOD_L, METHOD_BOTH):
        sizes.append(len(l_set(ctx, p)))
    return ExitVerdict(
        exits=any(degree < size for size in sizes),
        witness_size=max(sizes),
        degree=degree,
    )


def build_table(ctx: KExitContext, method: str = METHOD_BOTH) -> KExitTable:
    """Compute one row per prime of the order, in ascending prime order.

    Every cell is always computed, including both verdict flags; `method`
    only selects which flags feed the excluded list.
    """
    _check_method(method)
    rows = []
    for p in ctx.primes:
        m = ctx.power_of(p)
        th = theta(ctx, p)
        page = tuple(q for q in th if mod_pow(q, ctx.power_of(q), p) != 1)
        degree = ctx.degree_of(p)
        l_members = l_set(ctx, p)
        rows.append(
            KExitRow(
                prime=p,
                power=m,
                theta=th,
                theta_bar=theta_bar(ctx, p),
                page=page,
                l_set=l_members,
                degree=degree,
                exits_by_h=degree < len(page),
                exits_by_l=degree < len(l_members),
            )
        )
    excluded = tuple(row.prime for row in rows if row.exits(method))
    return KExitTable(rows=tuple(rows), excluded=excluded, method=method)
