"""Exact integer arithmetic kernel.

Primality, factorization, modular exponentiation, multiplicative orders and
gcd-with-lcm-range computations. Everything here is deterministic: primality
uses fixed Miller-Rabin witness sets proven correct far beyond 64 bits, and
factorization uses trial division followed by Brent-cycle Pollard rho with a
fixed schedule of polynomial increments instead of random restarts.

All functions are pure and safe to call from any number of threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import CompositeTooHardError, NotCoprimeError

# Trial divisors for the quick-reject stage of is_prime.
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)

# Deterministic Miller-Rabin witness tiers: (bound, witnesses) means the
# witness tuple decides primality exactly for every n < bound.
_MR_TIERS = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (9_080_191, (31, 73)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (4_759_123_141, (2, 7, 61)),
    (1_122_004_669_633, (2, 13, 23, 1_662_803)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
)

# Exact for every n < 3.317e24, which covers the full 64-bit range.
_MR_FULL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# factorize(): trial-divide by candidates below this bound, then hand any
# surviving cofactor to Pollard rho. Rho finds a factor p in roughly sqrt(p)
# squarings, so a modest bound beats exhaustive trial division well before 1e6.
_TRIAL_LIMIT = 10_000

# Squaring steps allowed per rho round; any cofactor around 1e15 splits in a
# small fraction of this.
_RHO_ROUND_BUDGET = 1 << 18

_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)  # increments coprime to 2, 3, 5, from 7


def is_prime(n: int) -> bool:
    """Return True iff n is prime.

    Deterministic for every n below 3.3e24 (in particular for all 64-bit
    inputs): composites are never reported prime, regardless of size.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 67 * 67:
        # Survived trial division by every prime below 67.
        return True

    # Write n - 1 = d * 2^s with d odd.
    d = n - 1
    s = 0
    while d & 1 == 0:
        d >>= 1
        s += 1

    witnesses = _MR_FULL
    for bound, tier in _MR_TIERS:
        if n < bound:
            witnesses = tier
            break

    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(limit: int) -> list[int]:
    """All primes p < limit, by a sieve of Eratosthenes."""
    if limit <= 2:
        return []
    sieve = bytearray(b"\x01") * limit
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit - 1) + 1):
        if sieve[p]:
            start = p * p
            sieve[start::p] = bytearray(len(range(start, limit, p)))
    return [i for i in range(limit) if sieve[i]]


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization: ascending (prime, exponent) pairs.

    factorize(1) produces the empty factorization. Construction checks
    ordering and positivity; primality of the bases is the producer's job.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        previous = 1
        for prime, exponent in self.factors:
            if prime <= previous:
                raise ValueError("factor primes must be strictly increasing")
            if exponent < 1:
                raise ValueError("factor exponents must be >= 1")
            previous = prime

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def value(self) -> int:
        result = 1
        for p, e in self.factors:
            result *= p**e
        return result

    def exponent_of(self, prime: int) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0

    def __iter__(self):
        return iter(self.factors)


def factorize(n: int, *, effort: int = 32) -> Factorization:
    """Factor n >= 1 into its canonical prime factorization.

    `effort` bounds the number of Pollard-rho rounds spent on each hard
    cofactor; when it runs out, CompositeTooHardError signals that the input
    lies outside the supported range.
    """
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    counts: dict[int, int] = {}
    n = _trial_divide(n, counts)
    if n > 1:
        _split_hard(n, counts, effort)
    return Factorization(tuple(sorted(counts.items())))


def _trial_divide(n: int, counts: dict[int, int]) -> int:
    """Divide out every prime factor below _TRIAL_LIMIT; return the cofactor."""
    for p in (2, 3, 5):
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    d = 7
    i = 0
    while d <= _TRIAL_LIMIT and d * d <= n:
        while n % d == 0:
            counts[d] = counts.get(d, 0) + 1
            n //= d
        d += _WHEEL[i]
        i = (i + 1) & 7
    if 1 < n and (d * d > n):
        # Fully trial-divided: the cofactor is prime.
        counts[n] = counts.get(n, 0) + 1
        return 1
    return n


def _split_hard(n: int, counts: dict[int, int], effort: int) -> None:
    """Split a cofactor with no prime factor below _TRIAL_LIMIT."""
    stack = [n]
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            counts[v] = counts.get(v, 0) + 1
            continue
        root, k = _as_perfect_power(v)
        if k > 1:
            stack.extend([root] * k)
            continue
        d = None
        for c in range(1, effort + 1):
            d = _brent_rho(v, c)
            if d is not None:
                break
        if d is None:
            raise CompositeTooHardError(v)
        stack.append(d)
        stack.append(v // d)


def _as_perfect_power(n: int) -> tuple[int, int]:
    """Return (r, k) with r**k == n and k maximal prime, or (n, 1)."""
    for k in (2, 3, 5, 7, 11, 13, 17, 19):
        if (1 << k) > n:
            break
        r = _iroot(n, k)
        if r**k == n:
            return r, k
    return n, 1


def _iroot(n: int, k: int) -> int:
    """Integer floor of the k-th root of n, by Newton iteration."""
    if n < 2:
        return n
    if k == 2:
        return isqrt(n)
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _brent_rho(n: int, c: int) -> int | None:
    """One Brent-cycle Pollard rho round on odd composite n, x -> x^2 + c.

    Returns a nontrivial factor, or None if this round's budget is spent or
    the cycle collapses.
    """
    y, r, q = 2, 1, 1
    g = 1
    x = ys = y
    steps = 0
    while g == 1 and steps < _RHO_ROUND_BUDGET:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(128, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += 128
        steps += r
        r <<= 1
    if g == n:
        # The batched gcd overshot; walk the saved segment one step at a time.
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
    if 1 < g < n:
        return g
    return None


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp reduced into [0, modulus); exact for any operand sizes."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if base < 0 or exp < 0:
        raise ValueError("base and exponent must be non-negative")
    return pow(base, exp, modulus)


def mult_order(p: int, q: int) -> int:
    """Least d >= 1 with p**d = 1 (mod q), for a prime q not dividing p.

    Computed by factoring q - 1 and descending through its divisors, so the
    cost is a handful of modular exponentiations rather than a scan.
    """
    if q < 2 or not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if p % q == 0:
        raise NotCoprimeError(p, q)
    order = q - 1
    for ell, _ in factorize(q - 1).factors:
        while order % ell == 0 and pow(p, order // ell, q) == 1:
            order //= ell
    return order


def gcd_lcm_range(m: int, x: int) -> int:
    """gcd(lcm(1..m), x), computed without materializing lcm(1..m).

    For each prime l <= m the lcm carries l^a with l^a the largest power of
    l not exceeding m, so the gcd is the product of l^min(a, v_l(x)).
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    result = 1
    for ell in primes_below(m + 1):
        if x % ell:
            continue
        cap = 1
        power = ell
        while power * ell <= m:
            power *= ell
            cap += 1
        v = 0
        reduced = x
        while reduced % ell == 0:
            reduced //= ell
            v += 1
        result *= ell ** min(cap, v)
    return result
