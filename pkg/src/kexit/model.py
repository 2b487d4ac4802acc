"""Input data model: group orders, degree patterns, validation and parsing.

A group enters the K-Exit method as two aligned vectors: the factorization of
its order |G| (ascending primes with exponents) and the degree pattern of its
prime graph. Degrees are indexed by ascending primes; the i-th degree belongs
to the i-th smallest prime divisor of |G|. Inputs are accepted either in a
compact text grammar ("2^11*3*5*7^2*19*31^3", "3,2,2,1,1,1") or as JSON.

All types here are immutable value objects, safe to share across threads.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .arith import is_prime
from .errors import (
    DegreeOutOfRangeError,
    DuplicatePrimeError,
    LengthMismatchError,
    NotPrimeError,
    OddDegreeSumError,
    ParseError,
    PrimeNotInGroupError,
    PrimeTooLargeError,
    ValidationError,
)

# Primes at or above this bound are rejected on input.
PRIME_LIMIT = 1 << 63

_TERM_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")
_DEGREE_RE = re.compile(r"^\s*(\d+)\s*$")


@dataclass(frozen=True)
class GroupOrder:
    """Factorization of |G| as ascending (prime, exponent) pairs.

    Input pairs are normalized to ascending order; duplicates, composite
    bases, exponents below 1 and primes at or above PRIME_LIMIT are rejected.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        try:
            pairs = sorted((int(p), int(e)) for p, e in self.factors)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"malformed factor list: {exc}") from exc
        previous = -1
        for p, e in pairs:
            if e < 1:
                raise ValidationError(f"exponent for prime {p} must be >= 1, got {e}")
            if p == previous:
                raise DuplicatePrimeError(p)
            if p >= PRIME_LIMIT:
                raise PrimeTooLargeError(p, PRIME_LIMIT)
            if not is_prime(p):
                raise NotPrimeError(p)
            previous = p
        object.__setattr__(self, "factors", tuple(pairs))

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
        raise PrimeNotInGroupError(prime)

    def __str__(self) -> str:
        return render_order(self)


@dataclass(frozen=True)
class DegreePattern:
    """Prime-graph vertex degrees, positionally aligned to ascending primes."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        try:
            values = tuple(int(d) for d in self.degrees)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"malformed degree list: {exc}") from exc
        for d in values:
            if d < 0:
                raise ValidationError(f"degrees must be non-negative, got {d}")
        object.__setattr__(self, "degrees", values)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.degrees)


@dataclass(frozen=True)
class KExitContext:
    """A validated (GroupOrder, DegreePattern) pairing.

    Construction enforces the structural invariants (matching lengths, each
    degree small enough for a simple graph on the primes). The even-degree-sum
    check is applied by validate(), which can be told to waive it.
    """

    order: GroupOrder
    degrees: DegreePattern

    def __post_init__(self):
        n = len(self.order.primes)
        if len(self.degrees) != n:
            raise LengthMismatchError(n, len(self.degrees))
        for p, d in zip(self.order.primes, self.degrees):
            if d > n - 1:
                raise DegreeOutOfRangeError(p, d, n - 1)

    @property
    def primes(self) -> tuple[int, ...]:
        return self.order.primes

    def power_of(self, prime: int) -> int:
        return self.order.exponent_of(prime)

    def degree_of(self, prime: int) -> int:
        for p, d in zip(self.order.primes, self.degrees):
            if p == prime:
                return d
        raise PrimeNotInGroupError(prime)


def validate(
    order: GroupOrder,
    degrees: DegreePattern,
    *,
    allow_odd_degree_sum: bool = False,
) -> KExitContext:
    """Pair a group order with a degree pattern, checking all invariants.

    An odd degree sum cannot come from a graph and is rejected by default;
    the per-prime verdicts do not actually depend on realizability, so the
    check can be waived for exploratory inputs.
    """
    ctx = KExitContext(order, degrees)
    total = sum(degrees)
    if total % 2 and not allow_odd_degree_sum:
        raise OddDegreeSumError(total)
    return ctx


def parse_order(text: str) -> GroupOrder:
    """Parse a group order from the text grammar or from JSON.

    Text grammar: `term ('*' term)*` with `term := prime ('^' exponent)?`,
    e.g. "2^11*3*5*7^2*19*31^3". JSON: a list of [prime, exponent] pairs, or
    an object with such a list under the "order" key.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty group order")
    if stripped[0] in "[{":
        return GroupOrder(_json_order_pairs(stripped))
    pairs = []
    for term in stripped.split("*"):
        match = _TERM_RE.match(term)
        if not match:
            raise ParseError(f"bad term {term.strip()!r} in group order")
        p = int(match.group(1))
        e = int(match.group(2)) if match.group(2) else 1
        if e < 1:
            raise ParseError(f"exponent for prime {p} must be >= 1, got {e}")
        pairs.append((p, e))
    return GroupOrder(tuple(pairs))


def parse_degrees(text: str) -> DegreePattern:
    """Parse a degree pattern from comma-separated integers or from JSON.

    JSON: a list of non-negative integers, or an object with such a list
    under the "degrees" key.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty degree pattern")
    if stripped[0] in "[{":
        return DegreePattern(_json_degree_list(stripped))
    values = []
    for part in stripped.split(","):
        match = _DEGREE_RE.match(part)
        if not match:
            raise ParseError(f"bad degree {part.strip()!r} in degree pattern")
        values.append(int(match.group(1)))
    return DegreePattern(tuple(values))


def render_order(order: GroupOrder) -> str:
    """Canonical text form of a group order; inverse of parse_order."""
    return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in order.factors)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _plain_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}")
    return value


def _json_order_pairs(text: str) -> tuple[tuple[int, int], ...]:
    data = _load_json(text)
    if isinstance(data, dict):
        if "order" not in data:
            raise ParseError('JSON object lacks an "order" key')
        data = data["order"]
    if not isinstance(data, list):
        raise ParseError("JSON order must be a list of [prime, exponent] pairs")
    pairs = []
    for item in data:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ParseError(f"bad order entry {item!r}; expected [prime, exponent]")
        pairs.append((_plain_int(item[0]), _plain_int(item[1])))
    return tuple(pairs)


def _json_degree_list(text: str) -> tuple[int, ...]:
    data = _load_json(text)
    if isinstance(data, dict):
        if "degrees" not in data:
            raise ParseError('JSON object lacks a "degrees" key')
        data = data["degrees"]
    if not isinstance(data, list):
        raise ParseError("JSON degrees must be a list of integers")
    return tuple(_plain_int(d) for d in data)
