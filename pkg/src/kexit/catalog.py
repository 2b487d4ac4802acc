"""Simple-group order formulas and the two shipped worked fixtures.

family_order() turns a family name plus parameter into a GroupOrder via the
standard order formulas. Degree patterns are NOT derivable from an order
alone (they need spectrum knowledge), so only the shipped fixtures carry
patterns; arbitrary patterns are user-supplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .arith import factorize, primes_below
from .errors import NotPrimePowerError, ParseError, UnknownFixtureError, ValidationError
from .model import DegreePattern, GroupOrder, KExitContext, validate


class Family(str, Enum):
    ALTERNATING = "alternating"
    PSL2 = "psl2"
    PSU3 = "psu3"
    PSU4 = "psu4"


_FAMILY_ALIASES = {
    "alternating": Family.ALTERNATING,
    "a": Family.ALTERNATING,
    "an": Family.ALTERNATING,
    "psl2": Family.PSL2,
    "l2": Family.PSL2,
    "psu3": Family.PSU3,
    "u3": Family.PSU3,
    "psu4": Family.PSU4,
    "u4": Family.PSU4,
}


def parse_family(text: str) -> Family:
    try:
        return _FAMILY_ALIASES[text.strip().lower()]
    except KeyError:
        known = ", ".join(sorted(set(a.value for a in Family)))
        raise ParseError(f"unknown family {text!r}; known: {known}") from None


@dataclass(frozen=True)
class FamilySpec:
    """A simple-group family plus its parameter (n, or a prime power q)."""

    family: Family
    parameter: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family is Family.ALTERNATING:
            if self.parameter < 5:
                raise ValidationError(
                    f"alternating degree must be >= 5, got {self.parameter}"
                )
        else:
            if self.parameter < 2 or len(factorize(self.parameter).factors) != 1:
                raise NotPrimePowerError(self.parameter)


def family_order(spec: FamilySpec) -> GroupOrder:
    """Exact order of the family member, factored into a GroupOrder."""
    q = spec.parameter
    if spec.family is Family.ALTERNATING:
        return _alternating_order(q)
    if spec.family is Family.PSL2:
        value = q * (q * q - 1) // gcd(2, q - 1)
    elif spec.family is Family.PSU3:
        value = q**3 * (q * q - 1) * (q**3 + 1) // gcd(3, q + 1)
    else:
        value = q**6 * (q * q - 1) * (q**3 + 1) * (q**4 - 1) // gcd(4, q + 1)
    return GroupOrder(factorize(value).factors)


def _alternating_order(n: int) -> GroupOrder:
    # n!/2 factored directly: the exponent of p in n! is sum(n // p^i).
    pairs = []
    for p in primes_below(n + 1):
        e = 0
        pk = p
        while pk <= n:
            e += n // pk
            pk *= p
        if p == 2:
            e -= 1
        if e:
            pairs.append((p, e))
    return GroupOrder(tuple(pairs))


@dataclass(frozen=True)
class TableErratum:
    """A fixture cell whose published value disagrees with the computed one."""

    cell: str
    prime: int
    printed: tuple[int, ...]
    computed: tuple[int, ...]


@dataclass(frozen=True)
class Fixture:
    name: str
    label: str
    order: GroupOrder
    degrees: DegreePattern
    published_diffs: tuple[TableErratum, ...]


_FIXTURES = {
    "u3_31": Fixture(
        name="u3_31",
        label="U3(31)",
        order=GroupOrder(((2, 11), (3, 1), (5, 1), (7, 2), (19, 1), (31, 3))),
        degrees=DegreePattern((3, 2, 2, 1, 1, 1)),
        published_diffs=(),
    ),
    "u4_89": Fixture(
        name="u4_89",
        label="U4(89)",
        order=GroupOrder(
            ((2, 9), (3, 7), (5, 3), (7, 1), (11, 2), (17, 1), (89, 6), (233, 1), (373, 1))
        ),
        degrees=DegreePattern((6, 6, 6, 3, 6, 3, 4, 3, 3)),
        # The published table is internally inconsistent at these two cells
        # (its H row for 7 requires 7 | 89^6 - 1, contradicting its own
        # theta_bar(89) cell); the computed values are the consistent ones.
        published_diffs=(
            TableErratum(
                cell="theta_bar",
                prime=89,
                printed=(5, 7, 233),
                computed=(17, 233),
            ),
            TableErratum(
                cell="H",
                prime=5,
                printed=(7, 17, 89, 233, 373),
                computed=(7, 17, 233, 373),
            ),
        ),
    ),
}


def fixture_names() -> tuple[str, ...]:
    return tuple(_FIXTURES)


def get_fixture(name: str) -> Fixture:
    try:
        return _FIXTURES[name]
    except KeyError:
        raise UnknownFixtureError(name, fixture_names()) from None


def fixture(name: str) -> tuple[GroupOrder, DegreePattern]:
    """The exact published order and degree pattern for a known fixture."""
    fix = get_fixture(name)
    return fix.order, fix.degrees


def fixture_context(name: str) -> KExitContext:
    return validate(*fixture(name))
