"""K-Exit tables for finite groups.

Given the prime factorization of a group order |G| and the degree pattern of
the prime graph of G, decide prime by prime whether p provably lies outside
pi(K) for every normal solvable subgroup K of G, and render the verdicts as
K-Exit tables.
"""

from .arith import (
    Factorization,
    factorize,
    gcd_lcm_range,
    is_prime,
    mod_pow,
    mult_order,
    primes_below,
)
from .catalog import (
    Family,
    FamilySpec,
    Fixture,
    TableErratum,
    family_order,
    fixture,
    fixture_context,
    fixture_names,
    get_fixture,
    parse_family,
)
from .core import (
    METHOD_BOTH,
    METHOD_H,
    METHOD_L,
    METHODS,
    ExitVerdict,
    KExitRow,
    KExitTable,
    build_table,
    exit_verdict,
    l_set,
    page_set,
    power_of,
    theta,
    theta_bar,
)
from .errors import (
    CompositeTooHardError,
    DegreeOutOfRangeError,
    DuplicatePrimeError,
    KExitError,
    LengthMismatchError,
    NotCoprimeError,
    NotPrimeError,
    NotPrimePowerError,
    OddDegreeSumError,
    ParseError,
    PrimeNotInGroupError,
    PrimeTooLargeError,
    UnknownFixtureError,
    ValidationError,
)
from .model import (
    DegreePattern,
    GroupOrder,
    KExitContext,
    parse_degrees,
    parse_order,
    render_order,
    validate,
)
from .oracle import (
    CellMismatch,
    compare_with_core,
    l_by_bigint,
    page_by_bigint,
    theta_bar_by_bigint,
    theta_by_bigint,
)
from .render import FORMATS, render, table_from_json, table_to_dict

__version__ = "0.1.0"

__all__ = [
    "CellMismatch",
    "CompositeTooHardError",
    "DegreeOutOfRangeError",
    "DegreePattern",
    "DuplicatePrimeError",
    "ExitVerdict",
    "FORMATS",
    "Factorization",
    "Family",
    "FamilySpec",
    "Fixture",
    "GroupOrder",
    "KExitContext",
    "KExitError",
    "KExitRow",
    "KExitTable",
    "LengthMismatchError",
    "METHODS",
    "METHOD_BOTH",
    "METHOD_H",
    "METHOD_L",
    "NotCoprimeError",
    "NotPrimeError",
    "NotPrimePowerError",
    "OddDegreeSumError",
    "ParseError",
    "PrimeNotInGroupError",
    "PrimeTooLargeError",
    "TableErratum",
    "UnknownFixtureError",
    "ValidationError",
    "build_table",
    "compare_with_core",
    "exit_verdict",
    "factorize",
    "family_order",
    "fixture",
    "fixture_context",
    "fixture_names",
    "gcd_lcm_range",
    "get_fixture",
    "is_prime",
    "l_by_bigint",
    "l_set",
    "mod_pow",
    "mult_order",
    "page_by_bigint",
    "page_set",
    "parse_degrees",
    "parse_family",
    "parse_order",
    "power_of",
    "primes_below",
    "render",
    "render_order",
    "table_from_json",
    "table_to_dict",
    "theta",
    "theta_bar",
    "theta_bar_by_bigint",
    "theta_by_bigint",
    "validate",
]
