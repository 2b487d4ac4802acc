"""Exception hierarchy for the kexit package.

The CLI maps these onto process exit codes: parse and argument problems
exit 2, validation problems exit 3, exhausted effort budgets exit 4.
"""

from __future__ import annotations


class KExitError(Exception):
    """Base class for every error raised by this package."""


class ParseError(KExitError):
    """Malformed textual or JSON input."""


class ValidationError(KExitError):
    """Input that parses but violates a semantic contract."""


class NotPrimeError(ValidationError):
    def __init__(self, value: int):
        super().__init__(f"{value} is not prime")
        self.value = value


class DuplicatePrimeError(ValidationError):
    def __init__(self, prime: int):
        super().__init__(f"prime {prime} listed more than once")
        self.prime = prime


class PrimeTooLargeError(ValidationError):
    def __init__(self, value: int, limit: int):
        super().__init__(f"prime {value} exceeds the supported bound {limit}")
        self.value = value
        self.limit = limit


class LengthMismatchError(ValidationError):
    def __init__(self, n_primes: int, n_degrees: int):
        super().__init__(
            f"degree pattern has {n_degrees} entries but the group order has "
            f"{n_primes} primes"
        )
        self.n_primes = n_primes
        self.n_degrees = n_degrees


class DegreeOutOfRangeError(ValidationError):
    def __init__(self, prime: int, degree: int, max_degree: int):
        super().__init__(
            f"degree {degree} at prime {prime} exceeds {max_degree}, the "
            f"largest possible vertex degree on {max_degree + 1} vertices"
        )
        self.prime = prime
        self.degree = degree
        self.max_degree = max_degree


class OddDegreeSumError(ValidationError):
    def __init__(self, total: int):
        super().__init__(
            f"degree sum {total} is odd, so no graph realizes this pattern; "
            "pass allow_odd_degree_sum (CLI: --allow-odd-degree-sum) to override"
        )
        self.total = total


class PrimeNotInGroupError(ValidationError):
    def __init__(self, prime: int):
        super().__init__(f"prime {prime} does not divide the group order")
        self.prime = prime


class NotCoprimeError(ValidationError):
    def __init__(self, base: int, modulus: int):
        super().__init__(
            f"{modulus} divides {base}, so no power of {base} is 1 mod {modulus}"
        )
        self.base = base
        self.modulus = modulus


class NotPrimePowerError(ValidationError):
    def __init__(self, value: int):
        super().__init__(f"{value} is not a prime power >= 2")
        self.value = value


class UnknownFixtureError(KExitError):
    def __init__(self, name: str, known: tuple[str, ...]):
        super().__init__(f"unknown fixture {name!r}; known fixtures: {', '.join(known)}")
        self.name = name
        self.known = known


class CompositeTooHardError(KExitError):
    def __init__(self, n: int):
        super().__init__(f"could not split composite {n} within the effort budget")
        self.n = n
