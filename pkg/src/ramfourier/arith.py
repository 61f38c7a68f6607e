"""Exact elementary number theory: factorization, divisors, mu and phi.

Everything here is plain integer arithmetic on Python ints, so values
never overflow or round. The only limit is the factorization cap below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import CapacityError, DomainError

__all__ = [
    "FACTORIZE_CAP",
    "Factorization",
    "DivisorList",
    "factorize",
    "divisors",
    "gcd",
    "is_prime",
    "mobius",
    "euler_phi",
]

# Trial division keeps factorization deterministic; the cap keeps the worst
# case (a prime near the cap, ~2^25 divisions) tolerable.
FACTORIZE_CAP = 2**50


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer.

    `factors` lists (prime, exponent) pairs with strictly increasing
    primes; it is empty exactly when n == 1.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"factorization is defined for n >= 1, got {self.n}")
        product = 1
        previous = 1
        for p, e in self.factors:
            if p <= previous:
                raise DomainError("primes must be strictly increasing")
            if e < 1:
                raise DomainError(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            product *= p**e
            previous = p
        if product != self.n:
            raise DomainError(f"factors multiply to {product}, not {self.n}")

    @property
    def tau(self) -> int:
        """Number of divisors of n."""
        count = 1
        for _, e in self.factors:
            count *= e + 1
        return count


@dataclass(frozen=True)
class DivisorList:
    """All divisors of r, in increasing order."""

    r: int
    divisors: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise DomainError(f"divisors are defined for r >= 1, got {self.r}")
        previous = 0
        for d in self.divisors:
            if d <= previous:
                raise DomainError("divisors must be strictly increasing")
            if self.r % d:
                raise DomainError(f"{d} does not divide {self.r}")
            previous = d
        if not self.divisors or self.divisors[0] != 1 or self.divisors[-1] != self.r:
            raise DomainError("divisor list must run from 1 to r")
        if len(self.divisors) != factorize(self.r).tau:
            raise DomainError("divisor list is incomplete")

    def __len__(self) -> int:
        return len(self.divisors)

    def __iter__(self):
        return iter(self.divisors)

    def __getitem__(self, index):
        return self.divisors[index]

    def __contains__(self, d) -> bool:
        return d in self.divisors


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Unique prime factorization of n by trial division."""
    if n < 1:
        raise DomainError(f"factorize is defined for n >= 1, got {n}")
    if n > FACTORIZE_CAP:
        raise CapacityError(f"factorize is capped at n <= 2**50, got {n}")
    factors = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    f = 5
    while f * f <= m:
        for p in (f, f + 2):
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                factors.append((p, e))
        f += 6
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


@lru_cache(maxsize=None)
def divisors(r: int) -> DivisorList:
    """All divisors of r, sorted increasing; length tau(r)."""
    if r < 1:
        raise DomainError(f"divisors are defined for r >= 1, got {r}")
    divs = [1]
    for p, e in factorize(r).factors:
        powers = [p**i for i in range(1, e + 1)]
        divs += [d * q for d in divs for q in powers]
    return DivisorList(r, tuple(sorted(divs)))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """Mobius function: 0 on non-squarefree n, else (-1)^(number of primes)."""
    if n < 1:
        raise DomainError(f"mobius is defined for n >= 1, got {n}")
    fac = factorize(n)
    if any(e > 1 for _, e in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler totient, computed from the factorization."""
    if n < 1:
        raise DomainError(f"euler_phi is defined for n >= 1, got {n}")
    result = n
    for p, _ in factorize(n).factors:
        result -= result // p
    return result
