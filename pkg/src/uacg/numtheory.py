"""Exact integer arithmetic behind the closed-form spectra.

Totients, the Moebius function, Ramanujan sums c(k, n) and trial-division
factorizations.  Everything in this module is integer arithmetic; no floating
point enters here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "TRIAL_DIVISION_LIMIT",
    "Factorization",
    "euler_phi",
    "factorize",
    "gcd",
    "is_prime",
    "largest_squarefree_divisor",
    "mobius",
    "prime_power",
    "ramanujan_sum",
]

# Trial division is the only factorization method provided; inputs are
# desk-scale by design.
TRIAL_DIVISION_LIMIT = 10**9


@dataclass(frozen=True)
class Factorization:
    """n = prod(p**e) with primes strictly increasing and every exponent >= 1."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def num_distinct_primes(self) -> int:
        return len(self.factors)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor with gcd(0, n) == n."""
    return math.gcd(a, b)


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Complete prime factorization of n by trial division.

    factorize(1) has an empty factor list.  Raises ValueError outside
    1 <= n <= TRIAL_DIVISION_LIMIT.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    if n > TRIAL_DIVISION_LIMIT:
        raise ValueError(f"n={n} exceeds the supported range {TRIAL_DIVISION_LIMIT}")
    factors: list[tuple[int, int]] = []
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def euler_phi(n: int) -> int:
    """Count of 1 <= j <= n with gcd(j, n) == 1, via the product formula."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    phi = n
    for p, _ in factorize(n).factors:
        phi = phi // p * (p - 1)
    return phi


def mobius(n: int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)**(number of primes)."""
    if n < 1:
        raise ValueError(f"mobius requires n >= 1, got {n}")
    fac = factorize(n)
    if any(e > 1 for _, e in fac.factors):
        return 0
    return -1 if fac.num_distinct_primes % 2 else 1


def ramanujan_sum(k: int, n: int) -> int:
    """Ramanujan sum c(k, n) = mobius(t) * phi(n) / phi(t) with t = n / gcd(k, n).

    This equals the sum of e^(2*pi*i*k*j/n) over the units j mod n, which is
    always an integer.  k must satisfy 0 <= k < n.
    """
    if n < 1:
        raise ValueError(f"ramanujan_sum requires n >= 1, got {n}")
    if k < 0 or k >= n:
        raise ValueError(f"ramanujan_sum requires 0 <= k < n, got k={k}, n={n}")
    t = n // math.gcd(k, n)
    mu = mobius(t)
    if mu == 0:
        return 0
    return mu * (euler_phi(n) // euler_phi(t))


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, m) with n == p**m if n is a prime power, else None."""
    if n < 2:
        return None
    fac = factorize(n)
    if fac.num_distinct_primes != 1:
        return None
    return fac.factors[0]


def is_prime(n: int) -> bool:
    pp = prime_power(n)
    return pp is not None and pp[1] == 1


def largest_squarefree_divisor(n: int) -> int:
    """Product of the distinct primes of n (1 for n = 1)."""
    if n < 1:
        raise ValueError(f"largest_squarefree_divisor requires n >= 1, got {n}")
    out = 1
    for p in factorize(n).primes:
        out *= p
    return out
