"""Integer helpers: factorization, multiplicative order, Euler phi,
2-adic valuation, and the lambda(q, d) divisibility predicate.

Everything here is exact and desk-scale. factorize sticks to trial
division with a configurable input cap; the unbounded helper used by the
field-tower module hands stubborn cofactors to sympy.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import NotCoprime, SizeLimitExceeded

# deterministic Miller-Rabin witness set, valid far beyond 2^64
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_FACTOR_CAP = 10**6


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FactoredInteger:
    """n together with its sorted (prime, exponent) list."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def phi(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= (p - 1) * p ** (e - 1)
        return out

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


@functools.lru_cache(maxsize=4096)
def factorize(n: int, limit: int = DEFAULT_FACTOR_CAP) -> FactoredInteger:
    """Trial-division factorization of 1 <= n <= limit."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    if n > limit:
        raise SizeLimitExceeded(f"factorize({n}) exceeds cap {limit}")
    rest = n
    out = []
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return FactoredInteger(n, tuple(out))


@functools.lru_cache(maxsize=1024)
def _factor_unbounded(n: int) -> tuple[tuple[int, int], ...]:
    """Factorization with no size cap; sympy takes over past trial division.

    Only the field-tower module uses this (orders of big multiplicative
    groups); everything desk-scale goes through factorize.
    """
    rest = n
    out: dict[int, int] = {}
    for d in (2, 3, 5, 7, 11, 13):
        while rest % d == 0:
            rest //= d
            out[d] = out.get(d, 0) + 1
    if rest > 1:
        if is_prime(rest):
            out[rest] = out.get(rest, 0) + 1
        else:
            from sympy import factorint

            for p, e in factorint(rest).items():
                out[int(p)] = out.get(int(p), 0) + int(e)
    return tuple(sorted(out.items()))


def euler_phi(n: int) -> int:
    """Count of integers in [1, n] coprime to n."""
    return factorize(n).phi()


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    return factorize(n).divisors()


def two_adic_valuation(i: int) -> int:
    """The exponent s with 2^s || i."""
    if i < 1:
        raise ValueError(f"2-adic valuation needs i >= 1, got {i}")
    return (i & -i).bit_length() - 1


def mult_order(a: int, n: int) -> int:
    """Smallest s >= 1 with a^s = 1 mod n; mult_order(a, 1) = 1."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    order = euler_phi(n)
    for p, _ in factorize(order).factors:
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def prime_power_split(q: int) -> tuple[int, int]:
    """(p, e) with q = p^e, or ValueError if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac.factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    return fac.factors[0]


def lambda_predicate(q: int, d: int) -> int:
    """1 iff d divides q^e + 1 for some odd e, else 0.

    Decided by the definitional scan over odd e in [1, 2*ord_d(q) - 1];
    q^e depends on e only mod ord_d(q), and subtracting 2*ord preserves
    parity, so the window is exhaustive. In-domain d in {1, 2} yields 1.
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if math.gcd(q, d) != 1:
        raise NotCoprime(f"gcd({q}, {d}) != 1")
    if d <= 2:
        return 1
    order = mult_order(q, d)
    for e in range(1, 2 * order, 2):
        if (pow(q, e, d) + 1) % d == 0:
            return 1
    return 0
