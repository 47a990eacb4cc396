"""Small integer helpers: primality, factoring, units, prime powers."""
from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import NotPrime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((prime, exponent), ...)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += 1 if f == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> list[int]:
    return [f for f, _ in factorize(n)]


def phi(n: int) -> int:
    r = n
    for f, _ in factorize(n):
        r = r // f * (f - 1)
    return r


def units(n: int) -> list[int]:
    """Residues in [1, n-1] coprime to n (just [0] when n == 1)."""
    if n == 1:
        return [0]
    return [t for t in range(1, n) if gcd(t, n) == 1]


def divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def mult_order(a: int, n: int) -> int:
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    if n == 1:
        return 1
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, d) with q == p**d, or raise NotPrime."""
    fs = factorize(q) if q > 1 else ()
    if len(fs) != 1:
        raise NotPrime(f"{q} is not a prime power")
    return fs[0]


def is_prime_power(q: int) -> bool:
    return q > 1 and len(factorize(q)) == 1


def odd_prime_powers(limit: int, start: int = 3) -> list[int]:
    return [q for q in range(start, limit + 1) if q % 2 and is_prime_power(q)]


def primes_upto(limit: int, start: int = 2) -> list[int]:
    return [n for n in range(start, limit + 1) if is_prime(n)]
