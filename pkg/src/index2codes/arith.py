"""Small integer number theory used throughout the package.

Primality, factorisation and divisor enumeration are delegated to sympy;
everything else here is a few lines of modular arithmetic.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

import sympy


def is_prime(n: int) -> bool:
    return n >= 2 and bool(sympy.isprime(n))


def factorint(n: int) -> dict[int, int]:
    return {int(k): int(v) for k, v in sympy.factorint(n).items()}


def divisors(n: int) -> list[int]:
    return [int(d) for d in sympy.divisors(n)]


def euler_phi(n: int) -> int:
    return int(sympy.totient(n))


@lru_cache(maxsize=None)
def prime_power_minus_one_factors(p: int, d: int) -> tuple[int, ...]:
    """Distinct prime factors of ``p**d - 1``.

    The number is split along its cyclotomic factors ``Phi_e(p)`` first, which
    keeps every individual factorisation small even for ``3**55 - 1``.
    """
    from .exact_numbers import cyclotomic_poly

    primes: set[int] = set()
    for e in divisors(d):
        value = sum(c * p**i for i, c in enumerate(cyclotomic_poly(e)))
        primes.update(factorint(abs(value)))
    primes.discard(1)
    return tuple(sorted(primes))


@lru_cache(maxsize=None)
def prime_power_minus_one_divisors(p: int, d: int) -> tuple[int, ...]:
    """All divisors of ``p**d - 1``, sorted."""
    n = p**d - 1
    divs = [1]
    for r in prime_power_minus_one_factors(p, d):
        k, rest = 0, n
        while rest % r == 0:
            rest //= r
            k += 1
        divs = [x * r**i for x in divs for i in range(k + 1)]
    return tuple(sorted(divs))


def multiplicative_order(a: int, n: int) -> int:
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    return int(sympy.n_order(a % n, n)) if n > 1 else 1


def cyclic_subgroup(a: int, n: int) -> frozenset[int]:
    """The subgroup of (Z/nZ)^* generated by ``a``."""
    out = {1 % n}
    x = a % n
    while x not in out:
        out.add(x)
        x = x * a % n
    return frozenset(out)


def is_index2(p: int, n: int) -> bool:
    """True iff <p> has index 2 in (Z/nZ)^* and does not contain -1."""
    if n < 3 or gcd(p, n) != 1:
        return False
    sub = cyclic_subgroup(p, n)
    return 2 * len(sub) == euler_phi(n) and (n - 1) not in sub


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def digit_sum(n: int, base: int) -> int:
    total = 0
    while n:
        n, r = divmod(n, base)
        total += r
    return total


def isqrt_exact(n: int) -> int | None:
    """Square root of ``n`` if it is a perfect square, else None."""
    if n < 0:
        return None
    r = sympy.integer_nthroot(n, 2)
    return int(r[0]) if r[1] else None
