"""Elementary multiplicative arithmetic: factorization, divisor sums,
Moebius function and the Kronecker symbol.

Everything is exact over Python's arbitrary precision integers.  Inputs in
this package stay small (divisor sums are taken of numbers below the
discriminant), so trial division is entirely adequate.
"""

from __future__ import annotations

import math
from functools import lru_cache


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as a sorted tuple of (p, exponent)."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    # remaining factors are coprime to 6; step through 6k +/- 1
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def sigma(m: int, n: int) -> int:
    """Divisor power sum sigma_m(n) = sum of d^m over divisors d of n."""
    if n < 1:
        raise ValueError(f"sigma_m requires n >= 1, got {n}")
    if m < 0:
        raise ValueError(f"sigma_m requires m >= 0, got {m}")
    total = 1
    for p, e in factorize(n):
        if m == 0:
            total *= e + 1
        else:
            total *= (p ** (m * (e + 1)) - 1) // (p**m - 1)
    return total


def moebius(n: int) -> int:
    """Moebius function: 0 on nonsquarefree n, else (-1)^(number of primes)."""
    if n < 1:
        raise ValueError(f"moebius requires n >= 1, got {n}")
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for _, e in factorize(n))


def _kronecker_prime(a: int, p: int) -> int:
    """Kronecker symbol (a/p) for p prime."""
    if p == 2:
        if a % 2 == 0:
            return 0
        return 1 if a % 8 in (1, 7) else -1
    r = pow(a, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for n >= 1, completely multiplicative in n."""
    if n < 1:
        raise ValueError(f"kronecker requires positive lower argument, got {n}")
    result = 1
    for p, e in factorize(n):
        s = _kronecker_prime(a, p)
        if s == 0:
            return 0
        if e % 2 and s == -1:
            result = -result
    return result


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n
