"""Exact integer number theory used by the epimorphism-counting formulas.

Everything here is plain trial division over Python ints.  Inputs in this
project stay far below 10**6 (periods of cyclic symmetries and their
divisors), so no factorization machinery beyond that is warranted.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as a tuple of (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n >= 1 in ascending order."""
    if n < 1:
        raise ValueError(f"divisors expects n >= 1, got {n}")
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def euler_phi(n: int) -> int:
    """Euler's totient: count of 1 <= k <= n with gcd(k, n) == 1."""
    if n < 1:
        raise ValueError(f"euler_phi expects n >= 1, got {n}")
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def moebius_mu(n: int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)^(number of primes)."""
    if n < 1:
        raise ValueError(f"moebius_mu expects n >= 1, got {n}")
    mu = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        mu = -mu
    return mu


def jordan_totient(k: int, n: int) -> int:
    """Jordan totient J_k(n) = sum over d | n of mu(n/d) * d**k.

    J_1 is Euler's phi.  For k == 0 the Moebius sum collapses to
    J_0(1) = 1 and J_0(n) = 0 for n > 1; several epimorphism formulas rely
    on exactly that degenerate behaviour when their exponent vanishes.
    """
    if n < 1:
        raise ValueError(f"jordan_totient expects n >= 1, got {n}")
    if k < 0:
        raise ValueError(f"jordan_totient expects k >= 0, got {k}")
    if k == 0:
        return 1 if n == 1 else 0
    # Multiplicative product form: n^k * prod over p|n of (1 - p^-k).
    result = n**k
    for p, _ in factorize(n):
        result -= result // p**k
    return result


def lcm_list(values) -> int:
    """Least common multiple of an iterable of positive ints (1 if empty)."""
    result = 1
    for v in values:
        if v < 1:
            raise ValueError(f"lcm_list expects positive ints, got {v}")
        result = result * v // gcd(result, v)
    return result
