"""Small integer number-theory helpers used across the package.

Everything here is exact integer arithmetic.  Factoring is deterministic
trial division; a Miller-Rabin primality test with a fixed base set (a
proven-deterministic witness set below 3.3e24) is used to stop trial
division early when the remaining cofactor is prime.
"""

from __future__ import annotations

from math import gcd, isqrt

from .errors import InvalidInput, UndefinedValuation

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
    67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137,
    139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
)

# Witnesses proving primality for every n < 3_317_044_064_679_887_385_961_981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality test for n below 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: e} of n >= 1 by trial division."""
    if n < 1:
        raise InvalidInput(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        if n == 1:
            return out
    # wheel over 6k +/- 1, restarting the primality shortcut after each hit
    while n > 1:
        if is_prime(n):
            out[n] = out.get(n, 0) + 1
            break
        f = _trial_factor(n)
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
    return out


def _trial_factor(n: int) -> int:
    # n composite with no factor <= 199; scan 6k +/- 1 candidates.
    c = 211
    step = 2  # alternates 2, 4 to skip multiples of 2 and 3
    lim = isqrt(n)
    while c <= lim:
        if n % c == 0:
            return c
        c += step
        step = 6 - step
    # unreachable for composite n, kept as a guard
    return n


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    if n < 1:
        raise InvalidInput(f"mobius undefined for {n}")
    mu = 1
    for _, e in factorize(n).items():
        if e > 1:
            return 0
        mu = -mu
    return mu


def euler_phi(n: int) -> int:
    phi = n
    for p in factorize(n):
        phi = phi // p * (p - 1)
    return phi


def sigma(n: int) -> int:
    """Sum of divisors of n >= 1."""
    s = 1
    for p, e in factorize(n).items():
        s *= (p ** (e + 1) - 1) // (p - 1)
    return s


def largest_prime_factor(n: int) -> int:
    if n < 2:
        raise InvalidInput(f"{n} has no prime factor")
    return max(factorize(n))


def valuation(p: int, m: int) -> int:
    """Largest v with p^v | m, for prime p and m != 0."""
    if m == 0:
        raise UndefinedValuation("valuation of 0 is undefined")
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def sigma_sieve(limit: int) -> list[int]:
    """sig[n] = sum of divisors of n, for 0 <= n <= limit (sig[0] = 0)."""
    sig = [0] * (limit + 1)
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            sig[m] += d
    return sig


def phi_sieve(limit: int) -> list[int]:
    """phi[n] for 0 <= n <= limit (phi[0] = 0)."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            for m in range(p, limit + 1, p):
                phi[m] -= phi[m] // p
    return phi


def ord2(n: int) -> int:
    """2-adic valuation of n >= 1 without the primality dance."""
    if n < 1:
        raise InvalidInput(f"ord2 undefined for {n}")
    return (n & -n).bit_length() - 1


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
