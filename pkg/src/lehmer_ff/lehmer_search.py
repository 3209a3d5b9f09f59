"""Partition-divisibility searches: when does prod(a^{e_i} - 1) divide a^n - 1?

A partition here is a multiset of positive degrees e_1 <= ... <= e_s
(s >= 2) summing to n; it abstracts the shape of a squarefree
factorization.  ``mersenne_divisibility`` is the arbitrary-precision
brute-force oracle; the classification searches enumerate partitions
exhaustively and filter with it.

``exponent_map`` expresses (x^n - 1) / prod(x^{e_i} - 1) as a product of
cyclotomic polynomials Phi_d with integer exponents

    exponent(d) = [d | n] - #{i : d | e_i},

so the quotient's structure (the positive-exponent divisors and the
denominator multiset) is available for inspection and for an exact
rational consistency check.

``candidate_degrees`` evaluates the logarithmic bound comparison that
narrows the a = 2 search: the coarse form uses the abundancy majorant
1.28 * n^(1/4) against c(n) * log2 * n^(3/4) - log(2n); the refined
form uses the exact abundancy h(n) against phi(n) * log2 - log(2n).
Comparisons run at >= 30 significant digits and any margin below 1e-6
raises PrecisionAlert rather than deciding silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath

from .cyclo import cyclotomic_eval
from .errors import InvalidInput, PrecisionAlert
from .intmath import divisors, euler_phi, ord2, sigma

PRECISION_GAP = Fraction(1, 10**6)
MIN_CANDIDATE_DPS = 30


@dataclass(frozen=True)
class Partition:
    """Nondecreasing positive parts e_1 <= ... <= e_s, s >= 2, summing to n."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) < 2:
            raise InvalidInput("a partition here needs at least two parts")
        if any(e < 1 for e in self.parts):
            raise InvalidInput("parts must be positive")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise InvalidInput("parts must be nondecreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def s(self) -> int:
        return len(self.parts)

    def multiplicity(self, d: int) -> int:
        return sum(1 for e in self.parts if e == d)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of n with s >= 2, in colex order (largest part last,
    ascending), so streams shard deterministically by largest part."""
    if n < 2:
        return
    top = n - 1 if max_part is None else min(max_part, n - 1)
    for last in range(1, top + 1):
        if last == n:
            continue
        for rest in _bounded_partitions(n - last, last):
            yield rest + (last,)


def _bounded_partitions(n: int, bound: int):
    if n == 0:
        yield ()
        return
    for last in range(1, min(n, bound) + 1):
        for rest in _bounded_partitions(n - last, last):
            yield rest + (last,)


def mersenne_divisibility(a: int, part: Partition) -> bool:
    """Exact test of prod(a^{e_i} - 1) | (a^n - 1)."""
    if a < 2:
        raise InvalidInput("base must be >= 2")
    prod = 1
    for e in part.parts:
        prod *= a**e - 1
    return (a ** part.n - 1) % prod == 0


def classify_a_ge_3(a_max: int, n_max: int) -> list[tuple[int, Partition]]:
    """Exhaustive sweep over a in [3, a_max] and all partitions of n <= n_max."""
    if a_max < 3 or n_max < 2:
        raise InvalidInput("need a_max >= 3 and n_max >= 2")
    out = []
    for a in range(3, a_max + 1):
        for n in range(2, n_max + 1):
            for parts in partitions_of(n):
                part = Partition(parts)
                if mersenne_divisibility(a, part):
                    out.append((a, part))
    return out


@dataclass(frozen=True)
class ExponentMap:
    """Cyclotomic exponents of (x^n - 1) / prod(x^{e_i} - 1)."""

    n: int
    part: Partition
    exponents: dict[int, int]

    @property
    def positive_divisors(self) -> set[int]:
        """Divisors d > 1 appearing with exponent +1 (the numerator set)."""
        return {d for d, e in self.exponents.items() if d > 1 and e > 0}

    @property
    def denominator_multiset(self) -> dict[int, int]:
        """d >= 2 with negative exponent, mapped to its multiplicity."""
        return {d: -e for d, e in self.exponents.items() if d >= 2 and e < 0}

    def value(self, a: int) -> Fraction:
        """Exact rational value of the quotient at x = a."""
        out = Fraction(1)
        for d, e in sorted(self.exponents.items()):
            if e:
                out *= Fraction(cyclotomic_eval(d, a)) ** e
        return out

    def as_record(self) -> dict:
        return {str(d): e for d, e in sorted(self.exponents.items())}


def exponent_map(n: int, part: Partition) -> ExponentMap:
    if part.n != n:
        raise InvalidInput(f"{part} does not partition {n}")
    relevant: set[int] = set(divisors(n))
    for e in part.parts:
        relevant.update(divisors(e))
    exps = {}
    for d in sorted(relevant):
        exps[d] = (1 if n % d == 0 else 0) - sum(1 for e in part.parts if e % d == 0)
    return ExponentMap(n=n, part=part, exponents=exps)


def abundancy(n: int) -> Fraction:
    """sigma(n)/n in lowest terms."""
    if n < 1:
        raise InvalidInput("abundancy needs n >= 1")
    return Fraction(sigma(n), n)


def c_factor(n: int) -> Fraction:
    """Piecewise constant used in the totient lower bound, by ord2(n)."""
    if n < 2:
        raise InvalidInput("c_factor needs n >= 2")
    v = ord2(n)
    if v == 1:
        return Fraction(59, 100)
    if v == 2:
        return Fraction(70, 100)
    if v == 3:
        return Fraction(84, 100)
    return Fraction(1)


def candidate_degrees(
    n_max: int, dps: int = 35
) -> tuple[set[int], set[int]]:
    """(coarse, refined) degree sets from the logarithmic bound comparison.

    coarse:  log4 + d(n)*log(4/3) - 1 - d(n)/2 - 1/n + 1.28*n^(1/4)
                 >  c(n)*log2*n^(3/4) - log(2n)
    refined: the left side with 1.28*n^(1/4) replaced by h(n), compared
             against phi(n)*log2 - log(2n)

    with d(n) = 1 for even n, else 0.  Raises PrecisionAlert if any
    comparison is decided by less than 1e-6.
    """
    if n_max < 7:
        raise InvalidInput("need n_max >= 7")
    if dps < MIN_CANDIDATE_DPS:
        raise InvalidInput(f"need at least {MIN_CANDIDATE_DPS} digits")
    coarse: set[int] = set()
    refined: set[int] = set()
    with mpmath.workdps(dps):
        log2 = mpmath.log(2)
        log4 = mpmath.log(4)
        log43 = mpmath.log(mpmath.mpf(4) / 3)
        gap = mpmath.mpf(PRECISION_GAP.numerator) / PRECISION_GAP.denominator
        for n in range(7, n_max + 1):
            delta = 1 if n % 2 == 0 else 0
            base = log4 + delta * log43 - 1 - mpmath.mpf(delta) / 2 - mpmath.mpf(1) / n
            log2n = mpmath.log(2 * n)
            lhs = base + mpmath.mpf(128) / 100 * mpmath.root(n, 4)
            c = c_factor(n)
            rhs = (
                mpmath.mpf(c.numerator) / c.denominator
                * log2
                * mpmath.power(n, mpmath.mpf(3) / 4)
                - log2n
            )
            diff = lhs - rhs
            if abs(diff) < gap:
                raise PrecisionAlert(f"coarse comparison marginal at n = {n}")
            if diff > 0:
                coarse.add(n)
            h = abundancy(n)
            lhs_r = base + mpmath.mpf(h.numerator) / h.denominator
            rhs_r = euler_phi(n) * log2 - log2n
            diff_r = lhs_r - rhs_r
            if abs(diff_r) < gap:
                raise PrecisionAlert(f"refined comparison marginal at n = {n}")
            if diff_r > 0:
                refined.add(n)
    return coarse, refined


def prop36_partition_allowed(part: Partition) -> bool:
    """Multiplicity caps: at most two 1-parts, and at most (2^d - 1)/d
    copies of any part d >= 2."""
    counts: dict[int, int] = {}
    for e in part.parts:
        counts[e] = counts.get(e, 0) + 1
    for d, u in counts.items():
        if d == 1:
            if u > 2:
                return False
        elif u * d > 2**d - 1:
            return False
    return True


def verify_prop36(n_max: int) -> list[tuple[int, Partition]]:
    """Partitions (base a = 2) passing the multiplicity caps and the
    divisibility oracle, for every n <= n_max."""
    if n_max < 2:
        raise InvalidInput("need n_max >= 2")
    out = []
    for n in range(2, n_max + 1):
        for parts in partitions_of(n):
            part = Partition(parts)
            if prop36_partition_allowed(part) and mersenne_divisibility(2, part):
                out.append((n, part))
    return out


def parts_gcd(part: Partition) -> int:
    g = 0
    for e in part.parts:
        g = gcd(g, e)
    return g
