"""Integer-side cyclotomic machinery and primitive prime divisors.

The n-th cyclotomic polynomial is computed by exact division,

    Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x),

never through complex roots, and the same recurrence evaluates Phi_n(a)
as an integer for |a| >= 2 (for |a| <= 1 the coefficient form is used,
since x^n - 1 may vanish there).  Values are memoized.

A prime p | a^n - b^n is *primitive* when p divides no a^k - b^k with
1 <= k < n.  ``zsigmondy`` factors a^n - b^n (deterministic trial
division within a budget) and classifies each prime straight from that
definition.  ``primitive_part`` computes the product of primitive prime
powers without factoring anything: the only prime that can divide both
n and the homogeneous value Phi_n(a, b) is the largest prime factor of
n, and stripping it leaves exactly the primitive part.  The two routes
are cross-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    FactoringBudgetExceeded,
    InvalidInput,
    VerificationError,
)
from .intmath import divisors, factorize, largest_prime_factor, valuation

DEFAULT_FACTORING_BUDGET = 1 << 64

EXCEPTION_N6 = "N6"
EXCEPTION_POWER_OF_TWO_SUM = "POWER_OF_TWO_SUM"


@dataclass(frozen=True)
class IntPoly:
    """A polynomial with integer coefficients, lowest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(other.coeffs):
                    out[i + j] += ai * bj
        return IntPoly(tuple(out))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(sign + body)
        return "".join(parts)


def _intpoly_div_exact(num: list[int], den: tuple[int, ...]) -> tuple[int, ...]:
    """Exact division of integer polynomials (remainder must vanish)."""
    dd = len(den) - 1
    quo = [0] * (len(num) - dd)
    rem = list(num)
    for i in range(len(num) - 1 - dd, -1, -1):
        c = rem[i + dd]
        if c:
            if c % den[-1]:
                raise VerificationError("non-exact cyclotomic division")
            c //= den[-1]
            quo[i] = c
            for j in range(dd + 1):
                rem[i + j] -= c * den[j]
    if any(rem):
        raise VerificationError("non-exact cyclotomic division")
    return tuple(quo)


_CYCLO_POLY: dict[int, IntPoly] = {}


def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial with exact integer coefficients."""
    if n < 1:
        raise InvalidInput("cyclotomic index must be >= 1")
    cached = _CYCLO_POLY.get(n)
    if cached is not None:
        return cached
    for d in sorted(divisors(n)):
        if d in _CYCLO_POLY:
            continue
        if d == 1:
            _CYCLO_POLY[1] = IntPoly((-1, 1))
            continue
        den = IntPoly((1,))
        for e in divisors(d):
            if e < d:
                den = den * _CYCLO_POLY[e]
        xn_minus_1 = [0] * (d + 1)
        xn_minus_1[0] = -1
        xn_minus_1[d] = 1
        _CYCLO_POLY[d] = IntPoly(_intpoly_div_exact(xn_minus_1, den.coeffs))
    return _CYCLO_POLY[n]


_CYCLO_VALUE: dict[tuple[int, int], int] = {}


def cyclotomic_eval(n: int, a: int) -> int:
    """Phi_n(a) as an exact integer."""
    if n < 1:
        raise InvalidInput("cyclotomic index must be >= 1")
    if -1 <= a <= 1:
        return cyclotomic(n)(a)
    key = (n, a)
    cached = _CYCLO_VALUE.get(key)
    if cached is not None:
        return cached
    for d in sorted(divisors(n)):
        if (d, a) in _CYCLO_VALUE:
            continue
        denom = 1
        for e in divisors(d):
            if e < d:
                denom *= _CYCLO_VALUE[(e, a)]
        num = a**d - 1
        if num % denom:
            raise VerificationError("non-exact cyclotomic value division")
        _CYCLO_VALUE[(d, a)] = num // denom
    return _CYCLO_VALUE[key]


def cyclotomic_eval_pair(n: int, a: int, b: int) -> int:
    """Homogeneous value b^phi(n) * Phi_n(a/b) for coprime a > b >= 1."""
    if n < 1:
        raise InvalidInput("cyclotomic index must be >= 1")
    if b == 1:
        return cyclotomic_eval(n, a)
    if not (a > b >= 1 and gcd(a, b) == 1):
        raise InvalidInput("need coprime a > b >= 1")
    denom = 1
    for d in divisors(n):
        if d < n:
            denom *= cyclotomic_eval_pair(d, a, b)
    num = a**n - b**n
    if num % denom:
        raise VerificationError("non-exact homogeneous cyclotomic division")
    return num // denom


def ord_p(p: int, m: int) -> int:
    """Normalized p-adic valuation of a nonzero integer."""
    return valuation(p, m)


def primitive_part(a: int, b: int, n: int) -> int:
    """Product of primitive prime powers in a^n - b^n, without factoring.

    Strips the (unique possible) shared prime of n and Phi_n(a, b) -- the
    largest prime factor of n -- from the homogeneous cyclotomic value.
    """
    _check_zsigmondy_args(a, b, n)
    value = cyclotomic_eval_pair(n, a, b)
    p0 = largest_prime_factor(n)
    while value % p0 == 0:
        value //= p0
    return value


def has_primitive_divisor(a: int, b: int, n: int) -> bool:
    return primitive_part(a, b, n) > 1


@dataclass(frozen=True)
class ZsigmondyResult:
    a: int
    b: int
    n: int
    primitive_primes: tuple[int, ...]
    exception: str | None  # EXCEPTION_N6 | EXCEPTION_POWER_OF_TWO_SUM
    primitive_part: int

    def as_record(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "n": self.n,
            "primitive_primes": [str(p) for p in self.primitive_primes],
            "exception": self.exception,
            "primitive_part": str(self.primitive_part),
        }


def _check_zsigmondy_args(a: int, b: int, n: int) -> None:
    if not (isinstance(a, int) and isinstance(b, int) and isinstance(n, int)):
        raise InvalidInput("a, b, n must be integers")
    if not a > b > 0:
        raise InvalidInput("need a > b > 0")
    if gcd(a, b) != 1:
        raise InvalidInput("a and b must be coprime")
    if n < 2:
        raise InvalidInput("need n >= 2")


def zsigmondy(
    a: int, b: int, n: int, factoring_budget: int = DEFAULT_FACTORING_BUDGET
) -> ZsigmondyResult:
    """Classify the prime divisors of a^n - b^n as primitive or algebraic.

    a^n - b^n is fully factored (trial division, piece by piece along its
    cyclotomic decomposition); each prime p is primitive exactly when the
    smallest k with p | a^k - b^k is n itself.
    """
    _check_zsigmondy_args(a, b, n)
    value = a**n - b**n
    if value > factoring_budget:
        raise FactoringBudgetExceeded(
            f"{a}^{n} - {b}^{n} exceeds the factoring budget {factoring_budget}"
        )
    exponents: dict[int, int] = {}
    for d in divisors(n):
        for p, e in factorize(cyclotomic_eval_pair(d, a, b)).items():
            exponents[p] = exponents.get(p, 0) + e
    primitive = []
    part = 1
    for p in sorted(exponents):
        if _first_dividing_index(a, b, p, n) == n:
            primitive.append(p)
            part *= p ** exponents[p]
    exception = None
    if (a, b, n) == (2, 1, 6):
        exception = EXCEPTION_N6
    elif n == 2 and (a + b) & (a + b - 1) == 0:
        exception = EXCEPTION_POWER_OF_TWO_SUM
    if bool(primitive) == (exception is not None):
        raise VerificationError(
            f"primitive classification inconsistent for ({a}, {b}, {n})"
        )
    return ZsigmondyResult(
        a=a,
        b=b,
        n=n,
        primitive_primes=tuple(primitive),
        exception=exception,
        primitive_part=part,
    )


def _first_dividing_index(a: int, b: int, p: int, n: int) -> int:
    for k in range(1, n + 1):
        if (pow(a, k, p) - pow(b, k, p)) % p == 0:
            return k
    raise VerificationError(f"{p} does not divide {a}^{n} - {b}^{n}")  # pragma: no cover
