"""Named verification suites with expected-vs-found reporting.

Each suite recomputes a classification or bound from scratch and diffs
it against the independently constructed expected answer, so a mismatch
is visible as data rather than a bare boolean.  Suites are deterministic
(fixed seeds, sorted merges) and safe to run twice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cyclo import cyclotomic_eval, ord_p, primitive_part, zsigmondy
from .errors import InvalidInput
from .ffield import FieldSpec, field_from_order
from .fpoly import Poly, enumerate_polys, factor, irreducibles, poly_gcd, poly_powmod
from .intmath import euler_phi, ord2, phi_sieve, sigma_sieve, valuation
from .lehmer_search import (
    Partition,
    abundancy,
    c_factor,
    candidate_degrees,
    classify_a_ge_3,
    exponent_map,
    mersenne_divisibility,
    parts_gcd,
    partitions_of,
    verify_prop36,
)
from .totient import is_lehmer, lehmer_set, totient, totient_bruteforce

SUITE_NAMES = (
    "main-theorem",
    "prop31",
    "prop36",
    "cyclo-lemmas",
    "bounds",
    "oracle",
)

# classification answers the sweeps must reproduce
COARSE_DEGREES = set(range(7, 23)) | {24, 26, 30, 34, 38, 42, 46, 50, 54}
REFINED_DEGREES = {8, 9, 10, 12, 14, 18, 20, 24, 30}
PROP31_SOLUTIONS = {(3, (1, 1)), (3, (1, 1, 1, 1))}
PROP36_SOLUTIONS = {(2, (1, 1)), (4, (1, 1, 2)), (6, (1, 2, 3))}

DEFAULT_SWEEP_DEGREE = {2: 12, 3: 8}
FALLBACK_SWEEP_DEGREE = 7


@dataclass
class Check:
    label: str
    ok: bool
    expected: object = None
    found: object = None

    def as_record(self) -> dict:
        rec: dict = {"label": self.label, "ok": self.ok}
        if not self.ok:
            rec["expected"] = _plain(self.expected)
            rec["found"] = _plain(self.found)
        return rec


def _plain(value):
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, Partition):
        return list(value.parts)
    if isinstance(value, Poly):
        return str(value)
    return value


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, label: str, ok: bool, expected=None, found=None) -> None:
        self.checks.append(Check(label, ok, expected, found))

    def add_diff(self, label: str, expected, found) -> None:
        self.checks.append(Check(label, expected == found, expected, found))

    def as_payload(self) -> dict:
        return {
            "schema": 1,
            "suite": self.suite,
            "ok": self.ok,
            "checks": [c.as_record() for c in self.checks],
        }


# ---------------------------------------------------------------------------
# expected classification sets, built from the structural description


def expected_lehmer_monic(spec: FieldSpec) -> set[Poly]:
    """The classified answer for monic reducible hits over F_q."""
    q = spec.q
    if q == 2:
        lin = irreducibles(spec, 1)
        quad = irreducibles(spec, 2)
        cubic = irreducibles(spec, 3)
        out = {lin[0] * lin[1]}
        out.add(lin[0] * lin[1] * quad[0])
        for a in lin:
            for b in quad:
                for c in cubic:
                    out.add(a * b * c)
        return out
    if q == 3:
        lin = irreducibles(spec, 1)
        return {
            lin[i] * lin[j] for i in range(len(lin)) for j in range(i + 1, len(lin))
        }
    return set()


def suite_main_theorem(
    q: int | None = None, max_degree: int | None = None, workers: int = 1
) -> SuiteReport:
    report = SuiteReport("main-theorem")
    orders = [q] if q is not None else [2, 3, 4, 5]
    for order in orders:
        spec = field_from_order(order)
        bound = max_degree or DEFAULT_SWEEP_DEGREE.get(order, FALLBACK_SWEEP_DEGREE)
        found = set(lehmer_set(spec, bound, workers=workers))
        expected = expected_lehmer_monic(spec)
        report.add_diff(
            f"q={order} monic sweep to degree {bound}",
            {str(f) for f in sorted(expected, key=Poly.sort_key)},
            {str(f) for f in sorted(found, key=Poly.sort_key)},
        )
        if order == 3:
            expanded = lehmer_set(spec, bound, expand_units=True, workers=workers)
            report.add(
                f"q={order} unit expansion yields {2 * len(expected)} polynomials",
                len(expanded) == 2 * len(expected),
                2 * len(expected),
                len(expanded),
            )
    return report


def suite_prop31(a_max: int = 8, n_max: int = 10) -> SuiteReport:
    report = SuiteReport("prop31")
    found = {(a, part.parts) for a, part in classify_a_ge_3(a_max, n_max)}
    expected = {
        (a, parts)
        for a, parts in PROP31_SOLUTIONS
        if a <= a_max and sum(parts) <= n_max
    }
    report.add_diff(
        f"divisibility classification for a in [3, {a_max}], n <= {n_max}",
        expected,
        found,
    )
    return report


def suite_prop36(n_max: int = 30) -> SuiteReport:
    report = SuiteReport("prop36")
    found = {(n, part.parts) for n, part in verify_prop36(n_max)}
    expected = {(n, parts) for n, parts in PROP36_SOLUTIONS if n <= n_max}
    report.add_diff(
        f"capped-multiplicity classification for base 2, n <= {n_max}", expected, found
    )
    return report


def suite_candidates(n_max: int = 200) -> SuiteReport:
    report = SuiteReport("candidates")
    coarse, refined = candidate_degrees(n_max)
    report.add_diff(
        f"coarse candidate degrees up to {n_max}",
        {n for n in COARSE_DEGREES if n <= n_max},
        coarse,
    )
    report.add_diff(
        f"refined candidate degrees up to {n_max}",
        {n for n in REFINED_DEGREES if n <= n_max},
        refined,
    )
    return report


# ---------------------------------------------------------------------------
# cyclotomic lemma suite


def suite_cyclo_lemmas() -> SuiteReport:
    report = SuiteReport("cyclo-lemmas")

    bad = [
        (n, a)
        for n in range(1, 201)
        for a in range(2, 11)
        if _divisor_product(n, a) != a**n - 1
    ]
    report.add("product over divisors rebuilds a^n - 1 (n <= 200)", not bad, [], bad)

    bad = _check_valuation_lift()
    report.add("valuation lift p^v (biconditional and orders)", not bad, [], bad)

    bad = _check_divisor_existence()
    report.add("p | value solvable iff cofactor divides p - 1", not bad, [], bad)

    bad = [
        (p, v, a)
        for p in (2, 3, 5)
        for v in range(0, 4)
        for a in range(1, 21)
        if (cyclotomic_eval(p**v, a) % p == 0) != ((a - 1) % p == 0)
    ]
    report.add("prime-power index divisibility iff p | a - 1", not bad, [], bad)

    bad = _check_value_gcds()
    report.add("pairwise value gcds are 1 or a single prime", not bad, [], bad)

    bad = [
        (m, a)
        for a in range(2, 11)
        for m in range(1, 101)
        if (abs(cyclotomic_eval(m, a)) == 1) != ((m, a) == (1, 2))
    ]
    report.add("unit values occur only at (index, base) = (1, 2)", not bad, [], bad)

    bad = [
        (n, a)
        for n in range(2, 101)
        for a in range(2, 11)
        if not (
            a ** euler_phi(n) <= 2 * cyclotomic_eval(n, a)
            and cyclotomic_eval(n, a) <= 2 * a ** euler_phi(n)
        )
    ]
    report.add("value sits within a factor 2 of a^phi(n)", not bad, [], bad)

    bad = []
    for n in range(7, 61):
        m = primitive_part(2, 1, n)
        phi2 = cyclotomic_eval(n, 2)
        if not (m * n >= phi2 and 2 * phi2 >= 2 ** euler_phi(n)):
            bad.append(n)
    report.add("primitive part >= value/n >= 2^phi(n)/(2n)", not bad, [], bad)

    return report


def _divisor_product(n: int, a: int) -> int:
    from .intmath import divisors

    prod = 1
    for d in divisors(n):
        prod *= cyclotomic_eval(d, a)
    return prod


def _check_valuation_lift() -> list:
    bad = []
    for p in (2, 3, 5):
        for m in range(1, 31):
            if m % p == 0:
                continue
            for v in range(1, 4):
                idx = m * p**v
                for a in range(2, 11):
                    lifted = cyclotomic_eval(idx, a) % p == 0
                    base = cyclotomic_eval(m, a) % p == 0
                    if lifted != base:
                        bad.append((p, m, v, a, "biconditional"))
                        continue
                    if not base:
                        continue
                    if idx > 2:
                        if ord_p(p, cyclotomic_eval(idx, a)) != 1:
                            bad.append((p, m, v, a, "order"))
                    else:  # idx == 2: p = 2, m = v = 1
                        if ord_p(2, cyclotomic_eval(2, a)) != valuation(2, a + 1):
                            bad.append((p, m, v, a, "order-2"))
    return bad


def _check_divisor_existence() -> list:
    bad = []
    for p in (3, 5, 7, 11, 13):
        for n in range(1, 61):
            v = valuation(p, n) if n % p == 0 else 0
            m = n // p**v
            exists = any(
                cyclotomic_eval(n, a) % p == 0 for a in range(1, p * p + 1)
            )
            if exists != ((p - 1) % m == 0):
                bad.append((p, n))
    return bad


def _check_value_gcds() -> list:
    from math import gcd as igcd

    from .intmath import is_prime

    bad = []
    for a in range(2, 9):
        values = {m: cyclotomic_eval(m, a) for m in range(1, 41)}
        for n in range(1, 41):
            for m in range(n + 1, 41):
                g = igcd(values[n], values[m])
                if g == 1:
                    continue
                if not is_prime(g):
                    bad.append((a, n, m, g, "not prime"))
                    continue
                ratio = m // n if m % n == 0 else 0
                while ratio and ratio % g == 0:
                    ratio //= g
                if ratio != 1:
                    bad.append((a, n, m, g, "index ratio"))
    return bad


# ---------------------------------------------------------------------------
# exact bound suite


def suite_bounds(limit: int = 100_000) -> SuiteReport:
    report = SuiteReport("bounds")
    sig = sigma_sieve(limit)
    # (sigma(n)/n)^4 < (32/25)^4 * n, cross-multiplied in integers
    bad_h = [
        n
        for n in range(1, limit + 1)
        if sig[n] ** 4 * 390625 >= 1048576 * n**5
    ]
    report.add(
        f"abundancy bound sigma(n)/n < 1.28*n^(1/4) for n <= {limit}",
        not bad_h,
        [],
        bad_h,
    )
    phi = phi_sieve(limit)
    c4 = {1: (59**4, 100**4), 2: (70**4, 100**4), 3: (84**4, 100**4)}
    bad_phi = []
    for n in range(2, limit + 1):
        num4, den4 = c4.get(ord2(n), (1, 1))
        if phi[n] ** 4 * den4 <= num4 * n**3:
            bad_phi.append(n)
    report.add(
        f"totient bound phi(n) > c(n)*n^(3/4) for 2 <= n <= {limit}",
        not bad_phi,
        [],
        bad_phi,
    )
    return report


# ---------------------------------------------------------------------------
# totient oracle suite

ORACLE_RANGES = ((2, 6), (3, 4), (4, 4))


def suite_oracle() -> SuiteReport:
    report = SuiteReport("oracle")
    for q, max_deg in ORACLE_RANGES:
        spec = field_from_order(q)
        bad = []
        checked = 0
        for n in range(1, max_deg + 1):
            for f in enumerate_polys(spec, n, monic_only=True):
                checked += 1
                if totient(f) != totient_bruteforce(f):
                    bad.append(str(f))
        report.add(
            f"q={q}: formula equals brute-force count on {checked} monic polys",
            not bad,
            [],
            bad,
        )
    return report


# ---------------------------------------------------------------------------
# property checks shared by tests and the CLI


def euler_theorem_violations(
    spec: FieldSpec, trials: int = 100, seed: int = 20260810
) -> list[str]:
    """Random coprime pairs (f, g): g^phi(f) must be 1 mod f."""
    rng = random.Random(seed * 1009 + spec.q)
    one = Poly.one(spec)
    bad = []
    done = 0
    while done < trials:
        f = _random_poly(rng, spec, rng.randint(1, 5))
        g = _random_poly(rng, spec, rng.randint(0, 6))
        if g.is_zero() or poly_gcd(f, g) != one:
            continue
        done += 1
        if poly_powmod(g, totient(f), f) != one:
            bad.append(f"f={f}, g={g}")
    return bad


def _random_poly(rng: random.Random, spec: FieldSpec, degree: int) -> Poly:
    cv = [rng.randrange(spec.q) for _ in range(degree)]
    cv.append(rng.randrange(1, spec.q))
    return Poly(spec, cv)


def exponent_map_violations(n_max: int = 20, bases=(2, 3, 4)) -> list[str]:
    """Exact rational quotient must match the cyclotomic exponent product,
    and integrality must match the divisibility oracle."""
    from fractions import Fraction

    bad = []
    for n in range(2, n_max + 1):
        for parts in partitions_of(n):
            part = Partition(parts)
            emap = exponent_map(n, part)
            for a in bases:
                denom = 1
                for e in parts:
                    denom *= a**e - 1
                direct = Fraction(a**n - 1, denom)
                if emap.value(a) != direct:
                    bad.append(f"value mismatch n={n} parts={parts} a={a}")
                if (direct.denominator == 1) != mersenne_divisibility(a, part):
                    bad.append(f"integrality mismatch n={n} parts={parts} a={a}")
    return bad


def divisibility_structure_violations(n_max: int = 24) -> list[str]:
    """For base 2, every partition passing the oracle must have all parts
    dividing n and overall gcd 1."""
    bad = []
    for n in range(2, n_max + 1):
        for parts in partitions_of(n):
            part = Partition(parts)
            if not mersenne_divisibility(2, part):
                continue
            if any(n % e for e in parts):
                bad.append(f"n={n} parts={parts}: part does not divide n")
            if parts_gcd(part) != 1:
                bad.append(f"n={n} parts={parts}: gcd != 1")
    return bad


def hit_structure_violations(spec: FieldSpec, hits: list[Poly]) -> list[str]:
    """Squarefreeness, factor-degree divisibility, and the distinct-factor
    lower bound floor(log2(q+1)), checked on a finished sweep."""
    min_factors = (spec.q + 1).bit_length() - 1
    bad = []
    for f in hits:
        fac = factor(f)
        deg = len(f.cv) - 1
        if not fac.is_squarefree():
            bad.append(f"{f}: not squarefree")
        if any(deg % (len(p.cv) - 1) for p, _ in fac.factors):
            bad.append(f"{f}: factor degree does not divide {deg}")
        if fac.distinct_count < min_factors:
            bad.append(f"{f}: only {fac.distinct_count} distinct factors")
    return bad


def unit_invariance_violations(spec: FieldSpec, max_degree: int = 3) -> list[str]:
    bad = []
    for n in range(1, max_degree + 1):
        for f in enumerate_polys(spec, n, monic_only=True):
            _, in_l, _ = is_lehmer(f)
            base_phi = totient(f)
            for u in spec.units():
                g = f * u
                _, in_l_u, _ = is_lehmer(g)
                if in_l_u != in_l or totient(g) != base_phi:
                    bad.append(f"{f} vs unit multiple {g}")
    return bad


def zsigmondy_exceptions(a_max: int = 12, n_max: int = 30) -> set[tuple[int, int]]:
    """(a, n) pairs with b = 1 and no primitive prime divisor."""
    return {
        (a, n)
        for a in range(2, a_max + 1)
        for n in range(2, n_max + 1)
        if primitive_part(a, 1, n) == 1
    }


def run_suite(name: str, **kwargs) -> SuiteReport:
    if name == "main-theorem":
        return suite_main_theorem(
            q=kwargs.get("q"),
            max_degree=kwargs.get("max_degree"),
            workers=kwargs.get("workers", 1),
        )
    if name == "prop31":
        return suite_prop31(
            a_max=kwargs.get("a_max") or 8, n_max=kwargs.get("n_max") or 10
        )
    if name == "prop36":
        return suite_prop36(n_max=kwargs.get("n_max") or 30)
    if name == "cyclo-lemmas":
        return suite_cyclo_lemmas()
    if name == "bounds":
        return suite_bounds(limit=kwargs.get("n_max") or 100_000)
    if name == "oracle":
        return suite_oracle()
    raise InvalidInput(f"unknown suite {name!r}")
