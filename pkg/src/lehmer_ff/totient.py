"""The Euler totient over F_q[x] and exhaustive Lehmer-set sweeps.

For f with factorization unit * prod(p_i^{r_i}), deg(p_i) = n_i, the
totient counts the residues coprime to f:

    phi(q, f) = prod_i q^(n_i * (r_i - 1)) * (q^(n_i) - 1)

which is also q^n * prod_i (1 - q^(-n_i)).  The zero residue is never
coprime (gcd(f, 0) = monic(f) != 1), so it does not count.

``lehmer_set`` enumerates every monic f up to a degree bound and keeps
the reducible ones whose totient divides q^deg(f) - 1.  The sweep is the
brute-force side of the classification; known structural facts about
the hits (squarefreeness, factor-degree divisibility, a lower bound on
the number of distinct factors) are asserted on the result as a guard.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import InvalidInput, OracleOverflow, VerificationError
from .ffield import FieldElement, FieldSpec, field_make
from .fpoly import (
    Factorization,
    Poly,
    _code_span,
    _decode_cv,
    _factor_cv,
    _gcd_cv,
    factor,
)

ORACLE_CAP = 1 << 24


def totient(f: Poly) -> int:
    """phi(q, f) computed from the factorization of f."""
    if len(f.cv) < 2:
        raise InvalidInput("totient requires degree >= 1")
    return _phi_from_parts(f.spec.q, _factor_cv(f.spec, f.cv))


def _phi_from_parts(q: int, parts) -> int:
    phi = 1
    for cv, m in parts:
        d = len(cv) - 1
        phi *= (q**d - 1) * q ** (d * (m - 1))
    return phi


def totient_bruteforce(f: Poly) -> int:
    """Count residues g, deg(g) < deg(f), with gcd(f, g) = 1, directly.

    Exponential by design; the independent oracle for :func:`totient`.
    """
    if len(f.cv) < 2:
        raise InvalidInput("totient requires degree >= 1")
    spec = f.spec
    n = len(f.cv) - 1
    q = spec.q
    if q**n > ORACLE_CAP:
        raise OracleOverflow(f"q^deg = {q}^{n} exceeds the oracle cap {ORACLE_CAP}")
    fcv = f.cv
    count = 0
    for code in range(1, q**n):
        if _gcd_cv(spec, fcv, _decode_cv(q, code)) == (1,):
            count += 1
    return count


@dataclass(frozen=True)
class TotientReport:
    """Everything the divisibility test knows about one polynomial."""

    f: Poly
    phi: int
    modulus_value: int  # q^deg(f) - 1
    divides: bool
    reducible: bool
    factorization: Factorization

    def as_record(self) -> dict:
        """Flat record for JSON/CSV serialization."""
        return {
            "q": self.f.spec.q,
            "degree": len(self.f.cv) - 1,
            "poly": str(self.f),
            "phi": str(self.phi),
            "modulus_value": str(self.modulus_value),
            "divides": self.divides,
            "reducible": self.reducible,
            "factors": [[str(p), m] for p, m in self.factorization.factors],
        }


def totient_report(f: Poly) -> TotientReport:
    if len(f.cv) < 2:
        raise InvalidInput("totient requires degree >= 1")
    fac = factor(f)
    q = f.spec.q
    n = len(f.cv) - 1
    phi = _phi_from_parts(q, [(p.cv, m) for p, m in fac.factors])
    modulus_value = q**n - 1
    return TotientReport(
        f=f,
        phi=phi,
        modulus_value=modulus_value,
        divides=modulus_value % phi == 0,
        reducible=fac.total_multiplicity >= 2,
        factorization=fac,
    )


def is_lehmer(f: Poly) -> tuple[bool, bool, TotientReport]:
    """(phi divides q^n - 1, additionally reducible, full report)."""
    report = totient_report(f)
    in_script_l = report.divides
    return in_script_l, in_script_l and report.reducible, report


def lehmer_set(
    spec: FieldSpec,
    max_degree: int,
    expand_units: bool = False,
    workers: int = 1,
) -> list[Poly]:
    """All f with 1 <= deg(f) <= max_degree whose totient divides
    q^deg(f) - 1 and which are reducible.

    Monic representatives by default; with ``expand_units`` every monic
    hit is multiplied by every unit.  Sorted by (degree, encoding).
    """
    if max_degree < 1:
        raise InvalidInput("max_degree must be >= 1")
    if workers < 1:
        raise InvalidInput("workers must be >= 1")
    hits: list[Poly] = []
    for n in range(1, max_degree + 1):
        lo, hi = _code_span(spec.q, n, monic_only=True)
        for code in _scan_codes(spec, n, lo, hi, workers):
            hits.append(Poly._raw(spec, _decode_cv(spec.q, code)))
    _assert_structure(spec, hits)
    if expand_units:
        expanded = [f * u for f in hits for u in spec.units()]
        expanded.sort(key=Poly.sort_key)
        return expanded
    return hits


def _scan_codes(spec: FieldSpec, n: int, lo: int, hi: int, workers: int) -> list[int]:
    if workers == 1 or hi - lo < 4 * workers:
        return _sweep_block(spec.p, spec.k, n, lo, hi)
    bounds = [lo + (hi - lo) * i // workers for i in range(workers + 1)]
    args = [
        (spec.p, spec.k, n, bounds[i], bounds[i + 1]) for i in range(workers)
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = list(pool.map(_sweep_block_args, args))
    return [code for chunk in chunks for code in chunk]


def _sweep_block_args(args) -> list[int]:
    return _sweep_block(*args)


def _sweep_block(p: int, k: int, n: int, lo: int, hi: int) -> list[int]:
    """Hit encodings among monic degree-n polynomials in [lo, hi)."""
    spec = field_make(p, k)
    q = spec.q
    mod_value = q**n - 1
    hits = []
    for code in range(lo, hi):
        parts = _factor_cv(spec, _decode_cv(q, code))
        if len(parts) == 1 and parts[0][1] == 1:
            continue  # irreducible
        if mod_value % _phi_from_parts(q, parts) == 0:
            hits.append(code)
    return hits


def _assert_structure(spec: FieldSpec, hits: list[Poly]) -> None:
    """Structural facts every hit must satisfy; a failure is a bug."""
    min_factors = (spec.q + 1).bit_length() - 1  # floor(log2(q + 1))
    for f in hits:
        fac = factor(f)
        deg = len(f.cv) - 1
        if not fac.is_squarefree():
            raise VerificationError(f"non-squarefree hit {f}")
        if any((deg % (len(p.cv) - 1)) != 0 for p, _ in fac.factors):
            raise VerificationError(f"factor degree does not divide deg({f})")
        if fac.distinct_count < min_factors:
            raise VerificationError(
                f"{f} has {fac.distinct_count} factors, expected >= {min_factors}"
            )


def units(spec: FieldSpec) -> list[FieldElement]:
    """The nonzero constants of F_q."""
    return list(spec.units())
