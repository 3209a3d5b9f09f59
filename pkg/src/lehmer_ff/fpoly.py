"""Polynomials over F_q: arithmetic, gcd, factorization, enumeration.

A polynomial is a tuple of field-element encodings, lowest degree first,
with no trailing zeros (the zero polynomial is the empty tuple and has
degree ``NEG_INF``).  Polynomials are totally ordered by their integer
encoding sum(enc(c_i) * q^i); that single order is reused for the
irreducible sieve, factor lists, and enumeration streams.

Factoring is trial division against the sieve of monic irreducibles of
degree <= deg/2, with linear factors peeled first by a root scan.  This
is exact and deterministic at the desk scale this package targets
(degrees ~20, q <= 2^16; sweeps use q <= 9).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    CannotFactorZero,
    DivisionByZero,
    FieldMismatch,
    InvalidInput,
    InvalidModulus,
    ParseError,
    UndefinedGcd,
)
from .ffield import FieldElement, FieldSpec
from .intmath import divisors, mobius

NEG_INF = float("-inf")

CV = tuple  # coefficient-value tuple alias used in signatures below


# ---------------------------------------------------------------------------
# value-level helpers (int-encoded coefficient tuples/lists)


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _add_cv(spec: FieldSpec, a, b):
    add = spec.add
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = add(out[i], v)
    return tuple(_trim(out))


def _sub_cv(spec: FieldSpec, a, b):
    sub, neg = spec.sub, spec.neg
    out = list(a) + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = sub(out[i], v)
    return tuple(_trim(out))


def _mul_cv(spec: FieldSpec, a, b):
    if not a or not b:
        return ()
    add, mul = spec.add, spec.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return tuple(out)


def _divmod_cv(spec: FieldSpec, num, den):
    if not den:
        raise DivisionByZero("polynomial division by zero")
    dd = len(den) - 1
    if len(num) <= dd:
        return (), tuple(num)
    mul, sub, inv = spec.mul, spec.sub, spec.inv
    lead_inv = inv(den[-1])
    rem = list(num)
    quo = [0] * (len(num) - dd)
    for i in range(len(num) - 1 - dd, -1, -1):
        c = rem[i + dd]
        if c:
            c = mul(c, lead_inv)
            quo[i] = c
            for j in range(dd):
                dj = den[j]
                if dj:
                    rem[i + j] = sub(rem[i + j], mul(c, dj))
            rem[i + dd] = 0
    del rem[dd:]
    return tuple(_trim(quo)), tuple(_trim(rem))


def _monic_cv(spec: FieldSpec, cv):
    if not cv or cv[-1] == 1:
        return tuple(cv)
    mul = spec.mul
    li = spec.inv(cv[-1])
    return tuple(mul(c, li) for c in cv)


def _gcd_cv(spec: FieldSpec, a, b):
    while b:
        a, b = b, _divmod_cv(spec, a, b)[1]
    return _monic_cv(spec, a)


def _eval_cv(spec: FieldSpec, cv, x: int) -> int:
    add, mul = spec.add, spec.mul
    acc = 0
    for c in reversed(cv):
        acc = add(mul(acc, x), c)
    return acc


def _powmod_cv(spec: FieldSpec, g, e: int, f):
    _, g = _divmod_cv(spec, g, f)
    result = (1,)
    while e:
        if e & 1:
            result = _divmod_cv(spec, _mul_cv(spec, result, g), f)[1]
        e >>= 1
        if e:
            g = _divmod_cv(spec, _mul_cv(spec, g, g), f)[1]
    return result


def _encode_cv(spec: FieldSpec, cv) -> int:
    enc = 0
    for c in reversed(cv):
        enc = enc * spec.q + c
    return enc


def _decode_cv(q: int, code: int):
    out = []
    while code:
        code, r = divmod(code, q)
        out.append(r)
    return tuple(out)


# ---------------------------------------------------------------------------


class Poly:
    """A polynomial over a fixed F_q in canonical (trimmed) form."""

    __slots__ = ("spec", "cv")

    def __init__(self, spec: FieldSpec, coeffs: Sequence = ()):
        vals: list[int] = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.spec is not spec and c.spec != spec:
                    raise FieldMismatch("coefficient from a different field")
                vals.append(c.val)
            elif isinstance(c, int):
                vals.append(c % spec.q if spec.k == 1 else c)
            else:
                raise InvalidInput(f"bad coefficient {c!r}")
        for v in vals:
            if not 0 <= v < spec.q:
                raise InvalidInput(f"coefficient encoding {v} out of range")
        self.spec = spec
        self.cv = tuple(_trim(vals))

    @classmethod
    def _raw(cls, spec: FieldSpec, cv) -> "Poly":
        obj = object.__new__(cls)
        obj.spec = spec
        obj.cv = cv
        return obj

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Poly":
        return cls._raw(spec, ())

    @classmethod
    def one(cls, spec: FieldSpec) -> "Poly":
        return cls._raw(spec, (1,))

    @classmethod
    def x(cls, spec: FieldSpec) -> "Poly":
        return cls._raw(spec, (0, 1))

    @classmethod
    def parse(cls, spec: FieldSpec, text: str) -> "Poly":
        return parse_poly(spec, text)

    # -- structure -----------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or NEG_INF for the zero polynomial."""
        return len(self.cv) - 1 if self.cv else NEG_INF

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.spec, v) for v in self.cv)

    @property
    def leading_coeff(self) -> FieldElement:
        if not self.cv:
            return FieldElement(self.spec, 0)
        return FieldElement(self.spec, self.cv[-1])

    def is_zero(self) -> bool:
        return not self.cv

    def is_monic(self) -> bool:
        return bool(self.cv) and self.cv[-1] == 1

    def monic(self) -> "Poly":
        return Poly._raw(self.spec, _monic_cv(self.spec, self.cv))

    def encoding(self) -> int:
        return _encode_cv(self.spec, self.cv)

    def sort_key(self) -> tuple[int, int]:
        return (len(self.cv), self.encoding())

    def __call__(self, x) -> FieldElement:
        xv = x.val if isinstance(x, FieldElement) else x % self.spec.q
        return FieldElement(self.spec, _eval_cv(self.spec, self.cv, xv))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            raise InvalidInput(f"expected a polynomial, got {other!r}")
        if other.spec is not self.spec and other.spec != self.spec:
            raise FieldMismatch("polynomials over different fields")
        return other

    def __add__(self, other: "Poly") -> "Poly":
        other = self._check(other)
        return Poly._raw(self.spec, _add_cv(self.spec, self.cv, other.cv))

    def __sub__(self, other: "Poly") -> "Poly":
        other = self._check(other)
        return Poly._raw(self.spec, _sub_cv(self.spec, self.cv, other.cv))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatch("scalar from a different field")
            mul = self.spec.mul
            return Poly._raw(self.spec, tuple(_trim([mul(c, other.val) for c in self.cv])))
        other = self._check(other)
        return Poly._raw(self.spec, _mul_cv(self.spec, self.cv, other.cv))

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self.__mul__(other)
        return NotImplemented

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        other = self._check(other)
        q, r = _divmod_cv(self.spec, self.cv, other.cv)
        return Poly._raw(self.spec, q), Poly._raw(self.spec, r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and (self.spec is other.spec or self.spec == other.spec)
            and self.cv == other.cv
        )

    def __hash__(self) -> int:
        return hash((self.spec.p, self.spec.k, self.cv))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"<{format_poly(self)} over F_{self.spec.q}>"


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity) in canonical order.

    Factors are monic irreducibles, pairwise distinct, sorted by
    (degree, encoding); the unit is the leading coefficient of the
    input.
    """

    unit: FieldElement
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        spec = self.unit.spec
        out = Poly.one(spec) * self.unit
        for f, m in self.factors:
            for _ in range(m):
                out = out * f
        return out

    @property
    def distinct_count(self) -> int:
        return len(self.factors)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.factors)

    def is_squarefree(self) -> bool:
        return all(m == 1 for _, m in self.factors)


# ---------------------------------------------------------------------------
# operations


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(f, 0) is the monic normalization of f."""
    if f.spec is not g.spec and f.spec != g.spec:
        raise FieldMismatch("polynomials over different fields")
    if f.is_zero() and g.is_zero():
        raise UndefinedGcd("gcd(0, 0) is undefined")
    return Poly._raw(f.spec, _gcd_cv(f.spec, f.cv, g.cv))


def poly_powmod(g: Poly, e: int, f: Poly) -> Poly:
    """g^e mod f by square-and-multiply (e may be huge)."""
    if f.spec is not g.spec and f.spec != g.spec:
        raise FieldMismatch("polynomials over different fields")
    if len(f.cv) < 2:
        raise InvalidModulus("modulus must have degree >= 1")
    if e < 0:
        raise InvalidInput("exponent must be nonnegative")
    return Poly._raw(g.spec, _powmod_cv(g.spec, g.cv, e, f.cv))


def is_irreducible(f: Poly) -> bool:
    """Trial division against all monic irreducibles of degree <= deg/2."""
    deg = len(f.cv) - 1
    if deg < 1:
        raise InvalidInput("irreducibility is defined for degree >= 1")
    spec = f.spec
    cv = f.cv
    for r in range(spec.q):
        if deg == 1:
            break
        if _eval_cv(spec, cv, r) == 0:
            return False
    for d in range(2, deg // 2 + 1):
        for pcv in _irreducible_cvs(spec, d):
            if not _divmod_cv(spec, cv, pcv)[1]:
                return False
    return True


_IRR_CACHE: dict[tuple[int, int, int], tuple] = {}


def _irreducible_cvs(spec: FieldSpec, d: int) -> tuple:
    """Sorted coefficient tuples of all monic irreducibles of degree d."""
    key = (spec.p, spec.k, d)
    cached = _IRR_CACHE.get(key)
    if cached is not None:
        return cached
    q = spec.q
    if d == 1:
        result = tuple((c, 1) for c in range(q))
    else:
        qd = q**d
        composite = bytearray(qd)
        for d1 in range(1, d // 2 + 1):
            cof = q ** (d - d1)
            for pcv in _irreducible_cvs(spec, d1):
                for gcode in range(cof):
                    gcv = _decode_monic(q, gcode, d - d1)
                    prod = _mul_cv(spec, pcv, gcv)
                    composite[_encode_cv(spec, prod) - qd] = 1
        result = tuple(
            _decode_monic(q, m, d) for m in range(qd) if not composite[m]
        )
    _IRR_CACHE[key] = result
    return result


def _decode_monic(q: int, code: int, degree: int):
    out = []
    for _ in range(degree):
        code, r = divmod(code, q)
        out.append(r)
    out.append(1)
    return tuple(out)


def irreducibles(spec: FieldSpec, d: int) -> list[Poly]:
    """All monic irreducibles of degree d, sorted by encoding."""
    if d < 1:
        raise InvalidInput("degree must be >= 1")
    return [Poly._raw(spec, cv) for cv in _irreducible_cvs(spec, d)]


def irreducible_count(q: int, d: int) -> int:
    """Number of monic irreducibles of degree d over F_q (necklace count)."""
    if q < 2 or d < 1:
        raise InvalidInput("need q >= 2 and d >= 1")
    total = sum(mobius(d // e) * q**e for e in divisors(d))
    if total % d:
        raise InvalidInput(f"necklace sum not divisible by {d}")  # pragma: no cover
    return total // d


def factor(f: Poly) -> Factorization:
    """Canonical factorization unit * prod(p_i^{r_i})."""
    if f.is_zero():
        raise CannotFactorZero("cannot factor the zero polynomial")
    spec = f.spec
    unit = FieldElement(spec, f.cv[-1])
    parts = _factor_cv(spec, f.cv)
    return Factorization(
        unit=unit,
        factors=tuple((Poly._raw(spec, cv), m) for cv, m in parts),
    )


def _factor_cv(spec: FieldSpec, cv) -> list[tuple[tuple, int]]:
    """Factor a nonzero cv into sorted (monic irreducible cv, multiplicity)."""
    q = spec.q
    add, mul, neg = spec.add, spec.mul, spec.neg
    work = list(_monic_cv(spec, cv))
    out = []
    # linear factors: root scan + synthetic division
    for r in range(q):
        m = 0
        while len(work) > 1:
            acc = 0
            for c in reversed(work):
                acc = add(mul(acc, r), c)
            if acc:
                break
            n = len(work) - 1
            quo = [0] * n
            quo[n - 1] = work[n]
            for i in range(n - 1, 0, -1):
                quo[i - 1] = add(work[i], mul(r, quo[i]))
            work = quo
            m += 1
        if m:
            out.append(((neg(r), 1), m))
    # higher-degree factors: trial division against the sieve
    d = 2
    while 2 * d <= len(work) - 1:
        for pcv in _irreducible_cvs(spec, d):
            while True:
                quo, rem = _divmod_cv(spec, tuple(work), pcv)
                if rem:
                    break
                work = list(quo)
                for i, (known, m) in enumerate(out):
                    if known == pcv:
                        out[i] = (known, m + 1)
                        break
                else:
                    out.append((pcv, 1))
            if 2 * d > len(work) - 1:
                break
        d += 1
    if len(work) > 1:
        out.append((tuple(work), 1))
    out.sort(key=lambda fm: (len(fm[0]), _encode_cv(spec, fm[0])))
    return out


def enumerate_polys(
    spec: FieldSpec,
    n: int,
    monic_only: bool = True,
    part: tuple[int, int] | None = None,
) -> Iterator[Poly]:
    """Every polynomial of exact degree n, in encoding order.

    With ``part=(i, m)`` only the i-th of m contiguous encoding blocks is
    emitted, so independent workers can split a sweep and a sorted merge
    of all blocks reproduces the full stream.
    """
    if n < 0:
        raise InvalidInput("degree must be >= 0")
    lo, hi = _code_span(spec.q, n, monic_only)
    if part is not None:
        i, m = part
        if not (m >= 1 and 0 <= i < m):
            raise InvalidInput(f"bad stream part {part!r}")
        width = hi - lo
        lo, hi = lo + width * i // m, lo + width * (i + 1) // m
    q = spec.q
    for code in range(lo, hi):
        yield Poly._raw(spec, _decode_cv(q, code))


def _code_span(q: int, n: int, monic_only: bool) -> tuple[int, int]:
    if n == 0:
        return (1, 2) if monic_only else (1, q)
    qn = q**n
    return (qn, 2 * qn) if monic_only else (qn, qn * q)


# ---------------------------------------------------------------------------
# text grammar: terms "c*x^e", "x^e", "x", "c" joined by "+"


def format_poly(f: Poly) -> str:
    if not f.cv:
        return "0"
    from .ffield import _element_str

    parts = []
    for e in range(len(f.cv) - 1, -1, -1):
        v = f.cv[e]
        if v == 0:
            continue
        ctext = _element_str(f.spec, v)
        if e == 0:
            parts.append(ctext)
            continue
        var = "x" if e == 1 else f"x^{e}"
        if v == 1:
            parts.append(var)
        else:
            if "+" in ctext or "-" in ctext:
                ctext = f"({ctext})"
            parts.append(f"{ctext}*{var}")
    return "+".join(parts)


def parse_poly(spec: FieldSpec, text: str) -> Poly:
    """Parse the term grammar; accepts any term order and round-trips."""
    from .ffield import _element_parse

    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial text")
    coeffs: dict[int, int] = {}
    for sign, term in _split_terms(s):
        ctext, e = _split_term(term)
        val = _element_parse(spec, ctext)
        if sign < 0:
            val = spec.neg(val)
        coeffs[e] = spec.add(coeffs.get(e, 0), val)
    if not coeffs:
        raise ParseError(f"no terms in {text!r}")
    out = [0] * (max(coeffs) + 1)
    for e, v in coeffs.items():
        out[e] = v
    return Poly._raw(spec, tuple(_trim(out)))


def _split_terms(s: str) -> list[tuple[int, str]]:
    terms = []
    depth = 0
    sign, start = 1, 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        start = 1
    cur = start
    for i in range(start, len(s)):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {s!r}")
        elif ch in "+-" and depth == 0:
            terms.append((sign, s[cur:i]))
            sign = -1 if ch == "-" else 1
            cur = i + 1
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {s!r}")
    terms.append((sign, s[cur:]))
    return terms


def _split_term(term: str) -> tuple[str, int]:
    if not term:
        raise ParseError("empty term")
    if "x" not in term:
        ctext = term
        e = 0
    elif term == "x":
        ctext, e = "1", 1
    elif term.startswith("x^"):
        ctext, e = "1", _parse_exp(term[2:])
    else:
        idx = term.rfind("*x")
        if idx < 0:
            raise ParseError(f"bad term {term!r}")
        ctext = term[:idx]
        rest = term[idx + 1:]
        if rest == "x":
            e = 1
        elif rest.startswith("x^"):
            e = _parse_exp(rest[2:])
        else:
            raise ParseError(f"bad term {term!r}")
    if ctext.startswith("(") and ctext.endswith(")"):
        ctext = ctext[1:-1]
    if not ctext:
        raise ParseError(f"bad term {term!r}")
    return ctext, e


def _parse_exp(s: str) -> int:
    if not s.isdigit():
        raise ParseError(f"bad exponent {s!r}")
    return int(s)
