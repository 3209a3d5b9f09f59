"""Exact arithmetic in finite fields F_q with q = p^k.

Elements are stored as integer encodings in [0, q): the coefficient
vector (c_0, ..., c_{k-1}) of an element of F_p[t]/(modulus) encodes to
sum(c_i * p^i).  For k = 1 the encoding is the residue itself.  Fields
up to q <= 256 carry full operation tables, which is what every sweep in
this package uses; larger fields (up to the 2^16 cap) fall back to
arithmetic on coefficient vectors.

The modulus for k > 1 is canonical: the monic irreducible of degree k
over F_p whose integer encoding is smallest, so two runs (or machines)
always build the identical field.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidDegree,
    InvalidPrime,
    ParseError,
)
from .intmath import is_prime

MAX_Q = 1 << 16
_TABLE_MAX_Q = 256


# ---------------------------------------------------------------------------
# dense polynomials over F_p (plain int lists, lowest degree first),
# used only to construct extension fields


def _fp_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_rem(num: list[int], den: list[int], p: int) -> list[int]:
    rem = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    for i in range(len(rem) - 1 - dd, -1, -1):
        c = rem[i + dd]
        if c:
            c = c * inv_lead % p
            for j in range(dd):
                rem[i + j] = (rem[i + j] - c * den[j]) % p
            rem[i + dd] = 0
    return _fp_trim(rem)


def _fp_is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            den = _decode_base(code, p, d) + [1]
            if not _fp_rem(f, den, p):
                return False
    return True


def _decode_base(code: int, base: int, width: int) -> list[int]:
    digits = []
    for _ in range(width):
        code, r = divmod(code, base)
        digits.append(r)
    return digits


def _canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest-encoding monic irreducible of degree k over F_p."""
    for code in range(p**k):
        cand = _decode_base(code, p, k) + [1]
        if _fp_is_irreducible(cand, p):
            return tuple(cand)
    raise InvalidDegree(f"no irreducible of degree {k} over F_{p}")  # pragma: no cover


# ---------------------------------------------------------------------------


class FieldSpec:
    """An immutable description of F_q plus fast value-level operations.

    The value-level callables (``add``, ``sub``, ``mul``, ``neg``,
    ``inv``) act on integer encodings and are the workhorses of every
    polynomial routine.  Instances are interned by :func:`field_make`,
    are safe to share between threads/processes, and pickle by (p, k).
    """

    __slots__ = ("p", "k", "q", "modulus", "add", "sub", "mul", "neg", "inv",
                 "mul_table", "add_table", "sub_table")

    def __init__(self, p: int, k: int):
        q = p**k
        self.p = p
        self.k = k
        self.q = q
        self.modulus = _canonical_modulus(p, k) if k > 1 else None
        if q <= _TABLE_MAX_Q:
            self._build_tables()
        else:
            self._build_fallback()

    # -- construction ------------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        av = _decode_base(a, p, k)
        bv = _decode_base(b, p, k)
        prod = _fp_mul(av, bv, p)
        if len(prod) >= k:
            prod = _fp_rem(prod, list(self.modulus), p)
        enc = 0
        for c in reversed(prod):
            enc = enc * p + c
        return enc

    def _raw_add(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return (a + b) % p
        enc = 0
        mult = 1
        for _ in range(k):
            enc += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return enc

    def _raw_neg(self, a: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return -a % p
        enc = 0
        mult = 1
        for _ in range(k):
            enc += -a % p % p * mult
            a //= p
            mult *= p
        return enc

    def _build_tables(self) -> None:
        q = self.q
        add_t = [[self._raw_add(a, b) for b in range(q)] for a in range(q)]
        mul_t = [[self._raw_mul(a, b) for b in range(q)] for a in range(q)]
        neg_row = [self._raw_neg(a) for a in range(q)]
        sub_t = [[add_t[a][neg_row[b]] for b in range(q)] for a in range(q)]
        inv_row = [0] * q
        for a in range(1, q):
            inv_row[mul_t[a].index(1)] = a
        self.mul_table = mul_t
        self.add_table = add_t
        self.sub_table = sub_t
        self.add = lambda a, b, _t=add_t: _t[a][b]
        self.sub = lambda a, b, _t=sub_t: _t[a][b]
        self.mul = lambda a, b, _t=mul_t: _t[a][b]
        self.neg = lambda a, _t=neg_row: _t[a]
        self.inv = self._make_inv(inv_row)

    def _make_inv(self, inv_row: list[int]):
        def inv(a: int) -> int:
            if a == 0:
                raise DivisionByZero(f"inverse of 0 in F_{self.q}")
            return inv_row[a]

        return inv

    def _build_fallback(self) -> None:
        self.mul_table = None
        self.add_table = None
        self.sub_table = None
        self.add = self._raw_add
        self.mul = self._raw_mul
        self.neg = self._raw_neg
        self.sub = lambda a, b: self._raw_add(a, self._raw_neg(b))
        self.inv = self._fallback_inv

    def _fallback_inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.q}")
        if self.k == 1:
            return pow(a, -1, self.p)
        # a^(q-2) = a^(-1) in the multiplicative group
        result, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    # -- identity / pickling ------------------------------------------------

    def __reduce__(self):
        return (field_make, (self.p, self.k))

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, k={self.k}, q={self.q})"

    # -- element helpers -----------------------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def element(self, value) -> "FieldElement":
        """Coerce an encoding, coefficient sequence, text, or element."""
        if isinstance(value, FieldElement):
            if value.spec is not self and value.spec != self:
                raise FieldMismatch(f"{value!r} is not an element of {self!r}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.q if self.k == 1 else self._check_enc(value))
        if isinstance(value, str):
            return FieldElement(self, _element_parse(self, value))
        if isinstance(value, Sequence):
            return self.from_coeffs(value)
        raise ParseError(f"cannot build a field element from {value!r}")

    def _check_enc(self, value: int) -> int:
        if not 0 <= value < self.q:
            raise ParseError(f"encoding {value} out of range for {self!r}")
        return value

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        if len(coeffs) > self.k:
            raise ParseError(f"too many coefficients for {self!r}")
        enc = 0
        for c in reversed(list(coeffs)):
            enc = enc * self.p + c % self.p
        return FieldElement(self, enc)

    def elements(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, v) for v in range(self.q))

    def units(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, v) for v in range(1, self.q))


class FieldElement:
    """An element of a :class:`FieldSpec`, stored as its integer encoding."""

    __slots__ = ("spec", "val")

    def __init__(self, spec: FieldSpec, val: int):
        self.spec = spec
        self.val = val

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficients of 1, t, ..., t^(k-1), each in [0, p)."""
        return tuple(_decode_base(self.val, self.spec.p, self.spec.k))

    def is_zero(self) -> bool:
        return self.val == 0

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatch("elements of different fields")
            return other.val
        if isinstance(other, int):
            return other % self.spec.q if self.spec.k == 1 else other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(self.val, v))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.val, v))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.val))

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.val, self.spec.inv(v)))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = 1, self.val
        mul = self.spec.mul
        while e:
            if e & 1:
                result = mul(result, base)
            base = mul(base, base)
            e >>= 1
        return FieldElement(self.spec, result)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.val))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return (
                (self.spec is other.spec or self.spec == other.spec)
                and self.val == other.val
            )
        if isinstance(other, int) and self.spec.k == 1:
            return self.val == other % self.spec.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec.p, self.spec.k, self.val))

    def __str__(self) -> str:
        return _element_str(self.spec, self.val)

    def __repr__(self) -> str:
        return f"<{_element_str(self.spec, self.val)} in F_{self.spec.q}>"


# ---------------------------------------------------------------------------
# public constructors


def field_make(p: int, k: int = 1) -> FieldSpec:
    """Build (and intern) F_{p^k} with the canonical modulus."""
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    if not isinstance(k, int) or k < 1:
        raise InvalidDegree(f"extension degree must be >= 1, got {k}")
    if p**k > MAX_Q:
        raise InvalidDegree(f"q = {p}^{k} exceeds the supported cap {MAX_Q}")
    return _field_make_cached(p, k)


@lru_cache(maxsize=None)
def _field_make_cached(p: int, k: int) -> FieldSpec:
    return FieldSpec(p, k)


def field_from_order(q: int) -> FieldSpec:
    """Build F_q for a prime power q (convenience for CLI input)."""
    if not isinstance(q, int) or q < 2:
        raise InvalidPrime(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise InvalidPrime(f"{q} is not a prime power")
            return field_make(p, k)
    raise InvalidPrime(f"{q} is not a prime power")  # pragma: no cover


def field_inv(spec: FieldSpec, a: FieldElement) -> FieldElement:
    """Multiplicative inverse of a nonzero element."""
    return spec.element(a).inverse()


# ---------------------------------------------------------------------------
# text form: plain residue for prime fields, a polynomial in t otherwise


def _element_str(spec: FieldSpec, val: int) -> str:
    if spec.k == 1:
        return str(val)
    if val == 0:
        return "0"
    parts = []
    for e in range(spec.k - 1, -1, -1):
        c = val // spec.p**e % spec.p
        if c == 0:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            var = "t" if e == 1 else f"t^{e}"
            parts.append(var if c == 1 else f"{c}*{var}")
    return "+".join(parts)


def _element_parse(spec: FieldSpec, text: str) -> int:
    text = text.replace(" ", "")
    if not text:
        raise ParseError("empty field-element text")
    if spec.k == 1:
        try:
            return int(text) % spec.p
        except ValueError:
            raise ParseError(f"bad residue {text!r} for F_{spec.p}") from None
    digits = [0] * spec.k
    for term in text.split("+"):
        if not term:
            raise ParseError(f"bad element text {text!r}")
        coeff, _, var = term.partition("t")
        if coeff.endswith("*"):
            coeff = coeff[:-1]
        if _ == "":  # constant term
            try:
                c, e = int(term), 0
            except ValueError:
                raise ParseError(f"bad element term {term!r}") from None
        else:
            try:
                c = int(coeff) if coeff else 1
            except ValueError:
                raise ParseError(f"bad element term {term!r}") from None
            if var == "":
                e = 1
            elif var.startswith("^"):
                try:
                    e = int(var[1:])
                except ValueError:
                    raise ParseError(f"bad element term {term!r}") from None
            else:
                raise ParseError(f"bad element term {term!r}")
        if not 0 <= e < spec.k:
            raise ParseError(f"exponent {e} out of range in {text!r}")
        digits[e] = (digits[e] + c) % spec.p
    enc = 0
    for c in reversed(digits):
        enc = enc * spec.p + c
    return enc
