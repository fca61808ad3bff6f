"""Finite fields F_{p^n} with canonical base-p integer encodings.

An element is the integer e = sum d_i p^i where d_i is the coefficient of
x^i in its polynomial-basis representation.  All arithmetic is vectorized
with numpy: methods accept Python ints (and return ints) or integer arrays
(and return int64 arrays).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd

import numpy as np

from .conway import CONWAY
from .errors import ArgumentError, FieldDivisionByZero, FieldValidationError, ParseError
from .polyfp import (
    divisors,
    from_digits,
    is_irreducible,
    is_prime,
    poly_mulmod,
    poly_powmod,
    prime_factors,
    to_digits,
)

MAX_FIELD_SIZE = 1 << 24
_ADD_TABLE_LIMIT = 2048


@dataclass(frozen=True)
class FieldSpec:
    p: int
    n: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        p, n, mod = self.p, self.n, tuple(int(c) for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if not is_prime(p):
            raise FieldValidationError(f"p={p} is not prime")
        if n < 1:
            raise FieldValidationError(f"extension degree n={n} must be >= 1")
        if p**n > MAX_FIELD_SIZE:
            raise FieldValidationError(f"p^n = {p}^{n} exceeds supported size 2^24")
        if len(mod) != n + 1:
            raise FieldValidationError(
                f"modulus must have {n + 1} coefficients, got {len(mod)}"
            )
        if any(c < 0 or c >= p for c in mod):
            raise FieldValidationError(f"modulus coefficients must lie in [0, {p})")
        if mod[-1] != 1:
            raise FieldValidationError("modulus must be monic of degree n")
        if not is_irreducible(list(mod), p):
            raise FieldValidationError(f"modulus {mod} is reducible over F_{p}")

    @classmethod
    def default(cls, p: int, n: int) -> "FieldSpec":
        try:
            return cls(p, n, CONWAY[(p, n)])
        except KeyError:
            raise FieldValidationError(
                f"no built-in modulus for p={p}, n={n}; supply modulus="
            ) from None

    @classmethod
    def from_modulus_int(cls, p: int, n: int, modulus: int) -> "FieldSpec":
        if not p**n <= modulus < 2 * p**n:
            raise FieldValidationError(
                f"modulus encoding {modulus} is not a monic degree-{n} polynomial"
            )
        return cls(p, n, tuple(to_digits(modulus, p, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``p=<int> n=<int> [modulus=<int>]``."""
        vals = {}
        for m_tok in re.finditer(r"\S+", text):
            tok, col = m_tok.group(0), m_tok.start() + 1
            m = re.fullmatch(r"(p|n|modulus)=(\d+)", tok)
            if not m:
                raise ParseError("bad field token (expected p=, n= or modulus=)", 1, col, tok)
            if m.group(1) in vals:
                raise ParseError(f"duplicate field key {m.group(1)!r}", 1, col, tok)
            vals[m.group(1)] = int(m.group(2))
        if "p" not in vals or "n" not in vals:
            raise ParseError("field spec needs p=<int> and n=<int>", 1, 1, text)
        p = vals["p"]
        if not is_prime(p):
            raise FieldValidationError(f"p={p} is not prime")
        if "modulus" in vals:
            return cls.from_modulus_int(p, vals["n"], vals["modulus"])
        return cls.default(p, vals["n"])

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def modulus_int(self) -> int:
        return from_digits(self.modulus, self.p)

    def __str__(self) -> str:
        return f"p={self.p} n={self.n} modulus={self.modulus_int}"


class Field:
    """Arithmetic tables for one FieldSpec. Immutable once built."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.n = spec.n
        self.q = spec.q
        self._mod = list(spec.modulus)
        self.generator = self._find_generator()
        self.exp, self.log = self._build_log_tables()
        self._neg = self._digitwise_neg(np.arange(self.q, dtype=np.int64))
        self._neg.setflags(write=False)
        self._add_table = None
        if self.p != 2 and self.q <= _ADD_TABLE_LIMIT:
            a = np.arange(self.q, dtype=np.int64)
            t = self._digitwise_add(a[:, None], a[None, :])
            t.setflags(write=False)
            self._add_table = t
        self._trace_tables: dict[int, np.ndarray] = {}

    # construction ---------------------------------------------------------

    def _scalar_mul_poly(self, a: int, b: int) -> int:
        p, n = self.p, self.n
        r = poly_mulmod(to_digits(a, p, n), to_digits(b, p, n), self._mod, p)
        return from_digits(r, p)

    def _find_generator(self) -> int:
        p, n, q = self.p, self.n, self.q
        if q == 2:
            return 1
        factors = prime_factors(q - 1)
        # the class of x first: it is primitive for the built-in moduli
        candidates = [p] if n > 1 else []
        candidates += [g for g in range(2, q) if g != p]
        for g in candidates:
            gd = to_digits(g, p, n)
            if all(poly_powmod(gd, (q - 1) // r, self._mod, p) != [1] for r in factors):
                return g
        raise FieldValidationError("no primitive element found")  # unreachable

    def _build_log_tables(self):
        p, n, q = self.p, self.n, self.q
        order = q - 1
        exp = np.zeros(2 * order, dtype=np.int64)
        g = self.generator
        if p == 2:
            modint = self.spec.modulus_int
            if g == 2:
                v = 1
                for i in range(order):
                    exp[i] = v
                    v <<= 1
                    if v & q:
                        v ^= modint
            else:
                gx = [self._scalar_mul_poly(g, 1 << j) for j in range(n)]
                v = 1
                for i in range(order):
                    exp[i] = v
                    w, j = 0, 0
                    while v:
                        if v & 1:
                            w ^= gx[j]
                        v >>= 1
                        j += 1
                    v = w
        else:
            mat = np.array(
                [to_digits(self._scalar_mul_poly(g, p**j), p, n) for j in range(n)],
                dtype=np.int64,
            )
            weights = p ** np.arange(n, dtype=np.int64)
            v = np.zeros(n, dtype=np.int64)
            v[0] = 1
            for i in range(order):
                exp[i] = int(v @ weights)
                v = (v @ mat) % p
        exp[order:] = exp[:order]
        log = np.zeros(q, dtype=np.int64)
        log[exp[:order]] = np.arange(order, dtype=np.int64)
        if len(set(exp[:order].tolist())) != order:
            raise FieldValidationError("generator search produced a non-primitive element")
        exp.setflags(write=False)
        log.setflags(write=False)
        return exp, log

    def _digitwise_add(self, x, y):
        p = self.p
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        res = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
        w = 1
        for _ in range(self.n):
            res += ((x % p + y % p) % p) * w
            x = x // p
            y = y // p
            w *= p
        return res

    def _digitwise_neg(self, x):
        p = self.p
        if p == 2:
            return np.asarray(x, dtype=np.int64).copy()
        x = np.asarray(x, dtype=np.int64)
        res = np.zeros_like(x)
        w = 1
        for _ in range(self.n):
            res += ((p - x % p) % p) * w
            x = x // p
            w *= p
        return res

    # helpers --------------------------------------------------------------

    def _arr(self, x):
        scalar = np.isscalar(x) or (isinstance(x, np.ndarray) and x.ndim == 0)
        a = np.asarray(x, dtype=np.int64)
        if a.size and (a.min() < 0 or a.max() >= self.q):
            bad = int(a.min()) if a.min() < 0 else int(a.max())
            raise FieldValidationError(f"{bad} is not an element encoding of GF({self.q})")
        return a, scalar

    @staticmethod
    def _ret(a, scalar):
        return int(a) if scalar else a

    def validate(self, e: int) -> int:
        if isinstance(e, bool) or not isinstance(e, (int, np.integer)):
            raise FieldValidationError(f"element encoding must be an integer, got {e!r}")
        e = int(e)
        if not 0 <= e < self.q:
            raise FieldValidationError(f"{e} is not an element encoding of GF({self.q})")
        return e

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def nonzero(self) -> np.ndarray:
        return np.arange(1, self.q, dtype=np.int64)

    def digits(self, e: int) -> list[int]:
        return to_digits(self.validate(e), self.p, self.n)

    def from_digits(self, digits) -> int:
        digits = list(digits)
        if len(digits) > self.n or any(not 0 <= d < self.p for d in digits):
            raise FieldValidationError(f"bad digit vector {digits}")
        return from_digits(digits, self.p)

    def element(self, e: int) -> "FieldElement":
        return FieldElement(self, self.validate(e))

    # arithmetic -----------------------------------------------------------

    def add(self, x, y):
        (a, sa), (b, sb) = self._arr(x), self._arr(y)
        if self.p == 2:
            r = a ^ b
        elif self._add_table is not None:
            r = self._add_table[a, b]
        else:
            r = self._digitwise_add(a, b)
        return self._ret(r, sa and sb)

    def neg(self, x):
        a, s = self._arr(x)
        return self._ret(self._neg[a], s)

    def sub(self, x, y):
        (a, sa), (b, sb) = self._arr(x), self._arr(y)
        return self._ret(self.add(a, self._neg[b]), sa and sb)

    def mul(self, x, y):
        (a, sa), (b, sb) = self._arr(x), self._arr(y)
        r = self.exp[self.log[a] + self.log[b]]
        r = np.where((a == 0) | (b == 0), 0, r)
        return self._ret(r, sa and sb)

    def inv(self, x):
        a, s = self._arr(x)
        if np.any(a == 0):
            raise FieldDivisionByZero()
        r = self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]
        return self._ret(r, s)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, k: int):
        a, s = self._arr(x)
        k = int(k)
        if k < 0:
            raise ArgumentError("exponent must be a non-negative integer")
        if k == 0:
            return self._ret(np.ones_like(a), s)
        e = k % (self.q - 1)
        r = self.exp[(self.log[a] * e) % (self.q - 1)]
        r = np.where(a == 0, 0, r)
        return self._ret(r, s)

    def sum(self, x, axis=None):
        """Field sum of an array of elements along ``axis``."""
        a, _ = self._arr(x)
        if self.p == 2:
            r = np.bitwise_xor.reduce(a, axis=axis)
        else:
            p = self.p
            r = 0
            w = 1
            for _ in range(self.n):
                r = r + (np.sum(a % p, axis=axis) % p) * w
                a = a // p
                w *= p
        r = np.asarray(r, dtype=np.int64)
        return int(r) if r.ndim == 0 else r

    def frobenius(self, x, i: int = 1):
        return self.pow(x, self.p ** (int(i) % self.n))

    def multiplicative_order(self, e: int) -> int:
        e = self.validate(e)
        if e == 0:
            raise ArgumentError("multiplicative order of 0 is undefined")
        for t in divisors(self.q - 1):
            if self.pow(e, t) == 1:
                return t
        raise AssertionError("unreachable")

    def trace_table(self, m: int = 1) -> np.ndarray:
        """Tr_m^n of every element, indexed by encoding."""
        if m < 1 or self.n % m:
            raise ArgumentError(f"trace target degree m={m} must divide n={self.n}")
        if m not in self._trace_tables:
            x = self.elements()
            acc = np.zeros(self.q, dtype=np.int64)
            for i in range(self.n // m):
                acc = self.add(acc, self.frobenius(x, m * i))
            acc.setflags(write=False)
            self._trace_tables[m] = acc
        return self._trace_tables[m]

    def trace(self, x, m: int = 1):
        a, s = self._arr(x)
        return self._ret(self.trace_table(m)[a], s)

    def subfield(self, m: int) -> np.ndarray:
        """Encodings of the subfield F_{p^m}, ascending."""
        if m < 1 or self.n % m:
            raise ArgumentError(f"subfield degree m={m} must divide n={self.n}")
        x = self.elements()
        return x[self.frobenius(x, m) == x]

    @cached_property
    def prime_subfield(self) -> np.ndarray:
        return np.arange(self.p, dtype=np.int64)

    # misc -----------------------------------------------------------------

    def pretty(self, e: int, var: str = "x") -> str:
        d = self.digits(e)
        terms = []
        for i in range(self.n - 1, -1, -1):
            c = d[i]
            if not c:
                continue
            mon = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if c == 1:
                terms.append(mon)
            else:
                terms.append(f"{c}" if i == 0 else f"{c}*{mon}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Field({self.spec})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)


@lru_cache(maxsize=64)
def _cached_field(spec: FieldSpec) -> Field:
    return Field(spec)


def get_field(p, n: int | None = None, modulus=None) -> Field:
    """Return the (cached) field for a FieldSpec, a spec string or (p, n[, modulus]).

    ``modulus`` may be a coefficient sequence or its integer encoding.
    """
    if isinstance(p, Field):
        return p
    if isinstance(p, FieldSpec):
        return _cached_field(p)
    if isinstance(p, str):
        return _cached_field(FieldSpec.parse(p))
    if n is None:
        raise ArgumentError("extension degree n is required")
    if modulus is None:
        spec = FieldSpec.default(p, n)
    elif isinstance(modulus, (int, np.integer)):
        spec = FieldSpec.from_modulus_int(p, n, int(modulus))
    else:
        spec = FieldSpec(p, n, tuple(modulus))
    return _cached_field(spec)


@dataclass(frozen=True)
class FieldElement:
    """Convenience wrapper giving operator syntax over a Field."""

    field: Field
    value: int

    @property
    def digits(self) -> list[int]:
        return self.field.digits(self.value)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ArgumentError("elements belong to different fields")
            return other.value
        return self.field.validate(other)

    def __add__(self, o):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(o)))

    def __sub__(self, o):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(o)))

    def __mul__(self, o):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(o)))

    def __truediv__(self, o):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(o)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    __radd__ = __add__
    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElement({self.value} in GF({self.field.q}))"


def kth_root(field: Field, a: int, k: int) -> int | None:
    """Some t with t^k = a, or None.  Uses discrete logs from the tables."""
    a = field.validate(a)
    if a == 0:
        return 0
    order = field.q - 1
    la = int(field.log[a])
    g = gcd(k, order)
    if la % g:
        return None
    # solve k*s = la (mod order)
    m = order // g
    s = (la // g) * pow(k // g, -1, m) % m if m > 1 else 0
    return int(field.exp[s])
