"""Representations of functions F: F_{p^n} -> F_{p^n}.

Analysis code works on :class:`Lut` (a lookup table bound to a field).  The
structured forms (Monomial, Univariate, DOQuadratic, AffineMap) are
field-agnostic records that know how to tabulate themselves.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import ArgumentError, PreconditionError
from .field import Field


class ExponentReducedWarning(UserWarning):
    pass


def reduce_exponent(e: int, q: int) -> int:
    """Map an exponent e >= 1 into [1, q-1] without changing x -> x^e on F_q."""
    if e < 0:
        raise ArgumentError(f"negative exponent {e}")
    if e == 0:
        return 0
    return (e - 1) % (q - 1) + 1


def _reduce_warn(e: int, q: int) -> int:
    r = reduce_exponent(e, q)
    if r != e:
        warnings.warn(
            f"exponent {e} reduced to {r} on GF({q})", ExponentReducedWarning, stacklevel=3
        )
    return r


class Lut:
    """Lookup table: ``values[x]`` is F(x) for every encoding x."""

    __slots__ = ("field", "values")

    def __init__(self, field: Field, values):
        arr = np.array(values, dtype=np.int64)
        if arr.shape != (field.q,):
            raise ArgumentError(f"lut needs exactly {field.q} values, got {arr.size}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ArgumentError(f"lut value out of range for GF({field.q})")
        arr.setflags(write=False)
        self.field = field
        self.values = arr

    def __call__(self, x):
        r = self.values[np.asarray(x, dtype=np.int64)]
        return int(r) if np.ndim(r) == 0 else r

    def __len__(self):
        return self.field.q

    def __eq__(self, other):
        return (
            isinstance(other, Lut)
            and other.field == self.field
            and np.array_equal(other.values, self.values)
        )

    def __hash__(self):
        return hash((self.field, self.values.tobytes()))

    def __repr__(self):
        head = " ".join(map(str, self.values[:8].tolist()))
        more = " ..." if self.field.q > 8 else ""
        return f"Lut(GF({self.field.q}): {head}{more})"

    def to_lut(self, field: Field | None = None) -> "Lut":
        if field is not None and field != self.field:
            raise ArgumentError("lut belongs to a different field")
        return self

    def is_permutation(self) -> bool:
        return np.unique(self.values).size == self.field.q


@dataclass(frozen=True)
class Monomial:
    a: int = 1
    d: int = 1

    def __post_init__(self):
        if self.d < 1:
            raise ArgumentError(f"monomial exponent must be >= 1, got {self.d}")

    def to_lut(self, field: Field) -> Lut:
        field.validate(self.a)
        d = _reduce_warn(self.d, field.q)
        return Lut(field, field.mul(self.a, field.pow(field.elements(), d)))


@dataclass(frozen=True)
class Univariate:
    """sum_e coeffs[e] x^e; stored as a sorted tuple of (exponent, coefficient)."""

    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: dict[int, int]) -> "Univariate":
        return cls(tuple(sorted((int(e), int(c)) for e, c in coeffs.items() if c)))

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    def to_lut(self, field: Field) -> Lut:
        x = field.elements()
        acc = np.zeros(field.q, dtype=np.int64)
        for e, c in self.terms:
            field.validate(c)
            if e == 0:
                term = np.full(field.q, c, dtype=np.int64)
            else:
                term = field.mul(c, field.pow(x, _reduce_warn(e, field.q)))
            acc = field.add(acc, term)
        return Lut(field, acc)

    def coefficients_in_prime_field(self, field: Field) -> bool:
        return all(c < field.p for _, c in self.terms)


@dataclass(frozen=True)
class DOQuadratic:
    """sum a_ij x^{p^i+p^j} (i<j) + sum l_i x^{p^i} + const."""

    quad: tuple[tuple[int, int, int], ...] = ()  # (i, j, coefficient)
    linear: tuple[tuple[int, int], ...] = ()  # (i, coefficient)
    const: int = 0

    def __post_init__(self):
        for i, j, _ in self.quad:
            if not 0 <= i < j:
                raise ArgumentError(f"DO term indices need 0 <= i < j, got ({i},{j})")
        for i, _ in self.linear:
            if i < 0:
                raise ArgumentError(f"negative linear index {i}")

    @classmethod
    def from_dicts(cls, quad: dict, linear: dict | None = None, const: int = 0):
        q = tuple(sorted((int(i), int(j), int(c)) for (i, j), c in quad.items() if c))
        lin = tuple(sorted((int(i), int(c)) for i, c in (linear or {}).items() if c))
        return cls(q, lin, int(const))

    def check_indices(self, field: Field):
        for i, j, c in self.quad:
            if j >= field.n:
                raise ArgumentError(f"DO index j={j} must be < n={field.n}")
            field.validate(c)
        for i, c in self.linear:
            if i >= field.n:
                raise ArgumentError(f"linear index {i} must be < n={field.n}")
            field.validate(c)
        field.validate(self.const)

    def quadratic_part(self) -> "DOQuadratic":
        return DOQuadratic(self.quad)

    def to_univariate(self, p: int) -> Univariate:
        out: dict[int, int] = {}
        merged = [(p**i + p**j, c) for i, j, c in self.quad] + [(p**i, c) for i, c in self.linear]
        if self.const:
            merged.append((0, self.const))
        for e, c in merged:
            if e in out:
                # only possible when two index pairs collide, which i<j rules out
                raise ArgumentError(f"duplicate exponent {e} in DO polynomial")
            out[e] = c
        return Univariate.from_dict(out)

    def to_lut(self, field: Field) -> Lut:
        self.check_indices(field)
        x = field.elements()
        acc = np.full(field.q, self.const, dtype=np.int64)
        frob = [field.frobenius(x, i) for i in range(field.n)]
        for i, j, c in self.quad:
            acc = field.add(acc, field.mul(c, field.mul(frob[i], frob[j])))
        for i, c in self.linear:
            acc = field.add(acc, field.mul(c, frob[i]))
        return Lut(field, acc)


@dataclass(frozen=True)
class AffineMap:
    """L(x) + g with L(x) = sum coeffs_i x^{p^i}."""

    coeffs: tuple[tuple[int, int], ...] = ((0, 1),)
    translation: int = 0

    @classmethod
    def from_dict(cls, coeffs: dict[int, int], translation: int = 0) -> "AffineMap":
        return cls(tuple(sorted((int(i), int(c)) for i, c in coeffs.items() if c)), int(translation))

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(((0, 1),), 0)

    def linear_part(self) -> "AffineMap":
        return AffineMap(self.coeffs, 0)

    def to_lut(self, field: Field) -> Lut:
        x = field.elements()
        acc = np.full(field.q, field.validate(self.translation), dtype=np.int64)
        for i, c in self.coeffs:
            if not 0 <= i < field.n:
                raise ArgumentError(f"linearized index {i} must lie in [0, {field.n})")
            acc = field.add(acc, field.mul(field.validate(c), field.frobenius(x, i)))
        return Lut(field, acc)

    def is_permutation(self, field: Field) -> bool:
        return self.to_lut(field).is_permutation()


FnRepr = Union[Lut, Monomial, Univariate, DOQuadratic, AffineMap]


def to_lut(F: FnRepr, field: Field | None = None) -> Lut:
    if isinstance(F, Lut):
        return F.to_lut(field)
    if field is None:
        raise ArgumentError(f"{type(F).__name__} needs a field to be tabulated")
    return F.to_lut(field)


def evaluate(F: FnRepr, x: int, field: Field | None = None) -> int:
    lut = to_lut(F, field)
    return int(lut.values[lut.field.validate(x)])


def is_permutation(F: FnRepr, field: Field | None = None) -> bool:
    return to_lut(F, field).is_permutation()


def collision(lut: Lut) -> tuple[int, int] | None:
    """Some x < y with F(x) = F(y), or None for a permutation."""
    seen = np.full(lut.field.q, -1, dtype=np.int64)
    for x, y in enumerate(lut.values.tolist()):
        if seen[y] >= 0:
            return int(seen[y]), x
        seen[y] = x
    return None


def invert(F: FnRepr, field: Field | None = None) -> Lut:
    lut = to_lut(F, field)
    bad = collision(lut)
    if bad is not None:
        x, y = bad
        raise PreconditionError(
            f"not a permutation: F({x}) = F({y}) = {int(lut.values[x])}"
        )
    inv = np.empty(lut.field.q, dtype=np.int64)
    inv[lut.values] = np.arange(lut.field.q)
    return Lut(lut.field, inv)


def compose(F: FnRepr, G: FnRepr, field: Field | None = None) -> Lut:
    """The table of x -> F(G(x))."""
    g = to_lut(G, field)
    f = to_lut(F, g.field)
    return Lut(g.field, f.values[g.values])


def add_functions(F: FnRepr, G: FnRepr, field: Field | None = None) -> Lut:
    f = to_lut(F, field)
    g = to_lut(G, f.field)
    return Lut(f.field, f.field.add(f.values, g.values))


def scalar_mul(alpha: int, F: FnRepr, field: Field | None = None) -> FnRepr:
    """alpha * F, keeping the representation where that is possible."""
    if isinstance(F, Lut):
        fld = F.field
        return Lut(fld, fld.mul(fld.validate(alpha), F.values))
    if field is None:
        raise ArgumentError("scalar_mul on a structured form needs the field")
    alpha = field.validate(alpha)
    if isinstance(F, Monomial):
        return Monomial(field.mul(alpha, F.a), F.d)
    if isinstance(F, Univariate):
        return Univariate.from_dict({e: field.mul(alpha, c) for e, c in F.terms})
    if isinstance(F, DOQuadratic):
        return DOQuadratic.from_dicts(
            {(i, j): field.mul(alpha, c) for i, j, c in F.quad},
            {i: field.mul(alpha, c) for i, c in F.linear},
            field.mul(alpha, F.const),
        )
    if isinstance(F, AffineMap):
        return AffineMap.from_dict(
            {i: field.mul(alpha, c) for i, c in F.coeffs}, field.mul(alpha, F.translation)
        )
    raise ArgumentError(f"unknown representation {type(F).__name__}")


def affine_sandwich(A1, F, A2, A3=None, field: Field | None = None) -> Lut:
    """x -> A1(F(A2(x))) + A3(x); A1 and A2 must be affine permutations."""
    f = to_lut(F, field)
    fld = f.field
    a1, a2 = to_lut(A1, fld), to_lut(A2, fld)
    for name, a in (("A1", a1), ("A2", a2)):
        if not a.is_permutation():
            raise PreconditionError(f"{name} is not a permutation")
    out = a1.values[f.values[a2.values]]
    if A3 is not None:
        out = fld.add(out, to_lut(A3, fld).values)
    return Lut(fld, out)


def identity_lut(field: Field) -> Lut:
    return Lut(field, field.elements())


def lut_to_univariate(lut: Lut) -> Univariate:
    """Interpolating polynomial of degree <= q-1.

    c_0 = F(0), c_i = -sum_{x != 0} F(x) x^{q-1-i} for 0 < i < q-1 and
    c_{q-1} = -sum_x F(x).
    """
    fld = lut.field
    q = fld.q
    coeffs = {0: int(lut.values[0])}
    xs = fld.nonzero()
    fx = lut.values[1:]
    if q > 2:
        i = np.arange(1, q - 1, dtype=np.int64)
        powers = fld.exp[(fld.log[xs][None, :] * (q - 1 - i)[:, None]) % (q - 1)]
        sums = fld.sum(fld.mul(powers, fx[None, :]), axis=1)
        for e, s in zip(i.tolist(), np.atleast_1d(sums).tolist()):
            coeffs[e] = fld.neg(int(s))
    coeffs[q - 1] = fld.neg(fld.sum(lut.values))
    return Univariate.from_dict(coeffs)

