"""Quadratic (Dembowski-Ostrom) functions in characteristic 2.

For F(x) = sum_{i<j} a_ij x^{2^i+2^j} + L(x) + g the derivative
F(x+a) + F(x) = B_a(x) + F(a) + F(0) with B_a linear.  The range of B_a is
E(a,F)^perp, where E(a,F) is the kernel of the adjoint map

    Lambda_a(x) = sum_i ( sum_{k != i} b_ik^{2^{n-i}} a^{2^{n-i+k}} ) x^{2^{n-i}},

b_ik the symmetrized coefficients.  Hence Delta_F(a, b) != 0 iff
b + F(a) + F(0) lies in E(a,F)^perp.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import ArgumentError, PreconditionError, UnsupportedOperation
from .field import Field
from .functions import AffineMap, DOQuadratic, Lut, Monomial, Univariate, lut_to_univariate
from .linalg import nullspace_mod_p, span
from .pcn import _check_c


def _weight2(e: int) -> int:
    return bin(e).count("1")


def as_do(F, field: Field) -> DOQuadratic:
    """Convert a representation to DO form, or raise UnsupportedOperation."""
    if field.p != 2:
        raise UnsupportedOperation("DO analysis is implemented for characteristic 2")
    if isinstance(F, DOQuadratic):
        F.check_indices(field)
        return F
    if isinstance(F, AffineMap):
        return DOQuadratic.from_dicts({}, dict(F.coeffs), F.translation)
    if isinstance(F, Monomial):
        F = Univariate.from_dict({F.d: F.a})
    if isinstance(F, Lut):
        F = lut_to_univariate(F)
    if not isinstance(F, Univariate):
        raise UnsupportedOperation(f"cannot convert {type(F).__name__} to DO form")
    quad, lin, const = {}, {}, 0
    q = field.q
    for e, c in F.terms:
        e = e if e < q else (e - 1) % (q - 1) + 1
        w = _weight2(e)
        if e == 0:
            const = c
        elif w == 1:
            lin[e.bit_length() - 1] = c
        elif w == 2:
            i = (e & -e).bit_length() - 1
            j = e.bit_length() - 1
            quad[(i, j)] = c
        else:
            raise UnsupportedOperation(f"x^{e} is not a DO, linear or constant term")
    return DOQuadratic.from_dicts(quad, lin, const)


@dataclass(frozen=True)
class ESubspace:
    a: int
    basis: tuple[int, ...]
    dual_basis: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def dual_mask(self, field: Field) -> np.ndarray:
        """mask[y] is True iff y is in E(a,F)^perp."""
        y = field.elements()
        inside = np.ones(field.q, dtype=bool)
        for e in self.basis:
            inside &= field.trace(field.mul(y, e)) == 0
        return inside


def adjoint_coefficients(F: DOQuadratic, a: int, field: Field) -> dict[int, int]:
    """Coefficient of x^{2^{(n-i) mod n}} in Lambda_a, keyed by i."""
    n = field.n
    b: dict[tuple[int, int], int] = {}
    for i, j, c in F.quad:
        b[(i, j)] = c
        b[(j, i)] = c
    out = {}
    for i in range(n):
        acc = 0
        for k in range(n):
            if k != i and (i, k) in b:
                s = (n - i) % n
                term = field.mul(field.frobenius(b[(i, k)], s), field.frobenius(a, s + k))
                acc = field.add(acc, term)
        out[i] = acc
    return out


def adjoint_map(F: DOQuadratic, a: int, field: Field, x) -> np.ndarray:
    n = field.n
    acc = np.zeros(np.shape(x), dtype=np.int64)
    for i, K in adjoint_coefficients(F, a, field).items():
        if K:
            acc = field.add(acc, field.mul(K, field.frobenius(x, (n - i) % n)))
    return acc


def _bits_matrix(values, n):
    return np.array([[(int(v) >> r) & 1 for v in values] for r in range(n)], dtype=np.int64)


def e_subspace(F, a: int, field: Field, validate: bool = True) -> ESubspace:
    """E(a,F) by F_2 linear algebra, optionally checked by exhaustive evaluation."""
    F = as_do(F, field)
    a = field.validate(a)
    if a == 0:
        raise ArgumentError("E(a,F) is defined for a != 0")
    n = field.n
    cols = adjoint_map(F, a, field, np.array([1 << j for j in range(n)], dtype=np.int64))
    kern = nullspace_mod_p(_bits_matrix(cols, n), 2)
    basis = tuple(sorted(int((v << np.arange(n)).sum()) for v in kern))
    # E^perp: y with Tr(e y) = 0 for every basis vector e
    if basis:
        rows = np.array(
            [[field.trace(field.mul(e, 1 << j)) for j in range(n)] for e in basis], dtype=np.int64
        )
        dual = nullspace_mod_p(rows, 2)
        dual_basis = tuple(sorted(int((v << np.arange(n)).sum()) for v in dual))
    else:
        dual_basis = tuple(1 << j for j in range(n))
    es = ESubspace(a, basis, dual_basis)
    if validate and field.q <= 1 << 12:
        exhaustive = np.flatnonzero(adjoint_map(F, a, field, field.elements()) == 0)
        if not np.array_equal(exhaustive, span(field, basis)):
            raise AssertionError(f"kernel mismatch at a={a}")
        if not np.array_equal(np.flatnonzero(es.dual_mask(field)), span(field, dual_basis)):
            raise AssertionError(f"dual mismatch at a={a}")
    return es


def autocorrelation_support(F, a: int, field: Field) -> np.ndarray:
    """{u : C_F(a,u) != 0} for the pure DO part, by direct summation."""
    G = as_do(F, field).quadratic_part().to_lut(field)
    x = field.elements()
    d = field.add(G.values[field.add(x, a)], G.values)
    t = field.trace(field.mul(x[:, None], d[None, :]))
    C = (1 - 2 * t).sum(axis=1)
    return np.flatnonzero(C)


def _offset(F: DOQuadratic, a: int, field: Field) -> int:
    """F(a) + F(0): the constant part of the derivative at a."""
    lut = F.to_lut(field)
    return field.add(int(lut.values[a]), int(lut.values[0]))


def _prepare(F, field: Field, c: int):
    F = as_do(F, field)
    c = _check_c(field, c)
    if not F.to_lut(field).is_permutation():
        raise PreconditionError("DO characterization needs a permutation")
    return F, c


def do_pcn_check(F, c: int, field: Field) -> bool:
    """For all a, b != 0: b + off_a or c^-1 b + off_a lies outside E(a,F)^perp."""
    F, c = _prepare(F, field, c)
    b = field.nonzero()
    cb = field.mul(field.inv(c), b)
    for a in range(1, field.q):
        mask = e_subspace(F, a, field, validate=False).dual_mask(field)
        s = _offset(F, a, field)
        if np.any(mask[field.add(b, s)] & mask[field.add(cb, s)]):
            return False
    return True


@dataclass(frozen=True)
class IntersectionReport:
    c: int
    sizes: dict[int, int]  # a -> |V_a ∩ c V_a|

    @property
    def at_most_one(self) -> bool:
        """Every intersection has at most one element."""
        return all(v <= 1 for v in self.sizes.values())

    @property
    def empty(self) -> bool:
        return all(v == 0 for v in self.sizes.values())

    @property
    def witness(self) -> int | None:
        return next((a for a, v in self.sizes.items() if v >= 2), None)


def affine_intersections(F, c: int, field: Field) -> IntersectionReport:
    F, c = _prepare(F, field, c)
    sizes = {}
    for a in range(1, field.q):
        es = e_subspace(F, a, field, validate=False)
        V = field.add(span(field, es.dual_basis), _offset(F, a, field))
        inV = np.zeros(field.q, dtype=bool)
        inV[V] = True
        sizes[a] = int(inV[field.mul(c, V)].sum())
    return IntersectionReport(c, sizes)


def do_affine_intersection_check(F, c: int, field: Field) -> bool:
    """|V_a ∩ c V_a| <= 1 for all a != 0, V_a = E(a,F)^perp + F(a) + F(0)."""
    return affine_intersections(F, c, field).at_most_one


def gold_root_exponent(n: int, k: int) -> int:
    """(2^k+1)/2 as an exponent mod 2^n - 1."""
    return ((1 << k) + 1) * (1 << (n - 1)) % ((1 << n) - 1)


@dataclass(frozen=True)
class TraceVerdict:
    c: int
    pcn_consistent: bool
    witness: tuple[int, int] | None  # (a, b) showing F is not PcN


def gold_root_trace_predicate(
    n: int, k: int, field: Field, c: int, *, enforce_hypothesis: bool = True
) -> TraceVerdict:
    """Trace criterion for F(x) = x^{(2^k+1)/2}.

    With k' = gcd(n,k), m = n/k' and target t = 1 (m odd) or 0 (m even), F
    fails to be PcN iff some a, b != 0 satisfy
    Tr_{k'}^n(b^2/a^{2^k+1}) = Tr_{k'}^n(c^-2 b^2/a^{2^k+1}) = t.
    """
    if field.p != 2 or field.n != n:
        raise ArgumentError(f"needs GF(2^{n}), got GF({field.q})")
    if not 1 <= k < n:
        raise ArgumentError(f"k={k} must lie in [1, n-1]")
    c = _check_c(field, c)
    if enforce_hypothesis and gcd((1 << k) + 1, field.q - 1) != 1:
        raise ArgumentError(
            f"gcd(2^{k}+1, 2^{n}-1) = {gcd((1 << k) + 1, field.q - 1)} != 1: "
            f"x^(2^k+1)/2 is not a permutation"
        )
    kp = gcd(n, k)
    target = 1 if (n // kp) % 2 else 0
    tr = field.trace_table(kp)
    a = field.nonzero()
    b = field.nonzero()
    denom = field.inv(field.pow(a, (1 << k) + 1))
    ratio = field.mul(field.pow(b, 2)[None, :], denom[:, None])  # [a, b]
    c2 = field.inv(field.pow(c, 2))
    hit = (tr[ratio] == target) & (tr[field.mul(c2, ratio)] == target)
    if hit.any():
        ia, ib = np.argwhere(hit)[0]
        return TraceVerdict(c, False, (int(a[ia]), int(b[ib])))
    return TraceVerdict(c, True, None)


gh_pcn_predicate = gold_root_trace_predicate
