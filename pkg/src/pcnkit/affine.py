"""Affine transformations and c-differential uniformity.

Left composition with a linear permutation L moves DDT columns:
Delta_{L o F + L'}(a, b) = Delta_F(a, L^{-1}(b - L'(a))).  The set checks
below work on boolean masks over element encodings.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb, gcd

import numpy as np

from .ddt import DDTable, c_spectrum, c_uniformity, ddt
from .errors import ArgumentError, BudgetExceeded, PreconditionError
from .field import Field
from .functions import AffineMap, Lut, affine_sandwich, compose, invert, to_lut
from .pcn import _check_c, is_pcn_naive

DEFAULT_SEARCH_BUDGET = 250_000


def _lut(F, field=None) -> Lut:
    return to_lut(F, field)


@dataclass(frozen=True)
class DeltaMismatch:
    c: int
    expected: int
    got: int


@dataclass(frozen=True)
class InvarianceReport:
    checked: tuple[int, ...]
    violations: tuple[DeltaMismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def fp_invariance_audit(F, A1, A2, field: Field | None = None) -> InvarianceReport:
    """delta(c, A1 o F o A2) = delta(c, F) for every c in F_p^*."""
    f = _lut(F, field)
    fld = f.field
    G = affine_sandwich(A1, f, A2)
    cs = tuple(int(c) for c in fld.prime_subfield if c)
    bad = []
    for c in cs:
        d0, d1 = c_uniformity(f, c), c_uniformity(G, c)
        if d0 != d1:
            bad.append(DeltaMismatch(c, d0, d1))
    return InvarianceReport(cs, tuple(bad))


@dataclass(frozen=True)
class FrobeniusReport:
    gamma: int
    violations: tuple[DeltaMismatch, ...]  # c with delta(c, G) != delta(c^{1/p}, F)
    # (c, delta(c,F), delta(c^p,F)) with the two values different
    conjugate_differences: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def frobenius_conjugacy_audit(F, gamma: int = 0, field: Field | None = None, threads=None) -> FrobeniusReport:
    """Compare delta(c, x^p o F + gamma) with delta(c^{1/p}, F) for all c."""
    f = _lut(F, field)
    fld = f.field
    gamma = fld.validate(gamma)
    G = Lut(fld, fld.add(fld.frobenius(f.values, 1), gamma))
    sF = c_spectrum(f, threads)
    sG = c_spectrum(G, threads)
    root = fld.frobenius(fld.elements(), fld.n - 1)  # c^{1/p}
    viol = tuple(
        DeltaMismatch(c, sF[int(root[c])], sG[c])
        for c in range(fld.q)
        if sG[c] != sF[int(root[c])]
    )
    conj = tuple(
        (c, sF[c], sF[int(fld.frobenius(c, 1))])
        for c in range(fld.q)
        if sF[c] != sF[int(fld.frobenius(c, 1))]
    )
    return FrobeniusReport(gamma, viol, conj)


def fix_set_rule_check(F, i: int, field: Field | None = None) -> dict[int, tuple[int, int]]:
    """delta(c, x^{p^i} o F) against delta(c, F) for c in F_{p^gcd(i,n)}.

    Returns the mismatching c (empty when the rule holds).
    """
    f = _lut(F, field)
    fld = f.field
    G = Lut(fld, fld.frobenius(f.values, i))
    out = {}
    for c in fld.subfield(gcd(i, fld.n) or fld.n).tolist():
        d0, d1 = c_uniformity(f, c), c_uniformity(G, c)
        if d0 != d1:
            out[int(c)] = (d0, d1)
    return out


@dataclass(frozen=True)
class ZeroDiffSet:
    """N(a, F) = {b : Delta_F(a, b) = 0}; 0 belongs to it for permutations."""

    a: int
    mask: np.ndarray

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __contains__(self, b: int) -> bool:
        return bool(self.mask[b])

    def elements(self) -> np.ndarray:
        return np.flatnonzero(self.mask)


def zero_diff_sets(F, field: Field | None = None, D: DDTable | None = None) -> list[ZeroDiffSet]:
    f = _lut(F, field)
    D = D or ddt(f)
    zero = D.counts == 0
    return [ZeroDiffSet(a, zero[a]) for a in range(1, f.field.q)]


def _linear_perm(L, fld: Field) -> Lut:
    lut = _lut(L, fld)
    if lut.values[0] != 0:
        raise ArgumentError("L must be linear (L(0) = 0)")
    if not lut.is_permutation():
        raise ArgumentError("L is not a permutation")
    return lut


def _inclusions(f: Lut, L: Lut, c: int):
    """Per a != 0: (L(P) ⊆ cL(N), cL(P) ⊆ L(N)), P = F^* minus N(a,F)."""
    fld = f.field
    if not f.is_permutation():
        raise PreconditionError("F must be a permutation")
    zero = ddt(f).counts == 0
    lv = L.values
    out = []
    for a in range(1, fld.q):
        N = zero[a]
        P = ~N
        P[0] = False
        inLN = np.zeros(fld.q, dtype=bool)
        inLN[lv[N]] = True
        in_cLN = np.zeros(fld.q, dtype=bool)
        in_cLN[fld.mul(c, lv[N])] = True
        LP = lv[P]
        out.append((bool(in_cLN[LP].all()), bool(inLN[fld.mul(c, LP)].all())))
    return out


def ln_necessary_check(F, L, c: int, field: Field | None = None) -> bool:
    """Both inclusions at every a != 0 (implied by L o F being PcN)."""
    f = _lut(F, field)
    c = _check_c(f.field, c)
    Lt = _linear_perm(L, f.field)
    return all(x and y for x, y in _inclusions(f, Lt, c))


def ln_sufficient_check(F, L, c: int, field: Field | None = None) -> bool:
    """At least one inclusion at every a != 0 (implies L o F is PcN)."""
    f = _lut(F, field)
    c = _check_c(f.field, c)
    Lt = _linear_perm(L, f.field)
    return all(x or y for x, y in _inclusions(f, Lt, c))


@dataclass(frozen=True)
class ZeroRowReport:
    c: int
    composite_pcn: bool
    bound: int  # ceil((q-1)/2)
    min_with_zero: int  # min over a != 0 of |N(a,F)|, 0 counted
    min_without_zero: int
    holds_with_zero: bool | None  # None when L o F is not PcN (nothing to test)
    holds_without_zero: bool | None


def zero_row_bound_audit(F, L, c: int, field: Field | None = None) -> ZeroRowReport:
    f = _lut(F, field)
    fld = f.field
    c = _check_c(fld, c)
    Lt = _linear_perm(L, fld)
    pcn = is_pcn_naive(compose(Lt, f), c)
    sizes = [len(z) for z in zero_diff_sets(f)]
    mn = min(sizes)
    # 0 is a zero entry of every row a != 0 exactly when F is a permutation
    m0 = mn - 1 if f.is_permutation() else mn
    bound = -(-(fld.q - 1) // 2)
    return ZeroRowReport(
        c,
        pcn,
        bound,
        mn,
        m0,
        (mn >= bound) if pcn else None,
        (m0 >= bound) if pcn else None,
    )


def ea_sufficient_check(F, L, Lp, gamma: int, gamma_p: int, c: int, field: Field | None = None) -> bool:
    """For all a, b != 0: L^{-1}(b - L'(a)) or L^{-1}(c^{-1}b - L'(a)) lies in N(a,F).

    G = L o F + gamma + L' + gamma' must be a permutation.
    """
    f = _lut(F, field)
    fld = f.field
    c = _check_c(fld, c)
    Lt = _linear_perm(L, fld)
    Lpt = _lut(Lp, fld)
    if Lpt.values[0] != 0:
        raise ArgumentError("L' must be linear (L'(0) = 0)")
    G = Lut(fld, fld.add(fld.add(Lt.values[f.values], Lpt.values), fld.add(gamma, gamma_p)))
    if not G.is_permutation():
        raise ArgumentError("G = L o F + L' + gamma + gamma' is not a permutation")
    zero = ddt(f).counts == 0
    Linv = invert(Lt).values
    b = fld.nonzero()
    cb = fld.mul(fld.inv(c), b)
    for a in range(1, fld.q):
        la = int(Lpt.values[a])
        x = zero[a][Linv[fld.sub(b, la)]]
        y = zero[a][Linv[fld.sub(cb, la)]]
        if not (x | y).all():
            return False
    return True


def linear_lut(fld: Field, coeffs) -> np.ndarray:
    """Table of sum c_i x^{p^i}, built from the images of the basis p^j."""
    basis = np.array([fld.p**j for j in range(fld.n)], dtype=np.int64)
    img = np.zeros(fld.n, dtype=np.int64)
    for i, c in coeffs:
        img = fld.add(img, fld.mul(c, fld.frobenius(basis, i)))
    lut = np.zeros(1, dtype=np.int64)
    scal = fld.prime_subfield
    for v in img.tolist():
        lut = fld.add(fld.mul(scal, v)[:, None], lut[None, :]).ravel()
    return lut


def family_size(n: int, q: int, max_terms: int) -> int:
    return sum(comb(n, t) * (q - 1) ** t for t in range(1, max_terms + 1))


def search_linear_for_pcn(
    F,
    c: int,
    max_terms: int = 3,
    budget: int = DEFAULT_SEARCH_BUDGET,
    field: Field | None = None,
    threads: int | None = None,
) -> list[AffineMap]:
    """Every linearized permutation with at most ``max_terms`` terms passing
    ln_sufficient_check, each re-verified by the naive oracle.

    Results are ordered by (positions, coefficients).
    """
    f = _lut(F, field)
    fld = f.field
    c = _check_c(fld, c)
    if not f.is_permutation():
        raise PreconditionError("F must be a permutation")
    size = family_size(fld.n, fld.q, max_terms)
    if size > budget:
        raise BudgetExceeded("linearized family", size, budget)
    nz = ddt(f).counts[1:] > 0
    nz[:, 0] = False
    cinv = fld.inv(c)
    y = fld.elements()
    q = fld.q

    def scan(positions):
        found = []
        for cs in itertools.product(range(1, q), repeat=len(positions)):
            coeffs = tuple(zip(positions, cs))
            L = linear_lut(fld, coeffs)
            if np.bincount(L, minlength=q).max() != 1:
                continue
            Linv = np.empty(q, dtype=np.int64)
            Linv[L] = y
            M = Linv[fld.mul(cinv, L)]
            # sufficiency reduces to: no row has both y and M(y) as nonzero columns
            if not (nz & nz[:, M]).any():
                found.append(AffineMap(coeffs, 0))
        return found

    groups = [pos for t in range(1, max_terms + 1) for pos in itertools.combinations(range(fld.n), t)]
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(scan, groups))
    else:
        parts = [scan(g) for g in groups]
    out = [L for part in parts for L in part]
    for L in out:
        if not is_pcn_naive(compose(L.to_lut(fld), f), c):
            raise AssertionError(f"search result {L} fails the naive check")
    return out
