"""Bad shifts: the a != 0 for which x -> F(x+a) - cF(x) is not a bijection."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import ArgumentError, PreconditionError, UnsupportedOperation
from .field import Field
from .functions import Lut, Monomial
from .linalg import complement_basis, greedy_basis, span
from .pcn import _check_c, shift_is_bijective

ALL_GOOD, ALL_BAD, INTERMEDIATE = "AllGood", "AllBad", "Intermediate"


@dataclass(frozen=True)
class ShiftReport:
    c: int
    bad_shifts: tuple[int, ...]
    is_subspace: bool
    closure_witness: tuple[int, int] | None  # (u, v) with u + v (or u - v) outside V
    basis: tuple[int, ...]
    dimension: int
    trichotomy: str
    complement_basis: tuple[int, ...] | None
    complement_verified: bool | None
    # for a non-permutation the shift a = 0 is bad as well; it is not listed
    permutation: bool = True

    @property
    def bad_count(self) -> int:
        return len(self.bad_shifts)

    def to_dict(self) -> dict:
        return {
            "c": self.c,
            "bad_count": self.bad_count,
            "is_subspace": self.is_subspace,
            "closure_witness": list(self.closure_witness) if self.closure_witness else None,
            "dimension": self.dimension,
            "basis": list(self.basis),
            "trichotomy": self.trichotomy,
            "complement_basis": list(self.complement_basis)
            if self.complement_basis is not None
            else None,
            "permutation": self.permutation,
        }


def bad_shift_mask(F: Lut, c: int) -> np.ndarray:
    """mask[a] is True iff a != 0 and the c-derivative at a is not a bijection."""
    fld = F.field
    good = shift_is_bijective(F, c, fld.elements())
    mask = ~good
    mask[0] = False
    return mask


def _closure(fld: Field, inV: np.ndarray) -> tuple[int, int] | None:
    members = np.flatnonzero(inV)
    for u in members.tolist():
        w = fld.sub(u, members) if fld.p != 2 else u ^ members
        missing = np.flatnonzero(~inV[w])
        if missing.size:
            return int(u), int(members[missing[0]])
    return None


def classify(bad_count: int, q: int) -> str:
    if bad_count == 0:
        return ALL_GOOD
    if bad_count == q - 1:
        return ALL_BAD
    return INTERMEDIATE


def bad_shifts(F: Lut, c: int, *, require_permutation: bool = False) -> ShiftReport:
    """Bad shifts, subspace closure, basis and complement for one c.

    Non-permutations are analysed as well unless ``require_permutation``;
    the report's ``permutation`` flag records which case applies.
    """
    fld = F.field
    c = _check_c(fld, c)
    perm = F.is_permutation()
    if require_permutation and not perm:
        raise PreconditionError("bad_shifts needs a permutation")
    mask = bad_shift_mask(F, c)
    bad = tuple(int(a) for a in np.flatnonzero(mask))
    inV = mask.copy()
    inV[0] = True
    witness = _closure(fld, inV)
    basis = greedy_basis(fld, bad)
    k = len(basis)
    comp, verified = None, None
    if witness is None and 0 < k < fld.n:
        comp = complement_basis(fld, basis)
        W = span(fld, comp)
        verified = not mask[W[W != 0]].any()
    return ShiftReport(
        c,
        bad,
        witness is None,
        witness,
        tuple(basis),
        k,
        classify(len(bad), fld.q),
        tuple(comp) if comp is not None else None,
        verified,
        perm,
    )


@dataclass(frozen=True)
class DichotomyReport:
    field: Field
    exponents: tuple[int, ...]
    checked: int
    classes: dict[str, int]
    violations: tuple[tuple[int, int, int], ...]  # (d, c, bad_count)

    @property
    def ok(self) -> bool:
        return not self.violations


def permutation_exponents(q: int) -> list[int]:
    return [d for d in range(1, q - 1) if gcd(d, q - 1) == 1]


def monomial_dichotomy_audit(field: Field, exponents=None) -> DichotomyReport:
    """Trichotomy of every x^d (gcd(d, q-1) = 1) for every c outside {0, 1}."""
    if field.p != 2:
        raise UnsupportedOperation("the monomial dichotomy audit targets characteristic 2")
    q = field.q
    if exponents is None:
        exponents = permutation_exponents(q)
    exps = []
    for d in exponents:
        if gcd(d, q - 1) != 1:
            raise ArgumentError(f"x^{d} is not a permutation of GF({q})")
        exps.append(int(d))
    tally: Counter = Counter()
    viol = []
    for d in exps:
        F = Monomial(1, d).to_lut(field)
        for c in range(2, q):
            cnt = int(bad_shift_mask(F, c).sum())
            cls = classify(cnt, q)
            tally[cls] += 1
            if cls == INTERMEDIATE:
                viol.append((d, c, cnt))
    return DichotomyReport(field, tuple(exps), sum(tally.values()), dict(tally), tuple(viol))
