"""Perfect c-nonlinearity: oracles, the DDT product criterion, enumeration
of every valid c, and audits of the related counting claims.

Here F is PcN for c when every x -> F(x+a) - cF(x) is a bijection (all a,
including a = 0 when c != 1).  For a permutation F and c outside {0, 1}, a
collision F(x+a) - cF(x) = F(y+a) - cF(y) with u = x - y, v = F(x) - F(y)
gives F(y+a+u) - F(y+a) = cv.  So F fails to be PcN exactly when some DDT
row u != 0 is nonzero at both v and cv, which is the ratio test below.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from .ddt import DDTable, _count_rows, cddt, c_uniformity, classical_class, ddt, row_chunks
from .errors import ArgumentError, PreconditionError
from .field import Field
from .functions import Lut, compose, invert, scalar_mul


def _check_c(fld: Field, c: int) -> int:
    c = fld.validate(c)
    if c in (0, 1):
        raise ArgumentError(
            f"c={c} is outside the PcN domain; use c_uniformity for c in {{0, 1}}"
        )
    return c


def shift_is_bijective(F: Lut, c: int, rows) -> np.ndarray:
    """Occupancy test of x -> F(x+a) - cF(x) for each a in ``rows``."""
    counts = _count_rows(F, c, rows)
    return counts.max(axis=1) == 1


def is_pcn_naive(F: Lut, c: int) -> bool:
    """Direct occupancy check of every c-derivative; O(q^2)."""
    fld = F.field
    c = fld.validate(c)
    rows = np.arange(1 if c == 1 else 0, fld.q, dtype=np.int64)
    for chunk in row_chunks(fld.q, rows):
        if not shift_is_bijective(F, c, chunk).all():
            return False
    return True


def is_pcn_ddt(D: DDTable, c: int, *, require_permutation: bool = False) -> bool:
    """True iff Delta(a, b) * Delta(a, c^-1 b) = 0 for all nonzero a, b.

    A table from a non-permutation is answered False (such F is never PcN
    for c outside {0, 1}, since (1-c)F is then not a bijection); pass
    ``require_permutation=True`` to get a PreconditionError instead.
    """
    fld = D.field
    c = _check_c(fld, c)
    if D.c != 1:
        raise ArgumentError("is_pcn_ddt needs the classical DDT")
    if not D.is_permutation_table():
        if require_permutation:
            raise PreconditionError("DDT does not come from a permutation")
        return False
    nz = D.counts[1:, :] > 0
    b = fld.nonzero()
    cinv_b = fld.mul(fld.inv(c), b)
    return not np.any(nz[:, b] & nz[:, cinv_b])


def is_apcn_ddt(D: DDTable, c: int) -> bool:
    """The sum criterion Delta(a,b) + Delta(a, c^-1 b) <= 2, applied verbatim.

    This is a claim under audit (see apcn_claim_audit), not a decision
    procedure.
    """
    fld = D.field
    c = _check_c(fld, c)
    cnt = D.counts[1:, :].astype(np.int64)
    cinv_b = fld.mul(fld.inv(c), fld.elements())
    return bool(np.all(cnt + cnt[:, cinv_b] <= 2))


@dataclass(frozen=True)
class ApcnAudit:
    c: int
    claimed_apcn: bool
    true_apcn: bool
    delta: int
    # first (a, b, cDDT entry, Delta(a,b) + Delta(a,c^-1 b)) where the sum formula fails
    formula_counterexample: tuple[int, int, int, int] | None

    @property
    def agree(self) -> bool:
        return self.claimed_apcn == self.true_apcn


def apcn_claim_audit(F: Lut, c: int, D: DDTable | None = None) -> ApcnAudit:
    fld = F.field
    c = _check_c(fld, c)
    if not F.is_permutation():
        raise PreconditionError("apcn_claim_audit needs a permutation")
    D = D or ddt(F)
    C = cddt(F, c)
    delta = C.uniformity()
    cinv_b = fld.mul(fld.inv(c), fld.elements())
    rhs = D.counts.astype(np.int64) + D.counts[:, cinv_b]
    bad = np.argwhere(C.counts != rhs)
    cex = None
    if bad.size:
        a, b = (int(v) for v in bad[0])
        cex = (a, b, int(C.counts[a, b]), int(rhs[a, b]))
    return ApcnAudit(c, is_apcn_ddt(D, c), delta == 2, delta, cex)


def _ratios_of_row(fld: Field, cols: np.ndarray) -> np.ndarray:
    """All b_i / b_j for i != j among the nonzero encodings in ``cols``."""
    L = fld.log[cols]
    diff = (L[:, None] - L[None, :]) % (fld.q - 1)
    mask = ~np.eye(len(cols), dtype=bool)
    return fld.exp[diff[mask]]


def enumerate_pcn(D: DDTable, *, early_exit: bool = True, threads: int | None = None) -> set[int]:
    """Every c outside {0, 1} passing the product criterion, by ratio elimination.

    Start from all candidates; each DDT row a != 0 with nonzero columns
    b_1..b_k strikes every ratio b_i/b_j.  With ``early_exit`` the scan stops
    as soon as no candidate survives.
    """
    fld = D.field
    if D.c != 1:
        raise ArgumentError("enumerate_pcn needs the classical DDT")
    if not D.is_permutation_table():
        return set()
    alive = np.ones(fld.q, dtype=bool)
    alive[:2] = False
    rows = range(1, fld.q)
    nz = D.counts > 0
    nz[:, 0] = False

    def strike(a):
        return _ratios_of_row(fld, np.flatnonzero(nz[a]))

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            for r in ex.map(strike, rows):
                alive[r] = False
    else:
        for a in rows:
            alive[strike(a)] = False
            if early_exit and not alive.any():
                break
    return {int(c) for c in np.flatnonzero(alive)}


def enumerate_apcn(D: DDTable) -> set[int]:
    """c surviving the sum criterion Delta(a,b) + Delta(a,c^-1 b) <= 2 (claim under audit)."""
    fld = D.field
    return {c for c in range(2, fld.q) if is_apcn_ddt(D, c)}


def pcn_set_naive(F: Lut) -> set[int]:
    return {c for c in range(2, F.field.q) if is_pcn_naive(F, c)}


def apcn_set_naive(F: Lut) -> set[int]:
    return {c for c in range(2, F.field.q) if c_uniformity(F, c) == 2}


@dataclass
class PcnReport:
    field: Field
    function: str | None
    pcn_set: set[int]
    apcn_set: set[int]
    apcn_claim_set: set[int]
    provenance: dict[int, str] = dc_field(default_factory=dict)

    @property
    def n_pcn(self) -> int:
        return len(self.pcn_set)

    def to_dict(self) -> dict:
        return {
            "function": self.function,
            "field": str(self.field.spec),
            "pcn_set": sorted(self.pcn_set),
            "apcn_set": sorted(self.apcn_set),
            "N_pcn": self.n_pcn,
            "audits": {
                "apcn_sum_criterion_set": sorted(self.apcn_claim_set),
                "apcn_sum_criterion_agrees": self.apcn_claim_set == self.apcn_set,
            },
        }


def pcn_report(F: Lut, function: str | None = None, verify: bool = True) -> PcnReport:
    D = ddt(F)
    pcn = enumerate_pcn(D)
    prov = {c: "ddt-criterion" for c in pcn}
    if verify:
        naive = pcn_set_naive(F)
        if naive != pcn:
            raise AssertionError(f"ddt criterion {sorted(pcn)} != naive {sorted(naive)}")
        for c in pcn:
            prov[c] = "ddt-criterion+naive"
    # APcN is decided only from the cDDT; the sum criterion is reported beside it
    apcn = apcn_set_naive(F)
    claim = enumerate_apcn(D) if D.is_permutation_table() else set()
    return PcnReport(F.field, function, pcn, apcn, claim, prov)


@dataclass(frozen=True)
class ApnBoundAudit:
    classical: str
    delta: int
    pcn_set: frozenset[int]
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def apn_pcn_bound_audit(F: Lut) -> ApnBoundAudit:
    """Count bounds on pcn_set(F); a non-permutation has the empty set."""
    fld = F.field
    cls = classical_class(F)
    S = frozenset(enumerate_pcn(ddt(F)))
    n = fld.n
    checks: dict[str, bool] = {}
    if cls.delta == 2:
        checks["apn_at_most_two"] = len(S) <= 2
        inv_closed = all(fld.inv(c) in S for c in S)
        checks["apn_set_empty_or_inverse_pair"] = len(S) == 0 or (
            inv_closed and len({min(c, fld.inv(c)) for c in S}) == 1
        )
    if cls.delta == 1:
        checks["pn_set_empty"] = not S
    if fld.p == 2:
        cap = (1 << (n - 1)) - 1 if n % 2 else 1 << (n - 1)
        checks[f"count_at_most_{cap}"] = len(S) <= cap
    return ApnBoundAudit(cls.name, cls.delta, S, checks)


@dataclass(frozen=True)
class ClosureAudit:
    pcn_set: frozenset[int]
    scalar: dict[int, bool]  # alpha -> pcn_set(alpha F) == pcn_set(F)
    frobenius_set: frozenset[int]  # pcn_set(F(x^p))
    frobenius_predicted: frozenset[int]  # {c : c^p in pcn_set(F)}
    inverse_set: frozenset[int]

    @property
    def frobenius_matches(self) -> bool:
        return self.frobenius_set == self.frobenius_predicted

    @property
    def scalar_ok(self) -> bool:
        return all(self.scalar.values())


def closure_audits(F: Lut, alphas=None, samples: int = 4, seed: int = 0) -> ClosureAudit:
    fld = F.field
    if not F.is_permutation():
        raise PreconditionError("closure_audits needs a permutation")

    def pset(G):
        return frozenset(enumerate_pcn(ddt(G)))

    S = pset(F)
    if alphas is None:
        rng = np.random.default_rng(seed)
        alphas = sorted({int(a) for a in rng.integers(1, fld.q, size=samples)})
    scalar = {int(a): pset(scalar_mul(a, F)) == S for a in alphas}
    frob = Lut(fld, fld.frobenius(fld.elements(), 1))
    FS = pset(compose(F, frob))
    predicted = frozenset(c for c in range(2, fld.q) if fld.frobenius(c, 1) in S)
    return ClosureAudit(S, scalar, FS, predicted, pset(invert(F)))


def shift_commutation_check(F: Lut, c: int) -> bool:
    """For all alpha, gamma, x:
    D_{c,alpha}F(x+gamma) = D_{c,alpha}F(x)  iff  D_gamma F(x+alpha) = c D_gamma F(x).
    """
    fld = F.field
    q = fld.q
    x = fld.elements()
    fv = F.values
    for alpha in range(q):
        for gamma in range(q):
            xg = fld.add(x, gamma)
            lhs = fld.sub(fv[fld.add(xg, alpha)], fld.mul(c, fv[xg])) == fld.sub(
                fv[fld.add(x, alpha)], fld.mul(c, fv)
            )
            dg = fld.sub(fv[fld.add(x, gamma)], fv)
            dga = fld.sub(fv[fld.add(fld.add(x, alpha), gamma)], fv[fld.add(x, alpha)])
            rhs = dga == fld.mul(c, dg)
            if not np.array_equal(lhs, rhs):
                return False
    return True


def inverse_c_duality_check(F: Lut, c: int) -> bool:
    """Delta_{c,F}(a, b) = Delta_{c^-1,F}(-a, -c^-1 b) for all a, b (c != 0)."""
    fld = F.field
    c = fld.validate(c)
    if c == 0:
        raise ArgumentError("duality needs c != 0")
    ci = fld.inv(c)
    A = cddt(F, c).counts
    B = cddt(F, ci).counts
    x = fld.elements()
    return bool(np.array_equal(A, B[fld.neg(x)][:, fld.neg(fld.mul(ci, x))]))


def outer_inner_duality_check(F: Lut, c: int) -> bool:
    """Delta_{c,F}(a, b) = #{y : F^-1(cy + b) - F^-1(y) = a} for a permutation F."""
    fld = F.field
    c = fld.validate(c)
    Finv = invert(F).values
    y = fld.elements()
    q = fld.q
    counts = np.zeros((q, q), dtype=np.int64)
    for b in range(q):
        a = fld.sub(Finv[fld.add(fld.mul(c, y), b)], Finv[y])
        counts[:, b] = np.bincount(a, minlength=q)
    return bool(np.array_equal(cddt(F, c).counts, counts))
