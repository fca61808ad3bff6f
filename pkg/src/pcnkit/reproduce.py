"""Named reproduction scenarios with expected-versus-computed reports."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field as dc_field

from .ddt import c_spectrum, ddt
from .errors import ArgumentError
from .field import get_field
from .functions import AffineMap, Monomial, Univariate, compose
from .pcn import closure_audits, enumerate_pcn, pcn_set_naive
from .shifts import bad_shifts

# Rows (c, delta(c,F), delta(c,G2), delta(c,G1)) for F = x^5 over GF(2^6),
# c encoded with m = 2 under the modulus x^6+x^4+x^3+x+1.  Two blocks of
# rows, left then right, with the overlapping rows kept.
X5_ROWS_LEFT = (
    (0, 1, 1, 1), (2, 5, 6, 5), (4, 5, 5, 5), (8, 5, 6, 5), (16, 5, 6, 5), (32, 5, 6, 5),
    (27, 5, 7, 5), (54, 5, 6, 5), (55, 5, 6, 5), (53, 5, 6, 5), (49, 5, 7, 5), (57, 5, 6, 5),
    (41, 5, 6, 5), (9, 5, 6, 5), (18, 5, 7, 5), (36, 5, 6, 5), (19, 5, 7, 5), (38, 5, 6, 5),
    (23, 5, 6, 5), (46, 5, 6, 5), (7, 5, 7, 5), (14, 1, 8, 1), (28, 5, 6, 5), (56, 5, 6, 5),
    (43, 5, 7, 5), (13, 5, 6, 5), (26, 5, 7, 5), (52, 5, 7, 5), (51, 5, 6, 5), (61, 5, 6, 5),
    (33, 5, 6, 5), (25, 5, 6, 5), (50, 5, 6, 5), (63, 5, 6, 5), (37, 5, 6, 5), (17, 5, 6, 5),
)
X5_ROWS_RIGHT = (
    (56, 5, 6, 5), (43, 5, 7, 5), (13, 5, 6, 5), (26, 5, 7, 5), (52, 5, 7, 5), (51, 5, 6, 5),
    (61, 5, 6, 5), (33, 5, 6, 5), (25, 5, 6, 5), (50, 5, 6, 5), (63, 5, 6, 5), (37, 5, 6, 5),
    (17, 5, 6, 5), (34, 5, 7, 5), (31, 5, 7, 5), (62, 5, 6, 5), (39, 5, 7, 5), (21, 5, 6, 5),
    (42, 5, 6, 5), (15, 1, 8, 1), (30, 5, 7, 5), (60, 5, 6, 5), (35, 5, 6, 5), (29, 5, 6, 5),
    (58, 5, 7, 5), (45, 5, 6, 5), (5, 5, 7, 5), (10, 5, 6, 5), (20, 5, 6, 5), (40, 5, 6, 5),
    (11, 5, 7, 5), (22, 5, 6, 5), (44, 5, 6, 5), (3, 5, 6, 5), (6, 5, 7, 5), (12, 5, 6, 5),
    (24, 5, 6, 5), (48, 5, 6, 5), (59, 5, 5, 5), (1, 4, 4, 4),
)
X5_ROWS = X5_ROWS_LEFT + X5_ROWS_RIGHT

L1 = AffineMap.from_dict({2: 1, 0: 9})  # x^4 + (m^3+1) x
L2 = AffineMap.from_dict({3: 2, 4: 2, 5: 16})  # m x^8 + m x^16 + m^4 x^32


@dataclass(frozen=True)
class Check:
    label: str
    expected: object
    computed: object
    ok: bool


@dataclass
class ScenarioResult:
    name: str
    kind: str  # "reproduction" or "audit"
    checks: list[Check] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, label, expected, computed, ok=None):
        self.checks.append(Check(label, expected, computed, expected == computed if ok is None else bool(ok)))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "checks": [
                {"label": c.label, "expected": _plain(c.expected), "computed": _plain(c.computed), "ok": c.ok}
                for c in self.checks
            ],
            "notes": self.notes,
        }

    def to_text(self) -> str:
        lines = [f"{self.name} ({self.kind}): {'PASS' if self.passed else 'FAIL'} in {self.seconds:.2f}s"]
        for c in self.checks:
            lines.append(f"  [{'ok' if c.ok else 'FAIL'}] {c.label}: expected {_plain(c.expected)}, computed {_plain(c.computed)}")
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


def _plain(v):
    if isinstance(v, (set, frozenset)):
        return sorted(v)
    if isinstance(v, tuple):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    return v


def scenario_x34_gf64() -> ScenarioResult:
    r = ScenarioResult("example-3-1", "reproduction")
    fld = get_field(2, 6)
    F = Monomial(1, 34).to_lut(fld)
    D = ddt(F)
    body = D.counts[1:]
    r.check("classical uniformity", 4, D.uniformity())
    r.check("nonzero DDT entries (a != 0)", [4], sorted(set(body[body > 0].tolist())))
    S = enumerate_pcn(D)
    r.check("number of PcN c", 2, len(S))
    r.check("orders", [3, 3], sorted(fld.multiplicative_order(c) for c in S))
    r.check("c^-2 encodings", {14, 15}, {fld.inv(fld.pow(c, 2)) for c in S})
    a, b = sorted(S) if len(S) == 2 else (None, None)
    r.check("each is the square of the other", True,
            a is not None and fld.pow(a, 2) == b and fld.pow(b, 2) == a)
    r.check("naive oracle agrees", S, pcn_set_naive(F))
    return r


def scenario_x5_gf64() -> ScenarioResult:
    r = ScenarioResult("table-1", "reproduction")
    fld = get_field(2, 6)
    F = Monomial(1, 5).to_lut(fld)
    G1 = compose(L1.to_lut(fld), F)
    G2 = compose(L2.to_lut(fld), F)
    sF, s1, s2 = c_spectrum(F), c_spectrum(G1), c_spectrum(G2)
    diffs = [
        (c, (dF, d2, d1), (sF[c], s2[c], s1[c]))
        for c, dF, d2, d1 in X5_ROWS
        if (sF[c], s2[c], s1[c]) != (dF, d2, d1)
    ]
    r.check("per-row differences", [], diffs)
    order3 = sorted(c for c in range(2, fld.q) if fld.multiplicative_order(c) == 3)
    r.check("delta(0,F), delta(1,F)", (1, 4), (sF[0], sF[1]))
    r.check("delta(c,F) at the order-3 elements", [1, 1], [sF[c] for c in order3])
    rest = [sF[c] for c in range(2, fld.q) if c not in order3]
    r.check("delta(c,F) elsewhere", {5: 60}, dict(Counter(rest)))
    r.check("delta(c,G1) = delta(c,F) for all c", True, s1.values == sF.values)
    r.check("delta(c,G2) at the order-3 elements", [8, 8], [s2[c] for c in order3])
    r.check("max delta(c,G2)", 8, max(s2.values))
    listed = {row[0] for row in X5_ROWS}
    missing = sorted(set(range(fld.q)) - listed)
    dups = sorted(c for c, k in Counter(row[0] for row in X5_ROWS).items() if k > 1)
    # multiset comparison over the distinct listed c
    uniq = {row[0]: row[1:] for row in X5_ROWS}
    for col, spec in ((0, sF), (1, s2), (2, s1)):
        name = ("F", "G2", "G1")[col]
        want = Counter(v[col] for v in uniq.values())
        got = Counter(spec[c] for c in uniq)
        r.check(f"column multiset {name}", dict(sorted(want.items())), dict(sorted(got.items())))
    r.notes.append(f"{len(X5_ROWS)} rows, {len(listed)} distinct c, duplicated: {dups}")
    if missing:
        r.notes.append(
            "not listed: " + ", ".join(f"c={c} (computed {sF[c]}, {s2[c]}, {s1[c]})" for c in missing)
        )
    return r


def scenario_inverse_gf256() -> ScenarioResult:
    r = ScenarioResult("inverse-f28", "reproduction")
    fld = get_field(2, 8)
    F = Monomial(1, 254).to_lut(fld)
    s = c_spectrum(F)
    hits = [c for c in range(fld.q) if s[c] == 8 and s[fld.pow(c, 2)] == 9]
    r.check("some c with delta(c)=8 and delta(c^2)=9", True, bool(hits), ok=bool(hits))
    diff = [c for c in range(fld.q) if s[c] != s[fld.pow(c, 2)]]
    r.notes.append(f"c-spectrum values: {dict(sorted(Counter(s.values).items()))}")
    r.notes.append(f"c with delta(c) != delta(c^2): {len(diff)}")
    if not diff:
        r.notes.append("x^254 has coefficients in F_2, so delta(c) = delta(c^2) for every c")
    return r


def scenario_binomial_gf32() -> ScenarioResult:
    r = ScenarioResult("binomial-f25", "reproduction")
    fld = get_field(2, 5)
    F = Univariate.from_dict({3: 1, 5: 1}).to_lut(fld)
    witness = None
    tally: Counter = Counter()
    for c in range(2, fld.q):
        rep = bad_shifts(F, c)
        cls = rep.trichotomy if rep.is_subspace else f"{rep.trichotomy}/non-subspace"
        tally[cls] += 1
        if rep.is_subspace and 0 < rep.dimension < fld.n and witness is None:
            witness = (c, rep.dimension, rep.basis)
    r.check("some c with 0 < dim V_c < 5 and V_c a subspace", True, witness is not None,
            ok=witness is not None)
    if witness:
        r.notes.append(f"witness c={witness[0]}, dim V_c={witness[1]}, basis={list(witness[2])}")
    r.notes.append(f"F is a permutation: {F.is_permutation()} ({len(set(F.values.tolist()))} distinct values)")
    r.notes.append(f"classes over c: {dict(sorted(tally.items()))}")
    return r


def scenario_closure_gf32() -> ScenarioResult:
    r = ScenarioResult("closure-f25", "audit")
    fld = get_field(2, 5)
    alpha = fld.generator
    expected = {fld.pow(alpha, k) for k in (6, 12, 18, 24)}
    F = Monomial(1, 5).to_lut(fld)
    aud = closure_audits(F, alphas=[3, 7, 11])
    r.check("pcn_set(x^5) equals the expected set", expected, set(aud.pcn_set))
    r.check("expected set closed under c -> 1/c", True, all(fld.inv(c) in expected for c in expected))
    r.notes.append(f"pcn_set(x^25 = inverse of x^5): {sorted(aud.inverse_set)}")
    r.notes.append(f"scalar multiples keep the set: {aud.scalar_ok}")
    return r


SCENARIOS = {
    "example-3-1": scenario_x34_gf64,
    "table-1": scenario_x5_gf64,
    "inverse-f28": scenario_inverse_gf256,
    "binomial-f25": scenario_binomial_gf32,
    "closure-f25": scenario_closure_gf32,
}


def reproduce(name: str) -> ScenarioResult:
    if name not in SCENARIOS:
        raise ArgumentError(f"unknown scenario {name!r}; choose from {', '.join(SCENARIOS)}")
    t0 = time.perf_counter()
    res = SCENARIOS[name]()
    res.seconds = time.perf_counter() - t0
    return res
