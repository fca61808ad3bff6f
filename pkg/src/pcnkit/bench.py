"""Timing of four ways to find every c for which F is PcN.

  triple       count #{x : F(x+a) - cF(x) = b} for every (a, b): O(q^3) per c
  occupancy    is_pcn_naive per c: O(q^2) per c
  ddt-lookup   is_pcn_ddt per c on a precomputed DDT: O(q^2) per c
  ratio        enumerate_pcn on the DDT, all c at once (with/without early exit)
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from .ddt import ddt
from .errors import BudgetExceeded, PreconditionError
from .functions import Lut
from .pcn import enumerate_pcn, is_pcn_ddt, is_pcn_naive

DEFAULT_TRIPLE_BUDGET = 1 << 28
METHODS = ("triple", "occupancy", "ddt-lookup", "ratio", "ratio-no-exit")


def triple_check(F: Lut, c: int) -> bool:
    """PcN straight from the definition: every (a, b) has exactly one x."""
    fld = F.field
    x = fld.elements()
    b = fld.elements()
    for a in range(fld.q):
        d = fld.sub(F.values[fld.add(x, a)], fld.mul(c, F.values))
        counts = (d[None, :] == b[:, None]).sum(axis=1)
        if np.any(counts != 1):
            return False
    return True


def triple_estimate(q: int, n_c: int) -> int:
    return n_c * q**3


@dataclass
class MethodTiming:
    method: str
    median_s: float
    runs: int
    operations: int
    pcn_set: frozenset[int]

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "median_s": self.median_s,
            "runs": self.runs,
            "operations": self.operations,
            "pcn_set": sorted(self.pcn_set),
        }


@dataclass
class BenchReport:
    field: str
    timings: dict[str, MethodTiming]
    ddt_build_s: float
    refused: dict[str, str] = dc_field(default_factory=dict)

    @property
    def agree(self) -> bool:
        sets = {t.pcn_set for t in self.timings.values()}
        return len(sets) <= 1

    def speedup(self, slow: str, fast: str, include_ddt: bool = True) -> float:
        """slow / fast median; the DDT build is charged to DDT-based methods."""
        extra = self.ddt_build_s if include_ddt else 0.0
        s = self.timings[slow].median_s + (extra if slow in ("ddt-lookup", "ratio", "ratio-no-exit") else 0)
        f = self.timings[fast].median_s + (extra if fast in ("ddt-lookup", "ratio", "ratio-no-exit") else 0)
        return s / f if f > 0 else float("inf")

    def to_dict(self) -> dict:
        out = {
            "field": self.field,
            "ddt_build_s": self.ddt_build_s,
            "agree": self.agree,
            "timings": {k: v.to_dict() for k, v in self.timings.items()},
            "refused": self.refused,
        }
        if "occupancy" in self.timings and "ratio" in self.timings:
            out["speedup_ratio_vs_occupancy"] = self.speedup("occupancy", "ratio")
        if "triple" in self.timings and "ratio" in self.timings:
            out["speedup_ratio_vs_triple"] = self.speedup("triple", "ratio")
        return out


def _median_time(fn, runs: int):
    times, result = [], None
    for _ in range(runs):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def run_bench(
    F: Lut,
    methods=METHODS,
    runs: int = 5,
    triple_budget: int = DEFAULT_TRIPLE_BUDGET,
    strict_budget: bool = True,
) -> BenchReport:
    """Median wall times over ``runs`` repetitions (runs >= 5 for reports).

    A method whose estimated operation count exceeds its budget raises
    BudgetExceeded when ``strict_budget``, else it is listed as refused.
    """
    fld = F.field
    if not F.is_permutation():
        raise PreconditionError("benchmarking needs a permutation")
    cs = list(range(2, fld.q))
    q = fld.q
    build_s, D = _median_time(lambda: ddt(F), runs)
    row_nz = (D.counts[1:, 1:] > 0).sum(axis=1)
    timings: dict[str, MethodTiming] = {}
    refused: dict[str, str] = {}
    for m in methods:
        if m == "triple":
            est = triple_estimate(q, len(cs))
            if est > triple_budget:
                err = BudgetExceeded("triple check", est, triple_budget)
                if strict_budget:
                    raise err
                refused[m] = str(err)
                continue
            t, s = _median_time(lambda: frozenset(c for c in cs if triple_check(F, c)), runs)
            ops = est
        elif m == "occupancy":
            t, s = _median_time(lambda: frozenset(c for c in cs if is_pcn_naive(F, c)), runs)
            ops = len(cs) * q * q
        elif m == "ddt-lookup":
            t, s = _median_time(lambda: frozenset(c for c in cs if is_pcn_ddt(D, c)), runs)
            ops = len(cs) * (q - 1) ** 2
        elif m in ("ratio", "ratio-no-exit"):
            exit_ = m == "ratio"
            t, s = _median_time(lambda: frozenset(enumerate_pcn(D, early_exit=exit_)), runs)
            ops = int((row_nz * (row_nz - 1)).sum())
        else:
            raise ValueError(f"unknown method {m!r}; choose from {', '.join(METHODS)}")
        timings[m] = MethodTiming(m, t, runs, ops, s)
    return BenchReport(str(fld.spec), timings, build_s, refused)


def scaling_advantage(reports: list[BenchReport], slow: str = "triple", fast: str = "ratio") -> tuple[list[float], bool]:
    """Speedups of ``fast`` over ``slow`` per report and whether they grow monotonically."""
    sp = [r.speedup(slow, fast) for r in reports]
    return sp, all(b >= a for a, b in zip(sp, sp[1:]))
