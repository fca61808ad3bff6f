"""Command-line front end.

Exit codes: 0 ok, 1 a checked property was refuted, 2 parse or usage error,
3 precondition or budget failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .affine import (
    DEFAULT_SEARCH_BUDGET,
    frobenius_conjugacy_audit,
    ln_necessary_check,
    ln_sufficient_check,
    search_linear_for_pcn,
    zero_row_bound_audit,
)
from .bench import DEFAULT_TRIPLE_BUDGET, METHODS, run_bench, scaling_advantage
from .corpus import random_permutations
from .ddt import DDTable, _map, c_uniformity, cddt, classical_class, ddt
from .errors import (
    ArgumentError,
    BudgetExceeded,
    FieldValidationError,
    ParseError,
    PcnkitError,
    PreconditionError,
    UnsupportedOperation,
)
from .field import Field, get_field
from .functions import Lut, compose, to_lut
from .parse import format_affine, parse_affine, parse_function
from .pcn import enumerate_apcn, enumerate_pcn, is_apcn_ddt, is_pcn_ddt, is_pcn_naive
from .quadratic import affine_intersections, as_do, do_pcn_check, e_subspace, gold_root_trace_predicate, gold_root_exponent
from .reproduce import SCENARIOS, reproduce
from .shifts import bad_shifts
from .spectral import quartic_walsh_sum, nl_summary, pcn_walsh_product_check, walsh, walsh_sparsity_check

EXIT_OK, EXIT_REFUTED, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Ctx:
    """Parsed global options plus lazily built field and function."""

    def __init__(self, args):
        self.args = args
        self.threads = args.threads or os.cpu_count() or 1
        self._field = None
        self._func = None

    @property
    def field(self) -> Field:
        if self._field is None:
            if not self.args.field:
                raise UsageError("--field is required (e.g. --field p=2 n=6)")
            self._field = get_field(" ".join(self.args.field))
        return self._field

    @property
    def func_repr(self):
        if self._func is None:
            if not self.args.func:
                raise UsageError('--func is required (e.g. --func "mono d=5")')
            self._func = parse_function(self.args.func, self.field)
        return self._func

    @property
    def lut(self) -> Lut:
        return to_lut(self.func_repr, self.field)

    @property
    def func_text(self) -> str:
        return self.args.func

    def elem(self, e: int) -> str | int:
        return self.field.pretty(e, "m") if self.args.pretty else e

    def c_values(self, exclude_trivial: bool) -> list[int]:
        fld = self.field
        if self.args.c and not self.args.all_c:
            cs = sorted({fld.validate(c) for c in self.args.c})
        else:
            cs = list(range(fld.q))
        if exclude_trivial and not self.args.c:
            cs = [c for c in cs if c not in (0, 1)]
        return cs


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(ctx: Ctx, text: str):
    if ctx.args.out:
        Path(ctx.args.out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _no_csv(ctx: Ctx, cmd: str):
    if ctx.args.format == "csv":
        raise UsageError(f"--format csv is not available for {cmd}")


# commands ------------------------------------------------------------------


def cmd_analyze(ctx: Ctx) -> int:
    fld, F = ctx.field, ctx.lut
    D = ddt(F, ctx.threads)
    perm = D.is_permutation_table()
    cs = ctx.c_values(exclude_trivial=False)
    deltas = _map(lambda c: c_uniformity(F, c), cs, ctx.threads)
    rows, mismatches = [], []
    for c, d in zip(cs, deltas):
        row = {"c": c, "delta": d, "apcn": d == 2}
        if c in (0, 1):
            row["pcn"] = d == 1
            row["method"] = "trivial" if c == 0 else "classical"
        else:
            row["pcn"] = is_pcn_ddt(D, c)
            row["method"] = "ddt-criterion"
            if perm:
                row["apcn_sum_criterion"] = is_apcn_ddt(D, c)
            if row["pcn"] != (d == 1):
                mismatches.append(c)
            if ctx.args.verify:
                naive = is_pcn_naive(F, c)
                row["method"] = "ddt-criterion+naive"
                if naive != row["pcn"]:
                    mismatches.append(c)
        rows.append(row)
    pcn = sorted(r["c"] for r in rows if r["c"] not in (0, 1) and r["pcn"])
    apcn = sorted(r["c"] for r in rows if r["c"] not in (0, 1) and r["apcn"])
    claim = sorted(r["c"] for r in rows if r.get("apcn_sum_criterion"))
    report = {
        "function": ctx.func_text,
        "field": str(fld.spec),
        "permutation": perm,
        "classical": classical_class(F).name,
        "rows": rows,
        "pcn_set": pcn,
        "apcn_set": apcn,
        "N_pcn": len(pcn),
        "audits": {
            "apcn_sum_criterion_set": claim,
            "apcn_sum_criterion_agrees": claim == apcn if perm else None,
            "oracle_mismatches": sorted(set(mismatches)),
        },
    }
    fmt = ctx.args.format
    if fmt == "json":
        _emit(ctx, _dumps(report))
    elif fmt == "csv":
        _emit(ctx, _csv(["c", "delta", "pcn", "apcn"], [[r["c"], r["delta"], int(r["pcn"]), int(r["apcn"])] for r in rows]))
    else:
        out = [
            f"field {fld.spec}   function {ctx.func_text}",
            f"permutation: {perm}   classical: {report['classical']}",
            f"{'c':>12}  delta  PcN  APcN",
        ]
        for r in rows:
            out.append(f"{str(ctx.elem(r['c'])):>12}  {r['delta']:>5}  {'yes' if r['pcn'] else 'no':>3}  {'yes' if r['apcn'] else 'no':>4}")
        out.append(f"PcN set ({len(pcn)}): {[ctx.elem(c) for c in pcn]}")
        out.append(f"APcN set ({len(apcn)}): {[ctx.elem(c) for c in apcn]}")
        if perm and claim != apcn:
            out.append(f"sum-criterion APcN set differs: {claim}")
        _emit(ctx, "\n".join(out))
    return EXIT_REFUTED if mismatches else EXIT_OK


def cmd_enumerate_c(ctx: Ctx) -> int:
    fld, F = ctx.field, ctx.lut
    D = ddt(F, ctx.threads)
    if not D.is_permutation_table():
        raise PreconditionError("enumerate-c needs a permutation")
    pcn = sorted(enumerate_pcn(D, threads=ctx.threads))
    claim = sorted(enumerate_apcn(D))
    if ctx.args.verify:
        naive = sorted(c for c in range(2, fld.q) if is_pcn_naive(F, c))
        if naive != pcn:
            raise AssertionError(f"ratio elimination {pcn} differs from naive {naive}")
    report = {
        "function": ctx.func_text,
        "field": str(fld.spec),
        "pcn_set": pcn,
        "N_pcn": len(pcn),
        "apcn_sum_criterion_set": claim,
    }
    if ctx.args.format == "json":
        _emit(ctx, _dumps(report))
    elif ctx.args.format == "csv":
        _emit(ctx, _csv(["c"], [[c] for c in pcn]))
    else:
        _emit(ctx, f"PcN set ({len(pcn)}): {' '.join(str(ctx.elem(c)) for c in pcn)}")
    return EXIT_OK


def cmd_shifts(ctx: Ctx) -> int:
    F = ctx.lut
    reps = [bad_shifts(F, c) for c in ctx.c_values(exclude_trivial=True)]
    refuted = any(not r.is_subspace for r in reps)
    if ctx.args.format == "json":
        _emit(ctx, _dumps([r.to_dict() for r in reps]))
    elif ctx.args.format == "csv":
        _emit(ctx, _csv(["c", "bad_count", "is_subspace", "dimension", "trichotomy"],
                        [[r.c, r.bad_count, int(r.is_subspace), r.dimension, r.trichotomy] for r in reps]))
    else:
        out = []
        for r in reps:
            line = f"c={ctx.elem(r.c)}: {r.trichotomy}, bad shifts {r.bad_count}, dimension {r.dimension}"
            if not r.is_subspace:
                line += f", NOT a subspace (witness {r.closure_witness})"
            elif r.complement_basis:
                line += f", basis {list(r.basis)}, complement {list(r.complement_basis)}"
            out.append(line)
        if reps and not reps[0].permutation:
            out.append("note: F is not a permutation, so the shift a = 0 is bad too")
        _emit(ctx, "\n".join(out))
    return EXIT_REFUTED if refuted else EXIT_OK


def cmd_walsh(ctx: Ctx) -> int:
    fld, F = ctx.field, ctx.lut
    W = walsh(F)
    if ctx.args.dump:
        if fld.p == 2:
            body = _csv(["a/b"] + list(range(fld.q)), [[a] + W.values[a].tolist() for a in range(fld.q)])
        else:
            mags = np.round(W.magnitudes(), 9)
            body = _csv(["a/b"] + list(range(fld.q)), [[a] + mags[a].tolist() for a in range(fld.q)])
        Path(ctx.args.dump).write_text(body)
    report: dict = {"field": str(fld.spec), "function": ctx.func_text}
    refuted = False
    if fld.p == 2:
        report.update(nl_summary(F, W))
        per_c = []
        cs = ctx.c_values(exclude_trivial=True) if (ctx.args.c or ctx.args.all_c) else []
        for c in cs:
            prod = pcn_walsh_product_check(F, c, W)
            quart = quartic_walsh_sum(F, c, W)
            sp = walsh_sparsity_check(F, c, W)
            entry = {
                "c": c,
                "product_check": prod,
                "quartic_sum": quart,
                "quartic_is_2^4n": quart == 1 << (4 * fld.n),
                "sparsity_holds": sp.holds,
            }
            if ctx.args.verify:
                entry["naive"] = is_pcn_naive(F, c)
                refuted |= len({prod, entry["quartic_is_2^4n"], sp.holds, entry["naive"]}) > 1
            per_c.append(entry)
        report["per_c"] = per_c
    else:
        report["max_abs_walsh"] = float(np.round(W.magnitudes()[:, 1:].max(), 9))
    _no_csv(ctx, "walsh (use --dump)")
    if ctx.args.format == "json":
        _emit(ctx, _dumps(report))
    else:
        if fld.p == 2:
            lines = [f"{report['field']}  {report['function']}  nl={report['nl']}  max|W|={report['max_abs_walsh']}  argmax={tuple(report['argmax'])}"]
            for e in report["per_c"]:
                lines.append(f"c={ctx.elem(e['c'])}: product {e['product_check']}, quartic {e['quartic_sum']} ({'=' if e['quartic_is_2^4n'] else '!='} 2^{4 * fld.n}), sparsity {e['sparsity_holds']}")
        else:
            lines = [f"{report['field']}  {report['function']}  max|W|={report['max_abs_walsh']}"]
        _emit(ctx, "\n".join(lines))
    return EXIT_REFUTED if refuted else EXIT_OK


def cmd_ddt(ctx: Ctx) -> int:
    fld, F = ctx.field, ctx.lut
    c = ctx.args.c[0] if ctx.args.c else 1
    if ctx.args.c and len(ctx.args.c) > 1:
        raise UsageError("ddt takes a single --c")
    D = ddt(F, ctx.threads) if c == 1 else cddt(F, c, ctx.threads)
    rc = EXIT_OK
    if ctx.args.dump:
        Path(ctx.args.dump).write_text(D.to_csv())
    if ctx.args.load:
        other = DDTable.from_csv(Path(ctx.args.load).read_text(), fld, c)
        same = other == D
        rc = EXIT_OK if same else EXIT_REFUTED
        msg = {"load": ctx.args.load, "identical": same}
        _emit(ctx, _dumps(msg) if ctx.args.format == "json" else f"{ctx.args.load}: {'identical' if same else 'DIFFERENT'}")
        return rc
    if ctx.args.format == "csv":
        _emit(ctx, D.to_csv())
    elif ctx.args.format == "json":
        _emit(ctx, D.to_json())
    else:
        _emit(ctx, f"{'c' if c != 1 else ''}DDT of {ctx.func_text} over {fld.spec}" + (f" at c={c}" if c != 1 else "")
              + f": uniformity {D.uniformity()}" + (f", written to {ctx.args.dump}" if ctx.args.dump else ""))
    return rc


def cmd_quadratic(ctx: Ctx) -> int:
    fld = ctx.field
    if ctx.args.gold_k is not None:
        k = ctx.args.gold_k
        d = gold_root_exponent(fld.n, k)
        F = to_lut(parse_function(f"mono d={d}", fld), fld)
        rows, mism = [], []
        for c in ctx.c_values(exclude_trivial=True):
            v = gold_root_trace_predicate(fld.n, k, fld, c, enforce_hypothesis=not ctx.args.no_hypothesis)
            naive = is_pcn_naive(F, c)
            rows.append({"c": c, "pcn_consistent": v.pcn_consistent,
                         "witness": list(v.witness) if v.witness else None, "naive": naive})
            if v.pcn_consistent != naive:
                mism.append(c)
        report = {"field": str(fld.spec), "k": k, "exponent": d, "per_c": rows, "mismatches": mism}
        _no_csv(ctx, "quadratic")
        if ctx.args.format == "json":
            _emit(ctx, _dumps(report))
        else:
            pcs = [r["c"] for r in rows if r["pcn_consistent"]]
            _emit(ctx, f"x^{d}: predicate PcN-consistent for {pcs}; mismatches with naive: {mism}")
        return EXIT_REFUTED if mism else EXIT_OK
    G = as_do(ctx.func_repr, fld)
    per_a = []
    for a in range(1, fld.q):
        es = e_subspace(G, a, fld, validate=ctx.args.verify)
        per_a.append({"a": a, "dimE": es.dim, "basis": list(es.basis), "dual_basis": list(es.dual_basis)})
    per_c, mism = [], []
    lut = G.to_lut(fld)
    if lut.is_permutation():
        for c in ctx.c_values(exclude_trivial=True):
            ip = affine_intersections(G, c, fld)
            v = {
                "c": c,
                "do_pcn_check": do_pcn_check(G, c, fld),
                "intersection_at_most_one": ip.at_most_one,
                "intersection_empty": ip.empty,
                "naive": is_pcn_naive(lut, c),
            }
            if not v["do_pcn_check"] == v["intersection_at_most_one"] == v["naive"]:
                mism.append(c)
            per_c.append(v)
    report = {"field": str(fld.spec), "function": ctx.func_text, "permutation": lut.is_permutation(),
              "per_a": per_a, "per_c": per_c, "mismatches": mism}
    _no_csv(ctx, "quadratic")
    if ctx.args.format == "json":
        _emit(ctx, _dumps(report))
    else:
        dims = sorted({r["dimE"] for r in per_a})
        lines = [f"{ctx.func_text} over {fld.spec}: dim E(a,F) in {dims}"]
        if not per_c:
            lines.append("not a permutation: PcN characterizations skipped")
        for v in per_c:
            lines.append(f"c={ctx.elem(v['c'])}: do {v['do_pcn_check']}, intersection<=1 {v['intersection_at_most_one']}, naive {v['naive']}")
        _emit(ctx, "\n".join(lines))
    return EXIT_REFUTED if mism else EXIT_OK


def cmd_affine(ctx: Ctx) -> int:
    fld, F = ctx.field, ctx.lut
    _no_csv(ctx, "affine")
    report: dict = {"field": str(fld.spec), "function": ctx.func_text}
    refuted = False
    if ctx.args.frobenius:
        fr = frobenius_conjugacy_audit(F, ctx.args.gamma, threads=ctx.threads)
        report["frobenius"] = {
            "gamma": fr.gamma,
            "violations": [[v.c, v.expected, v.got] for v in fr.violations],
            "conjugate_differences": [list(t) for t in fr.conjugate_differences],
        }
        refuted |= not fr.ok
    cs = ctx.c_values(exclude_trivial=True) if (ctx.args.c or ctx.args.all_c or ctx.args.lin or ctx.args.search) else []
    if ctx.args.lin:
        L = parse_affine(ctx.args.lin, fld)
        G = compose(L.to_lut(fld), F)
        rows = []
        for c in cs:
            nec, suf = ln_necessary_check(F, L, c), ln_sufficient_check(F, L, c)
            truth = is_pcn_naive(G, c)
            z = zero_row_bound_audit(F, L, c)
            rows.append({"c": c, "necessary": nec, "sufficient": suf, "composite_pcn": truth,
                         "delta": c_uniformity(G, c), "min_N_with_zero": z.min_with_zero,
                         "bound": z.bound})
            refuted |= (truth and not nec) or (suf and not truth)
        report["lin"] = format_affine(L)
        report["per_c"] = rows
    if ctx.args.search:
        found = {}
        for c in cs:
            Ls = search_linear_for_pcn(F, c, ctx.args.max_terms, ctx.args.budget, threads=ctx.threads)
            found[str(c)] = [format_affine(L) for L in Ls]
        report["search"] = found
    if ctx.args.format == "json":
        _emit(ctx, _dumps(report))
    else:
        lines = [f"{ctx.func_text} over {fld.spec}"]
        if "frobenius" in report:
            fr = report["frobenius"]
            lines.append(f"Frobenius conjugacy (gamma={fr['gamma']}): {len(fr['violations'])} violations, "
                         f"{len(fr['conjugate_differences'])} c with delta(c) != delta(c^p)")
        for r in report.get("per_c", []):
            lines.append(f"c={ctx.elem(r['c'])}: necessary {r['necessary']}, sufficient {r['sufficient']}, "
                         f"L o F PcN {r['composite_pcn']} (delta {r['delta']}), min|N(a,F)| {r['min_N_with_zero']} vs {r['bound']}")
        for c, Ls in report.get("search", {}).items():
            lines.append(f"c={c}: {len(Ls)} linear maps" + (f", first {Ls[0]}" if Ls else ""))
        _emit(ctx, "\n".join(lines))
    return EXIT_REFUTED if refuted else EXIT_OK


def cmd_reproduce(ctx: Ctx) -> int:
    names = list(SCENARIOS) if ctx.args.name == "all" else [ctx.args.name]
    for n in names:
        if n not in SCENARIOS:
            raise UsageError(f"unknown scenario {n!r}; valid names: {', '.join(SCENARIOS)}, all")
    results = [reproduce(n) for n in names]
    _no_csv(ctx, "reproduce")
    if ctx.args.format == "json":
        _emit(ctx, _dumps([r.to_dict() for r in results]))
    else:
        _emit(ctx, "\n".join(r.to_text() for r in results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_REFUTED


def cmd_bench(ctx: Ctx) -> int:
    _no_csv(ctx, "bench")
    methods = tuple(ctx.args.methods) if ctx.args.methods else METHODS
    strict = bool(ctx.args.methods)
    if ctx.args.scale:
        luts = [random_permutations(get_field(2, n), 1, ctx.args.seed)[0].lut for n in ctx.args.scale]
    elif ctx.args.func:
        luts = [ctx.lut]
    else:
        luts = [random_permutations(ctx.field, 1, ctx.args.seed)[0].lut]
    reports = [run_bench(F, methods, ctx.args.runs, ctx.args.triple_budget, strict) for F in luts]
    out = {"reports": [r.to_dict() for r in reports]}
    if len(reports) > 1 and all("triple" in r.timings and "ratio" in r.timings for r in reports):
        sp, mono = scaling_advantage(reports)
        out["scaling"] = {"speedups": sp, "monotone": mono}
    if ctx.args.format == "json":
        _emit(ctx, _dumps(out))
    else:
        lines = []
        for r in reports:
            lines.append(f"{r.field}: agree={r.agree} ddt build {r.ddt_build_s * 1e3:.3f} ms")
            for t in r.timings.values():
                lines.append(f"  {t.method:<14} {t.median_s * 1e3:10.3f} ms  ops {t.operations:>14,}  |S|={len(t.pcn_set)}")
            for m, why in r.refused.items():
                lines.append(f"  {m:<14} refused: {why}")
            if "occupancy" in r.timings and "ratio" in r.timings:
                lines.append(f"  speedup ratio vs occupancy: {r.speedup('occupancy', 'ratio'):.1f}x")
        if "scaling" in out:
            lines.append(f"triple/ratio speedups {['%.1f' % s for s in out['scaling']['speedups']]} monotone={out['scaling']['monotone']}")
        _emit(ctx, "\n".join(lines))
    ok = all(r.agree for r in reports) and out.get("scaling", {}).get("monotone", True)
    return EXIT_OK if ok else EXIT_REFUTED


COMMANDS = {
    "analyze": (cmd_analyze, "delta(c,F) per c with PcN/APcN flags"),
    "enumerate-c": (cmd_enumerate_c, "every c for which F is PcN (ratio elimination)"),
    "shifts": (cmd_shifts, "bad-shift sets, subspace test and trichotomy"),
    "walsh": (cmd_walsh, "Walsh spectrum, nonlinearity and spectral PcN checks"),
    "ddt": (cmd_ddt, "DDT or cDDT dump and round-trip"),
    "quadratic": (cmd_quadratic, "E(a,F) subspaces and DO PcN characterizations"),
    "affine": (cmd_affine, "linear-composition checks, Frobenius audit and search"),
    "reproduce": (cmd_reproduce, "named reproduction scenarios"),
    "bench": (cmd_bench, "timing of the PcN classification methods"),
}


def _common() -> argparse.ArgumentParser:
    g = argparse.ArgumentParser(add_help=False)
    g.add_argument("--field", nargs="+", metavar="KEY=VAL", help="e.g. p=2 n=6 [modulus=91]")
    g.add_argument("--func", help='function spec, e.g. "mono d=5"')
    g.add_argument("--c", nargs="+", type=lambda s: int(s, 0), metavar="ELEM")
    g.add_argument("--all-c", action="store_true")
    g.add_argument("--format", choices=("text", "json", "csv"), default="text")
    g.add_argument("--threads", type=int, default=None)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--verify", action="store_true", help="cross-check against brute-force oracles")
    g.add_argument("--out", metavar="PATH")
    g.add_argument("--pretty", action="store_true", help="print elements as polynomials in m")
    return g


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pcnkit", description="c-differential analysis over finite fields")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()
    ps = {}
    for name, (_, help_) in COMMANDS.items():
        ps[name] = sub.add_parser(name, parents=[common], help=help_, description=help_)
    for name in ("walsh", "ddt"):
        ps[name].add_argument("--dump", metavar="PATH", help="write the table as CSV")
    ps["ddt"].add_argument("--load", metavar="PATH", help="compare a CSV dump with the computed table")
    ps["quadratic"].add_argument("--gold-k", type=int, help="check the trace predicate for x^((2^k+1)/2)")
    ps["quadratic"].add_argument("--no-hypothesis", action="store_true", help="evaluate the predicate even when gcd(2^k+1, 2^n-1) != 1")
    ps["affine"].add_argument("--lin", help='linear map, e.g. "lin 0:9 2:1"')
    ps["affine"].add_argument("--frobenius", action="store_true")
    ps["affine"].add_argument("--gamma", type=int, default=0)
    ps["affine"].add_argument("--search", action="store_true")
    ps["affine"].add_argument("--max-terms", type=int, default=3)
    ps["affine"].add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    ps["reproduce"].add_argument("name", help=f"one of {', '.join(SCENARIOS)}, or all")
    ps["bench"].add_argument("--runs", type=int, default=5)
    ps["bench"].add_argument("--methods", nargs="+", choices=METHODS)
    ps["bench"].add_argument("--triple-budget", type=int, default=DEFAULT_TRIPLE_BUDGET)
    ps["bench"].add_argument("--scale", nargs="+", type=int, metavar="N", help="random permutations of GF(2^N)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    ctx = Ctx(args)
    try:
        return COMMANDS[args.command][0](ctx)
    except (ParseError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, ArgumentError, UnsupportedOperation, BudgetExceeded, FieldValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except AssertionError as e:
        print(f"refuted: {e}", file=sys.stderr)
        return EXIT_REFUTED
    except PcnkitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
