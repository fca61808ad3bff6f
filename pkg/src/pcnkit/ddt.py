"""Difference distribution tables, c-DDTs and c-differential spectra."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, UnsupportedOperation
from .field import Field, FieldSpec, get_field
from .functions import Lut

_CHUNK_CELLS = 1 << 21


def row_chunks(q: int, rows=None):
    rows = np.arange(q, dtype=np.int64) if rows is None else np.asarray(rows, dtype=np.int64)
    step = max(1, _CHUNK_CELLS // q)
    return [rows[i : i + step] for i in range(0, rows.size, step)]


def derivative_values(lut: Lut, c: int, rows) -> np.ndarray:
    """D[k, x] = F(x + rows[k]) - c F(x)."""
    fld = lut.field
    x = fld.elements()
    shifted = lut.values[fld.add(np.asarray(rows)[:, None], x[None, :])]
    cf = lut.values if c == 1 else fld.mul(c, lut.values)
    return fld.sub(shifted, cf[None, :])


def _count_rows(lut: Lut, c: int, rows) -> np.ndarray:
    q = lut.field.q
    d = derivative_values(lut, c, rows)
    idx = (np.arange(len(rows), dtype=np.int64)[:, None] * q + d).ravel()
    return np.bincount(idx, minlength=len(rows) * q).reshape(len(rows), q).astype(np.int32)


def _map(fn, items, threads):
    if threads and threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, items))
    return [fn(it) for it in items]


def _table(lut: Lut, c: int, threads=None) -> np.ndarray:
    parts = _map(lambda r: _count_rows(lut, c, r), row_chunks(lut.field.q), threads)
    out = np.concatenate(parts, axis=0)
    out.setflags(write=False)
    return out


class DDTable:
    """counts[a, b] = #{x : F(x+a) - c F(x) = b}; c = 1 for the classical DDT."""

    def __init__(self, field: Field, counts, c: int = 1, function: str | None = None):
        arr = np.array(counts, dtype=np.int32)
        if arr.shape != (field.q, field.q):
            raise ArgumentError(f"table must be {field.q}x{field.q}")
        arr.setflags(write=False)
        self.field = field
        self.counts = arr
        self.c = field.validate(c)
        self.function = function

    def __eq__(self, other):
        return (
            isinstance(other, DDTable)
            and other.field == self.field
            and other.c == self.c
            and np.array_equal(other.counts, self.counts)
        )

    def __repr__(self):
        kind = "DDT" if self.c == 1 else f"cDDT(c={self.c})"
        return f"{kind} over GF({self.field.q}), max {self.uniformity()}"

    def uniformity(self) -> int:
        body = self.counts[1:] if self.c == 1 else self.counts
        return int(body.max()) if body.size else 0

    def is_permutation_table(self) -> bool:
        """For the classical DDT: True iff F is a permutation (no a != 0 hits b = 0)."""
        if self.c != 1:
            raise ArgumentError("only meaningful for the classical DDT")
        return not np.any(self.counts[1:, 0])

    # serialization --------------------------------------------------------

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a/b"] + list(range(self.field.q)))
        for a, row in enumerate(self.counts.tolist()):
            w.writerow([a] + row)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, field: Field, c: int = 1) -> "DDTable":
        rows = list(csv.reader(io.StringIO(text)))
        header, body = rows[0], rows[1:]
        if [int(v) for v in header[1:]] != list(range(field.q)):
            raise ArgumentError("csv header does not list b = 0..q-1")
        if [int(r[0]) for r in body] != list(range(field.q)):
            raise ArgumentError("csv rows are not a = 0..q-1")
        return cls(field, [[int(v) for v in r[1:]] for r in body], c)

    def to_json(self, indent=None) -> str:
        doc = {"field": str(self.field.spec), "function": self.function}
        if self.c != 1:
            doc["c"] = self.c
        doc["rows"] = self.counts.tolist()
        return json.dumps(doc, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "DDTable":
        doc = json.loads(text)
        fld = get_field(FieldSpec.parse(doc["field"]))
        return cls(fld, doc["rows"], doc.get("c", 1), doc.get("function"))


CDDTable = DDTable


def ddt(F: Lut, threads=None) -> DDTable:
    return DDTable(F.field, _table(F, 1, threads))


def cddt(F: Lut, c: int, threads=None) -> DDTable:
    c = F.field.validate(c)
    return DDTable(F.field, _table(F, c, threads), c)


def c_uniformity(F: Lut, c: int, stop_above: int | None = None) -> int:
    """delta(c, F).

    With ``stop_above`` the scan stops at the first chunk of rows whose max
    exceeds it, and the returned value is then only a lower bound (still
    > stop_above), which is all a classifier needs.
    """
    fld = F.field
    c = fld.validate(c)
    rows = np.arange(1 if c == 1 else 0, fld.q, dtype=np.int64)
    best = 0
    for chunk in row_chunks(fld.q, rows):
        best = max(best, int(_count_rows(F, c, chunk).max()))
        if stop_above is not None and best > stop_above:
            break
    return best


@dataclass(frozen=True)
class CSpectrum:
    field: Field
    values: tuple[int, ...]  # values[c] = delta(c, F)

    def __getitem__(self, c: int) -> int:
        return self.values[c]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.values))

    def by_value(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for c, d in enumerate(self.values):
            out.setdefault(d, []).append(c)
        return dict(sorted(out.items()))


def c_spectrum(F: Lut, threads=None) -> CSpectrum:
    cs = list(range(F.field.q))
    vals = _map(lambda c: c_uniformity(F, c), cs, threads)
    return CSpectrum(F.field, tuple(vals))


@dataclass(frozen=True)
class ClassicalClass:
    delta: int

    @property
    def name(self) -> str:
        return {1: "PN", 2: "APN"}.get(self.delta, f"{self.delta}-uniform")

    def __str__(self):
        return self.name


def classical_class(F: Lut) -> ClassicalClass:
    return ClassicalClass(c_uniformity(F, 1))


def ddt_via_autocorrelation(F: Lut) -> DDTable:
    """DDT recovered from the autocorrelation spectrum (characteristic 2).

    Delta(a, b) = 2^-n sum_u (-1)^{Tr(ub)} C(a, u); each row is one fast
    Walsh-Hadamard transform.
    """
    from .spectral import autocorrelation, fwht, trace_dual_index

    fld = F.field
    if fld.p != 2:
        raise UnsupportedOperation("ddt_via_autocorrelation needs characteristic 2")
    C = autocorrelation(F).values
    # rows indexed by u's coordinate vector, which is its encoding;
    # Tr(ub) = <u, tau(b)> so column tau(b) of the transform holds Delta(a, b)
    spec = fwht(C, axis=1)
    counts = spec[:, trace_dual_index(fld)] >> fld.n
    return DDTable(fld, counts)
