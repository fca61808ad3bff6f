"""Walsh-Hadamard and autocorrelation spectra.

Characteristic 2 tables hold exact integers.  For odd p an entry
sum_x zeta^{Tr(...)} is stored as its count vector N_j = #{x : Tr(...) = j};
the entry vanishes iff all N_j are equal, so zero tests stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .ddt import derivative_values
from .errors import ArgumentError, ClosedFormMismatch, PreconditionError, UnsupportedOperation
from .field import Field
from .functions import Lut


def fwht(a, axis: int = -1) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform along ``axis`` (length 2^k)."""
    x = np.moveaxis(np.array(a, dtype=np.int64), axis, -1)
    lead, N = x.shape[:-1], x.shape[-1]
    if N & (N - 1):
        raise ArgumentError("transform length must be a power of two")
    h = 1
    while h < N:
        x = x.reshape(lead + (N // (2 * h), 2, h))
        u, v = x[..., 0, :], x[..., 1, :]
        x = np.stack((u + v, u - v), axis=-2).reshape(lead + (N,))
        h *= 2
    return np.moveaxis(x, -1, axis)


def trace_dual_index(field: Field) -> np.ndarray:
    """tau[a] = encoding of the vector (Tr(a x^j))_j, so Tr(a y) = <tau(a), y>."""
    if field.p != 2:
        raise UnsupportedOperation("bit-vector trace duality needs characteristic 2")
    a = field.elements()
    tau = np.zeros(field.q, dtype=np.int64)
    for j in range(field.n):
        tau |= field.trace(field.mul(a, 1 << j)) << j
    return tau


def _sign(tr: np.ndarray) -> np.ndarray:
    return 1 - 2 * tr


@dataclass(frozen=True, eq=False)
class WalshTable:
    """W[a, b] = sum_x zeta^{Tr(b F(x) - a x)}.

    ``values`` is a (q, q) integer matrix for p = 2 and a (q, q, p) count
    array for odd p.
    """

    field: Field
    values: np.ndarray
    _cache: dict = dc_field(default_factory=dict, repr=False)

    @property
    def p(self):
        return self.field.p

    @cached_property
    def nonzero_mask(self) -> np.ndarray:
        if self.p == 2:
            return self.values != 0
        v = self.values
        return ~np.all(v == v[..., :1], axis=-1)

    def support(self, a: int) -> np.ndarray:
        """S_a = {b : W(a, b) != 0}."""
        return np.flatnonzero(self.nonzero_mask[a])

    @cached_property
    def support_sizes(self) -> np.ndarray:
        """R_a for every a."""
        return self.nonzero_mask.sum(axis=1)

    def complex_values(self) -> np.ndarray:
        if self.p == 2:
            return self.values.astype(np.complex128)
        zeta = np.exp(2j * np.pi * np.arange(self.p) / self.p)
        return self.values @ zeta

    def magnitudes(self) -> np.ndarray:
        if self.p == 2:
            return np.abs(self.values).astype(np.float64)
        return np.abs(self.complex_values())


@dataclass(frozen=True, eq=False)
class AutocorrTable:
    """C[a, u] = sum_x zeta^{Tr(u (F(x+a) - F(x)))}; count vectors for odd p."""

    field: Field
    values: np.ndarray


def _walsh_char2(F: Lut) -> np.ndarray:
    fld = F.field
    b = fld.elements()
    signs = _sign(fld.trace(fld.mul(b[:, None], F.values[None, :])))
    H = fwht(signs, axis=1)  # H[b, v] = sum_x (-1)^{Tr(bF(x)) + <v, x>}
    return np.ascontiguousarray(H[:, trace_dual_index(fld)].T)


def _walsh_counts_odd(F: Lut) -> np.ndarray:
    fld = F.field
    q, p = fld.q, fld.p
    x = fld.elements()
    TA = fld.trace(fld.mul(x[:, None], x[None, :]))  # TA[a, x] = Tr(a x)
    out = np.zeros((q, q, p), dtype=np.int32)
    offs = (np.arange(q, dtype=np.int64) * p)[:, None]
    for b in range(q):
        tb = fld.trace(fld.mul(b, F.values))
        diff = (tb[None, :] - TA) % p
        out[:, b, :] = np.bincount((offs + diff).ravel(), minlength=q * p).reshape(q, p)
    return out


def walsh_direct(F: Lut, a: int, b: int) -> complex | int:
    """One entry by direct summation (oracle)."""
    fld = F.field
    x = fld.elements()
    t = fld.trace(fld.sub(fld.mul(b, F.values), fld.mul(a, x)))
    if fld.p == 2:
        return int(_sign(t).sum())
    return complex(np.exp(2j * np.pi * t / fld.p).sum())


def walsh(F: Lut, verify_samples: int = 16, seed: int = 0) -> WalshTable:
    """Full Walsh table, spot-checked against direct summation."""
    fld = F.field
    if fld.p == 2:
        vals = _walsh_char2(F)
    else:
        vals = _walsh_counts_odd(F)
    vals.setflags(write=False)
    table = WalshTable(fld, vals)
    rng = np.random.default_rng(seed)
    for a, b in rng.integers(0, fld.q, size=(verify_samples, 2)).tolist():
        direct = walsh_direct(F, a, b)
        fast = table.complex_values()[a, b] if fld.p != 2 else int(vals[a, b])
        if fld.p == 2:
            ok = direct == fast
        else:
            ok = abs(direct - fast) <= 1e-9 * max(1.0, abs(direct))
        if not ok:
            raise ClosedFormMismatch(f"walsh fast path disagrees at ({a}, {b})")
    return table


def autocorrelation(F: Lut) -> AutocorrTable:
    """Characteristic 2: from the Walsh table, C(a,u) = 2^-n sum_w (-1)^{Tr(wa)} W(w,u)^2."""
    fld = F.field
    if fld.p != 2:
        return autocorrelation_direct(F)
    W = _walsh_char2(F)
    G = fwht(W * W, axis=0)  # G[v, u] = sum_w W(w,u)^2 (-1)^{<w, v>}
    C = G[trace_dual_index(fld), :] >> fld.n
    C.setflags(write=False)
    return AutocorrTable(fld, C)


def autocorrelation_direct(F: Lut) -> AutocorrTable:
    """Direct O(q^3) summation; count vectors for odd p."""
    fld = F.field
    q, p = fld.q, fld.p
    u = fld.elements()
    if p == 2:
        out = np.zeros((q, q), dtype=np.int64)
    else:
        out = np.zeros((q, q, p), dtype=np.int32)
    for a in range(q):
        d = derivative_values(F, 1, [a])[0]
        t = fld.trace(fld.mul(u[:, None], d[None, :]))
        if p == 2:
            out[a] = _sign(t).sum(axis=1)
        else:
            offs = (np.arange(q, dtype=np.int64) * p)[:, None]
            out[a] = np.bincount((offs + t).ravel(), minlength=q * p).reshape(q, p)
    out.setflags(write=False)
    return AutocorrTable(fld, out)


def _need_char2(fld: Field, what: str):
    if fld.p != 2:
        raise UnsupportedOperation(f"{what} is defined here for characteristic 2 only")


def nonlinearity(F: Lut, table: WalshTable | None = None) -> int:
    fld = F.field
    _need_char2(fld, "nonlinearity")
    W = (table or walsh(F)).values
    return (1 << (fld.n - 1)) - int(np.abs(W[:, 1:]).max()) // 2


def nl_summary(F: Lut, table: WalshTable | None = None) -> dict:
    fld = F.field
    _need_char2(fld, "nonlinearity")
    W = (table or walsh(F)).values
    body = np.abs(W[:, 1:])
    a, b = np.unravel_index(int(body.argmax()), body.shape)
    mx = int(body[a, b])
    return {
        "field": str(fld.spec),
        "nl": (1 << (fld.n - 1)) - mx // 2,
        "max_abs_walsh": mx,
        "argmax": [int(a), int(b) + 1],
    }


def _c_columns(fld: Field, c: int) -> np.ndarray:
    return fld.mul(c, fld.elements())


def _check_c(fld: Field, c: int):
    c = fld.validate(c)
    if c in (0, 1):
        raise ArgumentError("c must lie outside {0, 1}")
    return c


def pcn_walsh_product_check(F: Lut, c: int, table: WalshTable | None = None) -> bool:
    """W(a,b) W(a,cb) = 2^{2n} at (0,0) and 0 elsewhere."""
    fld = F.field
    _need_char2(fld, "the Walsh product check")
    c = _check_c(fld, c)
    W = (table or walsh(F)).values
    P = W * W[:, _c_columns(fld, c)]
    if P[0, 0] != 1 << (2 * fld.n):
        return False
    P = P.copy()
    P[0, 0] = 0
    return not P.any()


def quartic_walsh_sum(F: Lut, c: int, table: WalshTable | None = None) -> int:
    """sum_{a,b} W(a,b)^2 W(a,cb)^2, exact."""
    fld = F.field
    _need_char2(fld, "the quartic sum")
    c = fld.validate(c)
    W = (table or walsh(F)).values
    W2 = W * W
    prod = W2 * W2[:, _c_columns(fld, c)]
    return sum(int(r) for r in prod.sum(axis=1, dtype=np.int64))


est20_quartic_identity = quartic_walsh_sum


@dataclass(frozen=True)
class SparsityReport:
    c: int
    holds: bool
    witnesses: dict[int, int]  # a -> some b != 0 with b, cb both in S_a


def walsh_sparsity_check(F: Lut, c: int, table: WalshTable | None = None) -> SparsityReport:
    fld = F.field
    _need_char2(fld, "the sparsity check")
    c = _check_c(fld, c)
    mask = (table or walsh(F)).nonzero_mask
    both = mask & mask[:, _c_columns(fld, c)]
    both[:, 0] = False
    both[0, :] = False
    wit = {int(a): int(np.flatnonzero(both[a])[0]) for a in np.flatnonzero(both.any(axis=1))}
    return SparsityReport(c, not wit, wit)


@dataclass(frozen=True)
class BoundRow:
    a: int
    support_size: int
    max_abs: int
    support_bound_ok: bool  # 2t R_a <= (2^n-1)(t+1)
    max_bound_ok: bool  # max^2 R_a >= 2^{2n}
    alt_max_bound_ok: bool  # max^2 (2^n - ceil(t/2)) >= 2^{2n}, logged only


@dataclass(frozen=True)
class NonlinearityBoundReport:
    c: int
    order: int
    nl: int
    rows: tuple[BoundRow, ...]
    scv_applicable: bool
    scv_ok: bool | None
    closed_form_bound: float
    closed_form_bound_holds: bool

    @property
    def ok(self) -> bool:
        rows_ok = all(r.support_bound_ok and r.max_bound_ok for r in self.rows)
        return rows_ok and self.scv_ok is not False


def pcn_nonlinearity_bounds(F: Lut, c: int, table: WalshTable | None = None) -> NonlinearityBoundReport:
    from .pcn import is_pcn_naive

    fld = F.field
    _need_char2(fld, "the nonlinearity bounds")
    c = _check_c(fld, c)
    if not F.is_permutation() or not is_pcn_naive(F, c):
        raise PreconditionError(f"F is not a PcN permutation for c={c}")
    n, q = fld.n, fld.q
    t = fld.multiplicative_order(c)
    tab = table or walsh(F)
    W = tab.values
    rows = []
    for a in range(1, q):
        R = int(tab.support_sizes[a])
        mx = int(np.abs(W[a]).max())
        rows.append(
            BoundRow(
                a,
                R,
                mx,
                2 * t * R <= (q - 1) * (t + 1),
                mx * mx * R >= 1 << (2 * n),
                mx * mx * (q - (t + 1) // 2) >= 1 << (2 * n),
            )
        )
    nl = nonlinearity(F, tab)
    scv = t == q - 1 and n % 2 == 1
    scv_ok = nl < (1 << (n - 1)) - (1 << ((n - 1) // 2)) if scv else None
    bound = 2.0 ** (n - 1) - 2.0 ** ((n - 1) / 2) * math.sqrt(q - 1)
    return NonlinearityBoundReport(c, t, nl, tuple(rows), scv, scv_ok, bound, nl <= bound)
