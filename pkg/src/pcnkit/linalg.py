"""Linear algebra over F_p on digit vectors of field elements."""

from __future__ import annotations

import numpy as np

from .field import Field


class SpanBuilder:
    """Incremental row echelon form; answers membership and keeps a basis."""

    def __init__(self, field: Field):
        self.field = field
        self.basis: list[int] = []
        self._rows: list[tuple[int, list[int]]] = []  # (pivot index, reduced digits)

    def _reduce(self, digits: list[int]) -> list[int]:
        p = self.field.p
        v = list(digits)
        for piv, row in self._rows:
            if v[piv]:
                f = v[piv]
                v = [(vi - f * ri) % p for vi, ri in zip(v, row)]
        return v

    def contains(self, e: int) -> bool:
        return not any(self._reduce(self.field.digits(e)))

    def add(self, e: int) -> bool:
        """Add e to the generating set; True if it enlarged the span."""
        p = self.field.p
        v = self._reduce(self.field.digits(e))
        piv = next((i for i, d in enumerate(v) if d), None)
        if piv is None:
            return False
        inv = pow(v[piv], p - 2, p) if p > 2 else 1
        v = [(d * inv) % p for d in v]
        # keep rows fully reduced against the new pivot
        new_rows = []
        for pv, row in self._rows:
            if row[piv]:
                f = row[piv]
                row = [(ri - f * vi) % p for ri, vi in zip(row, v)]
            new_rows.append((pv, row))
        new_rows.append((piv, v))
        self._rows = new_rows
        self.basis.append(int(e))
        return True

    @property
    def dimension(self) -> int:
        return len(self.basis)


def greedy_basis(field: Field, elements) -> list[int]:
    """Lowest-encoding-first independent subset of ``elements``."""
    sb = SpanBuilder(field)
    for e in sorted(int(x) for x in elements):
        if e and sb.dimension < field.n:
            sb.add(e)
    return sb.basis


def span(field: Field, basis) -> np.ndarray:
    """All F_p-combinations of ``basis``, sorted."""
    pts = np.zeros(1, dtype=np.int64)
    scal = field.prime_subfield
    for b in basis:
        mult = field.mul(scal, int(b))
        pts = field.add(pts[:, None], mult[None, :]).ravel()
    return np.unique(pts)


def complement_basis(field: Field, basis) -> list[int]:
    """Extend ``basis`` by standard vectors p^i; return the added vectors."""
    sb = SpanBuilder(field)
    for b in basis:
        sb.add(b)
    extra = []
    for i in range(field.n):
        if sb.add(field.p**i):
            extra.append(field.p**i)
    return extra


def nullspace_mod_p(M: np.ndarray, p: int) -> list[np.ndarray]:
    """Basis of {v : M v = 0} over F_p, M an (r, c) integer matrix."""
    A = np.array(M, dtype=np.int64) % p
    r, c = A.shape
    pivots = []
    row = 0
    for col in range(c):
        if row >= r:
            break
        nz = np.flatnonzero(A[row:, col])
        if nz.size == 0:
            continue
        k = row + nz[0]
        A[[row, k]] = A[[k, row]]
        A[row] = (A[row] * pow(int(A[row, col]), p - 2, p)) % p if p > 2 else A[row]
        for i in range(r):
            if i != row and A[i, col]:
                A[i] = (A[i] - A[i, col] * A[row]) % p
        pivots.append(col)
        row += 1
    free = [j for j in range(c) if j not in pivots]
    out = []
    for f in free:
        v = np.zeros(c, dtype=np.int64)
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-A[i, f]) % p
        out.append(v)
    return out
