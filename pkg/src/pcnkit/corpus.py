"""Seeded test corpora.  The same seed always yields the same functions."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import BudgetExceeded
from .field import Field
from .functions import AffineMap, DOQuadratic, Lut, Monomial, identity_lut


@dataclass(frozen=True)
class Entry:
    name: str
    function: object  # any FnRepr
    lut: Lut


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_permutations(field: Field, count: int, seed=0) -> list[Entry]:
    rng = _rng(seed)
    out = []
    for k in range(count):
        lut = Lut(field, rng.permutation(field.q))
        out.append(Entry(f"rand{k}", lut, lut))
    return out


def monomial_permutations(field: Field) -> list[Entry]:
    out = []
    for d in range(1, field.q - 1):
        if gcd(d, field.q - 1) == 1:
            F = Monomial(1, d)
            out.append(Entry(f"x^{d}", F, F.to_lut(field)))
    return out


def random_linear_permutation(field: Field, seed=0, max_tries: int = 10_000) -> AffineMap:
    rng = _rng(seed)
    for _ in range(max_tries):
        coeffs = {i: int(rng.integers(0, field.q)) for i in range(field.n)}
        L = AffineMap.from_dict(coeffs)
        if L.coeffs and L.is_permutation(field):
            return L
    raise BudgetExceeded("linear permutation sampling", max_tries, max_tries)


def random_affine_permutation(field: Field, seed=0) -> AffineMap:
    rng = _rng(seed)
    L = random_linear_permutation(field, rng)
    return AffineMap(L.coeffs, int(rng.integers(0, field.q)))


def random_do_permutations(
    field: Field, count: int, seed=0, density: float = 0.4, max_tries: int = 1 << 20, batch: int = 4096
) -> list[Entry]:
    """Distinct DO permutations: random quadratic, linear and constant parts.

    Candidates are tabulated and tested in batches; at most ``max_tries``
    candidates are drawn, so fewer than ``count`` may come back on fields
    where DO permutations are rare.
    """
    rng = _rng(seed)
    n, q = field.n, field.q
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if not pairs:
        return []
    x = field.elements()
    frob = [field.frobenius(x, i) for i in range(n)]
    prods = [field.mul(frob[i], frob[j]) for i, j in pairs]
    out, seen = [], set()
    drawn = 0
    while len(out) < count and drawn < max_tries:
        B = min(batch, max_tries - drawn)
        drawn += B
        qc = np.where(rng.random((B, len(pairs))) < density, rng.integers(1, q, (B, len(pairs))), 0)
        lc = np.where(rng.random((B, n)) < density, rng.integers(1, q, (B, n)), 0)
        const = rng.integers(0, q, B)
        acc = np.repeat(const[:, None], q, axis=1)
        for k, P in enumerate(prods):
            acc = field.add(acc, field.mul(qc[:, k : k + 1], P[None, :]))
        for i in range(n):
            acc = field.add(acc, field.mul(lc[:, i : i + 1], frob[i][None, :]))
        srt = np.sort(acc, axis=1)
        ok = (np.diff(srt, axis=1) != 0).all(axis=1) & qc.any(axis=1)
        for r in np.flatnonzero(ok).tolist():
            key = acc[r].tobytes()
            if key in seen:
                continue
            seen.add(key)
            F = DOQuadratic.from_dicts(
                {pr: int(v) for pr, v in zip(pairs, qc[r]) if v},
                {i: int(v) for i, v in enumerate(lc[r]) if v},
                int(const[r]),
            )
            out.append(Entry(f"do{len(out)}", F, Lut(field, acc[r])))
            if len(out) == count:
                break
    return out


def do_monomial_permutations(field: Field) -> list[Entry]:
    """x^{2^i + 2^j} with i < j that permute the field."""
    out = []
    for j in range(1, field.n):
        for i in range(j):
            d = (1 << i) + (1 << j)
            if gcd(d, field.q - 1) == 1:
                F = DOQuadratic.from_dicts({(i, j): 1})
                out.append(Entry(f"x^{d}", F, F.to_lut(field)))
    return out


def standard_corpus(field: Field, seed=0, n_random: int = 8) -> list[Entry]:
    """Identity, an affine permutation, permutation monomials and random permutations."""
    A = random_affine_permutation(field, seed)
    out = [Entry("identity", identity_lut(field), identity_lut(field))]
    out.append(Entry("affine", A, A.to_lut(field)))
    out += monomial_permutations(field)
    out += random_permutations(field, n_random, seed)
    return out
