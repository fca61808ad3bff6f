"""Roots of the linearized trinomial x^{p^k} - a x - b over F_{p^n}.

Iterating x^{p^k} = a x + b m = n/gcd(n,k) times gives
x^{p^{km}} = alpha x + beta with

    alpha = a^{(p^{km}-1)/(p^k-1)},
    beta  = sum_{i<m} a^{s_i} b^{p^{ki}},  s_i = (p^{km} - p^{k(i+1)})/(p^k-1).

Since p^{km} is a power of p^n, x^{p^{km}} = x, so every root satisfies
(1 - alpha) x = beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import ArgumentError, ClosedFormMismatch
from .field import Field, kth_root

EXHAUSTIVE_LIMIT = 1 << 20


@dataclass(frozen=True)
class TrinomialRoots:
    count: int
    roots: tuple[int, ...]
    branch: str  # "unique" | "none" | "subspace" | "zero-a"
    alpha: int | None = None
    beta: int | None = None
    closed_form_root_ok: bool | None = None


def _closed_form_params(field: Field, k: int, a: int, b: int):
    p = field.p
    t = gcd(field.n, k)
    m = field.n // t
    pk = p**k
    top = p ** (k * m)
    alpha = field.pow(a, (top - 1) // (pk - 1))
    beta = 0
    for i in range(m):
        s_i = (top - p ** (k * (i + 1))) // (pk - 1)
        term = field.mul(field.pow(a, s_i), field.frobenius(b, k * i))
        beta = field.add(beta, term)
    return t, m, alpha, beta


def _partial_traces(field: Field, z: int, k: int, m: int) -> list[int]:
    """Z_i = sum_{j<=i} z^{p^{kj}} for i < m."""
    out, acc = [], 0
    for j in range(m):
        acc = field.add(acc, field.frobenius(z, k * j))
        out.append(acc)
    return out


def _particular_root(field: Field, k: int, a: int, b: int, t: int, m: int):
    """One root in the p^t-root branch, plus the homogeneous scale tau.

    With tau^{p^k-1} = a the substitution x = tau*y turns the equation into
    y^{p^k} - y = b', b' = b / tau^{p^k}, solved by
    y = (1/T) sum_i Z_i b'^{p^{ki}} for any z with T = Tr_t^n(z) != 0.
    """
    tau = kth_root(field, a, field.p**k - 1)
    if tau is None:
        raise ClosedFormMismatch(f"no (p^k-1)-th root of a={a} although alpha = 1")
    trt = field.trace_table(t)
    z = int(np.flatnonzero(trt)[0])
    T = int(trt[z])
    bp = field.div(b, field.frobenius(tau, k))
    y = 0
    for i, Zi in enumerate(_partial_traces(field, z, k, m)):
        y = field.add(y, field.mul(Zi, field.frobenius(bp, k * i)))
    y = field.div(y, T)
    return field.mul(tau, y), tau, z


def _termwise_particular_root(field: Field, k: int, a: int, b: int, z: int, m: int) -> int:
    """The particular-root sum with a^{t_i} weights, evaluated term by term (Tr_t^n(z) != 0)."""
    p, n = field.p, field.n
    T = field.trace(z, gcd(n, k))
    acc = 0
    for i, Zi in enumerate(_partial_traces(field, z, k, m)):
        t_i = (p ** (n * m) - p ** (n * (i + 1))) // (p**n - 1)
        term = field.mul(field.mul(Zi, field.pow(a, t_i)), field.frobenius(b, k * i))
        acc = field.add(acc, term)
    return field.div(acc, T)


def evaluate_trinomial(field: Field, k: int, a: int, b: int, x):
    fx = field.frobenius(x, k)
    return field.sub(field.sub(fx, field.mul(a, x)), b)


def exhaustive_roots(field: Field, k: int, a: int, b: int) -> tuple[int, ...]:
    x = field.elements()
    vals = evaluate_trinomial(field, k, a, b, x)
    return tuple(int(r) for r in np.flatnonzero(vals == 0))


def linearized_trinomial_roots(
    field: Field, k: int, a: int, b: int, verify: bool | None = None
) -> TrinomialRoots:
    """All roots of x^{p^k} - a x - b, from the closed form.

    When ``verify`` (default: field size <= 2^20) the result is compared with
    exhaustive evaluation and any disagreement raises ClosedFormMismatch.
    """
    a, b = field.validate(a), field.validate(b)
    if not 1 <= k <= field.n - 1:
        raise ArgumentError(f"k={k} must satisfy 1 <= k <= n-1 = {field.n - 1}")
    if verify is None:
        verify = field.q <= EXHAUSTIVE_LIMIT

    if a == 0:
        # x^{p^k} = b has the single root b^{p^{n-k}}
        res = TrinomialRoots(1, (field.frobenius(b, field.n - k),), "zero-a")
    else:
        t, m, alpha, beta = _closed_form_params(field, k, a, b)
        one = 1
        if alpha != one:
            x = field.div(beta, field.sub(one, alpha))
            res = TrinomialRoots(1, (x,), "unique", alpha, beta)
        elif beta != 0:
            res = TrinomialRoots(0, (), "none", alpha, beta)
        else:
            x0, tau, z = _particular_root(field, k, a, b, t, m)
            sub = field.subfield(t)
            roots = field.add(x0, field.mul(tau, sub))
            root = _termwise_particular_root(field, k, a, b, z, m)
            ok = evaluate_trinomial(field, k, a, b, root) == 0
            res = TrinomialRoots(
                field.p**t,
                tuple(sorted(int(r) for r in roots)),
                "subspace",
                alpha,
                beta,
                bool(ok),
            )

    if verify:
        brute = exhaustive_roots(field, k, a, b)
        if brute != tuple(sorted(res.roots)):
            raise ClosedFormMismatch(
                f"closed form gave {res.count} roots {res.roots[:8]}, exhaustive "
                f"gave {len(brute)} {brute[:8]} (k={k}, a={a}, b={b}, {field.spec})"
            )
    return res
