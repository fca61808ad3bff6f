"""Scalar polynomial arithmetic over the prime field F_p.

Polynomials are lists of ints, constant term first. These helpers back field
construction (irreducibility, primitive search); the vectorized hot path
lives in :mod:`pcnkit.field`.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m by trial division."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def to_digits(e: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        e, r = divmod(e, p)
        out.append(r)
    return out


def from_digits(digits, p: int) -> int:
    e = 0
    for d in reversed(list(digits)):
        e = e * p + int(d)
    return e


def trim(a: list[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo a monic-or-not polynomial m."""
    a = trim(a)
    m = trim(m)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p) if p > 2 else 1
    while len(a) - 1 >= dm and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        a = trim(a)
    return a


def poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return trim(out)


def poly_mulmod(a, b, m, p):
    return poly_mod(poly_mul(a, b, p), m, p)


def poly_powmod(a: list[int], k: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(a, m, p)
    while k:
        if k & 1:
            result = poly_mulmod(result, base, m, p)
        base = poly_mulmod(base, base, m, p)
        k >>= 1
    return result


def poly_eval(f: list[int], x: list[int], m: list[int], p: int) -> list[int]:
    """Evaluate f (coefficients in F_p) at x, reducing modulo m. Horner."""
    acc: list[int] = []
    for coef in reversed(f):
        acc = poly_mulmod(acc, x, m, p)
        if coef:
            acc = acc or [0]
            acc[0] = (acc[0] + coef) % p
            acc = trim(acc)
    return acc


@lru_cache(maxsize=None)
def _monic_polys(p: int, d: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(low) + (1,) for low in product(range(p), repeat=d))


def is_irreducible(f: list[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= deg/2."""
    f = trim(f)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if f[0] == 0:
        return False
    for d in range(1, n // 2 + 1):
        for g in _monic_polys(p, d):
            if not poly_mod(f, list(g), p):
                return False
    return True


def is_primitive(f: list[int], p: int) -> bool:
    """True iff f is irreducible and the class of x generates the unit group."""
    f = trim(f)
    n = len(f) - 1
    if not is_irreducible(f, p):
        return False
    order = p**n - 1
    if n == 1:
        # F_p[x]/(f): x is the residue -f0/f1
        r = (-f[0] * pow(f[1], p - 2, p)) % p
        return r != 0 and all(pow(r, order // q, p) != 1 for q in prime_factors(order))
    x = [0, 1]
    for q in prime_factors(order):
        if poly_powmod(x, order // q, f, p) == [1]:
            return False
    return True
