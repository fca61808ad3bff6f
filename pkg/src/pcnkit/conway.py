"""Built-in default moduli (Conway polynomials), constant term first."""

from __future__ import annotations

from itertools import product

from .polyfp import divisors, is_primitive, poly_eval, poly_powmod

CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 15): (1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (5, 5): (3, 4, 0, 0, 0, 1),
    (5, 6): (2, 0, 1, 4, 1, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
    (7, 6): (3, 6, 4, 5, 1, 0, 1),
}


def conway_search(p: int, n: int, lower: dict | None = None) -> tuple[int, ...]:
    """Compute C(p, n) from the definition.

    Candidates x^n + sum (-1)^(n-i) a_i x^i are scanned in lexicographic order
    of (a_{n-1}, ..., a_0); the first primitive one compatible with every
    C(p, d), d | n, d < n, wins. ``lower`` supplies those smaller polynomials
    (defaults to the built-in table).
    """
    lower = CONWAY if lower is None else lower
    for word in product(range(p), repeat=n):
        a = word[::-1]
        if a[0] == 0:
            continue
        f = [((-1) ** (n - i) * a[i]) % p for i in range(n)] + [1]
        if not is_primitive(f, p):
            continue
        for d in divisors(n)[:-1]:
            r = poly_powmod([0, 1], (p**n - 1) // (p**d - 1), f, p)
            if poly_eval(list(lower[(p, d)]), r, f, p):
                break
        else:
            return tuple(f)
    raise ValueError(f"no Conway polynomial found for p={p}, n={n}")
