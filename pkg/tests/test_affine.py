import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_perm
from pcnkit import AffineMap, ArgumentError, BudgetExceeded, Lut, Monomial, c_uniformity, compose, get_field, is_pcn_naive
from pcnkit.affine import (
    ea_sufficient_check,
    family_size,
    fix_set_rule_check,
    fp_invariance_audit,
    frobenius_conjugacy_audit,
    linear_lut,
    ln_necessary_check,
    ln_sufficient_check,
    search_linear_for_pcn,
    zero_diff_sets,
    zero_row_bound_audit,
)
from pcnkit.corpus import random_affine_permutation, random_do_permutations, random_linear_permutation
from pcnkit.reproduce import L1, L2

IDENT = AffineMap.identity()


def test_fp_invariance_examples():
    f8 = get_field(2, 3)
    r = fp_invariance_audit(Monomial(1, 3), random_affine_permutation(f8, 1), random_affine_permutation(f8, 2), f8)
    assert r.checked == (1,) and r.ok
    f9 = get_field(3, 2)
    r = fp_invariance_audit(Monomial(1, 2), random_affine_permutation(f9, 3), random_affine_permutation(f9, 4), f9)
    assert 2 in r.checked and r.ok
    assert fp_invariance_audit(Monomial(1, 3), IDENT, IDENT, f8).ok


def test_fp_invariance_random_perms(rng):
    for pn in ((2, 4), (3, 2), (5, 1)):
        f = get_field(*pn)
        for s in range(5):
            F = random_perm(f, rng)
            assert fp_invariance_audit(F, random_affine_permutation(f, s), random_affine_permutation(f, s + 9)).ok


def test_frobenius_conjugacy_gamma_sweep():
    f = get_field(2, 4)
    for g in range(16):
        r = frobenius_conjugacy_audit(Monomial(1, 7), g, f)
        assert r.ok
        # x^7 has coefficients in F_2
        assert r.conjugate_differences == ()


def test_frobenius_conjugacy_random(rng):
    f = get_field(3, 2)
    r = frobenius_conjugacy_audit(random_perm(f, rng), 4)
    assert r.ok


def test_fix_set_rule(rng):
    f = get_field(2, 6)
    for F in (Monomial(1, 5).to_lut(f), random_perm(f, rng)):
        for i in range(6):
            assert fix_set_rule_check(F, i) == {}


def test_example_l1(gf64):
    F = Monomial(1, 5).to_lut(gf64)
    for c in (14, 15):
        assert ln_sufficient_check(F, L1, c, gf64)
        assert ln_necessary_check(F, L1, c, gf64)
        assert is_pcn_naive(compose(L1.to_lut(gf64), F), c)


def test_example_l2(gf64):
    F = Monomial(1, 5).to_lut(gf64)
    G = compose(L2.to_lut(gf64), F)
    assert not is_pcn_naive(G, 14)
    assert c_uniformity(G, 14) == 8
    assert not ln_sufficient_check(F, L2, 14, gf64)


def test_identity_l():
    f = get_field(2, 4)
    F = AffineMap.from_dict({1: 5}, 3).to_lut(f)
    for c in range(2, 16):
        assert is_pcn_naive(F, c)
        assert ln_necessary_check(F, IDENT, c)
        assert ln_sufficient_check(F, IDENT, c)


def test_l_must_be_linear_permutation():
    f = get_field(2, 4)
    F = Monomial(1, 7).to_lut(f)
    with pytest.raises(ArgumentError):
        ln_necessary_check(F, AffineMap.from_dict({0: 1, 1: 1}), 2)
    with pytest.raises(ArgumentError):
        ln_sufficient_check(F, AffineMap.from_dict({0: 1}, 3), 2)


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(0, 10**6), st.integers(2, 15))
def test_ln_contracts(rnd, seed, c):
    f = get_field(2, 4)
    perm = list(range(16))
    rnd.shuffle(perm)
    F = Lut(f, perm)
    L = random_linear_permutation(f, seed)
    truth = is_pcn_naive(compose(L.to_lut(f), F), c)
    if truth:
        assert ln_necessary_check(F, L, c)
    if ln_sufficient_check(F, L, c):
        assert truth


def test_zero_diff_sets_include_zero(rng):
    f = get_field(2, 4)
    F = random_perm(f, rng)
    for z in zero_diff_sets(F):
        assert 0 in z


def test_zero_row_bound_example(gf64):
    F = Monomial(1, 5).to_lut(gf64)
    for c in (14, 15):
        r = zero_row_bound_audit(F, L1, c, gf64)
        assert r.composite_pcn
        assert r.bound == 32
        assert (r.min_with_zero, r.min_without_zero) == (48, 47)
        assert r.holds_with_zero and r.holds_without_zero


def test_ea_reduces_to_ln(rng):
    f = get_field(2, 4)
    zero = AffineMap.from_dict({})
    for _ in range(10):
        F = random_perm(f, rng)
        L = random_linear_permutation(f, rng)
        for c in (2, 7, 13):
            assert ea_sufficient_check(F, L, zero, 0, 0, c) == ln_sufficient_check(F, L, c)


def test_ea_implies_pcn():
    f = get_field(2, 4)
    rng = np.random.default_rng(5)
    hits = 0
    pool = [e.lut for e in random_do_permutations(f, 10, seed=2)]
    pool += [random_affine_permutation(f, s).to_lut(f) for s in range(5)]
    for k in range(200):
        F = pool[k % len(pool)]
        L = random_linear_permutation(f, rng)
        Lp = AffineMap.from_dict({int(rng.integers(0, 4)): int(rng.integers(0, 16))})
        g, gp = (int(v) for v in rng.integers(0, 16, 2))
        G = Lut(f, f.add(f.add(L.to_lut(f).values[F.values], Lp.to_lut(f).values), f.add(g, gp)))
        if not G.is_permutation():
            with pytest.raises(ArgumentError):
                ea_sufficient_check(F, L, Lp, g, gp, 2)
            continue
        for c in range(2, 16):
            if ea_sufficient_check(F, L, Lp, g, gp, c):
                hits += 1
                assert is_pcn_naive(G, c)
    assert hits


def test_linear_lut_matches_affine_map(rng):
    for pn in ((2, 5), (3, 3)):
        f = get_field(*pn)
        coeffs = tuple((i, int(rng.integers(1, f.q))) for i in range(f.n))
        assert np.array_equal(linear_lut(f, coeffs), AffineMap(coeffs).to_lut(f).values)


def test_search_gf16():
    f = get_field(2, 4)
    # exhaustive over all linear maps (max_terms=4): no L makes L o x^7 PcN
    F = Monomial(1, 7).to_lut(f)
    for c in range(2, 16):
        assert search_linear_for_pcn(F, c, max_terms=2) == []
    # for a linear F every single-term linear permutation works
    G = Monomial(1, 2).to_lut(f)
    for c in (2, 9):
        found = search_linear_for_pcn(G, c, max_terms=1)
        assert len(found) == 60
        for L in found:
            assert is_pcn_naive(compose(L.to_lut(f), G), c)


def test_search_guards(gf64):
    F = Monomial(1, 5).to_lut(gf64)
    with pytest.raises(ArgumentError):
        search_linear_for_pcn(F, 1)
    with pytest.raises(BudgetExceeded) as ei:
        search_linear_for_pcn(F, 14, max_terms=3)
    assert ei.value.estimate == family_size(6, 64, 3) == 5_060_853


@pytest.mark.slow
def test_search_finds_l1(gf64):
    F = Monomial(1, 5).to_lut(gf64)
    found = search_linear_for_pcn(F, 14, max_terms=2)
    assert L1.linear_part() in found
