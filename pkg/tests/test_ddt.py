import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_cddt, random_perm
from pcnkit import (
    ArgumentError,
    Lut,
    Monomial,
    UnsupportedOperation,
    c_spectrum,
    c_uniformity,
    cddt,
    classical_class,
    ddt,
    ddt_via_autocorrelation,
    get_field,
)
from pcnkit.ddt import DDTable
from pcnkit.functions import identity_lut
from pcnkit.pcn import inverse_c_duality_check, outer_inner_duality_check


def test_identity_gf4():
    f = get_field(2, 2)
    D = ddt(identity_lut(f))
    assert np.array_equal(D.counts, 4 * np.eye(4, dtype=int))
    assert D == ddt_via_autocorrelation(identity_lut(f))


def test_gold_cube_gf8_is_apn():
    f = get_field(2, 3)
    D = ddt(Monomial(1, 3).to_lut(f))
    for a in range(1, 8):
        assert sorted(D.counts[a].tolist()) == [0, 0, 0, 0, 2, 2, 2, 2]
    assert classical_class(Monomial(1, 3).to_lut(f)).name == "APN"


def test_square_gf9_is_pn():
    f = get_field(3, 2)
    F = Monomial(1, 2).to_lut(f)
    assert np.all(ddt(F).counts[1:] == 1)
    assert classical_class(F).name == "PN"


def test_x34_gf64_uniformity_4(gf64):
    F = Monomial(1, 34).to_lut(gf64)
    D = ddt(F)
    body = D.counts[1:]
    assert set(body[body > 0].tolist()) == {4}
    assert str(classical_class(F)) == "4-uniform"


@pytest.mark.parametrize("pn", [(2, 3), (2, 4), (3, 2), (5, 1)])
def test_cddt_matches_brute_force(pn, rng):
    f = get_field(*pn)
    for _ in range(3):
        F = Lut(f, rng.integers(0, f.q, f.q))
        for c in range(f.q):
            assert np.array_equal(cddt(F, c).counts, brute_cddt(F, c))


def test_rows_sum_to_q(rng):
    f = get_field(3, 3)
    F = random_perm(f, rng)
    for c in (0, 1, 2, 13):
        assert np.all(cddt(F, c).counts.sum(axis=1) == f.q)


def test_uniformity_conventions():
    f = get_field(2, 4)
    F = identity_lut(f)
    # row a = 0 of the classical DDT is excluded, for c != 1 it is not
    assert c_uniformity(F, 1) == 16
    assert ddt(F).uniformity() == 16
    assert c_uniformity(F, 0) == 1
    assert c_uniformity(F, 5) == 1
    assert c_uniformity(Monomial(1, 3).to_lut(f), 1) == 2


def test_c0_is_one_for_permutations(rng):
    f = get_field(2, 5)
    for _ in range(5):
        assert c_uniformity(random_perm(f, rng), 0) == 1


def test_stop_above_is_lower_bound(rng):
    f = get_field(2, 6)
    F = Lut(f, rng.integers(0, 64, 64))
    full = c_uniformity(F, 7)
    part = c_uniformity(F, 7, stop_above=1)
    assert 1 < part <= full


def test_spectrum_threads_identical(gf64):
    F = Monomial(1, 5).to_lut(gf64)
    assert c_spectrum(F, threads=1) == c_spectrum(F, threads=3)
    assert ddt(F, threads=1) == ddt(F, threads=4)
    s = c_spectrum(F)
    assert s.by_value()[1] == [0, 14, 15]


def test_autocorrelation_route_random(rng):
    f = get_field(2, 4)
    for _ in range(50):
        F = Lut(f, rng.integers(0, 16, 16))
        assert ddt_via_autocorrelation(F) == ddt(F)


def test_autocorrelation_route_x5(gf64):
    F = Monomial(1, 5).to_lut(gf64)
    assert ddt_via_autocorrelation(F) == ddt(F)


def test_autocorrelation_route_needs_char2():
    with pytest.raises(UnsupportedOperation):
        ddt_via_autocorrelation(identity_lut(get_field(3, 2)))


def test_csv_json_roundtrip(gf64):
    F = Monomial(1, 34).to_lut(gf64)
    D = ddt(F)
    assert DDTable.from_csv(D.to_csv(), gf64) == D
    assert DDTable.from_json(D.to_json()) == D
    C = cddt(F, 14)
    assert DDTable.from_json(C.to_json()) == C


def test_csv_header_checked(gf64):
    D = ddt(identity_lut(get_field(2, 2)))
    bad = D.to_csv().replace("a/b,0,1,2,3", "a/b,0,1,3,2")
    with pytest.raises(ArgumentError):
        DDTable.from_csv(bad, get_field(2, 2))


def test_permutation_table_flag(rng):
    f = get_field(2, 4)
    assert ddt(random_perm(f, rng)).is_permutation_table()
    assert not ddt(Monomial(1, 3).to_lut(f)).is_permutation_table()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 3), (2, 4), (3, 2), (5, 1), (7, 1)]), st.randoms(use_true_random=False), st.data())
def test_duality_identities(pn, rnd, data):
    f = get_field(*pn)
    perm = list(range(f.q))
    rnd.shuffle(perm)
    F = Lut(f, perm)
    c = data.draw(st.integers(1, f.q - 1))
    assert inverse_c_duality_check(F, c)
    assert outer_inner_duality_check(F, c)
