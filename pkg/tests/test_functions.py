import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pcnkit import (
    AffineMap,
    ArgumentError,
    DOQuadratic,
    Lut,
    Monomial,
    ParseError,
    PreconditionError,
    Univariate,
    compose,
    get_field,
    invert,
    is_permutation,
    parse_affine,
    parse_function,
    scalar_mul,
    to_lut,
)
from pcnkit.functions import (
    ExponentReducedWarning,
    affine_sandwich,
    collision,
    evaluate,
    identity_lut,
    lut_to_univariate,
    reduce_exponent,
)
from pcnkit.parse import format_affine, format_function, parse_functions


def test_evaluate_cube_gf4():
    assert evaluate(Monomial(1, 3), 2, get_field(2, 2)) == 1


def test_permutation_flags():
    assert is_permutation(Monomial(1, 5), get_field(2, 6))
    assert not is_permutation(Monomial(1, 3), get_field(2, 2))


def test_invert_x5_gf32():
    f = get_field(2, 5)
    inv = invert(Monomial(1, 5), f)
    # 5 * 25 = 125 = 1 mod 31
    assert inv == Monomial(1, 25).to_lut(f)
    assert compose(inv, Monomial(1, 5), f) == identity_lut(f)


def test_invert_reports_collision():
    f = get_field(2, 2)
    lut = Monomial(1, 3).to_lut(f)
    assert collision(lut) == (1, 2)
    with pytest.raises(PreconditionError, match="F\\(1\\) = F\\(2\\)"):
        invert(lut)


def test_structured_needs_field():
    with pytest.raises(ArgumentError):
        to_lut(Monomial(1, 3))


def test_lut_validation():
    f = get_field(2, 2)
    with pytest.raises(ArgumentError):
        Lut(f, [0, 1, 2])
    with pytest.raises(ArgumentError):
        Lut(f, [0, 1, 2, 4])


def test_reduce_exponent():
    assert reduce_exponent(1, 16) == 1
    assert reduce_exponent(15, 16) == 15
    assert reduce_exponent(16, 16) == 1
    assert reduce_exponent(0, 16) == 0
    f = get_field(2, 4)
    with pytest.warns(ExponentReducedWarning):
        lut = Monomial(1, 17).to_lut(f)
    assert lut == Monomial(1, 2).to_lut(f)


def test_do_matches_univariate():
    f = get_field(2, 5)
    F = DOQuadratic.from_dicts({(0, 1): 1, (0, 2): 1}, {3: 7}, 4)
    assert F.to_lut(f) == F.to_univariate(2).to_lut(f)
    assert F.to_lut(f) == Univariate.from_dict({3: 1, 5: 1, 8: 7, 0: 4}).to_lut(f)


def test_do_index_checks():
    with pytest.raises(ArgumentError):
        DOQuadratic(((1, 1, 1),))
    with pytest.raises(ArgumentError):
        DOQuadratic.from_dicts({(0, 5): 1}).to_lut(get_field(2, 5))


def test_affine_map():
    f = get_field(2, 4)
    L = AffineMap.from_dict({0: 1, 1: 1}, 3)  # x^2 + x + 3 is 2-to-1
    assert not L.is_permutation(f)
    assert AffineMap.identity().to_lut(f) == identity_lut(f)
    lut = L.to_lut(f)
    x = f.elements()
    assert np.array_equal(lut.values, f.add(f.add(f.pow(x, 2), x), 3))


@pytest.mark.parametrize("pn", [(2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_interpolation_roundtrip(pn):
    f = get_field(*pn)
    rng = np.random.default_rng(7)
    for _ in range(5):
        lut = Lut(f, rng.integers(0, f.q, f.q))
        assert lut_to_univariate(lut).to_lut(f) == lut


def test_scalar_mul_keeps_form():
    f = get_field(2, 4)
    for F in (Monomial(3, 7), Univariate.from_dict({1: 1, 3: 2}), DOQuadratic.from_dicts({(0, 1): 1}, {2: 5}, 1),
              AffineMap.from_dict({1: 2}, 9)):
        G = scalar_mul(6, F, f)
        assert type(G) is type(F)
        assert np.array_equal(G.to_lut(f).values, f.mul(6, to_lut(F, f).values))


def test_affine_sandwich():
    f = get_field(2, 4)
    A1 = AffineMap.from_dict({0: 3}, 1)
    A2 = AffineMap.from_dict({1: 1}, 5)
    A3 = AffineMap.from_dict({0: 2})
    F = Monomial(1, 7)
    G = affine_sandwich(A1, F, A2, A3, f)
    for x in range(16):
        want = f.add(evaluate(A1, evaluate(F, evaluate(A2, x, f), f), f), evaluate(A3, x, f))
        assert G(x) == want
    with pytest.raises(PreconditionError):
        affine_sandwich(AffineMap.from_dict({0: 1, 1: 1}), F, A2, field=f)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([(2, 3), (2, 4), (3, 2)]), st.randoms(use_true_random=False))
def test_invert_is_inverse(pn, rnd):
    f = get_field(*pn)
    perm = list(range(f.q))
    rnd.shuffle(perm)
    F = Lut(f, perm)
    Fi = invert(F)
    assert compose(F, Fi) == identity_lut(f)
    assert compose(Fi, F) == identity_lut(f)


# parsing ------------------------------------------------------------------


def test_parse_examples():
    assert parse_function("mono a=1 d=5") == Monomial(1, 5)
    assert parse_function("poly 3:1 5:1") == Univariate.from_dict({3: 1, 5: 1})
    f = get_field(2, 2)
    assert parse_function("lut 0 1 3 2", f) == Lut(f, [0, 1, 3, 2])
    assert parse_function("mono d=0x22") == Monomial(1, 34)
    assert parse_function("do q:0,1:1 l:2:3 c:1") == DOQuadratic.from_dicts({(0, 1): 1}, {2: 3}, 1)
    assert parse_affine("lin 2:1 0:9") == AffineMap.from_dict({2: 1, 0: 9})
    assert parse_affine("lin 0:1 +g:4") == AffineMap.from_dict({0: 1}, 4)


@pytest.mark.parametrize(
    "F",
    [
        Monomial(3, 5),
        Univariate.from_dict({0: 1, 3: 1, 5: 2}),
        DOQuadratic.from_dicts({(0, 2): 5, (1, 3): 1}, {0: 2}, 7),
        AffineMap.from_dict({1: 2, 3: 1}, 6),
    ],
)
def test_format_roundtrip(F):
    assert parse_function(format_function(F)) == F


def test_lut_roundtrip():
    f = get_field(3, 2)
    lut = Lut(f, [0, 2, 1, 5, 4, 3, 8, 7, 6])
    assert parse_function(format_function(lut), f) == lut


def test_lutfile(tmp_path):
    f = get_field(2, 2)
    p = tmp_path / "s.txt"
    p.write_text("# sbox\n0\n1\n3\n2\n")
    assert parse_function(f"lutfile {p}", f) == Lut(f, [0, 1, 3, 2])


@pytest.mark.parametrize(
    "text,col,token",
    [
        ("mono d=x", 8, "x"),
        ("poly 3:1 5", 10, "5"),
        ("frob d=3", 1, "frob"),
        ("lut 0 1 2", None, None),
        ("lut 0 1 2 9", 11, "9"),
        ("lin 0:1 0:2", 9, "0"),
        ("do q:1,1:1", None, None),
    ],
)
def test_parse_errors_locate_token(text, col, token):
    f = get_field(2, 2)
    with pytest.raises((ParseError, ArgumentError)) as ei:
        parse_function(text, f)
    if col is not None:
        assert isinstance(ei.value, ParseError)
        assert ei.value.col == col
        assert ei.value.token == token


def test_parse_multiple_lines():
    fs = parse_functions("mono d=3\n# comment\n\npoly 1:1\n")
    assert fs == [Monomial(1, 3), Univariate.from_dict({1: 1})]
    with pytest.raises(ParseError) as ei:
        parse_functions("mono d=3\nmono d=q\n")
    assert ei.value.line == 2


def test_format_affine():
    assert format_affine(AffineMap.from_dict({2: 1, 0: 9})) == "lin 0:9 2:1"
