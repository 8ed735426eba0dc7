import pytest
from hypothesis import given, strategies as st

from gsplines import polynomial as poly

from oracles import poly_eval

coeffs = st.lists(st.integers(-20, 20), max_size=5).map(poly.strip)
nonzero = coeffs.filter(bool)
POINTS = range(-4, 5)


def agrees(f, g_fn):
    return all(poly_eval(f, a) == g_fn(a) for a in POINTS)


@given(coeffs, coeffs)
def test_arithmetic_matches_evaluation(f, g):
    assert agrees(poly.add(f, g), lambda a: poly_eval(f, a) + poly_eval(g, a))
    assert agrees(poly.sub(f, g), lambda a: poly_eval(f, a) - poly_eval(g, a))
    assert agrees(poly.mul(f, g), lambda a: poly_eval(f, a) * poly_eval(g, a))


@given(coeffs, nonzero)
def test_exact_quotient_of_product(f, g):
    assert poly.exact_quotient(poly.mul(f, g), g) == f


@given(nonzero, nonzero)
def test_exact_quotient_rejects_non_multiples(f, g):
    q = poly.exact_quotient(f, g)
    if q is not None:
        assert poly.mul(q, g) == f


@given(nonzero, nonzero, nonzero)
def test_gcd_divides_and_is_maximal(f, g, h):
    d = poly.gcd(f, g)
    assert poly.exact_quotient(f, d) is not None
    assert poly.exact_quotient(g, d) is not None
    # a common factor planted on purpose must divide the gcd
    d2 = poly.gcd(poly.mul(f, h), poly.mul(g, h))
    assert poly.exact_quotient(d2, poly.positive(h)) is not None


@given(nonzero, nonzero)
def test_lcm_is_common_multiple(f, g):
    m = poly.lcm(f, g)
    assert poly.exact_quotient(m, f) is not None and poly.exact_quotient(m, g) is not None
    assert m[-1] > 0


def test_known_gcd_and_lcm():
    assert poly.gcd((3, 1), (-3, 1)) == (1,)
    assert poly.lcm((3, 1), (-3, 1)) == (-9, 0, 1)
    assert poly.gcd((6, 6), (4, 4)) == (2, 2)
    assert poly.gcd((), (-2, -1)) == (2, 1)


@given(coeffs, st.sampled_from([1, -1]), st.integers(-5, 5))
def test_compose_affine(f, eps, c):
    h = poly.compose_affine(f, eps, c)
    assert agrees(h, lambda a: poly_eval(f, eps * a + c))


@pytest.mark.parametrize("text, expected", [
    ("x^2-9", (-9, 0, 1)),
    ("x**2 - 9", (-9, 0, 1)),
    ("x+3", (3, 1)),
    ("-x + 3", (3, -1)),
    ("2*x^3 - x", (0, -1, 0, 2)),
    ("2x", (0, 2)),
    ("0", ()),
    ("7", (7,)),
])
def test_parse(text, expected):
    assert poly.parse(text) == expected


@pytest.mark.parametrize("f, text", [
    ((-9, 0, 1), "x^2 - 9"),
    ((3, 1), "x + 3"),
    ((3, -1), "-x + 3"),
    ((0, -1, 0, 2), "2x^3 - x"),
    ((), "0"),
    ((-4,), "-4"),
])
def test_render(f, text):
    assert poly.render(f) == text


@given(coeffs)
def test_render_parse_round_trip(f):
    assert poly.parse(poly.render(f)) == f


@pytest.mark.parametrize("bad", ["", "x^", "y+1", "3x^-1", "x^2 +"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        poly.parse(bad)


def test_gf_helpers():
    # x^2 - 9 = x^2 + 1 = (x + 1)^2 mod 2
    assert poly.reduce_mod((-9, 0, 1), 2) == (1, 0, 1)
    assert poly.gcd_mod((0, 0, 0, 0, 0, 0), (), 2) == ()
    assert poly.gcd_mod((6,), (-9, 0, 1), 2) == (1, 0, 1)
    assert not poly.divides_mod((1, 0, 1), (3, 1), 2)
    assert poly.divides_mod((1, 1), (1, 0, 1), 2)
