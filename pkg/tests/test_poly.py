from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lenumbers.poly import (
    Frame,
    ParseError,
    Polynomial,
    apply_frame,
    iomdine,
    parse,
    restrict,
)

XY = ("x", "y")
XYZ = ("x", "y", "z")


def test_parse_both_power_spellings():
    assert parse("x**2 + y^2", XY) == parse("x^2+y^2", XY)


def test_parse_precedence_and_unary_minus():
    p = parse("-x^2*y + 3/2*y - (x - y)^2", XY)
    q = -parse("x", XY) ** 2 * parse("y", XY) + Fraction(3, 2) * parse("y", XY) - (
        parse("x", XY) - parse("y", XY)
    ) ** 2
    assert p == q


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as e:
        parse("x^2 + @", XY)
    assert "6" in str(e.value)


def test_parse_rejects_unknown_variable():
    with pytest.raises(ParseError):
        parse("x + w", XY)


def test_str_orders_terms_by_degree_first():
    assert str(parse("x + y^3 - y", XY)) == "y^3 + x - y"


def test_constant_and_zero_queries():
    z = Polynomial.zero(XY)
    assert z.is_zero and z.constant_term == 0
    assert parse("1/3", XY).constant_term == Fraction(1, 3)


def test_degree_mult_homogeneous():
    f = parse("x^2*y + x^4", XY)
    assert f.total_degree() == 4
    assert f.mult_origin() == 3
    assert f.homogeneous_degree() is None
    assert parse("x^2*y", XY).homogeneous_degree() == 3
    with pytest.raises(ValueError):
        Polynomial.zero(XY).total_degree()


def test_partial_derivative():
    f = parse("x^3*y^2 + y", XY)
    assert f.partial(0) == parse("3*x^2*y^2", XY)
    assert f.partial(1) == parse("2*x^3*y + 1", XY)


def test_set_var_zero_drops_the_variable():
    f = parse("x^2 + y*z + z^3", XYZ)
    g = f.set_var_zero(2)
    assert g.vars == XY
    assert g == parse("x^2", XY)


coeffs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def polys(draw, vars=XY, max_terms=5, max_exp=4):
    n = len(vars)
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, max_exp)) for _ in range(n))
        terms[e] = draw(coeffs)
    return Polynomial(vars, terms)


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero(XY)


@given(polys())
def test_parse_str_round_trip(p):
    assert parse(str(p), XY) == p


@given(st.integers(0, 10**6))
def test_frame_inverse_round_trips(seed):
    F = Frame.random(3, seed)
    f = parse("x^3 - 2*x*y*z + z^2", XYZ)
    G = Frame(tuple(tuple(r) for r in F.inverse_rows()))
    assert apply_frame(apply_frame(f, F), G) == f


def test_frame_permutation_rotation():
    F = Frame.rotation(3)
    f = parse("x^2*y", XYZ)
    # new coordinates are (y, z, x), so old x reads as the last new one
    assert apply_frame(f, F) == parse("x*z^2", XYZ)


def test_frame_rejects_singular_matrix():
    with pytest.raises(ValueError):
        Frame(((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4))))


def test_apply_frame_size_mismatch():
    with pytest.raises(ValueError):
        apply_frame(parse("x", XY), Frame.identity(3))


def test_iomdine_shape():
    f = parse("x^2+y^3", XY)
    g, F = iomdine(f, 3, 2)
    assert g == parse("x^2+y^3+2*x^3", XY)
    assert F.matrix == Frame.rotation(2).matrix
    with pytest.raises(ValueError):
        iomdine(f, 1, 1)
    with pytest.raises(ValueError):
        iomdine(f, 3, 0)


def test_restrict_keeps_prefix_variables():
    f = parse("x^2 + y^2 + z^5", XYZ)
    g = restrict(f, 2, seed=5)
    assert g.vars == XY
    assert restrict(f, 3, seed=5) == f
    with pytest.raises(ValueError):
        restrict(f, 0, seed=5)


@given(st.integers(0, 10**6))
def test_restrict_preserves_vanishing_at_origin(seed):
    f = parse("x^2*y + z^3", XYZ)
    g = restrict(f, 2, seed=seed)
    assert g.constant_term == 0
    assert g.is_zero or g.mult_origin() >= f.mult_origin()


@settings(max_examples=30)
@given(polys(vars=XYZ, max_terms=4, max_exp=3), st.integers(0, 10**6))
def test_apply_frame_is_a_ring_map(p, seed):
    q = parse("x*y - z^2", XYZ)
    F = Frame.random(3, seed)
    assert apply_frame(p * q, F) == apply_frame(p, F) * apply_frame(q, F)
    assert apply_frame(p + q, F) == apply_frame(p, F) + apply_frame(q, F)
