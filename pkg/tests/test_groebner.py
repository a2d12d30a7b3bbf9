import random
from fractions import Fraction

import pytest
import sympy

from lenumbers.groebner import (
    Ideal,
    dim,
    eliminate,
    ideal_quotient,
    intersect,
    radical_member,
    saturate,
)
from lenumbers.orders import GREVLEX, LEX
from lenumbers.poly import Polynomial, parse

XY = ("x", "y")
XYZ = ("x", "y", "z")
TXY = ("t", "x", "y")


def P(text, vars=XYZ):
    return parse(text, vars)


def _random_ideal(seed, vars=XYZ, ngens=3):
    rng = random.Random(seed)
    gens = []
    while len(gens) < ngens:
        terms = {}
        for _ in range(rng.randint(1, 4)):
            e = tuple(rng.randint(0, 3) for _ in vars)
            terms[e] = Fraction(rng.randint(-5, 5))
        p = Polynomial(vars, terms)
        if not p.is_zero:
            gens.append(p)
    return Ideal(gens, vars=vars)


def _sympy_set(polys, vars, order):
    xs = sympy.symbols(vars)
    out = set()
    for p in polys:
        expr = sympy.sympify(str(p).replace("^", "**"), dict(zip(vars, xs)))
        out.add(sympy.Poly(expr, *xs, domain="QQ").monic())
    return out


@pytest.mark.parametrize("seed", range(12))
def test_grevlex_basis_matches_sympy(seed):
    I = _random_ideal(seed)
    mine = _sympy_set(I.groebner(GREVLEX).elements, I.vars, "grevlex")
    xs = sympy.symbols(I.vars)
    theirs = sympy.groebner(
        [sympy.sympify(str(g).replace("^", "**"), dict(zip(I.vars, xs))) for g in I.gens],
        *xs,
        order="grevlex",
    )
    assert mine == {sympy.Poly(g, *xs, domain="QQ").monic() for g in theirs.exprs}


@pytest.mark.parametrize("seed", [0, 3, 7])
def test_lex_basis_matches_sympy(seed):
    I = _random_ideal(seed, vars=XY, ngens=2)
    mine = _sympy_set(I.groebner(LEX).elements, XY, "lex")
    xs = sympy.symbols(XY)
    theirs = sympy.groebner(
        [sympy.sympify(str(g).replace("^", "**"), dict(zip(XY, xs))) for g in I.gens],
        *xs,
        order="lex",
    )
    assert mine == {sympy.Poly(g, *xs, domain="QQ").monic() for g in theirs.exprs}


def test_symmetric_functions_basis():
    I = Ideal([P("x+y+z"), P("x*y+y*z+z*x"), P("x*y*z-1")])
    B = I.groebner(LEX)
    assert any(str(p) == "z^3 - 1" for p in B.elements)


@pytest.mark.parametrize("seed", range(8))
def test_spolys_of_basis_reduce_to_zero(seed):
    I = _random_ideal(seed)
    B = I.groebner(GREVLEX)
    keyf = GREVLEX.key(3)
    els = list(B.elements)
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            a, b = els[i], els[j]
            la = max(a.terms, key=keyf)
            lb = max(b.terms, key=keyf)
            lcm = tuple(max(p, q) for p, q in zip(la, lb))
            ma = Polynomial(B.vars, {tuple(m - e for m, e in zip(lcm, la)): 1 / a.terms[la]})
            mb = Polynomial(B.vars, {tuple(m - e for m, e in zip(lcm, lb)): 1 / b.terms[lb]})
            assert B.normal_form(ma * a - mb * b).is_zero


def test_normal_form_is_exact_on_non_monic_bases():
    B = Ideal([parse("2*x-y", XY)], vars=XY).groebner(GREVLEX)
    assert B.normal_form(parse("x^2", XY)) == parse("1/4*y^2", XY)
    assert B.normal_form(parse("x^2+x", XY)) == parse("1/4*y^2+1/2*y", XY)


@pytest.mark.parametrize("seed", range(6))
def test_normal_form_properties(seed):
    rng = random.Random(seed)
    I = _random_ideal(seed + 100)
    B = I.groebner(GREVLEX)
    terms = {
        tuple(rng.randint(0, 3) for _ in XYZ): Fraction(rng.randint(-4, 4))
        for _ in range(4)
    }
    p = Polynomial(XYZ, terms)
    r = B.normal_form(p)
    assert B.normal_form(r) == r
    assert B.contains(p - r)


def test_membership():
    I = Ideal([P("x^2+y"), P("y*z-1")])
    assert I.contains(P("x^2+y"))
    assert I.contains(P("z*x^2+z*y"))
    assert not I.contains(P("x"))


def test_eliminate_twisted_cubic():
    I = Ideal([parse("x-t^2", TXY), parse("y-t^3", TXY)], vars=TXY)
    J = eliminate(I, ("t",))
    assert J.vars == XY
    assert J.groebner().contains(parse("y^2-x^3", XY))
    assert len(J.groebner().elements) == 1


def test_intersect_principal():
    I = Ideal([parse("x", XY)], vars=XY)
    J = Ideal([parse("y", XY)], vars=XY)
    K = intersect(I, J)
    assert [str(p) for p in K.groebner().elements] == ["x*y"]


def test_quotient():
    I = Ideal([parse("x*y", XY), parse("x^2", XY)], vars=XY)
    Q = ideal_quotient(I, Ideal([parse("x", XY)], vars=XY))
    assert sorted(str(p) for p in Q.groebner().elements) == ["x", "y"]


def test_saturate_removes_axis_components():
    I = Ideal([parse("x^2*y", XY), parse("y^2", XY)], vars=XY)
    S = saturate(I, Ideal([parse("y", XY)], vars=XY))
    assert sorted(str(p) for p in S.groebner().elements) == ["1"]
    S2 = saturate(I, Ideal([parse("x", XY)], vars=XY))
    assert sorted(str(p) for p in S2.groebner().elements) == ["y"]


def test_radical_membership():
    I = Ideal([parse("(x+y)^2", XY)], vars=XY)
    assert radical_member(parse("x+y", XY), I)
    assert not radical_member(parse("x", XY), I)


def test_dim():
    assert dim(Ideal([parse("x*y", XY)], vars=XY)) == 1
    assert dim(Ideal([parse("x", XY), parse("y", XY)], vars=XY)) == 0
    assert dim(Ideal([parse("1", XY)], vars=XY)) == -1
    assert dim(Ideal((), vars=XY)) == 2
