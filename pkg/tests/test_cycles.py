import pytest

from lenumbers.cycles import (
    generic_le,
    germ_subset,
    intersection_number,
    lambda_numbers,
    mpr_bounds,
    mpr_exact,
    polar_curve_mult,
    polar_ideal,
    polar_mult,
    polar_ratios,
    sigma_ideal,
    slice_check,
)
from lenumbers.groebner import Ideal
from lenumbers.poly import Frame, parse

XY = ("x", "y")
XYZ = ("x", "y", "z")
TXY = ("t", "x", "y")

BN0 = parse("(x^2-z^2+y^2)*(x-z)", XYZ)
TX = parse("y^3-x^4-t^2*x^2", TXY)
UMBRELLA = parse("x^2-y^2*z", XYZ)
X2Y2 = parse("x^2*y^2", XY)


def test_bn0_identity_frame():
    rec = lambda_numbers(BN0, verify=True)
    assert rec.s == 1
    assert rec.lam == (2, 3)
    assert rec.gam == (1,)
    assert rec.verified is True


def test_tx_identity_frame():
    rec = lambda_numbers(TX)
    assert rec.s == 1
    assert rec.lam == (12, 2)
    assert rec.gam == (4,)


def test_umbrella_generic():
    rec = generic_le(UMBRELLA, seed=0)
    assert rec.s == 1
    assert rec.lam == (2, 1)
    assert rec.gam == (1,)


def test_nonreduced_plane_curve():
    rec = generic_le(X2Y2, seed=0)
    assert rec.lam == (3, 2)
    assert rec.gam == (1,)
    # the identity frame is degenerate here: lambda^0 improper
    bad = lambda_numbers(X2Y2)
    assert not bad.fully_defined


def test_generic_le_is_deterministic():
    a = generic_le(BN0, seed=3)
    b = generic_le(BN0, seed=3)
    assert (a.lam, a.gam, a.frame.matrix) == (b.lam, b.gam, b.frame.matrix)


def test_validation_rejects_non_critical_input():
    with pytest.raises(ValueError):
        lambda_numbers(parse("0", XY))
    with pytest.raises(ValueError):
        lambda_numbers(parse("x", XY))
    with pytest.raises(ValueError):
        lambda_numbers(parse("1+x^2", XY))


def test_sigma_ideal_dimension_drives_s():
    assert lambda_numbers(parse("x^2+y^2", XY)).s == 0
    assert lambda_numbers(parse("y^2+z^2", XYZ)).s == 1


def test_polar_curve_of_bn0():
    P = polar_ideal(BN0, Frame.identity(3), 1)
    assert sorted(str(p) for p in P.groebner().elements) == ["x + 3*z", "y"]
    assert polar_curve_mult(BN0, Frame.identity(3)) == 1
    assert polar_curve_mult(TX, Frame.identity(3)) == 4
    assert polar_mult(TX, Frame.identity(3), 2) == 2


def test_intersection_number_is_local_colength():
    Z = Ideal((), vars=XY)
    assert intersection_number(Z, [parse("x", XY), parse("y-x^2", XY)]) == 1
    assert intersection_number(Z, [parse("y-x^2", XY), parse("y+x^2", XY)]) == 2


def test_intersection_number_improper_is_none():
    P = polar_ideal(BN0, Frame.identity(3), 1)
    # y vanishes on the polar curve, so the intersection is improper
    assert intersection_number(P, [parse("y", XYZ)]) is None
    assert intersection_number(P, [parse("x", XYZ)]) == 1


def test_slice_cross_check():
    assert slice_check(BN0, Frame.identity(3)) is True
    assert slice_check(TX, Frame.identity(3)) is True


def test_mpr_bounds():
    mb = mpr_bounds(BN0, Frame.identity(3))
    assert (mb.lower, mb.upper_simple, mb.upper_polar) == (3, 3, 3)
    mb = mpr_bounds(TX, Frame.identity(3))
    assert (mb.lower, mb.upper_simple, mb.upper_polar) == (3, 13, 10)


def test_mpr_exact_from_components():
    comp = Ideal([parse("y", XYZ), parse("x+3*z", XYZ)], vars=XYZ)
    ratios = polar_ratios(BN0, Frame.identity(3), [(comp, 1)])
    assert ratios == (3,)
    assert mpr_exact(BN0, Frame.identity(3), [(comp, 1)]) == 3


def test_polar_ratio_component_validation():
    comp = Ideal([parse("y", XYZ), parse("x+3*z", XYZ)], vars=XYZ)
    with pytest.raises(ValueError):
        polar_ratios(BN0, Frame.identity(3), [(comp, 2)])  # multiplicities must add up
    off = Ideal([parse("x", XYZ), parse("y-z", XYZ)], vars=XYZ)
    with pytest.raises(ValueError):
        polar_ratios(BN0, Frame.identity(3), [(off, 1)])  # not on the polar curve


def test_germ_subset_sees_through_units():
    I = Ideal([parse("x+x^2", XY)], vars=XY)
    J = Ideal([parse("x", XY)], vars=XY)
    assert germ_subset(I, J)
    assert germ_subset(J, I)
    K = Ideal([parse("y", XY)], vars=XY)
    assert not germ_subset(J, K)


def test_sigma_ideal_gens_are_the_partials():
    S = sigma_ideal(parse("x^2+y^3", XY))
    assert sorted(str(g) for g in S.gens) == ["2*x", "3*y^2"]
