from fractions import Fraction

import pytest

import cfkneading as cfk


def test_dictionary_golden_values():
    assert cfk.phi("[0;2,2]") == Fraction(13, 16)
    assert cfk.phi("[0;2,(1)]") == Fraction(5, 6)
    assert cfk.phi_inv("13/16") == "[0;2,2]"
    d = cfk.dyadic_interval(Fraction(13, 16))
    assert (d["left"], d["right"]) == ("0.(1100)", "0.(11010010)")


def test_membership():
    assert cfk.lambda_member("2/3")
    assert not cfk.lambda_member("3/4")
    assert cfk.e_member("[0;(2,1)]", "d")
    assert not cfk.e_member("2/5")
    assert cfk.gamma_member("0.(10)")
    assert cfk.is_maximal("1/3") and not cfk.is_maximal("8/25")
    assert cfk.classify_e_point("[0;(1)]") == "isolated"


def test_bisection_and_matching():
    gaps = cfk.bisect_enumerate("lambda", 2)
    assert [g["pseudocenter"] for g in gaps] == [Fraction(1, 2), Fraction(3, 4)]
    assert cfk.matching_exponents("1/3") == (1, 2)
    assert cfk.verify_matching("1/3", "1/3")["holds"]


def test_cascades_and_spectra():
    assert [cfk.tau_j("11", j) for j in range(3)] == [Fraction(6, 7), Fraction(8, 9), Fraction(58, 65)]
    assert cfk.d_j("", 0) == Fraction(1, 2)
    lo, hi = cfk.tau_infinity("", 20)
    assert hi - lo <= Fraction(1, 10**20)
    assert abs(lo - Fraction("0.824908")) < Fraction(1, 10**6)
    lo, hi = cfk.dim_CK(2, 15)
    assert abs(float(lo) - 0.6942419136306174) < 1e-12
    assert cfk.count_aK(2, 4) == 5


def test_univoque_and_lamination():
    lo, hi = cfk.univoque_q("thue-morse", 10)
    assert hi - lo <= Fraction(1, 10**10)
    assert abs(lo - Fraction("1.78723")) < Fraction(1, 10**5)
    assert not cfk.is_admissible("0.(10)")
    assert cfk.minor_leaf_from_lambda("5/6") == (Fraction(5, 12), Fraction(7, 12))
    assert cfk.is_minor_leaf("1/7", "2/7") and not cfk.is_real_minor_leaf("1/7", "2/7")
    assert cfk.real_ray_member("3/7") and not cfk.real_ray_member("1/5")


def test_errors():
    with pytest.raises(cfk.DomainError):
        cfk.phi_inv("1/3")
    with pytest.raises(cfk.ParseError):
        cfk.phi("[0;2")
    with pytest.raises(ValueError):
        cfk.dyadic_interval("1/3")
