import pytest

import diffops


def test_groebner_and_normal_form():
    assert diffops.groebner_basis(["x", "y"], "x^2; x - y") == ["x - y", "y^2"]
    assert diffops.groebner_basis(["x"], "x; x - 1") == ["1"]
    assert diffops.normal_form(["x", "y"], "x^3 - y^2", "x^3") == "y^2"
    lex = diffops.groebner_basis(["t", "u", "v"], "t^2 - u; t^3 - v", order="lex")
    assert lex[0] == "u^3 - v^2"


def test_jacobian_cusp_and_circle():
    cusp = diffops.jacobian(["x", "y"], "y^2 - x^3")
    assert cusp["rank"] == 1
    assert cusp["matrix"] == [["-3*x^2", "2*y"]]
    assert cusp["regular"] is False
    assert cusp["minor_support_check"] is True
    assert diffops.jacobian(["x", "y"], "x^2 + y^2 - 1")["regular"] is True
    assert diffops.jacobian(["x", "y"], "x^2 + y^2 - 1", characteristic=2)["regular"] is False


def test_operators():
    w2 = diffops.dop_generator([2, 3], -2)
    assert str(w2) == "(h^2 + h - 2)*x^-2"
    x2 = diffops.Op("x^2")
    assert str(x2 * w2) == "h^2 - 3*h"
    assert str(w2 * x2) == "h^2 + h - 2"
    assert w2.apply(2) == "-2"
    assert diffops.Op("h").commutator(diffops.Op("x")) == diffops.Op("x")
    assert diffops.dop_generator([2, 3], -3).order() == 3
    assert not diffops.dop_membership([2, 3], diffops.Op("x"))


def test_semigroup_verdicts():
    assert diffops.jacobian_ideal_monomial([2, 3]) == [3, 4]
    v = diffops.stability([2, 3], [2, 3], "dop")
    assert v["stable"] is False and v["value"] == "-2" and v["exponent"] == 2
    assert diffops.stability([2, 3], [3, 4], "der")["stable"] is True
    s = diffops.simplicity_verdict([2, 3], k_max=5, shift_bound=8)
    assert s["outcome"] == "SimpleProven"
    assert all(c["gcd"] == "1" for c in s["certificates"])


def test_errors():
    with pytest.raises(diffops.ParseError):
        diffops.groebner_basis(["x", "y"], "2x")
    with pytest.raises(diffops.InputError):
        diffops.jacobian_ideal_monomial([2, 4])
    with pytest.raises(diffops.BudgetExceeded):
        diffops.groebner_basis(["x", "y", "z"], "x^3-y*z; y^3-x*z; z^3-x*y", max_pairs=1)


def test_cli_roundtrip():
    code, out, err = diffops.run_cli(["semigroup", "--gens", "2,3", "simple", "--k-max", "2"])
    assert code == 0 and err == ""
    assert '"SimpleProven"' in out
    code, out, err = diffops.run_cli(["gb", "--vars", "x", "--ideal", "2x"])
    assert code == 2 and out == "" and "offset 1" in err
