import math
import pathlib

import pytest

import x0calc

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def test_invariants():
    assert x0calc.invariants(1) == {"N": 1, "psi": 1, "nu2": 1, "nu3": 1, "cusps": 1, "genus": 0}
    assert x0calc.invariants(37)["genus"] == 2


def test_omega_eis():
    v = x0calc.omega_eis_sq(37)
    assert str(v) == "288/19*KAPPA - 1/3*LOG(37)"
    assert v == x0calc.omega_eis_sq(37, convention="orthogonal")
    value, err, decimal = v.evaluate(12)
    assert abs(value + 4.342654535042629) < 1e-12
    assert err < 1e-12
    assert v.to_dict() == {"KAPPA": "288/19", "LOG(37)": "-1/3"}


def test_hecke():
    t = x0calc.t_hat(2, 37)
    assert t.to_dict()["matrix"][0][1] == "6/19*LOG(2)"
    assert x0calc.is_self_adjoint(t, x0calc.gram(37))
    assert t.commutes_with(x0calc.t_hat(3, 37))
    assert str(x0calc.hecke_shift(2, 1)) == "12*LOG(2)"


def test_errors_carry_names():
    with pytest.raises(x0calc.Error) as info:
        x0calc.invariants(12)
    assert info.value.args[0] == "NonSquarefree"
    with pytest.raises(x0calc.Error):
        x0calc.t_hat(37, 37)


def test_modular_forms():
    delta = x0calc.eta_expand("eta(1)^24", 10)
    assert delta[:4] == [1, -24, 252, -1472]
    assert x0calc.heegner_points(37, -4)["roots"] == [12, 62]


def test_lseries():
    (f,) = x0calc.ingest_file(str(DATA / "37a.jsonl"))
    assert f.root_number == -1
    assert abs(x0calc.l_derivative(f) - 0.305999773834052301820) < 1e-11
    assert x0calc.symmetry_residual(f, 0, 0.1) < 1e-10
    w = x0calc.omega_f_sq(f)
    assert abs(w["omega_f_sq"] + 0.920005348319439124) < 1e-9
    g = x0calc.level11_form()
    assert abs(x0calc.l_value(g) - 0.253841860855910684) < 1e-11


def test_verify_analysis():
    rep = x0calc.verify_analysis(64, 128)
    assert rep["all_passed"]
    assert any(c["name"].startswith("hardy") for c in rep["checks"])
    assert math.isclose(rep["checks"][0]["lhs"], math.pi, rel_tol=1e-12)
