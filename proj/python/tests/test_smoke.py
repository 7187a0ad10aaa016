import json

import pytest

import dcfield


def test_factor_over_sqrt2():
    A = dcfield.TowerField(dcfield.BaseField.rationals()).extend("x^2-2", "a")
    parts = dcfield.factor(A.poly("x^4-10*x^2+1"))
    assert [str(g) for g, _ in parts] == ["x^2-2*a*x-1", "x^2+2*a*x-1"]
    a = A.gen(1)
    assert str(a * a) == "2"
    assert (A.element("1+a").inv() == A.element("-1+a"))


def test_errors_carry_kind():
    A = dcfield.TowerField(dcfield.BaseField.rationals()).extend("x^2-2", "a")
    with pytest.raises(dcfield.Error) as info:
        A.extend("x^2-2", "b")
    assert info.value.kind == "Reducible"


def test_closure_roundtrip():
    C = dcfield.Closure(dcfield.BaseField.rationals())
    Q = dcfield.TowerField(dcfield.BaseField.rationals())
    roots = C.roots(Q.poly("x^2-2"))
    assert len(roots) == 2
    r, mult = roots[0]
    assert mult == 1 and str(r * r) == "2"
    text = C.to_json()
    assert dcfield.Closure.from_json(text).to_json() == text


def test_groups():
    assert dcfield.Group("S3").has_ncp()["holds"] is False
    assert dcfield.Group("C2xC2").has_ncp()["holds"] is True
    v = dcfield.Group("Q8").has_ncp()
    assert v["counterexample"]["N"] == ["1", "-1"]


def test_galois_group_label():
    F = dcfield.TowerField(dcfield.BaseField.rationals()).extend("x^2-2", "a").extend("x^2-3", "b")
    G = dcfield.galois_group(F)
    assert G.order == 4 and G.label() == "C2xC2"


def test_cli_roundtrip():
    code, out, _ = dcfield.run_cli(["ncp", "--group", "S3"])
    assert code == 0
    assert json.loads(out)["holds"] is False
    code, _, _ = dcfield.run_cli(["no-such-command"])
    assert code == 2
