"""Python-side smoke checks: exact values cross the binding unchanged."""

import weylreal

SOLVABLE = '{"n": 2, "m": 0, "C": [[1, 2, 1, "1"]]}'
SUPER = '{"n": 1, "m": 1, "C": [], "K": [[1, 1, 1, "1"]]}'
BROKEN = '{"n": 3, "m": 0, "C": [[1, 2, 2, "1"], [2, 3, 1, "1"]]}'


def test_bernoulli():
    b = weylreal.bernoulli(4)
    assert b["b"] == ["1", "1/2", "1/12", "0", "-1/720"]
    assert b["BernoulliPlusHalf"][1] == "1/2"
    assert b["BernoulliMinusHalf"][1] == "-1/2"


def test_validate():
    assert weylreal.validate(SOLVABLE)["valid"]
    report = weylreal.validate(BROKEN)
    assert not report["valid"]
    assert any(v["family"] == "evenJacobi" for v in report["violations"])


def test_realize_and_verify():
    out = weylreal.realize(SOLVABLE, order=2)
    assert out["verified"]
    gens = {g["name"]: g["text"] for g in out["realization"]["generators"]}
    assert gens["X1"] == "x1 + 1/2*x1*d2 + 1/12*x1*d2^2"
    assert gens["X2"] == "x2 - 1/2*x1*d1 - 1/12*x1*d1*d2"

    rep = weylreal.verify(SUPER, order=4)
    assert rep["ok"]
    assert rep["relations"]["maxCertifiedDegree"] == 3
    assert rep["shiftCommutators"]["ok"]

    text = weylreal.realization_str(SUPER, order=2)
    assert "theta1 = xi1 + 1/2*xi1*d1 + 1/12*xi1*d1^2" in text


def test_series_checks():
    checks = weylreal.series_checks()
    assert checks["ok"]
    assert checks["functionalEquation"]
    assert checks["ode"]


def test_uniqueness():
    r = weylreal.uniqueness(SOLVABLE, max_order=3)
    assert r["coeffs"] == ["1/2", "1/12", "0"]
    assert r["constrained"] == [True, True, True]


def test_errors():
    for bad_call in (
        lambda: weylreal.realize(BROKEN),
        lambda: weylreal.validate("not json"),
        lambda: weylreal.realize(SOLVABLE, order=1),
    ):
        try:
            bad_call()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")


def test_render_round_trip():
    canonical = weylreal.render_spec(SUPER)
    assert weylreal.render_spec(canonical) == canonical


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")
    print("python smoke: all ok")
