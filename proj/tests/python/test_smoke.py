import pytest

import algrest


def test_qh_check():
    out = algrest.qh_check(["y", "z"], "y^2+z^4, y*z^2")
    assert out["quasi_homogeneous"] is True
    assert out["weights"] == [2, 1]
    assert out["degrees"] == [4, 4]


def test_restrict_basis():
    out = algrest.restrict_basis(["y", "z"], "y^2, z^4")
    assert out["dim"] == 3
    assert out["basis"] == ["dy^dz", "z*dy^dz", "z^2*dy^dz"]


def test_reduce():
    out = algrest.reduce(["y", "z"], "y^2, z^4", "(1+z+z^3)*dy^dz")
    assert out["coords"] == ["1", "1", "0"]
    assert out["zero_restriction"] is False


def test_primitive():
    out = algrest.primitive(["y", "z"], "y^2, z^4", "y^2*z*dy^dz")
    back = algrest.reduce(["y", "z"], "y^2, z^4", "y^2*z*dy^dz")
    assert back["zero_restriction"] is True
    assert "dy" in out["primitive"] or "dz" in out["primitive"]


def test_invariants_and_classify():
    inv = algrest.invariants("p1^2, p2^4, q1, q2+p1*p2", n=2)
    assert inv["mu"] == 1
    assert inv["iota"] == 1
    assert inv["zero_restriction"] is False
    assert inv["realizable"] is True

    cls = algrest.classify("p1^2, p2^4, q1, q2+p1*p2", n=2, family="I10star")
    assert cls["label"] == "I10star^1"
    assert cls["class"]["coords"] == ["0", "1", "0"]


def test_table():
    out = algrest.table("I10star", n=2)
    assert [c["mu"] for c in out["classes"]] == [0, 1, 2, 3]
    assert [c["iota"] for c in out["classes"]] == [0, 1, 2, "inf"]


def test_domain_error():
    with pytest.raises(algrest.DomainError):
        algrest.reduce(["y", "z"], "y^2", "dy^dz")  # not zero-dimensional
    with pytest.raises(algrest.DomainError):
        algrest.qh_check(["y", "z"], "y +")
