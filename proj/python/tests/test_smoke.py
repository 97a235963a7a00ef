import json

import pytest

import fingpd


def test_fixture_registry():
    names = fingpd.fixture_names()
    assert "P3" in names and "S3-pair-He" in names


def test_describe_and_round_trip():
    text = fingpd.emit_fixture("P3")
    info = fingpd.describe(text)
    assert info["kind"] == "groupoid"
    assert info["arrows"] == 9
    assert info["locally_trivial"]
    assert fingpd.canonical(text) == text


def test_bisections_of_p3():
    b = fingpd.bisections(fingpd.emit_fixture("P3"))
    assert b["order"] == 6
    assert b["covered"] == 9
    assert b["beta_injective"]
    assert len({tuple(s) for s in b["sections"]}) == 6


def test_gauge_of_s3_he():
    g = fingpd.gauge(fingpd.emit_fixture("S3-pair-He"))
    assert (g["cosets"], g["lambda_order"], g["arrows"]) == (6, 2, 18)
    assert fingpd.describe(g["groupoid"])["arrows"] == 18


def test_check_family():
    reports = fingpd.check("quotient")
    assert reports
    assert all(r["status"] != "fail" for r in reports)


def test_errors():
    with pytest.raises(fingpd.ParseError):
        fingpd.describe("{")
    doc = json.loads(fingpd.emit_fixture("Z2"))
    doc["mult"][3][2] = "1"
    with pytest.raises(fingpd.ValidationError):
        fingpd.describe(json.dumps(doc))
    with pytest.raises(fingpd.CapExceeded):
        fingpd.bisections(fingpd.emit_fixture("S3-ltimes-M3"), cap=3)
