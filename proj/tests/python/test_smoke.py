import os
from fractions import Fraction
from pathlib import Path

import pytest

import hinv

FIXTURES = Path(os.environ.get("HINV_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures" / "v1"))
H3 = FIXTURES / "lie" / "heisenberg3.json"


def test_heisenberg_invariants():
    basis = hinv.invariants(H3)
    assert [w.terms for w in basis] == [{(0, 2): Fraction(1)}, {(1, 2): Fraction(1)}]
    assert [w.text for w in basis] == ["a^c", "b^c"]


def test_inline_documents():
    doc = {"dim": 2, "brackets": {"0,1": {"1": 1}}}
    assert hinv.validate(doc) == []
    assert hinv.invariants(doc) == []
    assert len(hinv.invariants('{"dim": 3}')) == 3


def test_central_element():
    out = hinv.central_z(H3, (0, 2), "1,2")
    assert out["z_text"] == "1/3 c^3"
    assert out["identity_holds"] and out["z_central"]


def test_twist_and_corpus_checks():
    assert hinv.verify_twist(H3, (0, 2)) == {"twist_defect_zero": True, "invariance_defect_zero": True}
    report = hinv.check_algebra(FIXTURES / "lie" / "L4_3.json")
    assert report["passed"]
    assert report["checks"]["product_relation"]["total"] == report["checks"]["product_relation"]["passed"]


def test_classification():
    rep = hinv.classify(FIXTURES / "groups" / "gm_x_h3.json")
    assert rep["schema_version"] == hinv.SCHEMA_VERSION
    assert rep["isomorphism_type"] == "(k^x)^0 x k^3"
    assert rep["additive_dim"] == 3
    assert hinv.classify(FIXTURES / "groups" / "sl2_like.json")["trivial"]


def test_errors():
    with pytest.raises(hinv.SchemaError, match=r"\$\.brackets\.0,1\.9"):
        hinv.validate({"dim": 2, "brackets": {"0,1": {"9": 1}}})
    with pytest.raises(hinv.PreconditionError):
        hinv.central_z(H3, (0, 1), (1, 2))
    with pytest.raises(hinv.HinvError):
        hinv.invariants({"dim": 3, "brackets": {"0,1": {"1": 1}, "1,2": {"0": 1}}})
    assert hinv.validate({"dim": 3, "brackets": {"0,1": {"1": 1}, "1,2": {"0": 1}}})
