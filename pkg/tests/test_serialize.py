import json
from fractions import Fraction

import pytest

from filiform.lie import make_fixture
from filiform.oracle import deformed_structure, evaluate_system, jacobi_scan
from filiform.polynomials import TOP
from filiform.serialize import (assignment_doc, canonical_json, fixture_doc,
                                fraction_str, parse_assignment,
                                parse_system_doc, report_doc, system_cas,
                                system_doc, system_text)
from filiform.systems import system_finite, system_truncated


def test_fraction_str():
    assert fraction_str(Fraction(3)) == "3"
    assert fraction_str(Fraction(-1, 70)) == "-1/70"
    assert fraction_str(0) == "0"


def test_canonical_json_is_deterministic():
    doc = {"b": [1, 2], "a": {"y": "2/3", "x": None}}
    out = canonical_json(doc)
    assert out == canonical_json({"a": {"x": None, "y": "2/3"}, "b": [1, 2]})
    assert out.endswith("\n")
    assert json.loads(out) == doc


@pytest.mark.parametrize("system", [system_finite(12, "free"),
                                    system_finite(13),
                                    system_finite(12, "fixed-1"),
                                    system_truncated(15)])
def test_system_doc_roundtrip(system):
    doc = system_doc(system)
    back = parse_system_doc(json.loads(canonical_json(doc)))
    assert back.kind == system.kind
    assert back.size == system.size
    assert back.x_mode == system.x_mode
    assert back.variables == system.variables
    assert back.equations == system.equations
    # byte-level fixed point
    assert canonical_json(system_doc(back)) == canonical_json(doc)


def test_system_doc_shape():
    doc = system_doc(system_finite(12, "free"))
    assert doc["kind"] == "M_Fil(12)"
    assert doc["n"] == 12 and "total_max" not in doc
    assert "x" in doc["variables"]
    first = doc["equations"][0]
    assert first["label"] == [2, 3, 0]
    assert first["tilde"] is False
    # coefficients travel as strings, variables as [j, s, power]
    assert first["monomials"][0] == {"coeff": "-2", "vars": [[2, 0, 1], [4, 0, 1]]}
    tr = system_doc(system_truncated(10))
    assert tr["total_max"] == 10 and "n" not in tr


def test_system_text():
    text = system_text(system_finite(9))
    lines = text.splitlines()
    assert lines[0] == "# M_Fil(9)[x=free]: 1 equations, 9 variables"
    assert lines[1] == "F_{2,3,0} = -2*x_{2,0}*x_{4,0} + 3*x_{3,0}^2 - x_{3,0}*x_{4,0}"
    # tilde rows are flagged in the name
    text12 = system_text(system_finite(12))
    assert "F~_{2,5,-1} = " in text12


def test_system_cas():
    out = system_cas(system_finite(9))
    lines = out.splitlines()
    assert lines[0].startswith("# ring QQ[x_2_0, x_2_1")
    assert lines[1] == "-2*x_2_0*x_4_0 + 3*x_3_0^2 - x_3_0*x_4_0"
    assert len(lines) == 2


def test_fixture_doc():
    doc = fixture_doc(make_fixture("m2", 6))
    assert doc["name"] == "m2(6)"
    assert doc["dimension"] == 6
    assert {"i": 2, "j": 3, "value": [{"index": 5, "numerator": 1,
                                       "denominator": 1}]} in doc["relations"]
    keys = [(rel["i"], rel["j"]) for rel in doc["relations"]]
    assert keys == sorted(keys)


def test_assignment_roundtrip():
    assignment = {(2, 0): Fraction(1), (3, 0): Fraction(-1, 10), TOP: Fraction(2, 3)}
    doc = assignment_doc(assignment)
    assert doc == {"entries": [{"j": 2, "s": 0, "value": "1"},
                               {"j": 3, "s": 0, "value": "-1/10"}],
                   "x": "2/3"}
    assert parse_assignment(json.loads(canonical_json(doc))) == assignment


def test_parse_assignment_errors():
    with pytest.raises(ValueError):
        parse_assignment([1, 2])
    with pytest.raises(ValueError):
        parse_assignment({"entries": [{"j": 1, "s": 0, "value": "1"}]})
    with pytest.raises(ValueError):
        parse_assignment({"entries": [{"j": 2, "value": "1"}]})
    with pytest.raises(ValueError):
        parse_assignment({"entries": [{"j": 2, "s": 0, "value": "1/0"}]})
    with pytest.raises(ValueError):
        parse_assignment({"entries": [{"j": 2, "s": 0, "value": "ten"}]})
    with pytest.raises(ValueError):
        parse_assignment({"entries": [], "x": "?"})


def test_report_verdicts():
    system = system_finite(9)
    good = {(2, 0): Fraction(1)}
    doc = report_doc(system.system_id, good,
                     evaluate_system(system, good),
                     jacobi_scan(deformed_structure(good, 9)))
    assert doc["verdict"] == "verified"
    assert doc["system-id"] == "M_Fil(9)[x=free]"
    assert doc["residuals"] == [{"label": [2, 3, 0], "value": "0"}]
    assert doc["jacobi"] == []

    bad = {(3, 0): Fraction(1)}
    doc = report_doc(system.system_id, bad,
                     evaluate_system(system, bad),
                     jacobi_scan(deformed_structure(bad, 9)))
    assert doc["verdict"] == "failed"
    assert doc["residuals"] == [{"label": [2, 3, 0], "value": "3"}]
    assert doc["jacobi"] == [{"triple": [2, 3, 4],
                              "defect": [{"index": 9, "numerator": 3,
                                          "denominator": 1}]}]
