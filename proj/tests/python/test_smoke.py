import os

import pytest

import multimult

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def read(name):
    with open(os.path.join(DATA, name)) as f:
        return f.read()


def test_three_slot_fixture():
    doc = multimult.parse(read("three_slot.mm"))
    assert doc.grading == 3
    assert len(doc.variables) == 9
    h = doc.hilbert()
    assert h["degree"] == 4
    assert h["certified"]
    assert h["terms"][(2, 2, 0)] == 1
    assert doc.mixed_multiplicity([1, 1, 1]) == 1
    assert doc.mixed_multiplicity([3, 0, 0]) == 0


def test_not_defined_raises_with_code():
    doc = multimult.parse(read("three_slot.mm"))
    with pytest.raises(multimult.MultimultError) as info:
        doc.mixed_multiplicity([0, 0, 0])
    assert info.value.code == "NOT_DEFINED"


def test_parse_error():
    with pytest.raises(multimult.MultimultError) as info:
        multimult.parse("grading 1\nvar x slot 1\nideal A = B\n")
    assert info.value.code == "UNDECLARED_NAME"


def test_ideal_fixture():
    doc = multimult.parse(read("maximal_xy.mm"))
    assert doc.has_system
    assert doc.ideal_mixed_multiplicity(1, [0]) == 1
    assert doc.ideal_mixed_multiplicity(0, [1]) == 1


def test_run_matches_cli_schema():
    code, report = multimult.run("mixed", read("three_slot.mm"), type=[1, 1, 1], seed=3)
    assert code == 0
    assert report["schema"] == "multimult/1"
    assert [r["value"] for r in report["results"]] == [1, 1, 1, 1]
    again = multimult.run("mixed", read("three_slot.mm"), type=[1, 1, 1], seed=3)
    assert again[1] == report
