"""Tests for smallcovers.util.json"""
import pytest


from smallcovers.gf2 import BitMatrix
from smallcovers.schema.records import DumpManifest, Method
from smallcovers.util.json import CustomJsonEncoder, to_cell


def test_CustomJsonEncoder():
    json_string = CustomJsonEncoder.dumps(
        {"manifest": DumpManifest(polytope="cube(2)", kind="mn", count=3, generator="smallcovers 1"), "lines": 3}
    )
    assert json_string == (
        '{"manifest": {"polytope": "cube(2)", "kind": "mn", "count": "3", "generator": "smallcovers 1"}, "lines": 3}'
    )


def test_CustomJsonEncoder_rejects_unknown():
    with pytest.raises(TypeError):
        CustomJsonEncoder.dumps({"matrix": BitMatrix.identity(2)})


def test_to_cell():
    assert to_cell(Method.BRUTEFORCE) == "bruteforce"
    assert to_cell(True) == "true"
    assert to_cell(False) == "false"
    assert to_cell(1.5) == "1.500"
    assert to_cell("25") == "25"
    assert to_cell(10 ** 30) == "1" + "0" * 30
