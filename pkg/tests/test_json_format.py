import json
from fractions import Fraction as F

import pytest

from qpd.tensors import ParseError, format_scalar, load_tensor, tensor_from_json


GOOD = {
    "dim": 2,
    "order": 4,
    "entries": {"1111": 1, "1112": "1/2", "1122": 0.25, "2222": 3},
}


def test_parse_good_document():
    T = tensor_from_json(json.dumps(GOOD))
    assert T.t1111 == 1
    assert T.t1112 == F(1, 2)
    assert T.t1122 == F(1, 4)  # floats parse as exact decimals
    assert T.t1222 == 0  # missing entries default to zero
    assert T.t2222 == 3


def test_load_from_file(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps(GOOD))
    assert load_tensor(path).t2222 == 3


@pytest.mark.parametrize(
    "doc",
    [
        "not json at all",
        "[1, 2]",
        json.dumps({"dim": 2, "order": 4}),
        json.dumps({"dim": 4, "order": 4, "entries": {}}),
        json.dumps({"dim": 2, "order": 3, "entries": {}}),
        json.dumps({"dim": 2, "order": 4, "entries": {}, "extra": 1}),
        json.dumps({"dim": 2, "order": 4, "entries": {"112": 1}}),
        json.dumps({"dim": 2, "order": 4, "entries": {"1121": 1}}),
        json.dumps({"dim": 2, "order": 4, "entries": {"1113": 1}}),
        json.dumps({"dim": 2, "order": 4, "entries": {"1112": "x/y"}}),
        json.dumps({"dim": 2, "order": 4, "entries": {"1112": True}}),
        json.dumps({"dim": 2, "order": 4, "entries": {"1112": [1]}}),
    ],
)
def test_parse_errors(doc):
    with pytest.raises(ParseError):
        tensor_from_json(doc)


def test_format_scalar():
    assert format_scalar(F(-72, 625)) == "-72/625"
    assert format_scalar(F(4, 2)) == 2
    assert format_scalar(0.5) == 0.5
