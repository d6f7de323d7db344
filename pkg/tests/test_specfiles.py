import json

import pytest

from cstarflips.specfiles import (
    SchemaError,
    SpecSyntaxError,
    parse_spec,
    parse_spec_dict,
)

GOOD = {
    "name": "gr24-k2",
    "dim_X": 4,
    "components": [
        {"name": "Y0", "weight": 0, "dim": 0, "nu_minus": 0, "nu_plus": 4},
        {"name": "Y1", "weight": 1, "dim": 2, "nu_minus": 1, "nu_plus": 1},
        {"name": "Y2", "weight": 2, "dim": 0, "nu_minus": 4, "nu_plus": 0},
    ],
}


def test_well_formed():
    spec = parse_spec_dict(GOOD)
    assert spec.name == "gr24-k2"
    assert spec.dim_x == 4
    assert len(spec.components) == 3
    assert spec.lie is None


def test_rational_weight_strings():
    obj = json.loads(json.dumps(GOOD))
    obj["components"][1]["weight"] = "1/2"
    spec = parse_spec_dict(obj)
    assert str(spec.components[1].weight) == "1/2"


def test_zero_denominator():
    obj = json.loads(json.dumps(GOOD))
    obj["components"][0]["weight"] = "1/0"
    with pytest.raises(SchemaError) as exc:
        parse_spec_dict(obj)
    assert exc.value.path == ".components[0].weight"
    assert "zero denominator" in str(exc.value)


def test_missing_dim_x():
    obj = {k: v for k, v in GOOD.items() if k != "dim_X"}
    with pytest.raises(SchemaError) as exc:
        parse_spec_dict(obj)
    assert exc.value.path == ".dim_X"


def test_lie_without_dim_x_ok():
    obj = {
        "name": "lie-only",
        "lie": {"type": "A", "rank": 3, "node": 2, "cocharacter": [0, 1, 0]},
    }
    spec = parse_spec_dict(obj)
    assert spec.dim_x is None and spec.components is None


def test_cocharacter_length():
    obj = {
        "name": "bad",
        "lie": {"type": "A", "rank": 3, "node": 2, "cocharacter": [0, 1]},
    }
    with pytest.raises(SchemaError) as exc:
        parse_spec_dict(obj)
    assert exc.value.path == ".lie.cocharacter"


def test_unknown_field():
    obj = json.loads(json.dumps(GOOD))
    obj["bogus"] = 1
    with pytest.raises(SchemaError) as exc:
        parse_spec_dict(obj)
    assert exc.value.path == ".bogus"


def test_neither_components_nor_lie():
    with pytest.raises(SchemaError):
        parse_spec_dict({"name": "empty", "dim_X": 4})


def test_syntax_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(SpecSyntaxError) as exc:
        parse_spec(path)
    assert "1:2" in str(exc.value)


def test_parse_file(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(GOOD), encoding="utf-8")
    assert parse_spec(path).name == "gr24-k2"
