import json
import random

import pytest

from cstarflips.export import UnsupportedFormatError, export
from cstarflips.report import ReportBundle, run_pipeline
from cstarflips.specfiles import parse_spec, parse_spec_dict
from cstarflips.cli import main

GR24_SPEC = {
    "name": "gr24-k2",
    "dim_X": 4,
    "lie": {"type": "A", "rank": 3, "node": 2, "cocharacter": [0, 1, 0]},
    "components": [
        {"name": "Y0", "weight": 0, "dim": 0, "nu_minus": 0, "nu_plus": 4},
        {"name": "Y1", "weight": 1, "dim": 2, "nu_minus": 1, "nu_plus": 1},
        {"name": "Y2", "weight": 2, "dim": 0, "nu_minus": 4, "nu_plus": 0},
    ],
}

BORDISM_SPEC = {
    "name": "bordism-r3",
    "dim_X": 8,
    "declared_equalized": True,
    "components": [
        {"name": "S", "weight": 0, "dim": 3, "nu_minus": 0, "nu_plus": 5},
        {"name": "M1", "weight": 1, "dim": 2, "nu_minus": 2, "nu_plus": 4},
        {"name": "M2", "weight": 2, "dim": 3, "nu_minus": 3, "nu_plus": 2},
        {"name": "T", "weight": 3, "dim": 4, "nu_minus": 4, "nu_plus": 0},
    ],
}


def random_spec(rng: random.Random) -> dict:
    r = rng.randint(2, 4)
    dim_x = rng.randint(4, 8)
    sink_dim = rng.randint(0, dim_x - 2)
    source_dim = rng.randint(0, dim_x - 2)
    comps = [
        {"name": "Y0", "weight": 0, "dim": sink_dim, "nu_minus": 0, "nu_plus": dim_x - sink_dim}
    ]
    for level in range(1, r):
        nm = rng.randint(1, dim_x - 2)
        np_ = rng.randint(1, dim_x - 1 - nm)
        comps.append(
            {
                "name": f"Y{level}",
                "weight": level,
                "dim": dim_x - nm - np_,
                "nu_minus": nm,
                "nu_plus": np_,
            }
        )
    comps.append(
        {
            "name": f"Y{r}",
            "weight": r,
            "dim": source_dim,
            "nu_minus": dim_x - source_dim,
            "nu_plus": 0,
        }
    )
    return {
        "name": f"random-{rng.randint(0, 10**6)}",
        "dim_X": dim_x,
        "declared_equalized": True,
        "components": comps,
    }


class TestPipeline:
    def test_gr24_bundle(self):
        bundle = run_pipeline(parse_spec_dict(GR24_SPEC))
        assert bundle["case"] == "isolated-both"
        assert [tuple(c["pair"]) for c in bundle["chambers"]] == [(0, 2)]
        assert bundle["flip_graph"]["edges"] == []
        assert bundle["verification"] == {"checked": True, "failures": []}
        assert bundle["movable_cone"] == [["0", "1"], ["1", "1"], ["1", "2"], ["0", "2"]]

    def test_bordism_bundle(self):
        bundle = run_pipeline(parse_spec_dict(BORDISM_SPEC))
        assert bundle["bordism"] is True
        assert len(bundle["chambers"]) == 6
        assert len(bundle["flip_graph"]["edges"]) == 6
        assert bundle["chain_summary"]["flips"] == 2

    def test_verification_mismatch(self):
        bad = json.loads(json.dumps(GR24_SPEC))
        bad["components"][1]["nu_plus"] = 2
        bad["components"][1]["dim"] = 1
        bundle = run_pipeline(parse_spec_dict(bad))
        assert bundle["verification"]["checked"]
        assert bundle["verification"]["failures"]

    def test_determinism(self):
        a = run_pipeline(parse_spec_dict(BORDISM_SPEC)).to_json()
        b = run_pipeline(parse_spec_dict(BORDISM_SPEC)).to_json()
        assert a == b

    def test_roundtrip(self):
        bundle = run_pipeline(parse_spec_dict(BORDISM_SPEC))
        again = ReportBundle.from_json(bundle.to_json())
        assert again.data == bundle.data

    def test_roundtrip_randomized(self):
        rng = random.Random(20240911)
        for _ in range(20):
            bundle = run_pipeline(parse_spec_dict(random_spec(rng)))
            assert ReportBundle.from_json(bundle.to_json()).data == bundle.data


class TestExport:
    def test_dot_two_graphs(self):
        payload = export(run_pipeline(parse_spec_dict(BORDISM_SPEC)), "dot").decode()
        assert payload.count("digraph") == 2
        assert '"X(0,3)" -> "X(1,3)"' in payload
        # quotient chain for r = 3: r - 1 dashed arrows, 2r diagonal ones
        quotient_part = payload.split("digraph quotient_diagram")[1]
        assert quotient_part.count("style=dashed") == 2
        assert quotient_part.count("->") - quotient_part.count("style=dashed") == 6

    def test_svg_chamber_labels(self):
        payload = export(run_pipeline(parse_spec_dict(BORDISM_SPEC)), "svg").decode()
        for i, j in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]:
            assert f"N_{{{i},{j}}}" in payload
        assert payload.count("<polygon") == 7  # 6 chambers + the movable outline

    def test_unsupported(self):
        with pytest.raises(UnsupportedFormatError):
            export(run_pipeline(parse_spec_dict(GR24_SPEC)), "png")


class TestCli:
    def _write(self, tmp_path, obj, name="spec.json"):
        path = tmp_path / name
        path.write_text(json.dumps(obj), encoding="utf-8")
        return str(path)

    def test_validate_ok(self, tmp_path, capsys):
        assert main(["validate", self._write(tmp_path, GR24_SPEC)]) == 0
        assert "ok" in capsys.readouterr().out

    def test_parse_error_exit(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        assert main(["validate", str(path)]) == 3

    def test_validation_failure_exit(self, tmp_path):
        bad = json.loads(json.dumps(BORDISM_SPEC))
        bad["components"][1]["dim"] = 7
        assert main(["validate", self._write(tmp_path, bad)]) == 2

    def test_verification_mismatch_exit(self, tmp_path):
        bad = json.loads(json.dumps(GR24_SPEC))
        bad["components"][1]["nu_plus"] = 2
        bad["components"][1]["dim"] = 1
        assert main(["validate", self._write(tmp_path, bad)]) == 4

    def test_analyze_json_out(self, tmp_path):
        out = tmp_path / "bundle.json"
        code = main(
            ["analyze", self._write(tmp_path, BORDISM_SPEC), "--format", "json", "--out", str(out)]
        )
        assert code == 0
        data = json.loads(out.read_text())
        assert data["name"] == "bordism-r3"

    def test_export_svg(self, tmp_path):
        out = tmp_path / "fig.svg"
        code = main(
            ["export", self._write(tmp_path, BORDISM_SPEC), "--format", "svg", "--out", str(out)]
        )
        assert code == 0
        assert out.read_text().startswith("<svg")

    def test_strict_equalized(self, tmp_path):
        assert main(["validate", self._write(tmp_path, BORDISM_SPEC), "--strict-equalized"]) == 2
        assert main(["validate", self._write(tmp_path, GR24_SPEC), "--strict-equalized"]) == 0

    def test_dynkin(self, capsys):
        assert main(["dynkin", "A", "3", "--node", "2", "--cochar-node", "2"]) == 0
        out = capsys.readouterr().out
        assert "6 positive roots" in out
        assert "equalized: True" in out

    def test_catalog_listing(self, capsys):
        assert main(["catalog"]) == 0
        out = capsys.readouterr().out
        assert "table 1" in out and "E_7(7)" in out
