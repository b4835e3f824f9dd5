"""Command-line surface: text forms, JSON forms, exit codes."""

import json

import pytest

from conftest import composed_example

from polyjoin import SimplicialComplex, boundary_complex, compose
from polyjoin.cli import run


def write_json(path, data):
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def bd2(tmp_path):
    return write_json(tmp_path / "bd2.json", boundary_complex(2).to_json_dict())


@pytest.fixture
def s0(tmp_path):
    return write_json(tmp_path / "s0.json", {"preset": "interval_s0"})


@pytest.fixture
def example_files(tmp_path):
    K, blocks = composed_example()
    paths = [write_json(tmp_path / "base.json", K.to_json_dict())]
    for i, L in enumerate(blocks):
        paths.append(write_json(tmp_path / f"block{i}.json", L.to_json_dict()))
    return paths


def test_series_bbcg_text(bd2, s0, capsys):
    assert run(["series", "bbcg", bd2, s0]) == 0
    assert capsys.readouterr().out == "1 + t^2\n"


def test_series_bbcg_json(bd2, s0, capsys):
    assert run(["series", "bbcg", bd2, s0, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"series": {"0": 1, "2": 1}}


def test_series_bbcg_field_flag(tmp_path, s0, capsys):
    rp2 = write_json(tmp_path / "rp2.json", {
        "vertices": [str(i) for i in range(1, 7)],
        "maximal_faces": [["1", "2", "3"], ["1", "3", "4"], ["1", "4", "5"],
                          ["1", "2", "6"], ["1", "5", "6"], ["2", "3", "5"],
                          ["2", "4", "5"], ["2", "4", "6"], ["3", "4", "6"],
                          ["3", "5", "6"]]})
    assert run(["series", "bbcg", rp2, s0, "--field", "f2"]) == 0
    over_f2 = capsys.readouterr().out
    assert run(["series", "bbcg", rp2, s0, "--field", "q"]) == 0
    assert capsys.readouterr().out != over_f2


def test_series_csc_matches_composed(tmp_path, example_files, s0, capsys):
    K, blocks = composed_example()
    assert run(["series", "csc"] + example_files + [s0]) == 0
    via_blocks = capsys.readouterr().out
    comp = write_json(tmp_path / "comp.json", compose(K, *blocks).to_json_dict())
    assert run(["series", "bbcg", comp, s0]) == 0
    assert capsys.readouterr().out == via_blocks


def test_series_caa_reduced(tmp_path, example_files, capsys):
    dims = write_json(tmp_path / "s2.json", {"2": 1})
    assert run(["series", "caa"] + example_files + [dims, "--reduced"]) == 0
    assert capsys.readouterr().out == "t^8\n"
    assert run(["series", "remark"] + example_files + [dims]) == 0
    assert capsys.readouterr().out == "t^8\n"


def test_complex_json_round_trip(bd2, capsys):
    assert run(["complex", bd2, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert SimplicialComplex.from_json_dict(data) == boundary_complex(2)


def test_complex_text_form(bd2, capsys):
    assert run(["complex", bd2]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "vertices: 1,2,3"
    assert set(out[1:]) == {"maximal: 1,2", "maximal: 1,3", "maximal: 2,3"}


def test_link_and_subcomplex(bd2, capsys):
    assert run(["link", bd2, "--face", "1"]) == 0
    out = capsys.readouterr().out
    assert "maximal: 2" in out and "maximal: 3" in out
    assert run(["subcomplex", bd2, "--restrict", "1,2"]) == 0
    assert "maximal: 1,2" in capsys.readouterr().out


def test_compose_command(example_files, capsys):
    assert run(["compose"] + example_files) == 0
    out = capsys.readouterr().out
    assert "maximal: 21,31,32" in out
    assert "maximal: 11,21,31" in out
    assert "maximal: 11,21,32" in out


def test_homology_text(bd2, capsys):
    assert run(["homology", bd2]) == 0
    assert capsys.readouterr().out == "1 1\n1 + t\n"


def test_homology_json(bd2, capsys):
    assert run(["homology", bd2, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"betti": [1, 1], "poincare": {"0": 1, "1": 1}}


def test_betti_poly_text(tmp_path, example_files, capsys):
    K, blocks = composed_example()
    comp = write_json(tmp_path / "comp.json", compose(K, *blocks).to_json_dict())
    dims = write_json(tmp_path / "s2.json", {"2": 1})
    assert run(["betti", "poly", comp, dims]) == 0
    assert capsys.readouterr().out == "1 + s^8*t[11]*t[31]*t[32]\n"
    assert run(["betti", "compose"] + example_files + [dims]) == 0
    assert capsys.readouterr().out == "1 + s^8*t[11]*t[31]*t[32]\n"


def test_betti_hochster(bd2, capsys):
    assert run(["betti", "hochster", bd2, "-i", "1", "-J", "1,2,3"]) == 0
    assert capsys.readouterr().out == "1\n"


def test_sr_commands(tmp_path, bd2, capsys):
    assert run(["sr", "nonfaces", bd2]) == 0
    assert capsys.readouterr().out == "1,2,3\n"
    assert run(["sr", "member", bd2, "--face", "1,2,3"]) == 0
    assert capsys.readouterr().out == "true\n"
    assert run(["sr", "member", bd2, "--face", "1,2"]) == 0
    assert capsys.readouterr().out == "false\n"


def test_sr_compose_command(tmp_path, capsys):
    K = write_json(tmp_path / "k.json",
                   {"vertices": ["1", "2"], "maximal_faces": [["2"]]})
    L1 = write_json(tmp_path / "l1.json",
                    {"vertices": ["11", "12"], "maximal_faces": [["11"], ["12"]]})
    L2 = write_json(tmp_path / "l2.json",
                    {"vertices": ["21", "22"], "maximal_faces": [["21"]]})
    assert run(["sr", "compose", K, L1, L2]) == 0
    assert capsys.readouterr().out == "11,12\n"


def test_oracle_rmac_and_verify(bd2, capsys):
    assert run(["oracle", "rmac", bd2]) == 0
    assert capsys.readouterr().out == "1 + t^2\n"
    assert run(["oracle", "verify", bd2]) == 0
    assert "PASS: series-matches-cubical-model" in capsys.readouterr().out


def test_oracle_sweep_seeded(capsys):
    assert run(["oracle", "sweep", "--vertices", "3", "--count", "5",
                "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "passed 5/5" in out


def test_verify_fixture_suite(capsys):
    assert run(["verify", "paper"]) == 0
    out = capsys.readouterr().out
    assert "PASS: poincare-example" in out
    assert "PASS: composition-example" in out
    assert "PASS: beta-example" in out
    assert "FAIL" not in out


def test_verify_properties(capsys):
    assert run(["verify", "properties", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert out.count("PASS: ") >= 10


def test_missing_file_exits_2(capsys):
    assert run(["complex", "/no/such/file.json"]) == 2
    assert capsys.readouterr().err != ""


def test_malformed_json_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["complex", str(bad)]) == 2
    assert capsys.readouterr().err != ""


def test_unknown_subcommand_exits_2():
    assert run(["frobnicate"]) == 2


def test_oracle_rmac_needs_file(capsys):
    assert run(["oracle", "rmac"]) == 2
    assert "complex file" in capsys.readouterr().err
