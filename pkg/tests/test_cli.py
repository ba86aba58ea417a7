import json

import pytest

from cocontra import cli, serialize
from cocontra.errors import ParseError


BASE_DECLS = [
    {"kind": "finset", "name": "C", "elements": ["1", "2"]},
    {"kind": "finset", "name": "X", "elements": ["a", "b", "c"]},
    {"kind": "set_comodule", "name": "M", "carrier": "X", "base": "C",
     "phi": {"a": "1", "b": "2", "c": "2"}},
    {"kind": "contra_product", "name": "t", "base": "C",
     "fibers": {"1": ["p", "q"], "2": ["r", "s"]}},
    {"kind": "group_like_coalgebra", "name": "G", "field": "F2",
     "size": 2},
    {"kind": "graded_space", "name": "V", "field": "F2", "dims": {"0": 2}},
    {"kind": "cofree_comodule", "name": "TV", "coalgebra": "G", "on": "V"},
    {"kind": "free_contramodule", "name": "FV", "coalgebra": "G",
     "on": "V"},
]


def run_cli(tmp_path, manifest, argv_extra=()):
    path = tmp_path / "manifest.json"
    path.write_text(json.dumps(manifest))
    out = tmp_path / "report.json"
    code = cli.main(["run", str(path), "--out", str(out), *argv_extra])
    return code, json.loads(out.read_text())


def test_manifest_pass_exit_zero(tmp_path):
    manifest = {
        "declarations": BASE_DECLS,
        "jobs": [
            {"id": "j1", "command": "unique-comonoid", "args": {"base": "C"}},
            {"id": "j2", "command": "r", "args": {"target": "M"}},
            {"id": "j3", "command": "adjoint",
             "args": {"contramodule": "FV", "comodule": "TV"}},
        ],
    }
    code, report = run_cli(tmp_path, manifest, ("--oracle",))
    assert code == 0
    assert [j["status"] for j in report["jobs"]] == ["pass"] * 3
    assert report["jobs"][0]["counts"] == {"candidates": 16, "valid": 1}


def test_unique_comonoid_manifest_counts(tmp_path):
    manifest = {
        "declarations": [],
        "jobs": [{"id": "u3", "command": "unique-comonoid",
                  "args": {"size": 3}}],
    }
    code, report = run_cli(tmp_path, manifest)
    assert code == 0
    assert report["jobs"][0]["counts"] == {"candidates": 729, "valid": 1}


def test_broken_coalgebra_fails_with_witness(tmp_path):
    manifest = {
        "declarations": [
            {"kind": "graded_space", "name": "W", "field": "Q",
             "dims": {"0": 2}, "labels": {"0": ["u", "z"]}},
            {"kind": "coalgebra", "name": "Cbad", "space": "W",
             "delta_blocks": {
                 "0": [["1", "0"], ["0", "0"], ["0", "1"], ["0", "0"]]
             },
             "eps_blocks": {"0": [["1", "1"]]}},
        ],
        "jobs": [{"id": "j1", "command": "check",
                  "args": {"target": "Cbad"}}],
    }
    code, report = run_cli(tmp_path, manifest)
    assert code == 1
    job = report["jobs"][0]
    assert job["status"] == "fail"
    assert job["witnesses"]  # a concrete witness travels with the failure


def test_empty_job_list_passes(tmp_path):
    code, report = run_cli(tmp_path, {"declarations": [], "jobs": []})
    assert code == 0
    assert report["jobs"] == []


def test_unknown_command_is_an_error(tmp_path):
    manifest = {"declarations": [],
                "jobs": [{"id": "j1", "command": "frobnicate"}]}
    path = tmp_path / "m.json"
    path.write_text(json.dumps(manifest))
    with pytest.raises(Exception):
        cli.run_manifest(json.loads(path.read_text()),
                         {"budget": 10**6, "oracle": False, "seed": None,
                          "timing": False, "parallel": False, "field": "Q"})


def test_budget_exceeded_surfaces_as_job_error(tmp_path):
    manifest = {
        "declarations": [],
        "jobs": [{"id": "j1", "command": "enumerate",
                  "args": {"carrier": 3, "base": 2}, "budget": 10}],
    }
    code, report = run_cli(tmp_path, manifest)
    assert code == 2
    job = report["jobs"][0]
    assert job["status"] == "error"
    assert job["witnesses"][0]["error"] == "budget-exceeded"
    assert job["witnesses"][0]["projected"] == 3 ** 9


def test_reports_byte_identical_across_runs(tmp_path):
    manifest = {
        "declarations": BASE_DECLS,
        "jobs": [
            {"id": "a", "command": "lr", "args": {"target": "M"}},
            {"id": "b", "command": "kleisli",
             "args": {"coalgebra": "G", "dim": 2}},
            {"id": "c", "command": "adjoint",
             "args": {"random": {"count": 2, "max_dim": 2,
                                 "field": "F2"}}},
        ],
    }
    path = tmp_path / "m.json"
    path.write_text(json.dumps(manifest))
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert cli.main(["run", str(path), "--seed", "11",
                     "--out", str(out1)]) == 0
    assert cli.main(["run", str(path), "--seed", "11",
                     "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_parallel_report_matches_sequential(tmp_path):
    manifest = {
        "declarations": BASE_DECLS,
        "jobs": [
            {"id": "a", "command": "r", "args": {"target": "M"}},
            {"id": "b", "command": "l", "args": {"target": "t"}},
            {"id": "c", "command": "demo-noncocontinuous",
             "args": {"c_size": 3}},
        ],
    }
    path = tmp_path / "m.json"
    path.write_text(json.dumps(manifest))
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert cli.main(["run", str(path), "--out", str(out1)]) == 0
    assert cli.main(["run", str(path), "--parallel",
                     "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_single_command_r_on_file(tmp_path):
    bundle = {
        "declarations": BASE_DECLS[:3],
        "main": "M",
    }
    f = tmp_path / "comodule.json"
    f.write_text(json.dumps(bundle))
    out = tmp_path / "report.json"
    assert cli.main(["r", str(f), "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    result = report["jobs"][0]["result"]
    assert result["kind"] == "contra_product"
    assert result["fibers"] == {"1": ["a"], "2": ["b", "c"]}


def test_single_command_decompose(tmp_path):
    bundle = {"declarations": [BASE_DECLS[0], BASE_DECLS[3]], "main": "t"}
    f = tmp_path / "contra.json"
    f.write_text(json.dumps(bundle))
    out = tmp_path / "report.json"
    assert cli.main(["decompose", str(f), "--basepoint", "{1:p,2:r}",
                     "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    sizes = report["jobs"][0]["counts"]["fiber_sizes"]
    assert sizes == [2, 2]


def test_demo_subcommand_exit_and_sizes(tmp_path):
    out = tmp_path / "report.json"
    assert cli.main(["demo-noncocontinuous", "--c-size", "2",
                     "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["jobs"][0]["counts"]["sizes"] == [3, 1]


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    assert cli.main(["run", str(bad)]) == 2


def test_duplicate_names_rejected():
    doc = {
        "declarations": [
            {"kind": "finset", "name": "A", "elements": ["x"]},
            {"kind": "finset", "name": "A", "elements": ["y"]},
        ]
    }
    with pytest.raises(ParseError):
        serialize.parse_bundle(doc)


def test_unresolved_reference_rejected():
    doc = {
        "declarations": [
            {"kind": "finmap", "name": "f", "dom": "missing",
             "cod": "missing", "table": {}},
        ]
    }
    with pytest.raises(ParseError):
        serialize.parse_bundle(doc)


def test_canonical_round_trip_is_byte_identical(tmp_path):
    doc = {
        "declarations": BASE_DECLS,
        "jobs": [{"args": {"target": "M"}, "command": "r", "id": "j1"}],
        "version": "1",
    }
    canon = serialize.canonical_bytes(doc)
    f = tmp_path / "canonical.json"
    f.write_bytes(canon)
    parsed = serialize.load_document(str(f))
    assert serialize.canonical_bytes(parsed) == canon


def test_linear_declarations_parse_with_exact_scalars(tmp_path):
    manifest = {
        "declarations": [
            {"kind": "graded_space", "name": "V", "field": "Q",
             "dims": {"0": 2}},
            {"kind": "linmap", "name": "f", "dom": "V", "cod": "V",
             "degree": 0,
             "blocks": {"0": [["1/2", "0"], ["-3/4", "1"]]}},
            {"kind": "poly_coalgebra", "name": "P", "truncation": 2,
             "z_degree": 0, "field": "Q"},
        ],
        "jobs": [{"id": "j1", "command": "check", "args": {"target": "P"}}],
    }
    code, report = run_cli(tmp_path, manifest)
    assert code == 0


def test_randomized_jobs_require_a_seed(tmp_path):
    manifest = {
        "declarations": [],
        "jobs": [{"id": "j1", "command": "adjoint",
                  "args": {"random": {"count": 1, "max_dim": 2,
                                      "field": "F2"}}}],
    }
    code, report = run_cli(tmp_path, manifest)
    assert code == 2
    assert report["jobs"][0]["status"] == "error"


def test_seed_recorded_in_report(tmp_path):
    manifest = {"declarations": [], "jobs": []}
    path = tmp_path / "m.json"
    path.write_text(json.dumps(manifest))
    out = tmp_path / "r.json"
    cli.main(["run", str(path), "--seed", "7", "--out", str(out)])
    assert json.loads(out.read_text())["seed"] == 7
