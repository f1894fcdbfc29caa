"""Workbench CLI: file formats, subcommands, reports, exit codes."""

import io
import json
import os
import subprocess
import sys

import pytest

from homcat.exact_tensor import GF, QQ, flip_map, identity
from homcat.qt_braiding import check_r_conditions
from homcat.rep_theory import comodule_from_cube, regular_comodule, regular_module
from homcat.workbench_cli import (
    canonical_dumps, gen_group_bialgebra, gen_kz2_qt, main, parse_structure,
    structure_to_dict,
)
from homcat.yetter_drinfeld import YDModule

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = main(argv)
    finally:
        sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


@pytest.fixture()
def ws(tmp_path):
    def path(name):
        return str(tmp_path / name)

    def write(name, doc):
        with open(path(name), "w") as fh:
            fh.write(canonical_dumps(doc))
        return path(name)

    return path, write


# -------------------------------------------------------------- generators

def test_group_bialgebra_generator_validates_output():
    for n, k in ((1, 1), (2, 1), (3, 2), (5, 3)):
        H, rep = gen_group_bialgebra(n, k)
        assert rep.ok, (n, k)
        assert H.dim == n
    with pytest.raises(ValueError):
        gen_group_bialgebra(0, 1)


def test_kz2_generator_over_q_and_f3():
    H, R = gen_kz2_qt()
    assert check_r_conditions(H, R).ok
    H3, R3 = gen_kz2_qt(GF(3))
    assert [str(v) for v in R3.coeffs] == ["2", "2", "2", "1"]
    assert check_r_conditions(H3, R3).ok
    with pytest.raises(ValueError):
        gen_kz2_qt(GF(2))


def test_gen_subcommand_writes_artifacts(ws):
    path, _ = ws
    code, out, err = run(["gen", "group-bialgebra", "--n", "2", "--k", "1",
                          "--out", path("H.json")])
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert len(doc["axioms"]) > 0
    assert doc["pass"] == all(a["pass"] for a in doc["axioms"])
    assert os.path.exists(path("H.json"))
    code, _, _ = run(["gen", "kz2-qt", "--out", path("Hq.json"),
                      "--out-r", path("R.json")])
    assert code == 0
    code, _, _ = run(["gen", "kz2-qt", "--p", "2"])
    assert code == 2


# ----------------------------------------------------------- golden files

def golden_names():
    return sorted(os.listdir(GOLDEN))


@pytest.mark.parametrize("name", golden_names())
def test_golden_roundtrip_byte_identical(name):
    with open(os.path.join(GOLDEN, name)) as fh:
        blob = fh.read()
    parsed = parse_structure(json.loads(blob))
    again = canonical_dumps(structure_to_dict(parsed.kind, parsed.obj,
                                              parsed.parent))
    assert again == blob, name


@pytest.mark.parametrize("kind", ["algebra", "coalgebra", "bialgebra",
                                  "module", "comodule", "yd"])
def test_golden_structures_check_clean(kind):
    code, out, _ = run(["check", kind, os.path.join(GOLDEN, f"{kind}.json")])
    assert code == 0, out
    assert json.loads(out)["pass"] is True


def test_golden_qt_pair_checks_clean():
    code, out, _ = run(["check", "qt",
                        "--bialgebra", os.path.join(GOLDEN, "bialgebra.json"),
                        "--r", os.path.join(GOLDEN, "rmatrix.json")])
    assert code == 0


# ------------------------------------------------------------- round trips

def test_roundtrips_through_library_objects(ws):
    H, _ = gen_group_bialgebra(2, 1)
    Hq, Rq = gen_kz2_qt()
    M = regular_module(H.algebra)
    co = [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]
    co[0][1][0] = "1"
    co[1][1][1] = "1"
    coact = comodule_from_cube(
        QQ, [[[QQ.coerce(v) for v in r] for r in p] for p in co],
        identity(2)).coaction
    docs = {
        "bialgebra": structure_to_dict("bialgebra", H),
        "algebra": structure_to_dict("algebra", H.algebra),
        "coalgebra": structure_to_dict("coalgebra", H.coalgebra),
        "module": structure_to_dict("module", M, parent="H.json"),
        "comodule": structure_to_dict("comodule",
                                      regular_comodule(H.coalgebra),
                                      parent="H.json"),
        "yd": structure_to_dict("yd",
                                YDModule(QQ, M.action, coact, identity(2)),
                                parent="H.json"),
        "rmatrix": structure_to_dict("rmatrix", Rq),
        "linmap": structure_to_dict("linmap", flip_map(2, 3)),
    }
    for kind, doc in docs.items():
        blob = canonical_dumps(doc)
        parsed = parse_structure(json.loads(blob))
        assert parsed.kind == kind
        again = canonical_dumps(structure_to_dict(parsed.kind, parsed.obj,
                                                  parsed.parent))
        assert again == blob, kind


# ------------------------------------------------------------ spec examples

def test_exit_code_examples(ws):
    path, write = ws
    code, _, _ = run(["gen", "group-bialgebra", "--n", "2", "--k", "1",
                      "--out", path("H.json")])
    assert code == 0

    # passing check returns 0
    code, _, _ = run(["check", "bialgebra", path("H.json")])
    assert code == 0

    # the flip with identity twist satisfies the braid relation: 0
    write("B.json", structure_to_dict("linmap", flip_map(2, 2)))
    write("A.json", structure_to_dict("linmap", identity(2)))
    code, _, _ = run(["ybe", "--map", path("B.json"), "--alpha", path("A.json")])
    assert code == 0

    # one-sided R fails quasitriangularity with eq39 flagged: 1
    write("Rbad.json", {"kind": "rmatrix", "field": "Q", "dim": 2,
                        "coeffs": ["0", "1", "0", "0"]})
    code, out, _ = run(["check", "qt", "--bialgebra", path("H.json"),
                        "--r", path("Rbad.json")])
    assert code == 1
    doc = json.loads(out)
    flags = {a["axiom"]: a["pass"] for a in doc["axioms"]}
    assert flags["eq39"] is False
    assert any("counterexample" in a for a in doc["axioms"])
    assert doc["pass"] is False


# -------------------------------------------------------------- subcommands

def test_check_module_and_yd_with_parent(ws):
    path, write = ws
    run(["gen", "group-bialgebra", "--n", "2", "--k", "1",
         "--out", path("H.json")])
    H, _ = gen_group_bialgebra(2, 1)
    M = regular_module(H.algebra)
    write("M.json", structure_to_dict("module", M, parent="H.json"))
    code, _, _ = run(["check", "module", path("M.json")])
    assert code == 0
    # explicit parent override
    code, _, _ = run(["check", "module", path("M.json"),
                      "--parent", path("H.json")])
    assert code == 0


def test_twist_commands(ws):
    path, write = ws
    run(["gen", "group-bialgebra", "--n", "2", "--k", "1",
         "--out", path("H.json")])
    write("E.json", structure_to_dict("linmap", identity(2)))
    code, _, _ = run(["twist", "--bialgebra", path("H.json"),
                      "--endo", path("E.json"), "--out", path("Htw.json")])
    assert code == 0
    code, _, _ = run(["check", "bialgebra", path("Htw.json")])
    assert code == 0
    H, _ = gen_group_bialgebra(2, 1)
    write("Alg.json", structure_to_dict("algebra", H.algebra))
    code, _, _ = run(["twist", "--algebra", path("Alg.json"),
                      "--endo", path("E.json"), "--out", path("Atw.json")])
    assert code == 0
    # non-endomorphism is a usage error, not a failed check
    write("Ebad.json", {"kind": "linmap", "field": "Q", "rows": 2, "cols": 2,
                        "matrix": [["1", "1"], ["0", "1"]]})
    code, _, _ = run(["twist", "--algebra", path("Alg.json"),
                      "--endo", path("Ebad.json")])
    assert code == 2


def test_tensor_command_plain_and_yd(ws):
    path, write = ws
    run(["gen", "group-bialgebra", "--n", "2", "--k", "1",
         "--out", path("H.json")])
    H, _ = gen_group_bialgebra(2, 1)
    M = regular_module(H.algebra)
    write("M.json", structure_to_dict("module", M, parent="H.json"))
    code, _, _ = run(["tensor", "--bialgebra", path("H.json"),
                      "--module", path("M.json"), "--module", path("M.json"),
                      "--out", path("MM.json")])
    assert code == 0
    code, _, _ = run(["check", "module", path("MM.json"),
                      "--parent", path("H.json")])
    assert code == 0

    co = [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]
    co[0][1][0] = "1"
    co[1][1][1] = "1"
    coact = comodule_from_cube(
        QQ, [[[QQ.coerce(v) for v in r] for r in p] for p in co],
        identity(2)).coaction
    write("YD.json", structure_to_dict(
        "yd", YDModule(QQ, M.action, coact, identity(2)), parent="H.json"))
    code, _, _ = run(["tensor", "--bialgebra", path("H.json"),
                      "--module", path("YD.json"), "--module", path("YD.json"),
                      "--out", path("T.json")])
    assert code == 0
    assert json.loads(open(path("T.json")).read())["kind"] == "yd"
    code, _, _ = run(["check", "yd", path("T.json"),
                      "--parent", path("H.json")])
    assert code == 0


def test_braiding_bmap_ybe_hexagons(ws):
    path, write = ws
    run(["gen", "kz2-qt", "--out", path("Hq.json"), "--out-r", path("R.json")])
    H, _ = gen_group_bialgebra(2, 1)
    M = regular_module(H.algebra)
    write("M.json", structure_to_dict("module", M, parent="Hq.json"))
    write("A.json", structure_to_dict("linmap", identity(2)))
    code, _, _ = run(["braiding", "--bialgebra", path("Hq.json"),
                      "--r", path("R.json"), "--module", path("M.json"),
                      "--module", path("M.json"), "--out", path("c.json")])
    assert code == 0
    code, _, _ = run(["bmap", "--bialgebra", path("Hq.json"),
                      "--r", path("R.json"), "--module", path("M.json"),
                      "--out", path("b.json")])
    assert code == 0
    code, _, _ = run(["ybe", "--map", path("b.json"),
                      "--alpha", path("A.json")])
    assert code == 0
    code, _, _ = run(["hexagons", "--bialgebra", path("Hq.json"),
                      "--r", path("R.json"), "--module", path("M.json"),
                      "--module", path("M.json"), "--module", path("M.json")])
    assert code == 0


def test_mixed_ybe_command(ws):
    path, write = ws
    write("B.json", structure_to_dict("linmap", flip_map(2, 2)))
    write("A.json", structure_to_dict("linmap", identity(2)))
    code, _, _ = run(["mixed-ybe", "--b-uv", path("B.json"),
                      "--b-uw", path("B.json"), "--b-vw", path("B.json"),
                      "--alpha-u", path("A.json"), "--alpha-v", path("A.json"),
                      "--alpha-w", path("A.json")])
    assert code == 0


def test_dehomify_commands(ws):
    path, write = ws
    run(["gen", "group-bialgebra", "--n", "2", "--k", "1",
         "--out", path("H.json")])
    H, _ = gen_group_bialgebra(2, 1)
    M = regular_module(H.algebra)
    co = [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]
    co[0][1][0] = "1"
    co[1][1][1] = "1"
    coact = comodule_from_cube(
        QQ, [[[QQ.coerce(v) for v in r] for r in p] for p in co],
        identity(2)).coaction
    write("YD.json", structure_to_dict(
        "yd", YDModule(QQ, M.action, coact, identity(2)), parent="H.json"))
    write("YDB.json", {"kind": "yd", "field": "Q", "dim": 2,
                       "parent": "H.json",
                       "action": [[["1", "0"], ["0", "1"]],
                                  [["1", "0"], ["0", "-1"]]],
                       "coaction": [[["1", "0"], ["0", "0"]],
                                    [["0", "0"], ["0", "1"]]],
                       "alpha": [["1", "0"], ["0", "1"]]})
    code, _, _ = run(["dehomify", "pentagon", "--bialgebra", path("H.json"),
                      "--module", path("YD.json"), "--module", path("YDB.json"),
                      "--module", path("YD.json"), "--module", path("YDB.json")])
    assert code == 0
    code, _, _ = run(["dehomify", "hexagons", "--bialgebra", path("H.json"),
                      "--module", path("YD.json"), "--module", path("YDB.json"),
                      "--module", path("YD.json")])
    assert code == 0
    code, out, _ = run(["dehomify", "cross-check", "--bialgebra", path("H.json"),
                        "--module", path("YD.json"),
                        "--module", path("YDB.json")])
    assert code == 0
    doc = json.loads(out)
    assert sorted(a["axiom"] for a in doc["axioms"]) == ["eq3333c", "eq9999d"]


def test_check_mha_flags_incompatible_action(ws):
    path, write = ws
    run(["gen", "group-bialgebra", "--n", "2", "--k", "1",
         "--out", path("H.json")])
    H, _ = gen_group_bialgebra(2, 1)
    write("Alg.json", structure_to_dict("algebra", H.algebra))
    write("M.json", structure_to_dict("module", regular_module(H.algebra),
                                      parent="H.json"))
    code, out, _ = run(["check", "mha", "--bialgebra", path("H.json"),
                        "--algebra", path("Alg.json"),
                        "--action", path("M.json")])
    assert code == 1
    doc = json.loads(out)
    assert {a["axiom"]: a["pass"] for a in doc["axioms"]} \
        == {"compmodulealgebra": False}


# ------------------------------------------------------------ failure modes

def test_malformed_inputs_exit_2(ws):
    path, write = ws
    write("broken.json", {"kind": "bialgebra", "field": "Q", "dim": 2,
                          "mul": [[["1"]]], "comul": [], "alpha": [],
                          "psi": []})
    code, _, err = run(["check", "bialgebra", path("broken.json")])
    assert code == 2 and "error:" in err
    with open(path("notjson.json"), "w") as fh:
        fh.write("{nope")
    code, _, _ = run(["check", "algebra", path("notjson.json")])
    assert code == 2
    code, _, _ = run(["check", "module", path("broken.json")])
    assert code == 2
    code, _, _ = run(["check", "algebra", path("missing.json")])
    assert code == 2


def test_wrong_parent_kind_exits_2(ws):
    path, write = ws
    run(["gen", "kz2-qt", "--out", path("Hq.json"), "--out-r", path("R.json")])
    H, _ = gen_group_bialgebra(2, 1)
    write("M.json", structure_to_dict("module", regular_module(H.algebra),
                                      parent="Hq.json"))
    code, _, _ = run(["check", "module", path("M.json"),
                      "--parent", path("R.json")])
    assert code == 2


# ----------------------------------------------------------------- reports

def test_report_copy_and_stderr_summary(ws):
    path, _ = ws
    run(["gen", "group-bialgebra", "--n", "2", "--k", "1",
         "--out", path("H.json")])
    code, out, err = run(["check", "bialgebra", path("H.json"),
                          "--out", path("rep.json")])
    assert code == 0
    saved = json.loads(open(path("rep.json")).read())
    assert saved["pass"] is True
    assert saved == json.loads(out)
    assert "overall: PASS" in err
    assert saved["command"][0] == "check"
    assert isinstance(saved["time_seconds"], float)


def test_console_entry_point(ws):
    path, _ = ws
    run(["gen", "group-bialgebra", "--n", "2", "--k", "1",
         "--out", path("H.json")])
    proc = subprocess.run([sys.executable, "-m", "homcat.workbench_cli",
                           "check", "bialgebra", path("H.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "overall: PASS" in proc.stderr
    json.loads(proc.stdout)
