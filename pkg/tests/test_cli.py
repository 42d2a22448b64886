import json
import subprocess
import sys

import pytest

from rootforge import cli


def run_cli(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_exponents_output(capsys):
    code, out = run_cli(["exponents", "--type", "H4"], capsys)
    assert code == 0
    assert json.loads(out) == {"h": 30, "exponents": [1, 11, 19, 29]}


def test_roots_h3(capsys, tmp_path):
    dot = tmp_path / "h3.dot"
    code, out = run_cli(
        ["roots", "--type", "H3", "--backend", "exact", "--diagram-out", str(dot)],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 30
    assert data["backend"] == "exact"
    # exact scalars rendered as golden strings
    flat = [c for root in data["roots"] for c in root]
    assert any(isinstance(c, str) and c.endswith("t") for c in flat)
    assert dot.read_text().startswith("graph")


def test_roots_float_backend(capsys):
    code, out = run_cli(["roots", "--type", "H3", "--backend", "float"], capsys)
    assert code == 0
    assert json.loads(out)["count"] == 30


def test_chars_solid(capsys):
    code, out = run_cli(["chars", "--solid", "icosahedron"], capsys)
    assert code == 0
    assert json.loads(out) == {"Γ1": 1, "Γ3": 3, "Γ3p": 1, "Γ4": 2, "Γ5": 3}


def test_chars_table_csv(capsys):
    code, out = run_cli(["chars", "--table", "A5"], capsys)
    assert code == 0
    assert out.startswith("irrep,")


def test_chars_conjugacy_classes_csv(capsys):
    code, out = run_cli(["chars", "--classes", "2T"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "size,order,trace,scalar_part"
    assert len(lines) == 1 + 7


def test_induce_command(capsys):
    code, out = run_cli(["induce", "--from", "A3"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["to"] == "D4"
    assert data["count"] == 24


def test_e8_verify(capsys, tmp_path):
    gram = tmp_path / "gram.csv"
    code, out = run_cli(["e8", "--verify", "--gram-csv", str(gram)], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 240
    assert data["recognized"] == "E8"
    assert data["unreduced_copies"] == ["H4", "H4"]
    assert data["cartan_matches_E8"] is True
    assert len(gram.read_text().strip().splitlines()) == 8


def test_affine_point_array(capsys, tmp_path):
    csv = tmp_path / "array.csv"
    code, out = run_cli(
        ["affine", "--group", "H3", "--axis", "5fold", "--len", "1.0", "--csv", str(csv)],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["cardinality"] < 732
    assert data["degenerate"] is True
    assert csv.read_text().startswith("x,y,z")


def test_affine_projection(capsys):
    code, out = run_cli(["affine", "--project", "D6"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["target"] == "H3"
    assert data["axis_class"] in {"2fold", "5fold"}


def test_solids_with_off(capsys, tmp_path):
    off = tmp_path / "ico.off"
    dual_off = tmp_path / "dual.off"
    code, out = run_cli(
        ["solids", "--name", "icosahedron", "--off", str(off), "--dual-off", str(dual_off)],
        capsys,
    )
    assert code == 0
    meta = json.loads(out)
    assert meta["vertices"] == 12
    assert off.read_text().startswith("OFF\n12 20 30")
    assert dual_off.read_text().startswith("OFF\n20 12 30")


def test_mckay_command(capsys, tmp_path):
    dot = tmp_path / "mckay.dot"
    code, out = run_cli(["mckay", "--group", "2I", "--dot", str(dot)], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["affine_match"] == "affine E8"
    assert data["marks_are_kernel"] is True
    assert dot.read_text().startswith("graph")


def test_hamilton_command(capsys):
    code, out = run_cli(["hamilton", "--graph", "dodecahedron"], capsys)
    assert code == 0
    assert json.loads(out)["cycles"] == 30


def test_hamilton_paths(capsys):
    code, out = run_cli(
        ["hamilton", "--graph", "tetrahedron", "--paths", "--start", "0"], capsys
    )
    assert code == 0
    assert json.loads(out)["paths"] == 6


def test_hamilton_graph_file(capsys, tmp_path):
    gf = tmp_path / "graph.json"
    gf.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}))
    code, out = run_cli(["hamilton", "--graph-file", str(gf)], capsys)
    assert code == 0
    assert json.loads(out)["cycles"] == 1


def test_hamilton_edge_list_text(capsys, tmp_path):
    gf = tmp_path / "graph.txt"
    gf.write_text("0 1\n1 2\n2 3\n3 0\n0 2\n")
    code, out = run_cli(["hamilton", "--graph-file", str(gf)], capsys)
    assert code == 0
    assert json.loads(out)["cycles"] == 1


def test_fullerene_command(capsys, tmp_path):
    code, out = run_cli(
        ["fullerene", "--start", "C60", "--shells", "1", "--off-prefix", str(tmp_path / "shell")],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert [s["atoms"] for s in data["shells"]] == [60, 240]
    assert (tmp_path / "shell_240.off").exists()


def test_domain_error_exit_code(capsys):
    code = cli.main(["solids", "--name", "not-a-solid"])
    err = capsys.readouterr().err
    assert code == 1
    assert "UnknownName" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["roots", "--no-such-flag"])
    assert exc.value.code == 2


def test_unknown_subcommand_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_bad_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("ROOTFORGE_THREADS", "zero")
    assert cli.main(["exponents", "--type", "D4"]) == 2


def test_threads_env_accepted(monkeypatch, capsys):
    monkeypatch.setenv("ROOTFORGE_THREADS", "4")
    code, out = run_cli(["exponents", "--type", "D4"], capsys)
    assert code == 0


DETERMINISM_COMMANDS = [
    ["exponents", "--type", "H4"],
    ["roots", "--type", "H3"],
    ["chars", "--solid", "icosidodecahedron"],
    ["mckay", "--group", "2T"],
    ["solids", "--name", "dodecahedron"],
    ["hamilton", "--graph", "cube"],
]


@pytest.mark.parametrize("argv", DETERMINISM_COMMANDS, ids=lambda a: a[0])
def test_byte_identical_across_processes(argv):
    runs = [
        subprocess.run(
            [sys.executable, "-m", "rootforge.cli", *argv],
            capture_output=True,
            check=True,
        ).stdout
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    assert runs[0]


OPERATION_COVERAGE = {
    "golden arithmetic / serialization": ["roots", "--type", "H3"],
    "closure": ["roots", "--type", "D4"],
    "cartan + diagram": ["roots", "--type", "B3"],
    "coxeter element + exponents + factorization": ["exponents", "--type", "F4"],
    "pin/spin + induction": ["induce", "--from", "A3"],
    "e8 + reduced form + recognize": ["e8", "--verify"],
    "affine reflection arrays": ["affine", "--axis", "3fold", "--len", "0.5"],
    "affine root projection": ["affine", "--project", "A4"],
    "fullerene onions": ["fullerene", "--start", "C80", "--shells", "1"],
    "solids + orbits + dual + off": ["solids", "--name", "rhombic_triacontahedron"],
    "caspar-klug": ["solids", "--name", "truncated_icosahedron"],
    "character tables + decomposition": ["chars", "--solid", "MS2_tiling_vertices"],
    "conjugacy classes": ["chars", "--classes", "2O"],
    "mckay graphs + identities": ["mckay", "--group", "Dic3"],
    "hamiltonian cycles": ["hamilton", "--graph", "petersen"],
    "hamiltonian paths": ["hamilton", "--graph", "cube", "--paths"],
}


@pytest.mark.parametrize("argv", OPERATION_COVERAGE.values(), ids=OPERATION_COVERAGE.keys())
def test_every_operation_reachable_from_cli(argv, capsys):
    assert cli.main(argv) == 0
    assert capsys.readouterr().out
