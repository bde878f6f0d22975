import io
import json
import subprocess
import sys

import pytest

from cambrian_pop import cli
from cambrian_pop import verify as V


def call(*argv):
    buf = io.StringIO()
    code = cli.run(list(argv), buf)
    return code, buf.getvalue()


def call_json(*argv):
    code, text = call(*argv)
    assert code == 0, text
    return json.loads(text)


def test_pop_weak_example_exact():
    code, text = call("pop", "weak", "--type", "A4", "--perm", "52341")
    assert code == 0
    assert text.strip() == '{"result":"25314"}'


def test_motzkin_count_exact():
    code, text = call("motzkin", "--n", "1", "--count")
    assert code == 0
    assert text.strip() == '{"M":1,"Mbar":1}'


def test_documents_carry_schema_first():
    text = call("orbit", "weak", "--type", "A4", "--perm", "52341")[1]
    assert text.startswith('{"schema":"cambrian-pop/1"')
    assert json.loads(text)["orbit"] == ["52341", "25314", "21354", "12345"]


def test_output_is_deterministic():
    argv = ["lattice", "cambrian", "--type", "B3", "--format", "json"]
    assert call(*argv) == call(*argv)


def test_type_spellings():
    a = call_json("lattice", "weak", "--type", "A3")
    b = call_json("lattice", "weak", "--type", "A", "3")
    assert a == b and a["size"] == 24
    assert call_json("lattice", "weak", "--type", "I2:5")["size"] == 10


def test_lattice_formats():
    code, dot = call("lattice", "cambrian", "--type", "A3", "--format", "dot")
    assert code == 0 and dot.startswith("digraph")
    code, csv = call("lattice", "cambrian", "--type", "A3", "--format", "csv")
    assert code == 0 and len(csv.strip().splitlines()) > 1


def test_dot_legend(tmp_path):
    legend = tmp_path / "legend.json"
    code, _ = call("lattice", "cambrian", "--type", "A2", "--format", "dot", "--legend", str(legend))
    assert code == 0
    data = json.loads(legend.read_text())
    assert "123" in json.dumps(data)


def test_roots_of_h3_are_serialisable():
    data = call_json("roots", "--type", "H3")
    assert json.dumps(data)


def test_arcs_and_motzkin_commands():
    data = call_json("arcs", "--perm", "325148679")
    assert data["arcs"] == ["1-5[--+]", "2-3", "6-8[+]"]
    assert call_json("motzkin", "--n", "5", "--poly", "--format", "json")["coefficients"] == [0, 0, 2, 16, 10, 1]


def test_smc_list_and_mutate():
    listing = call_json("smc", "list", "--type", "A2")
    assert [s["id"] for s in listing["smcs"]] == [0, 1, 2, 3, 4]
    data = call_json("smc", "mutate", "--type", "A2", "--torsion", "2", "--at", "d:0")
    assert data["before"] == {"X": ["01"], "Y": ["10"]}
    assert data["after"] == {"X": [], "Y": ["10", "01"]}
    assert data["torsion_after"] == 0
    assert {w["how"] for w in data["witnesses"]} == {"ker", "carried"}


def test_usage_errors_name_the_flag(capsys):
    code, _ = call("pop", "weak", "--type", "A4", "--perm", "5234")
    assert code == 1
    err = json.loads(capsys.readouterr().err)
    assert err["flag"] == "--perm" and err["schema"] == "cambrian-pop/1"
    code, _ = call("rep", "bricks", "--type", "B3")
    assert code == 1
    assert json.loads(capsys.readouterr().err)["flag"] == "--type"
    code, _ = call("pop", "weak", "--type", "A4", "--perm", "52341", "--bogus")
    assert code == 1
    assert json.loads(capsys.readouterr().err)["flag"] == "--bogus"


def test_unsortable_pop_is_usage_error(capsys):
    # 312 is not sortable for the linear Coxeter element of A2
    code, _ = call("pop", "cambrian", "--type", "A2", "--perm", "312")
    assert code == 1
    assert json.loads(capsys.readouterr().err)["flag"] == "--perm"


def test_group_cap_is_usage_error(monkeypatch, capsys):
    monkeypatch.setenv("CAMBRIAN_POP_MAX_ELEMENTS", "50")
    code, _ = call("lattice", "weak", "--type", "A4")
    assert code == 1
    assert json.loads(capsys.readouterr().err)["flag"] == "CAMBRIAN_POP_MAX_ELEMENTS"


def test_verify_passes():
    data = call_json("verify", "image", "--type", "A3", "--all-coxeter")
    assert data["ok"] and data["checked"] == 4
    assert call_json("verify", "vectors")["ok"]
    assert call_json("verify", "gf", "--n", "4")["ok"]


def test_verify_reports_counterexample(monkeypatch):
    def broken(W, c, camb=None):
        yield {"check": "planted"}

    monkeypatch.setitem(V.PER_COXETER, "image", broken)
    code, text = call("verify", "image", "--type", "A2")
    assert code == 2
    data = json.loads(text)
    assert data["ok"] is False and data["counterexample"] == {"check": "planted"}


def test_lab_experiments():
    ext = call_json("lab", "image-size-extremes")
    assert ext["min"] == 9 and ext["max"] == 12
    assert ext["linear_is_min"] and ext["bipartite_is_max"]
    census = call_json("lab", "upsilon-census", "--type", "A4")
    row = census["table"][0]
    assert row["members"] == ["45231", "54231"] and row["z_c_s1_member"]
    q = call_json("lab", "quotient-orbit-bound", "--samples", "10")
    assert json.dumps(q)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cambrian_pop.cli", "motzkin", "--n", "1", "--count"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == '{"M":1,"Mbar":1}'
