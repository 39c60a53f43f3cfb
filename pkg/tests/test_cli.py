from __future__ import annotations

import json

import pytest

from catgraph.catalog import standard_graph as S
from catgraph.cli import run
from catgraph.graph import Graph, dumps, isomorphic
from catgraph.limits import product
from catgraph.report import to_jsonable


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_product_of_two_edges(capsys, tmp_path):
    k2 = write(tmp_path, "k2.json", S("K2").to_dict())
    code, out, _ = call(capsys, "product", "--category", "G", k2, k2)
    assert code == 0
    data = json.loads(out)
    assert isomorphic(Graph.from_dict(data["apex"]), S("K4"))
    assert set(data["legs"]) == {"pi_A", "pi_B"}


def test_output_equals_library_serialization(capsys):
    code, out, _ = call(capsys, "product", "--category", "StG", "K3", "K2")
    assert out.strip() == dumps(to_jsonable(product(S("K3"), S("K2"), "StG")), pretty=False)


def test_hom_count(capsys, tmp_path):
    c6 = write(tmp_path, "c6.json", S("C6").to_dict())
    k2 = write(tmp_path, "k2.json", S("K2").to_dict())
    code, out, _ = call(capsys, "hom-count", "--category", "SiLlStG", c6, k2)
    assert code == 0 and json.loads(out) == {"count": 2}


def test_std_then_iso(capsys, tmp_path):
    code, out, _ = call(capsys, "std", "K3")
    assert code == 0
    p = tmp_path / "k3.json"
    p.write_text(out)
    code, out, _ = call(capsys, "iso", str(p), str(p))
    assert code == 0 and json.loads(out)["isomorphic"] is True


def test_std_dot(capsys):
    code, out, _ = call(capsys, "std", "K2", "--dot")
    assert code == 0 and out.startswith("graph")


def test_missing_objects_report_obstructions(capsys):
    code, out, _ = call(capsys, "terminal", "--category", "SiLlStG")
    data = json.loads(out)
    assert code == 0 and data["exists"] is False and data["obstruction"]["passed"]
    code, out, _ = call(capsys, "classifier", "--category", "SiLlG")
    assert json.loads(out)["exists"] is False


def test_classify_and_refute(capsys):
    code, out, _ = call(capsys, "classify", "--property", "generator", "--category", "SiStG", "K5^c")
    assert code == 0 and json.loads(out)["verdict"] is True
    code, out, _ = call(capsys, "refute-l2", "--category", "G")
    assert json.loads(out)["passed"] is True


def test_coequalizer_refused_in_strict_loopless(capsys, tmp_path):
    f = write(tmp_path, "f.json", {"dom": "K2", "cod": "K2",
                                   "map": {"v1": "v1", "v2": "v2", "e1_2": "e1_2"}})
    g = write(tmp_path, "g.json", {"dom": "K2", "cod": "K2",
                                   "map": {"v1": "v2", "v2": "v1", "e1_2": "e1_2"}})
    code, out, _ = call(capsys, "coequalizer", "--category", "SiLlStG", f, g)
    assert code == 0 and json.loads(out)["exists"] is False
    code, out, _ = call(capsys, "coequalizer", "--category", "SiLlG", f, g)
    assert len(json.loads(out)["apex"]["parts"]) == 1


def test_pretty_table(capsys):
    code, out, _ = call(capsys, "properties-table", "--pretty")
    assert code == 0 and out.startswith("Special objects")


@pytest.mark.parametrize("argv", [["product", "--category", "Foo", "K2", "K2"],
                                  ["hom-count", "K2"],
                                  ["terminal", "--battery-max-parts", "-1"]])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and "usage" in err


@pytest.mark.parametrize("argv", [["std", "Q9"], ["product", "/no/such/file.json", "K2"]])
def test_runtime_errors_exit_1(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 1 and err.startswith("catgraph: error:")


def test_bad_json_exits_1(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _, err = call(capsys, "validate", str(p))
    assert code == 1
