import json
import os
import pathlib

import pytest

import hhbv

TABLES = pathlib.Path(os.environ.get("HHBV_TABLES", pathlib.Path(__file__).parents[2] / "data" / "tables"))


def load(name):
    return json.loads((TABLES / name).read_text())


def test_model_round_trips_through_verify():
    table = hhbv.sphere_model("s2-f2", bound=6, ring="F2", eps=1, lambda_=1)
    names = [m["name"] for m in table["monomials"]]
    assert "a u^3" in names
    assert hhbv.verify(table)["passed"]


def test_shipped_tables_pass():
    for path in sorted(TABLES.glob("*.json")):
        assert hhbv.verify(path.read_text())["passed"], path.name


def test_corrupted_table_names_a_triple():
    corrupted = pathlib.Path(__file__).parents[1] / "data" / "corrupted_s2_f2.json"
    report = hhbv.verify(corrupted.read_text())
    assert not report["passed"]
    seven = [v for v in report["bv"]["violations"] if v["axiom"] == "SevenTerm"]
    assert seven[0]["monomials"] == ["a", "u", "u^2"]


def test_hh_of_the_two_sphere():
    doc = hhbv.hh("sphere:2", ring="Z", max_word=10, degrees=(0, 6))
    cokernels = {d["from"]: d["cokernel"]["torsion"] for d in doc["delta"]}
    assert cokernels[3] == ["6"]
    assert cokernels[5] == ["10"]
    table = hhbv.hh("sphere:2", ring="F2", max_word=10)["table"]
    names = [m["name"] for m in table["monomials"]]
    assert "g f^3" in names


def test_window_too_small():
    with pytest.raises(hhbv.WindowTooSmall):
        hhbv.hh("sphere:2", ring="Z", max_word=1)


def test_automorphisms_and_isomorphism():
    s2 = load("s2_f2_eps1_lambda0_K8.json")
    hh = load("hh_s2_f2_K8.json")
    autos = hhbv.automorphisms(hhbv.sphere_model("s2-f2", bound=6, ring="F2"))
    assert autos["conclusive"]
    assert [m["u"] for m in autos["maps"]] == ["u", "u + a u^3"]
    bv = hhbv.compare(s2, hh, "bv")
    assert not bv["isomorphic"]
    assert all(r["monomials"] == ["a u"] for r in bv["refutations"])
    g = hhbv.compare(s2, hh, "gerstenhaber")
    assert g["isomorphic"]
    assert g["witness"]["images"]["u"] == "f + g f^3"


def test_reduce_mod_two():
    report = hhbv.reduce(load("even_s2_z_K6.json"), 2, load("s2_f2_eps1_lambda0_K8.json"))
    assert report["corrected_dimensions_match"]
    assert report["delta_ranks_match"]


def test_schema_errors():
    with pytest.raises(hhbv.SchemaError):
        hhbv.verify({"ring": "F2"})
    with pytest.raises(ValueError):
        hhbv.verify("{not json")


def test_thread_count():
    assert hhbv.thread_count() >= 1


def test_algebra_given_as_a_dict():
    algebra = {
        "ring": "Z",
        "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": -3}],
        "unit": 0,
        "products": [[0, 0, ["1", "0"]], [0, 1, ["0", "1"]], [1, 0, ["0", "1"]]],
        "dualizing": ["0", "1"],
    }
    doc = hhbv.hh(algebra, ring="Z", max_word=8, degrees=(0, 3))
    assert [g["free_rank"] for g in doc["groups"]] == [1, 0, 1, 1]
