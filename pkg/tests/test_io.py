import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from gsplines import Automorphism, LabeledIso, ParseError, Ring, Spline, io

from conftest import DATA, ZX, random_connected, to_graph


def test_every_data_file_round_trips(tmp_path):
    for path in sorted(DATA.glob("*.json")):
        obj = json.loads(path.read_text())
        if "vertex_map" in obj:
            iso = io.iso_from_json(obj)
            assert io.iso_from_json(json.loads(io.dumps(io.iso_to_json(iso)))) == iso
        elif "values" in obj:
            rho = io.load_spline(path)
            out = tmp_path / path.name
            io.save(out, io.spline_to_json(rho))
            assert io.load_spline(out) == rho
        else:
            G = io.load_graph(path)
            assert io.graph_from_json(json.loads(io.dumps(io.graph_to_json(G)))) == G
            # files in data/ are stored in canonical form
            assert path.read_text() == io.dumps(io.graph_to_json(G))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["Z", "Z/6", "Z/12", "Z[x]"]))
def test_random_graph_round_trip(seed, ring_text):
    rng = random.Random(seed)
    ring = Ring.parse(ring_text)
    labels = [ZX("x+1"), ZX("2x-4"), ZX(3)] if ring.is_polynomial else list(range(1, 13))
    G = to_graph(ring, *random_connected(rng, rng.randint(1, 5), labels))
    assert io.graph_from_json(json.loads(io.dumps(io.graph_to_json(G)))) == G
    values = {v: rng.choice(labels) for v in G.vertices}
    rho = Spline(G, values)
    assert io.spline_from_json(json.loads(io.dumps(io.spline_to_json(rho)))) == rho


def test_iso_round_trip():
    iso = LabeledIso.from_mapping({"a": "b", "b": "a"}, Automorphism(-1, 4))
    assert io.iso_from_json(io.iso_to_json(iso)) == iso
    assert io.iso_to_json(LabeledIso.from_mapping({"a": "a"}))["automorphism"] == "identity"


def test_polynomial_ideals_need_nested_arrays():
    base = {"ring": "Z[x]", "vertices": ["a", "b"]}
    G = io.graph_from_json({**base, "edges": [{"from": "a", "to": "b", "ideal": [[-9, 0, 1], 6]}]})
    assert str(G.label("a", "b")) == "⟨6, x^2 - 9⟩"
    with pytest.raises(ParseError, match=r"edges\[0\]\.ideal"):
        io.graph_from_json({**base, "edges": [{"from": "a", "to": "b", "ideal": [-9, 0, 1]}]})


@pytest.mark.parametrize("obj, where", [
    ({"vertices": [], "edges": []}, "ring"),
    ({"ring": "Q", "vertices": [], "edges": []}, "ring"),
    ({"ring": {"kind": "reals"}, "vertices": [], "edges": []}, "ring.kind"),
    ({"ring": "Z", "vertices": ["a", 3], "edges": []}, "vertices"),
    ({"ring": "Z", "vertices": ["a", "b"], "edges": [{"from": "a", "to": "b"}]}, r"edges\[0\]\.ideal"),
    ({"ring": "Z", "vertices": ["a", "b"], "edges": [{"from": "a", "to": "b", "ideal": ["two"]}]},
     r"edges\[0\]\.ideal\[0\]"),
    ({"ring": "Z", "vertices": ["a", "b"], "edges": [{"from": "a", "to": "c", "ideal": [2]}]}, "edges"),
])
def test_parse_errors_name_the_field(obj, where):
    with pytest.raises(ParseError, match=where):
        io.graph_from_json(obj)


def test_json_syntax_errors_name_the_line(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "ring": "Z",\n  "vertices": [,]\n}\n')
    with pytest.raises(ParseError, match="line 3"):
        io.load_graph(bad)


def test_spline_values_are_checked(tmp_path):
    with pytest.raises(ParseError, match="values"):
        io.spline_from_json({"graph": "bowtie.json", "values": {"u": 1}}, DATA)
    with pytest.raises(ParseError, match="values.u"):
        io.spline_from_json({"graph": "bowtie.json", "values": {"u": "x"}}, DATA)
