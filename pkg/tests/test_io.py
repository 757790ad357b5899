"""JSON documents, stable string ids, and DOT export."""

import json
import random

import pytest

from bigraphpoly import (
    Bigraph,
    DiBigraph,
    FileFormatError,
    PetriNet,
    decode,
    encode,
    is_isomorphic,
)
from bigraphpoly.fileio import (
    Document,
    _fmt_id,
    document_for,
    dumps,
    load_document,
    parse_document,
    string_ids,
    to_dot,
)

from helpers import random_bigraph, random_digraph, random_labeling, random_net


def sample_graph():
    return Bigraph(["u1", "u2"], ["v1", "v2"], [("u1", "v1"), ("u1", "v2")])


def sample_digraph():
    return DiBigraph(["a"], ["x", "y"], [("a", "x"), ("y", "a")])


def sample_net():
    return PetriNet(
        ["b0", "b1"], ["e1", "e2"], pre={"e1": ["b0"]}, post={"e2": ["b1"]}
    )


def test_round_trip_bigraph_with_string_ids():
    labels = {"v1": 0, "v2": 3}
    doc = document_for(sample_graph(), labels)
    got = parse_document(json.loads(dumps(doc)))
    assert got.kind == "bigraph"
    assert got.obj == sample_graph()
    assert got.labels == labels


def test_round_trip_digraph_with_string_ids():
    doc = document_for(sample_digraph(), {"x": 1, "y": 2})
    got = parse_document(json.loads(dumps(doc)))
    assert got.kind == "digraph"
    assert got.obj == sample_digraph()
    assert got.labels == {"x": 1, "y": 2}


def test_round_trip_net_with_string_ids():
    doc = document_for(sample_net(), {"b0": 0, "b1": 1})
    got = parse_document(json.loads(dumps(doc)))
    assert got.kind == "net"
    assert got.obj == sample_net()
    assert got.labels == {"b0": 0, "b1": 1}


def test_round_trip_decoded_graph_keeps_the_encoding():
    g = decode(encode(sample_graph(), {"v1": 0, "v2": 3}))
    doc = document_for(g, g.natural_labeling)
    got = parse_document(doc)
    assert is_isomorphic(g, got.obj) is not None
    assert encode(got.obj, got.labels) == encode(g, g.natural_labeling)


def test_round_trip_random_objects(tmp_path):
    rng = random.Random(81)
    for i in range(10):
        for obj, labels in (
            (random_bigraph(rng), None),
            (random_digraph(rng), None),
            (random_net(rng), None),
        ):
            path = tmp_path / f"obj{i}_{type(obj).__name__}.json"
            path.write_text(dumps(document_for(obj, labels)))
            got = load_document(path)
            assert got.obj == obj
            assert got.labels is None


def test_labels_are_optional():
    doc = document_for(sample_graph())
    assert "labels" not in doc
    assert parse_document(doc).labels is None


def test_kind_sniffing():
    assert parse_document({"conditions": [], "events": []}).kind == "net"
    assert parse_document({"events": []}).kind == "net"
    assert parse_document({"u": [], "v": []}).kind == "bigraph"
    assert parse_document({"u": [], "v": [], "directed": True}).kind == "digraph"
    implicit = {
        "u": ["a"],
        "v": ["x"],
        "edges": [{"u": "a", "v": "x", "dir": "u_to_v"}],
    }
    assert parse_document(implicit).kind == "digraph"


def test_top_level_and_key_shape_errors():
    with pytest.raises(FileFormatError, match="top level"):
        parse_document([1, 2])
    with pytest.raises(FileFormatError, match="expected a graph"):
        parse_document({"foo": 1})
    with pytest.raises(FileFormatError, match="'u' must be a list"):
        parse_document({"u": "a", "v": []})
    with pytest.raises(FileFormatError, match="'edges' must be a list"):
        parse_document({"u": [], "v": [], "edges": 3})
    with pytest.raises(FileFormatError, match="'events' must be a list"):
        parse_document({"conditions": [], "events": {}})


def test_id_validation_errors():
    with pytest.raises(FileFormatError, match="whitespace-free"):
        parse_document({"u": ["a b"], "v": []})
    with pytest.raises(FileFormatError, match="whitespace-free"):
        parse_document({"u": [3], "v": []})
    with pytest.raises(FileFormatError, match="whitespace-free"):
        parse_document({"u": [""], "v": []})


def test_label_validation_errors():
    base = {"u": ["a"], "v": ["x"], "edges": [["a", "x"]]}
    with pytest.raises(FileFormatError, match="unknown id"):
        parse_document({**base, "labels": {"zzz": 0}})
    with pytest.raises(FileFormatError, match="natural"):
        parse_document({**base, "labels": {"x": -1}})
    with pytest.raises(FileFormatError, match="natural"):
        parse_document({**base, "labels": {"x": True}})
    with pytest.raises(FileFormatError, match="'labels' must be an object"):
        parse_document({**base, "labels": [0]})


def test_edge_shape_errors():
    with pytest.raises(FileFormatError, match=r"\[u, v\] pairs"):
        parse_document({"u": ["a"], "v": ["x"], "edges": [["a", "x", "x"]]})
    with pytest.raises(FileFormatError, match="u, v and dir"):
        parse_document(
            {"u": ["a"], "v": ["x"], "directed": True, "edges": [["a", "x"]]}
        )
    with pytest.raises(FileFormatError, match="v_to_u"):
        parse_document(
            {
                "u": ["a"],
                "v": ["x"],
                "edges": [{"u": "a", "v": "x", "dir": "sideways"}],
            }
        )
    with pytest.raises(FileFormatError, match="'directed' must be"):
        parse_document({"u": [], "v": [], "directed": 1})


def test_constructor_errors_carry_the_source_name():
    doc = {"u": ["a"], "v": ["x"], "edges": [["a", "nope"]]}
    with pytest.raises(FileFormatError, match="bad.json"):
        parse_document(doc, source="bad.json")


def test_net_event_errors():
    with pytest.raises(FileFormatError, match="'id'"):
        parse_document({"conditions": [], "events": [{"pre": []}]})
    with pytest.raises(FileFormatError, match="duplicate event"):
        parse_document(
            {"conditions": [], "events": [{"id": "e"}, {"id": "e"}]}
        )
    with pytest.raises(FileFormatError, match="must be a list"):
        parse_document({"conditions": [], "events": [{"id": "e", "pre": "b"}]})
    with pytest.raises(FileFormatError, match="non-conditions"):
        parse_document(
            {"conditions": [], "events": [{"id": "e", "pre": ["b"]}]}
        )


def test_load_document_reports_json_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"u": [,]}')
    with pytest.raises(FileFormatError, match="line 1"):
        load_document(path)


def test_fmt_id_forms():
    assert _fmt_id("plain") == "plain"
    assert _fmt_id(7) == "7"
    assert _fmt_id(frozenset({1, 3})) == "b1-3"
    assert _fmt_id((frozenset({0, 2}), 1)) == "u5_1"
    assert _fmt_id((frozenset(), 2)) == "u0_2"
    assert _fmt_id(((frozenset({0, 3}), frozenset({1, 2})), 1)) == "u9-6_1"
    assert _fmt_id((None, "x")) == "*|x"
    assert _fmt_id(("e", None)) == "e|*"
    assert _fmt_id((0, "a")) == "a@1"
    assert _fmt_id((1, "a")) == "a@2"
    assert _fmt_id(("p", "q")) == "p|q"


def test_string_ids_are_unique_and_whitespace_free():
    got = string_ids(["a b", "a_b", ""])
    assert got == {"a b": "a_b", "a_b": "a_b.2", "": "id"}
    rng = random.Random(82)
    base = random_bigraph(rng)
    g = decode(encode(base, random_labeling(rng, base.v_vertices, 6)))
    smap = string_ids(list(g.u_vertices) + list(g.v_vertices))
    assert len(set(smap.values())) == len(smap)


def test_dumps_is_deterministic_with_trailing_newline():
    a = dumps(document_for(sample_net(), {"b0": 0, "b1": 1}))
    b = dumps(document_for(sample_net(), {"b0": 0, "b1": 1}))
    assert a == b
    assert a.endswith("}\n")


def test_document_for_rejects_unknown_types():
    with pytest.raises(TypeError):
        document_for("not a graph")
    with pytest.raises(TypeError):
        to_dot(42)


def test_to_dot_bigraph_golden():
    g = Bigraph(["u1"], ["v1", "v2"], [("u1", "v2"), ("u1", "v1")])
    want = (
        "graph {\n"
        '  "u1" [shape=box];\n'
        '  "v1" [shape=circle, label="v1=0"];\n'
        '  "v2" [shape=circle, label="v2=1"];\n'
        '  "u1" -- "v1";\n'
        '  "u1" -- "v2";\n'
        "}\n"
    )
    assert to_dot(g, {"v1": 0, "v2": 1}) == want
    reordered = Bigraph(["u1"], ["v1", "v2"], [("u1", "v1"), ("u1", "v2")])
    assert to_dot(reordered, {"v1": 0, "v2": 1}) == want


def test_to_dot_digraph_directions():
    out = to_dot(sample_digraph())
    assert '  "a" -> "x";' in out
    assert '  "y" -> "a";' in out
    assert out.startswith("digraph {\n")


def test_to_dot_net_flow():
    out = to_dot(sample_net(), {"b0": 0, "b1": 1})
    assert '  "b0" -> "e1";' in out
    assert '  "e2" -> "b1";' in out
    assert '  "b0" [shape=circle, label="b0=0"];' in out
    assert '  "e1" [shape=box];' in out


def test_document_dataclass_fields():
    doc = parse_document({"u": [], "v": []})
    assert isinstance(doc, Document)
    assert (doc.kind, doc.labels) == ("bigraph", None)
