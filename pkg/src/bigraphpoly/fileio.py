"""Reading and writing graph, digraph, and net documents, plus DOT export.

On-disk form is JSON with string ids (nonempty, no whitespace):

undirected graph
    {"u": ["u1"], "v": ["v1", "v2"], "edges": [["u1", "v1"]],
     "labels": {"v1": 0, "v2": 1}}

directed graph, every edge an object carrying its direction
    {"directed": true, "u": ["a"], "v": ["x"],
     "edges": [{"u": "a", "v": "x", "dir": "v_to_u"}]}

net
    {"conditions": ["b0", "b1"],
     "events": [{"id": "a", "pre": ["b0"], "post": ["b1"]}],
     "labels": {"b0": 0, "b1": 1}}

"labels" is optional everywhere.  Kind detection: "conditions" or "events"
means net; otherwise an explicit "directed" flag decides, else edge objects
mean directed and edge pairs mean undirected.

Writers stringify in-memory ids (decoded vertices are tuples over bit sets)
and emit keys in a fixed order, so equal objects serialize byte-identically.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .bigraph import Bigraph
from .bits import from_bits
from .digraph import DiBigraph
from .errors import FileFormatError
from .petri import PetriNet


@dataclass
class Document:
    kind: str  # "bigraph" | "digraph" | "net"
    obj: object
    labels: dict | None


def _check_id(x, source):
    if not isinstance(x, str) or not x or any(ch.isspace() for ch in x):
        raise FileFormatError(
            f"{source}: ids must be nonempty whitespace-free strings, got {x!r}"
        )
    return x


def _id_list(doc, key, source):
    got = doc.get(key, [])
    if not isinstance(got, list):
        raise FileFormatError(f"{source}: {key!r} must be a list")
    return [_check_id(x, source) for x in got]


def _get_labels(doc, valid_ids, source):
    if doc.get("labels") is None:
        return None
    labels = doc["labels"]
    if not isinstance(labels, dict):
        raise FileFormatError(f"{source}: 'labels' must be an object")
    out = {}
    for k, val in labels.items():
        if k not in valid_ids:
            raise FileFormatError(f"{source}: label given for unknown id {k!r}")
        if not isinstance(val, int) or isinstance(val, bool) or val < 0:
            raise FileFormatError(
                f"{source}: label of {k!r} must be a natural, got {val!r}"
            )
        out[k] = val
    return out


def _parse_graph(doc, source):
    us = _id_list(doc, "u", source)
    vs = _id_list(doc, "v", source)
    edges_raw = doc.get("edges", [])
    if not isinstance(edges_raw, list):
        raise FileFormatError(f"{source}: 'edges' must be a list")
    if "directed" in doc:
        directed = doc["directed"]
        if not isinstance(directed, bool):
            raise FileFormatError(f"{source}: 'directed' must be true or false")
    else:
        directed = any(isinstance(e, dict) for e in edges_raw)
    try:
        if directed:
            arcs = []
            for e in edges_raw:
                if not isinstance(e, dict) or not {"u", "v", "dir"} <= set(e):
                    raise FileFormatError(
                        f"{source}: directed edges are objects with u, v and dir: {e!r}"
                    )
                u = _check_id(e["u"], source)
                v = _check_id(e["v"], source)
                if e["dir"] == "v_to_u":
                    arcs.append((v, u))
                elif e["dir"] == "u_to_v":
                    arcs.append((u, v))
                else:
                    raise FileFormatError(
                        f"{source}: dir must be 'v_to_u' or 'u_to_v', got {e['dir']!r}"
                    )
            obj = DiBigraph(us, vs, arcs)
            kind = "digraph"
        else:
            edges = []
            for e in edges_raw:
                if not isinstance(e, list) or len(e) != 2:
                    raise FileFormatError(
                        f"{source}: undirected edges are [u, v] pairs: {e!r}"
                    )
                edges.append((_check_id(e[0], source), _check_id(e[1], source)))
            obj = Bigraph(us, vs, edges)
            kind = "bigraph"
    except ValueError as exc:
        raise FileFormatError(f"{source}: {exc}") from exc
    return Document(kind, obj, _get_labels(doc, set(vs), source))


def _parse_net(doc, source):
    conds = _id_list(doc, "conditions", source)
    events_raw = doc.get("events", [])
    if not isinstance(events_raw, list):
        raise FileFormatError(f"{source}: 'events' must be a list")
    evs = []
    pre = {}
    post = {}
    for ev in events_raw:
        if not isinstance(ev, dict) or "id" not in ev:
            raise FileFormatError(
                f"{source}: events are objects with an 'id': {ev!r}"
            )
        eid = _check_id(ev["id"], source)
        if eid in pre:
            raise FileFormatError(f"{source}: duplicate event id {eid!r}")
        for side in ("pre", "post"):
            got = ev.get(side, [])
            if not isinstance(got, list):
                raise FileFormatError(f"{source}: {side!r} of {eid!r} must be a list")
        evs.append(eid)
        pre[eid] = [_check_id(x, source) for x in ev.get("pre", [])]
        post[eid] = [_check_id(x, source) for x in ev.get("post", [])]
    try:
        net = PetriNet(conds, evs, pre, post)
    except ValueError as exc:
        raise FileFormatError(f"{source}: {exc}") from exc
    return Document("net", net, _get_labels(doc, set(conds), source))


def parse_document(doc, source="<document>") -> Document:
    if not isinstance(doc, dict):
        raise FileFormatError(f"{source}: top level must be a JSON object")
    if "conditions" in doc or "events" in doc:
        return _parse_net(doc, source)
    if "u" in doc and "v" in doc:
        return _parse_graph(doc, source)
    raise FileFormatError(
        f"{source}: expected a graph (keys 'u', 'v') or a net (key 'conditions')"
    )


def load_document(path) -> Document:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FileFormatError(
            f"{path}: line {e.lineno} column {e.colno}: {e.msg}"
        ) from e
    return parse_document(doc, source=str(path))


# ---------------------------------------------------------------------------
# Writers.

def _fmt_id(x):
    if isinstance(x, str):
        return x
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    if isinstance(x, frozenset):
        return "b" + "-".join(map(str, sorted(x)))
    if isinstance(x, tuple) and len(x) == 2:
        a, b = x
        if isinstance(a, frozenset) and isinstance(b, int):
            return f"u{from_bits(a)}_{b}"  # decoded undirected u-vertex
        if (
            isinstance(a, tuple)
            and len(a) == 2
            and isinstance(a[0], frozenset)
            and isinstance(a[1], frozenset)
            and isinstance(b, int)
        ):
            # decoded directed u-vertex or net event: (pre bits, post bits, copy)
            return f"u{from_bits(a[0])}-{from_bits(a[1])}_{b}"
        if a is None or b is None:
            left = "*" if a is None else _fmt_id(a)
            right = "*" if b is None else _fmt_id(b)
            return f"{left}|{right}"  # product event paired with idle
        if a in (0, 1) and not isinstance(b, int):
            return f"{_fmt_id(b)}@{a + 1}"  # side-tagged id from a sum or product
        return f"{_fmt_id(a)}|{_fmt_id(b)}"
    return re.sub(r"\s+", "_", str(x))


def string_ids(ids) -> dict:
    """Deterministic unique string form for every id, in one shared scope."""
    out = {}
    taken = set()
    for x in ids:
        s = re.sub(r"\s+", "_", _fmt_id(x)) or "id"
        base = s
        n = 2
        while s in taken:
            s = f"{base}.{n}"
            n += 1
        taken.add(s)
        out[x] = s
    return out


def bigraph_document(g: Bigraph, labels=None) -> dict:
    smap = string_ids(list(g.u_vertices) + list(g.v_vertices))
    doc = {
        "u": [smap[u] for u in g.u_vertices],
        "v": [smap[v] for v in g.v_vertices],
        "edges": sorted([smap[a], smap[b]] for a, b in g.edges),
    }
    if labels is not None:
        doc["labels"] = {smap[v]: labels[v] for v in g.v_vertices}
    return doc


def digraph_document(g: DiBigraph, labels=None) -> dict:
    smap = string_ids(list(g.u_vertices) + list(g.v_vertices))
    vset = set(g.v_vertices)
    edges = []
    for a, b in g.arcs:
        if a in vset:
            edges.append({"u": smap[b], "v": smap[a], "dir": "v_to_u"})
        else:
            edges.append({"u": smap[a], "v": smap[b], "dir": "u_to_v"})
    edges.sort(key=lambda e: (e["u"], e["v"], e["dir"]))
    doc = {
        "directed": True,
        "u": [smap[u] for u in g.u_vertices],
        "v": [smap[v] for v in g.v_vertices],
        "edges": edges,
    }
    if labels is not None:
        doc["labels"] = {smap[v]: labels[v] for v in g.v_vertices}
    return doc


def net_document(net: PetriNet, labels=None) -> dict:
    smap = string_ids(list(net.conditions) + list(net.events))
    doc = {
        "conditions": [smap[b] for b in net.conditions],
        "events": [
            {
                "id": smap[e],
                "pre": sorted(smap[b] for b in net.pre(e)),
                "post": sorted(smap[b] for b in net.post(e)),
            }
            for e in net.events
        ],
    }
    if labels is not None:
        doc["labels"] = {smap[b]: labels[b] for b in net.conditions}
    return doc


def document_for(obj, labels=None) -> dict:
    if isinstance(obj, PetriNet):
        return net_document(obj, labels)
    if isinstance(obj, DiBigraph):
        return digraph_document(obj, labels)
    if isinstance(obj, Bigraph):
        return bigraph_document(obj, labels)
    raise TypeError(f"no document form for {type(obj).__name__}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# DOT export.

def _quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _node(s, shape, label=None):
    attrs = f"shape={shape}"
    if label is not None:
        attrs += f', label={_quote(label)}'
    return f"  {_quote(s)} [{attrs}];"


def to_dot(obj, labels=None) -> str:
    """GraphViz text; node and edge lines are sorted, so output is stable.

    u-vertices and events are boxes, v-vertices and conditions circles.
    Net arrows follow the flow: condition to event for pre, event to
    condition for post.  Labels, when given, are shown on the circle nodes.
    """
    if isinstance(obj, PetriNet):
        smap = string_ids(list(obj.conditions) + list(obj.events))
        lines = ["digraph {"]
        lines += sorted(
            _node(smap[b], "circle",
                  None if labels is None else f"{smap[b]}={labels[b]}")
            for b in obj.conditions
        )
        lines += sorted(_node(smap[e], "box") for e in obj.events)
        arrows = []
        for e in obj.events:
            arrows += [f"  {_quote(smap[b])} -> {_quote(smap[e])};" for b in obj.pre(e)]
            arrows += [f"  {_quote(smap[e])} -> {_quote(smap[b])};" for b in obj.post(e)]
        lines += sorted(arrows)
        return "\n".join(lines + ["}"]) + "\n"
    if isinstance(obj, DiBigraph):
        smap = string_ids(list(obj.u_vertices) + list(obj.v_vertices))
        lines = ["digraph {"]
        lines += sorted(_node(smap[u], "box") for u in obj.u_vertices)
        lines += sorted(
            _node(smap[v], "circle",
                  None if labels is None else f"{smap[v]}={labels[v]}")
            for v in obj.v_vertices
        )
        lines += sorted(
            f"  {_quote(smap[a])} -> {_quote(smap[b])};" for a, b in obj.arcs
        )
        return "\n".join(lines + ["}"]) + "\n"
    if isinstance(obj, Bigraph):
        smap = string_ids(list(obj.u_vertices) + list(obj.v_vertices))
        lines = ["graph {"]
        lines += sorted(_node(smap[u], "box") for u in obj.u_vertices)
        lines += sorted(
            _node(smap[v], "circle",
                  None if labels is None else f"{smap[v]}={labels[v]}")
            for v in obj.v_vertices
        )
        lines += sorted(
            f"  {_quote(smap[a])} -- {_quote(smap[b])};" for a, b in obj.edges
        )
        return "\n".join(lines + ["}"]) + "\n"
    raise TypeError(f"no DOT form for {type(obj).__name__}")
