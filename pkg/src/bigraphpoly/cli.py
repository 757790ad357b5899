"""Command line front end.

Exit codes: 0 success (or positive answer), 1 certified negative answer
(not isomorphic, nothing factors, no decomposition), 2 inconclusive (a
search budget or size guard stopped the run), 3 bad input or usage.

Commands that need labels use the ones embedded in the file; without them
the compact labeling 0..|v|-1 in declared order is used and announced on
stderr.  Polynomial arguments and graph-file arguments share some slots:
anything that exists on disk, names a path, or ends in .json is treated as
a file, the rest parses as a polynomial.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import fileio
from .bigraph import Bigraph, canonical_poly, decode, encode, is_isomorphic
from .digraph import (
    DiBigraph,
    canonical_poly_directed,
    decode_directed,
    encode_directed,
    is_isomorphic_directed,
)
from .errors import BudgetExceededError, SizeGuardError
from .graphfactor import factor_graph, is_irreducible
from .graphops import (
    poly_product,
    poly_product_directed,
    poly_sum,
    poly_sum_directed,
)
from .petri import PetriNet, decode_net, decompose, encode_net, net_isomorphic, net_product
from .poly import Poly1, Poly2, content, lift, parse_poly, render
from .polyfactor import Budget, bit_disjoint_factor, factor_pairs


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 means inconclusive here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(3, f"error: {message}\n")


def _note(msg):
    print(f"note: {msg}", file=sys.stderr)


def _labels_for(doc: fileio.Document, name: str) -> dict:
    if doc.labels is not None:
        return doc.labels
    ids = doc.obj.conditions if doc.kind == "net" else doc.obj.v_vertices
    if ids:
        _note(f"{name}: no labels given, using 0..{len(ids) - 1} in declared order")
    return {x: i for i, x in enumerate(ids)}


def _looks_like_file(arg: str) -> bool:
    return os.path.exists(arg) or os.sep in arg or arg.endswith(".json")


def _emit(doc: dict, output):
    text = fileio.dumps(doc)
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(path, name):
    doc = fileio.load_document(path)
    if doc.kind == "net":
        raise ValueError(f"{name}: expected a graph file, got a net")
    return doc


def _load_net(path, name):
    doc = fileio.load_document(path)
    if doc.kind != "net":
        raise ValueError(f"{name}: expected a net file, got a {doc.kind}")
    return doc


def _budget(args) -> Budget:
    if getattr(args, "budget", None) is None:
        return Budget()
    return Budget(max_divisor_tuples=args.budget, max_bipartitions=args.budget)


# ---------------------------------------------------------------------------
# Graph commands.

def _cmd_encode(args):
    doc = _load_graph(args.file, args.file)
    labels = _labels_for(doc, args.file)
    if doc.kind == "digraph":
        p = encode_directed(doc.obj, labels)
    else:
        p = encode(doc.obj, labels)
    print(render(p))
    return 0


def _cmd_decode(args):
    p = parse_poly(args.poly)
    if args.directed:
        p = lift(p)
    if isinstance(p, Poly2):
        g = decode_directed(p)
        doc = fileio.digraph_document(g, g.natural_labeling)
    else:
        g = decode(p)
        doc = fileio.bigraph_document(g, g.natural_labeling)
    _emit(doc, args.output)
    return 0


def _binary_graph_op(args, undirected_op, directed_op):
    d1 = _load_graph(args.file1, args.file1)
    d2 = _load_graph(args.file2, args.file2)
    if d1.kind != d2.kind:
        raise ValueError(f"mixed graph kinds: {d1.kind} and {d2.kind}")
    directed = d1.kind == "digraph"
    if args.directed and not directed:
        raise ValueError("--directed needs directed graph files")
    l1 = _labels_for(d1, args.file1)
    l2 = _labels_for(d2, args.file2)
    if directed:
        g = directed_op(d1.obj, l1, d2.obj, l2)
        doc = fileio.digraph_document(g, g.natural_labeling)
    else:
        g = undirected_op(d1.obj, l1, d2.obj, l2)
        doc = fileio.bigraph_document(g, g.natural_labeling)
    _emit(doc, args.output)
    return 0


def _cmd_product(args):
    return _binary_graph_op(args, poly_product, poly_product_directed)


def _cmd_sum(args):
    return _binary_graph_op(args, poly_sum, poly_sum_directed)


def _pair_line(q, r):
    return f"({render(q)}) * ({render(r)})"


def _cmd_factor(args):
    budget = _budget(args)
    if _looks_like_file(args.input):
        doc = _load_graph(args.input, args.input)
        labels = _labels_for(doc, args.input)
        if doc.kind == "digraph":
            # No general two-variable factor search; report bit-disjoint pairs.
            pairs = bit_disjoint_factor(encode_directed(doc.obj, labels), budget)
            for q, r in pairs:
                print(_pair_line(q, r))
            if not pairs:
                print("no bit-disjoint factor pairs")
                return 1
            return 0
        if args.exhaustive_labels:
            report = is_irreducible(doc.obj, exhaustive=True, budget=budget)
            if report.verdict == "reducible":
                lab, (gq, gr) = report.witness
                print(f"reducible over compact labelings; witness labeling {lab}")
                print(_pair_line(encode(gq, gq.natural_labeling),
                                 encode(gr, gr.natural_labeling)))
                return 0
            print(f"{report.verdict} over compact labelings")
            return 1 if report.verdict == "irreducible" else 2
        pairs = factor_graph(doc.obj, labels, budget)
        for gq, gr in pairs:
            print(_pair_line(encode(gq, gq.natural_labeling),
                             encode(gr, gr.natural_labeling)))
        if not pairs:
            print("irreducible under this labeling")
            return 1
        return 0
    if args.exhaustive_labels:
        raise ValueError("--exhaustive-labels needs a graph file input")
    p = parse_poly(args.input)
    c = content(p)
    if c > 1:
        print(f"content: {c}")
    if isinstance(p, Poly1):
        pairs = factor_pairs(p, budget)
        empty_msg = "irreducible"
    else:
        pairs = bit_disjoint_factor(p, budget)
        empty_msg = "no bit-disjoint factor pairs"
    for q, r in pairs:
        print(_pair_line(q, r))
    if not pairs:
        print(empty_msg)
        return 1
    return 0


def _cmd_canon(args):
    if _looks_like_file(args.input):
        doc = _load_graph(args.input, args.input)
        g = doc.obj
    else:
        p = parse_poly(args.input)
        g = decode_directed(p) if isinstance(p, Poly2) else decode(p)
    if isinstance(g, DiBigraph):
        print(render(canonical_poly_directed(g)))
    else:
        print(render(canonical_poly(g)))
    return 0


def _cmd_iso(args):
    d1 = fileio.load_document(args.file1)
    d2 = fileio.load_document(args.file2)
    if d1.kind != d2.kind:
        raise ValueError(f"mixed kinds: {d1.kind} and {d2.kind}")
    if d1.kind == "net":
        witness = net_isomorphic(d1.obj, d2.obj)
        names = ("event_map", "condition_map")
    elif d1.kind == "digraph":
        witness = is_isomorphic_directed(d1.obj, d2.obj)
        names = ("u_map", "v_map")
    else:
        witness = is_isomorphic(d1.obj, d2.obj)
        names = ("u_map", "v_map")
    if witness is None:
        print("not isomorphic")
        return 1
    print(json.dumps({names[0]: witness[0], names[1]: witness[1]}, indent=2))
    return 0


def _cmd_dot(args):
    doc = fileio.load_document(args.file)
    sys.stdout.write(fileio.to_dot(doc.obj, doc.labels))
    return 0


# ---------------------------------------------------------------------------
# Net commands.

def _cmd_net_encode(args):
    doc = _load_net(args.file, args.file)
    labels = _labels_for(doc, args.file)
    print(render(encode_net(doc.obj, labels)))
    return 0


def _cmd_net_decode(args):
    p = lift(parse_poly(args.poly))
    labeled = decode_net(p)
    _emit(fileio.net_document(labeled.net, labeled.labeling), args.output)
    return 0


def _cmd_net_product(args):
    d1 = _load_net(args.file1, args.file1)
    d2 = _load_net(args.file2, args.file2)
    _emit(fileio.net_document(net_product(d1.obj, d2.obj)), args.output)
    return 0


def _cmd_net_decompose(args):
    doc = _load_net(args.file, args.file)
    labels = _labels_for(doc, args.file)
    pairs = decompose(doc.obj, labels, _budget(args))
    if not pairs:
        print("no decomposition under this labeling")
        return 1
    whole = encode_net(doc.obj, labels)
    for ln1, ln2 in pairs:
        p1 = encode_net(ln1.net, ln1.labeling)
        p2 = encode_net(ln2.net, ln2.labeling)
        print(f"{render(whole)} = {_pair_line(p1, p2)}")
    first1, first2 = pairs[0]
    prefix = args.out_prefix
    if prefix is None:
        prefix = os.path.splitext(args.file)[0]
    path1 = f"{prefix}.factor1.json"
    path2 = f"{prefix}.factor2.json"
    Path(path1).write_text(fileio.dumps(fileio.net_document(first1.net, first1.labeling)))
    Path(path2).write_text(fileio.dumps(fileio.net_document(first2.net, first2.labeling)))
    _note(f"wrote {path1} and {path2}")
    prod = net_product(first1.net, first2.net)
    emap, cmap = net_isomorphic(prod, doc.obj)
    smap = fileio.string_ids(list(prod.events) + list(prod.conditions))
    cert = {
        "event_map": {smap[k]: v for k, v in emap.items()},
        "condition_map": {smap[k]: v for k, v in cmap.items()},
    }
    print(json.dumps(cert, indent=2))
    return 0


# ---------------------------------------------------------------------------

def _build_parser():
    top = _Parser(prog="bigraphpoly", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="graph file to polynomial")
    p.add_argument("file")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="polynomial to graph file")
    p.add_argument("poly")
    p.add_argument("--directed", action="store_true",
                   help="decode a pure-x polynomial as a digraph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_decode)

    for name, fn, summary in (
        ("product", _cmd_product, "product of two labeled graph files"),
        ("sum", _cmd_sum, "sum of two labeled graph files"),
    ):
        p = sub.add_parser(name, help=summary)
        p.add_argument("file1")
        p.add_argument("file2")
        p.add_argument("--directed", action="store_true",
                       help="require directed inputs")
        p.add_argument("-o", "--output")
        p.set_defaults(func=fn)

    p = sub.add_parser("factor", help="all two-factor splits of a polynomial or graph file")
    p.add_argument("input")
    p.add_argument("--exhaustive-labels", action="store_true",
                   help="graph input: sweep every compact labeling")
    p.add_argument("--budget", type=int, help="search allowance override")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("canon", help="canonical polynomial of a graph file or polynomial")
    p.add_argument("input")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("iso", help="part-respecting isomorphism witness")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("net-encode", help="net file to polynomial")
    p.add_argument("file")
    p.set_defaults(func=_cmd_net_encode)

    p = sub.add_parser("net-decode", help="polynomial to net file")
    p.add_argument("poly")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_net_decode)

    p = sub.add_parser("net-product", help="pointed product of two net files")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_net_product)

    p = sub.add_parser("net-decompose", help="split a net file into a product")
    p.add_argument("file")
    p.add_argument("--budget", type=int, help="search allowance override")
    p.add_argument("--out-prefix", help="factor files prefix (default: input name)")
    p.set_defaults(func=_cmd_net_decompose)

    p = sub.add_parser("dot", help="GraphViz text for any graph or net file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dot)

    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceededError, SizeGuardError) as e:
        print(f"inconclusive: {e}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
