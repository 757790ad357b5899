"""Products and sums of labeled graphs, each computable two ways.

The polynomial route multiplies or adds the encodings and decodes the
result.  The direct route builds the answer on vertices alone: product
u-vertices are pairs whose exponents add, sum u-vertices are a tagged
union over the v-quotient by equal labels.  Both routes agree up to
part-respecting isomorphism; the tests lean on that.

When the two label images are disjoint, exponent sums never carry, and the
labeled product and sum collapse to the plain unlabeled constructions at
the end of this module.
"""

from __future__ import annotations

from .bigraph import Bigraph, check_labeling, decode, encode
from .bits import from_bits, tau
from .digraph import DiBigraph, decode_directed, encode_directed
from .digraph import check_labeling as check_labeling_directed
from .poly import add, mul


# ---------------------------------------------------------------------------
# Polynomial route.

def poly_product(g1, l1, g2, l2, width=None):
    return decode(mul(encode(g1, l1), encode(g2, l2), width))


def poly_sum(g1, l1, g2, l2, width=None):
    return decode(add(encode(g1, l1), encode(g2, l2), width))


def poly_product_directed(g1, l1, g2, l2, width=None):
    return decode_directed(
        mul(encode_directed(g1, l1), encode_directed(g2, l2), width)
    )


def poly_sum_directed(g1, l1, g2, l2, width=None):
    return decode_directed(
        add(encode_directed(g1, l1), encode_directed(g2, l2), width)
    )


# ---------------------------------------------------------------------------
# Direct route.  Outputs use bit positions as v-ids, like decode does, so
# identity_labeling applies to them.

def _packed(g, labeling):
    check_labeling(g, labeling)
    return {u: from_bits(labeling[v] for v in g.neighbors(u)) for u in g.u_vertices}


def direct_product(g1, l1, g2, l2) -> Bigraph:
    """u-vertices are pairs; each pair's neighborhood is read off the bits
    of the sum of the two packed neighborhoods."""
    d1 = _packed(g1, l1)
    d2 = _packed(g2, l2)
    us = [(a, b) for a in g1.u_vertices for b in g2.u_vertices]
    bitsets = {ab: tau(d1[ab[0]] + d2[ab[1]]) for ab in us}
    vs = sorted(set().union(*bitsets.values())) if us else []
    edges = [(ab, t) for ab in us for t in bitsets[ab]]
    return Bigraph(us, vs, edges)


def direct_sum(g1, l1, g2, l2) -> Bigraph:
    """Tagged union of u parts over the v-quotient by equal labels."""
    check_labeling(g1, l1)
    check_labeling(g2, l2)
    us = [(0, a) for a in g1.u_vertices] + [(1, b) for b in g2.u_vertices]
    vs = sorted({l1[v] for v in g1.v_vertices} | {l2[v] for v in g2.v_vertices})
    edges = [((0, a), l1[v]) for (a, v) in g1.edges]
    edges += [((1, b), l2[v]) for (b, v) in g2.edges]
    return Bigraph(us, vs, edges)


def _packed_directed(g, labeling):
    check_labeling_directed(g, labeling)
    return {
        u: (
            from_bits(labeling[v] for v in g.pre(u)),
            from_bits(labeling[v] for v in g.post(u)),
        )
        for u in g.u_vertices
    }


def direct_product_directed(g1, l1, g2, l2) -> DiBigraph:
    d1 = _packed_directed(g1, l1)
    d2 = _packed_directed(g2, l2)
    us = [(a, b) for a in g1.u_vertices for b in g2.u_vertices]
    pres = {}
    posts = {}
    for ab in us:
        a, b = ab
        pres[ab] = tau(d1[a][0] + d2[b][0])
        posts[ab] = tau(d1[a][1] + d2[b][1])
    vs = set()
    for ab in us:
        vs |= pres[ab] | posts[ab]
    arcs = [(t, ab) for ab in us for t in pres[ab]]
    arcs += [(ab, t) for ab in us for t in posts[ab]]
    return DiBigraph(us, sorted(vs), arcs)


def direct_sum_directed(g1, l1, g2, l2) -> DiBigraph:
    check_labeling_directed(g1, l1)
    check_labeling_directed(g2, l2)
    us = [(0, a) for a in g1.u_vertices] + [(1, b) for b in g2.u_vertices]
    vs = sorted({l1[v] for v in g1.v_vertices} | {l2[v] for v in g2.v_vertices})
    arcs = []
    for side, (g, lab) in enumerate(((g1, l1), (g2, l2))):
        for u in g.u_vertices:
            arcs.extend((lab[v], (side, u)) for v in g.pre(u))
            arcs.extend(((side, u), lab[v]) for v in g.post(u))
    return DiBigraph(us, vs, arcs)


# ---------------------------------------------------------------------------
# Plain unlabeled constructions.

def plain_product(g1: Bigraph, g2: Bigraph) -> Bigraph:
    """u pairs over the tagged v union; a pair inherits both neighborhoods."""
    us = [(a, b) for a in g1.u_vertices for b in g2.u_vertices]
    vs = [(0, v) for v in g1.v_vertices] + [(1, v) for v in g2.v_vertices]
    edges = []
    for ab in us:
        a, b = ab
        edges.extend((ab, (0, v)) for v in g1.neighbors(a))
        edges.extend((ab, (1, v)) for v in g2.neighbors(b))
    return Bigraph(us, vs, edges)


def plain_coproduct(g1: Bigraph, g2: Bigraph) -> Bigraph:
    """Disjoint union with side tags."""
    us = [(0, a) for a in g1.u_vertices] + [(1, b) for b in g2.u_vertices]
    vs = [(0, v) for v in g1.v_vertices] + [(1, v) for v in g2.v_vertices]
    edges = [((0, a), (0, v)) for (a, v) in g1.edges]
    edges += [((1, b), (1, v)) for (b, v) in g2.edges]
    return Bigraph(us, vs, edges)


def plain_product_directed(g1: DiBigraph, g2: DiBigraph) -> DiBigraph:
    us = [(a, b) for a in g1.u_vertices for b in g2.u_vertices]
    vs = [(0, v) for v in g1.v_vertices] + [(1, v) for v in g2.v_vertices]
    arcs = []
    for ab in us:
        a, b = ab
        arcs.extend(((0, v), ab) for v in g1.pre(a))
        arcs.extend((ab, (0, v)) for v in g1.post(a))
        arcs.extend(((1, v), ab) for v in g2.pre(b))
        arcs.extend((ab, (1, v)) for v in g2.post(b))
    return DiBigraph(us, vs, arcs)


def plain_coproduct_directed(g1: DiBigraph, g2: DiBigraph) -> DiBigraph:
    us = [(0, a) for a in g1.u_vertices] + [(1, b) for b in g2.u_vertices]
    vs = [(0, v) for v in g1.v_vertices] + [(1, v) for v in g2.v_vertices]
    arcs = []
    for side, g in enumerate((g1, g2)):
        for u in g.u_vertices:
            arcs.extend(((side, v), (side, u)) for v in g.pre(u))
            arcs.extend(((side, u), (side, v)) for v in g.post(u))
    return DiBigraph(us, vs, arcs)
