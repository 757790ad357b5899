"""Directed bipartite graphs and their two-variable encoding.

Arcs may run either way between the parts, so each u-vertex has two
neighborhoods: the v-vertices pointing at it and the ones it points at.
The x exponent packs the incoming labels, the y exponent the outgoing ones:

    encoding = sum over u of x**(bits of in-labels) * y**(bits of out-labels)

Everything else mirrors the undirected module.
"""

from __future__ import annotations

from itertools import permutations

from ._match import find_bijections
from .bigraph import check_label_map
from .bits import from_bits, tau, tau_poly
from .errors import SizeGuardError
from .poly import Poly2, poly_key


class DiBigraph:
    """Finite bipartite digraph; every arc joins the u part and the v part."""

    __slots__ = ("_u", "_v", "_arcs", "_pre", "_post")

    def __init__(self, u_vertices=(), v_vertices=(), arcs=()):
        u = tuple(u_vertices)
        v = tuple(v_vertices)
        if len(set(u)) != len(u):
            raise ValueError("duplicate u-part ids")
        if len(set(v)) != len(v):
            raise ValueError("duplicate v-part ids")
        uset, vset = set(u), set(v)
        both = uset & vset
        if both:
            raise ValueError(f"ids appear in both parts: {sorted(map(repr, both))}")
        pre = {x: set() for x in u}
        post = {x: set() for x in u}
        aset = set()
        for arc in arcs:
            a, b = arc
            if a in vset and b in uset:
                pre[b].add(a)
            elif a in uset and b in vset:
                post[a].add(b)
            else:
                raise ValueError(
                    f"arc ({a!r}, {b!r}) must join the u part and the v part"
                )
            aset.add((a, b))
        self._u = u
        self._v = v
        self._arcs = frozenset(aset)
        self._pre = {x: frozenset(s) for x, s in pre.items()}
        self._post = {x: frozenset(s) for x, s in post.items()}

    @property
    def u_vertices(self):
        return self._u

    @property
    def v_vertices(self):
        return self._v

    @property
    def arcs(self):
        return self._arcs

    def pre(self, u):
        """v-vertices with an arc into u."""
        return self._pre[u]

    def post(self, u):
        """v-vertices u has an arc into."""
        return self._post[u]

    def __eq__(self, other):
        return (
            isinstance(other, DiBigraph)
            and self._u == other._u
            and self._v == other._v
            and self._arcs == other._arcs
        )

    def __hash__(self):
        return hash((self._u, self._v, self._arcs))

    def __repr__(self):
        return (
            f"DiBigraph(|u|={len(self._u)}, |v|={len(self._v)}, "
            f"|arcs|={len(self._arcs)})"
        )


class DecodedDiBigraph(DiBigraph):
    """Decode output: v-ids are the bit positions themselves."""

    @property
    def natural_labeling(self):
        return {v: v for v in self.v_vertices}


def check_labeling(g, labeling):
    check_label_map(g.v_vertices, labeling)


def encode_directed(g: DiBigraph, labeling, width=None) -> Poly2:
    """One term per u-vertex: x**(packed in-labels) * y**(packed out-labels)."""
    check_labeling(g, labeling)
    terms = {}
    for u in g.u_vertices:
        i = from_bits((labeling[v] for v in g.pre(u)), width)
        j = from_bits((labeling[v] for v in g.post(u)), width)
        terms[(i, j)] = terms.get((i, j), 0) + 1
    return Poly2(terms)


def decode_directed(p: Poly2) -> DecodedDiBigraph:
    """Digraph whose encoding under the identity labeling is p.

    Each term n * x**i * y**j yields n u-vertices with in-arcs from the bits
    of i and out-arcs to the bits of j; u-ids are ((in bits, out bits), copy
    index) pairs.  The coefficient fixes the number of copies, constant term
    included: n * x**0 * y**0 means n isolated u-vertices.
    """
    if not isinstance(p, Poly2):
        raise TypeError("decode_directed takes a two-variable polynomial")
    vs = sorted(tau_poly(p))
    us = []
    arcs = []
    for (i, j), c in p.terms.items():
        ti, tj = tau(i), tau(j)
        for k in range(1, c + 1):
            uid = ((ti, tj), k)
            us.append(uid)
            arcs.extend((b, uid) for b in ti)
            arcs.extend((uid, b) for b in tj)
    return DecodedDiBigraph(us, vs, arcs)


def is_isomorphic_directed(g1: DiBigraph, g2: DiBigraph, size_guard=12):
    """Arc-direction-preserving isomorphism witness (u map, v map), or None."""
    if len(g1.arcs) != len(g2.arcs):
        return None
    sig1 = {u: (g1.pre(u), g1.post(u)) for u in g1.u_vertices}
    sig2 = {u: (g2.pre(u), g2.post(u)) for u in g2.u_vertices}
    return find_bijections(
        list(g1.v_vertices), sig1, list(g2.v_vertices), sig2, size_guard
    )


def canonical_poly_directed(g: DiBigraph, size_guard=8) -> Poly2:
    """Least encoding over all labelings by 0..|v|-1; see canonical_poly."""
    vs = g.v_vertices
    if len(vs) > size_guard:
        raise SizeGuardError(
            f"{len(vs)} v-vertices exceed the canonical-form guard {size_guard}"
        )
    best_key = None
    best = None
    for perm in permutations(range(len(vs))):
        p = encode_directed(g, dict(zip(vs, perm)))
        k = poly_key(p)
        if best_key is None or k < best_key:
            best_key, best = k, p
    return best
