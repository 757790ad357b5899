"""Shared generators and tiny reference implementations for the test suite.

Generators keep every v-vertex (or condition) covered by at least one edge,
because uncovered ones are invisible to the encoding and round-trip claims
assume they do not occur.  Oracles here are written independently of the
package internals on purpose: dense lists and dicts only.
"""

from __future__ import annotations

import random

from bigraphpoly import Bigraph, DiBigraph, PetriNet, Poly1, Poly2


# ---------------------------------------------------------------------------
# Random structures.

def random_labeling(rng: random.Random, ids, max_label=10) -> dict:
    """Injective labels drawn from 0..max_label."""
    return dict(zip(ids, rng.sample(range(max_label + 1), len(ids))))


def random_bigraph(rng: random.Random, max_u=5, max_v=5) -> Bigraph:
    nu = rng.randint(1, max_u)
    nv = rng.randint(1, max_v)
    us = [f"u{i}" for i in range(nu)]
    vs = [f"v{j}" for j in range(nv)]
    edges = {(rng.choice(us), v) for v in vs}  # cover every v
    for u in us:
        for v in vs:
            if rng.random() < 0.35:
                edges.add((u, v))
    return Bigraph(us, vs, edges)


def random_digraph(rng: random.Random, max_u=5, max_v=5) -> DiBigraph:
    nu = rng.randint(1, max_u)
    nv = rng.randint(1, max_v)
    us = [f"u{i}" for i in range(nu)]
    vs = [f"v{j}" for j in range(nv)]
    arcs = set()
    for v in vs:  # cover every v, random direction
        u = rng.choice(us)
        arcs.add((v, u) if rng.random() < 0.5 else (u, v))
    for u in us:
        for v in vs:
            if rng.random() < 0.2:
                arcs.add((v, u))
            if rng.random() < 0.2:
                arcs.add((u, v))
    return DiBigraph(us, vs, arcs)


def random_net(rng: random.Random, max_events=3, max_conditions=3) -> PetriNet:
    ne = rng.randint(1, max_events)
    nc = rng.randint(1, max_conditions)
    evs = [f"e{i}" for i in range(ne)]
    conds = [f"b{j}" for j in range(nc)]
    pre = {e: {b for b in conds if rng.random() < 0.4} for e in evs}
    post = {e: {b for b in conds if rng.random() < 0.4} for e in evs}
    for b in conds:  # cover every condition
        if not any(b in pre[e] or b in post[e] for e in evs):
            side = pre if rng.random() < 0.5 else post
            side[rng.choice(evs)].add(b)
    return PetriNet(conds, evs, pre, post)


def random_poly1(rng: random.Random, max_deg=6, max_coeff=4, allow_zero=False) -> Poly1:
    terms = {
        e: rng.randint(1, max_coeff)
        for e in range(max_deg + 1)
        if rng.random() < 0.45
    }
    if not terms and not allow_zero:
        terms[rng.randint(0, max_deg)] = rng.randint(1, max_coeff)
    return Poly1(terms)


def random_poly2(rng: random.Random, max_deg=5, max_coeff=4, allow_zero=False) -> Poly2:
    terms = {}
    for _ in range(rng.randint(0 if allow_zero else 1, 5)):
        terms[(rng.randint(0, max_deg), rng.randint(0, max_deg))] = rng.randint(
            1, max_coeff
        )
    return Poly2(terms)


def poly_on_bits(rng: random.Random, bits, max_terms=4, max_coeff=3, arity=1):
    """Random nonzero polynomial whose exponents only use the given bit
    positions, so two such polynomials on disjoint bit sets never share
    support."""
    bits = list(bits)

    def exp():
        return sum(1 << b for b in bits if rng.random() < 0.5)

    n = rng.randint(1, max_terms)
    if arity == 1:
        return Poly1({exp(): rng.randint(1, max_coeff) for _ in range(n)})
    return Poly2({(exp(), exp()): rng.randint(1, max_coeff) for _ in range(n)})


# ---------------------------------------------------------------------------
# Reference implementations (dense lists / plain dicts, no package code).

def bits_of(k: int) -> set:
    """1-bit positions read off the binary string."""
    return {i for i, ch in enumerate(reversed(bin(k)[2:])) if ch == "1"} if k else set()


def mul_terms(t1: dict, t2: dict) -> dict:
    out = {}
    for e1, c1 in t1.items():
        for e2, c2 in t2.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return out


def dense_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def dense_key(coeffs) -> tuple:
    """Same shape as poly_key: ((exp, coeff), ...) descending."""
    return tuple((e, c) for e, c in sorted(enumerate(coeffs), reverse=True) if c)


def enumerate_dense(max_deg: int, max_sum: int):
    """Every dense coefficient tuple (c0..c_max_deg) with sum <= max_sum."""
    def rec(i, left, acc):
        if i > max_deg:
            yield tuple(acc)
            return
        for c in range(left + 1):
            acc.append(c)
            yield from rec(i + 1, left - c, acc)
            acc.pop()

    yield from rec(0, max_sum, [])


def factor_pair_table(max_deg=4, max_sum=12) -> dict:
    """Brute-force oracle: maps dense_key(p) to the set of unordered
    nonconstant factor pairs (as sorted dense_key pairs) for every p that is
    a product of two nonconstant polynomials with deg <= max_deg and
    coefficient sum <= max_sum."""
    by_deg_sum = {}
    for coeffs in enumerate_dense(max_deg - 1, max_sum):
        deg = max((i for i, c in enumerate(coeffs) if c), default=-1)
        if deg < 1:
            continue
        trimmed = coeffs[: deg + 1]
        by_deg_sum.setdefault((deg, sum(trimmed)), []).append(trimmed)
    table = {}
    for (d1, s1), qs in by_deg_sum.items():
        for (d2, s2), rs in by_deg_sum.items():
            if d1 + d2 > max_deg or s1 * s2 > max_sum:
                continue
            for q in qs:
                kq = dense_key(q)
                for r in rs:
                    prod = dense_mul(list(q), list(r))
                    pair = tuple(sorted((kq, dense_key(r))))
                    table.setdefault(dense_key(prod), set()).add(pair)
    return table
