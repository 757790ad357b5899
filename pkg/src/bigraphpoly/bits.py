"""Bit-support calculus: naturals as finite sets of binary digit positions.

The bit support of a natural k is the set of positions holding a 1 in its
binary expansion; 0 has empty support.  Naturals with pairwise disjoint
supports add without carries, so such a sum can be split apart again.  That
reversibility is what every decoding in this package rests on.
"""

from __future__ import annotations

from .errors import BitWidthError

# A bit support is a frozenset of bit positions; the empty set encodes 0.
BitExp = frozenset


def tau(k: int) -> frozenset:
    """Set of 1-bit positions of a natural, e.g. tau(5) == {0, 2}."""
    if k < 0:
        raise ValueError(f"bit support is defined for naturals, got {k}")
    bits = set()
    t = 0
    while k:
        if k & 1:
            bits.add(t)
        k >>= 1
        t += 1
    return frozenset(bits)


def from_bits(bits, width: int | None = None) -> int:
    """Natural with 1-bits exactly at the given positions: sum of 2**t.

    With ``width`` set, a result needing more than ``width`` bits raises
    BitWidthError instead of growing without bound.
    """
    n = 0
    for t in bits:
        if t < 0:
            raise ValueError(f"bit positions are naturals, got {t}")
        n |= 1 << t
    if width is not None and n.bit_length() > width:
        raise BitWidthError(f"value needs {n.bit_length()} bits, width is {width}")
    return n


def tau_poly(p) -> frozenset:
    """Union of the bit supports of every exponent occurring in ``p``.

    Accepts either polynomial arity; both exponent components of a
    two-variable term contribute.
    """
    out = set()
    for exp in p.terms:
        if isinstance(exp, int):
            out |= tau(exp)
        else:
            for part in exp:
                out |= tau(part)
    return frozenset(out)
