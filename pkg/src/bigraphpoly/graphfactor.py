"""Factoring a labeled graph through its polynomial.

A product of two nonconstant polynomials decodes to a pair of labeled
graphs whose product is isomorphic to the original, and every two-factor
graph decomposition shows up this way.  Factorability therefore depends on
the labeling: a graph can split under one labeling and resist another, so
irreducibility verdicts carry their scope, either the single labeling that
was tried or the whole sweep of compact labelings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .bigraph import compact_labeling, decode, encode, is_isomorphic
from .errors import BudgetExceededError, SizeGuardError
from .graphops import poly_product
from .polyfactor import Budget, factor_pairs


@dataclass(frozen=True)
class IrreducibilityReport:
    verdict: str  # "reducible" | "irreducible" | "inconclusive"
    scope: str  # "labeling" | "compact-labelings"
    witness: tuple | None = None  # (labeling, (factor, cofactor)) if reducible
    detail: str = ""


def factor_graph(g, labeling, budget: Budget = Budget(), size_guard=12) -> list:
    """All pairs of labeled graphs whose product is isomorphic to g.

    Factors come back as decoded graphs carrying their natural labeling.
    Each pair is verified by rebuilding the product and checking the
    isomorphism before it is returned, so v-vertices no edge touches, which
    the polynomial cannot see, never produce a bogus pair.  Empty means no
    two-factor split exists under this labeling.
    """
    p = encode(g, labeling)
    if not p:
        return []
    out = []
    for q, r in factor_pairs(p, budget):
        gq, gr = decode(q), decode(r)
        product = poly_product(gq, gq.natural_labeling, gr, gr.natural_labeling)
        if is_isomorphic(product, g, size_guard=size_guard) is not None:
            out.append((gq, gr))
    return out


def is_irreducible(
    g,
    labeling=None,
    *,
    exhaustive=False,
    budget: Budget = Budget(),
    size_guard=8,
) -> IrreducibilityReport:
    """Decide two-factor splittability of g.

    Single-labeling mode tries the given labeling (compact by default) and
    scopes its verdict to it.  Exhaustive mode sweeps every labeling by
    0..|v|-1; "irreducible" then means no compact labeling splits g, which
    says nothing about labelings using larger naturals.  Budget exhaustion
    downgrades the verdict to "inconclusive" instead of raising.
    """
    if exhaustive:
        vs = g.v_vertices
        if len(vs) > size_guard:
            raise SizeGuardError(
                f"{len(vs)} v-vertices exceed the exhaustive-sweep guard {size_guard}"
            )
        starved = False
        for perm in permutations(range(len(vs))):
            lab = dict(zip(vs, perm))
            try:
                pairs = factor_graph(g, lab, budget)
            except BudgetExceededError:
                starved = True
                continue
            if pairs:
                return IrreducibilityReport(
                    "reducible", "compact-labelings", (lab, pairs[0])
                )
        if starved:
            return IrreducibilityReport(
                "inconclusive",
                "compact-labelings",
                detail="budget ran out on at least one labeling",
            )
        return IrreducibilityReport("irreducible", "compact-labelings")
    if labeling is None:
        labeling = compact_labeling(g)
    try:
        pairs = factor_graph(g, labeling, budget)
    except BudgetExceededError as e:
        return IrreducibilityReport("inconclusive", "labeling", detail=str(e))
    if pairs:
        return IrreducibilityReport("reducible", "labeling", (labeling, pairs[0]))
    return IrreducibilityReport("irreducible", "labeling")
