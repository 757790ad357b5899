"""Petri nets, the pointed product, and product decomposition."""

import random
from collections import Counter

import pytest

from bigraphpoly import (
    BitWidthError,
    LabeledPetriNet,
    LabelingError,
    PetriNet,
    Poly1,
    Poly2,
    SizeGuardError,
    compact_net_labeling,
    decode_net,
    decompose,
    encode_net,
    find_decomposing_labeling,
    mul,
    net_isomorphic,
    net_product,
    render,
)

from helpers import random_labeling, random_net


def branching_net():
    """b0 is consumed by a and b; b1 is produced by b and c."""
    return PetriNet(
        ["b0", "b1"],
        ["a", "b", "c"],
        pre={"a": ["b0"], "b": ["b0"]},
        post={"b": ["b1"], "c": ["b1"]},
    )


BRANCH_LABELS = {"b0": 0, "b1": 1}


def cycle_net():
    """Two interlocked loops sharing conditions; known to resist splitting."""
    return PetriNet(
        [f"b{i}" for i in range(6)],
        ["e1", "e2", "e3", "e4"],
        pre={
            "e1": ["b0", "b3"],
            "e2": ["b1", "b2"],
            "e3": ["b3", "b5"],
            "e4": ["b2", "b4"],
        },
        post={
            "e1": ["b1", "b2"],
            "e2": ["b0", "b3"],
            "e3": ["b2", "b4"],
            "e4": ["b3", "b5"],
        },
    )


CYCLE_LABELS = {f"b{i}": i for i in range(6)}


def assert_valid_net_iso(n1, n2, witness):
    assert witness is not None
    event_map, cond_map = witness
    assert Counter(event_map.keys()) == Counter(n1.events)
    assert Counter(event_map.values()) == Counter(n2.events)
    assert Counter(cond_map.keys()) == Counter(n1.conditions)
    assert Counter(cond_map.values()) == Counter(n2.conditions)
    for e in n1.events:
        assert {cond_map[b] for b in n1.pre(e)} == set(n2.pre(event_map[e]))
        assert {cond_map[b] for b in n1.post(e)} == set(n2.post(event_map[e]))


def test_encode_golden():
    p = encode_net(branching_net(), BRANCH_LABELS)
    assert p == Poly2({(1, 2): 1, (1, 0): 1, (0, 2): 1, (0, 0): 1})
    assert render(p) == "x*y^2 + x + y^2 + 1"


def test_encode_always_holds_an_idle_unit():
    empty = PetriNet()
    assert encode_net(empty, {}) == Poly2({(0, 0): 1})
    silent = PetriNet([], ["e"])  # an event with empty pre and post
    assert encode_net(silent, {}) == Poly2({(0, 0): 2})


def test_encode_width_guard():
    net = PetriNet(["b"], ["e"], pre={"e": ["b"]})
    assert encode_net(net, {"b": 7}, width=8) == Poly2({(128, 0): 1, (0, 0): 1})
    with pytest.raises(BitWidthError):
        encode_net(net, {"b": 8}, width=8)


def test_decode_golden():
    labeled = decode_net(Poly2({(1, 2): 1, (1, 0): 1, (0, 2): 1, (0, 0): 1}))
    net = labeled.net
    assert labeled.labeling == {0: 0, 1: 1}
    assert list(net.conditions) == [0, 1]
    assert len(net.events) == 3
    assert Counter(
        (frozenset(net.pre(e)), frozenset(net.post(e))) for e in net.events
    ) == Counter(
        {
            (frozenset({0}), frozenset({1})): 1,
            (frozenset({0}), frozenset()): 1,
            (frozenset(), frozenset({1})): 1,
        }
    )
    assert encode_net(net, labeled.labeling) == encode_net(
        branching_net(), BRANCH_LABELS
    )


def test_decode_absorbs_one_constant_unit():
    labeled = decode_net(Poly2({(0, 0): 3}))
    assert not labeled.net.conditions
    assert len(labeled.net.events) == 2
    assert all(
        not labeled.net.pre(e) and not labeled.net.post(e)
        for e in labeled.net.events
    )


def test_decode_rejects_missing_idle_slot_and_wrong_arity():
    with pytest.raises(ValueError, match="idle"):
        decode_net(Poly2({(1, 0): 1}))
    with pytest.raises(ValueError):
        decode_net(Poly2({}))
    with pytest.raises(TypeError):
        decode_net(Poly1({0: 1}))


def test_round_trip_random_nets():
    rng = random.Random(71)
    for _ in range(40):
        net = random_net(rng)
        labeling = random_labeling(rng, net.conditions)
        p = encode_net(net, labeling)
        dec = decode_net(p)
        assert encode_net(dec.net, dec.labeling) == p
        assert_valid_net_iso(net, dec.net, net_isomorphic(net, dec.net))


def test_net_product_event_grid():
    n1 = PetriNet(["b11"], ["e"], pre={"e": ["b11"]}, post={"e": ["b11"]})
    n2 = PetriNet(["b21"], ["e1", "e2"], pre={"e2": ["b21"]}, post={"e1": ["b21"]})
    prod = net_product(n1, n2)
    assert set(prod.conditions) == {(0, "b11"), (1, "b21")}
    assert set(prod.events) == {
        ("e", "e1"),
        ("e", "e2"),
        ("e", None),
        (None, "e1"),
        (None, "e2"),
    }
    assert prod.pre(("e", "e2")) == frozenset({(0, "b11"), (1, "b21")})
    assert prod.post(("e", "e2")) == frozenset({(0, "b11")})
    assert prod.pre((None, "e1")) == frozenset()
    assert prod.post((None, "e1")) == frozenset({(1, "b21")})


def test_encoding_turns_products_into_multiplication():
    rng = random.Random(72)
    for _ in range(25):
        n1 = random_net(rng)
        n2 = random_net(rng)
        l1 = random_labeling(rng, n1.conditions, 4)
        l2 = {b: 5 + lab for b, lab in random_labeling(rng, n2.conditions, 4).items()}
        prod = net_product(n1, n2)
        prod_labels = {(0, b): l1[b] for b in n1.conditions}
        prod_labels.update({(1, b): l2[b] for b in n2.conditions})
        assert encode_net(prod, prod_labels) == mul(
            encode_net(n1, l1), encode_net(n2, l2)
        )


def test_product_labeling_must_stay_injective():
    n = PetriNet(["b"], ["e"], pre={"e": ["b"]})
    prod = net_product(n, n)
    with pytest.raises(LabelingError):
        encode_net(prod, {(0, "b"): 3, (1, "b"): 3})


def test_decompose_golden():
    pairs = decompose(branching_net(), BRANCH_LABELS)
    assert len(pairs) == 1
    first, second = pairs[0]
    assert encode_net(first.net, first.labeling) == Poly2({(0, 2): 1, (0, 0): 1})
    assert encode_net(second.net, second.labeling) == Poly2({(1, 0): 1, (0, 0): 1})
    assert list(first.net.conditions) == [1]
    assert list(second.net.conditions) == [0]
    assert len(first.net.events) == len(second.net.events) == 1
    rebuilt = net_product(first.net, second.net)
    assert net_isomorphic(rebuilt, branching_net()) is not None


def test_decompose_empty_when_the_encoding_resists():
    # dropping event c leaves x*y^2 + x + 1, which has no bit-disjoint split
    net = PetriNet(
        ["b0", "b1"],
        ["a", "b"],
        pre={"a": ["b0"], "b": ["b0"]},
        post={"a": ["b1"]},
    )
    p = encode_net(net, BRANCH_LABELS)
    assert p == Poly2({(1, 2): 1, (1, 0): 1, (0, 0): 1})
    assert decompose(net, BRANCH_LABELS) == []


def test_uncovered_condition_blocks_a_polynomial_only_split():
    """An untouched condition is invisible to the encoding; the rebuild
    check must reject the split the polynomial alone would allow."""
    net = PetriNet(
        ["b0", "b1", "b2"],
        ["a", "b", "c"],
        pre={"a": ["b0"], "b": ["b0"]},
        post={"b": ["b1"], "c": ["b1"]},
    )
    labels = {"b0": 0, "b1": 1, "b2": 2}
    assert encode_net(net, labels) == encode_net(branching_net(), BRANCH_LABELS)
    assert decompose(net, labels) == []


def test_decompose_certifies_the_interlocked_net():
    net = cycle_net()
    assert encode_net(net, CYCLE_LABELS) == Poly2(
        {(9, 6): 1, (6, 9): 1, (40, 20): 1, (20, 40): 1, (0, 0): 1}
    )
    assert decompose(net, CYCLE_LABELS) == []
    assert find_decomposing_labeling(net) is None


def test_find_decomposing_labeling_golden():
    got = find_decomposing_labeling(branching_net())
    assert got is not None
    labeling, pairs = got
    assert labeling == {"b0": 0, "b1": 1}
    assert len(pairs) == 1
    rebuilt = net_product(pairs[0][0].net, pairs[0][1].net)
    assert net_isomorphic(rebuilt, branching_net()) is not None


def test_find_decomposing_labeling_sweep_guard():
    net = PetriNet([f"b{i}" for i in range(9)], [])
    with pytest.raises(SizeGuardError):
        find_decomposing_labeling(net)


def test_decompose_round_trips_random_products():
    rng = random.Random(73)
    for _ in range(15):
        n1 = random_net(rng, max_events=2, max_conditions=2)
        n2 = random_net(rng, max_events=2, max_conditions=2)
        l1 = random_labeling(rng, n1.conditions, 3)
        l2 = {b: 4 + lab for b, lab in random_labeling(rng, n2.conditions, 3).items()}
        prod = net_product(n1, n2)
        prod_labels = {(0, b): l1[b] for b in n1.conditions}
        prod_labels.update({(1, b): l2[b] for b in n2.conditions})
        pairs = decompose(prod, prod_labels)
        assert pairs
        for first, second in pairs:
            rebuilt = net_product(first.net, second.net)
            assert net_isomorphic(rebuilt, prod) is not None


def test_net_isomorphic_guard_and_negatives():
    big = PetriNet([f"b{i}" for i in range(13)], [])
    with pytest.raises(SizeGuardError):
        net_isomorphic(big, big)
    n1 = PetriNet(["b"], ["e"], pre={"e": ["b"]})
    n2 = PetriNet(["b"], ["e"], post={"e": ["b"]})
    assert net_isomorphic(n1, n2) is None


def test_petrinet_validation():
    with pytest.raises(ValueError):
        PetriNet(["b", "b"], [])
    with pytest.raises(ValueError):
        PetriNet([], ["e", "e"])
    with pytest.raises(ValueError):
        PetriNet(["x"], ["x"])
    with pytest.raises(ValueError):
        PetriNet(["b"], ["e"], pre={"f": ["b"]})
    with pytest.raises(ValueError):
        PetriNet(["b"], ["e"], pre={"e": ["nope"]})


def test_petrinet_equality_and_views():
    net = branching_net()
    assert net == branching_net()
    assert hash(net) == hash(branching_net())
    assert net.pre("a") == frozenset({"b0"})
    assert net.post("a") == frozenset()
    assert net != cycle_net()


def test_compact_net_labeling():
    assert compact_net_labeling(branching_net()) == {"b0": 0, "b1": 1}


def test_labeled_net_dataclass():
    net = branching_net()
    assert LabeledPetriNet(net, BRANCH_LABELS) == LabeledPetriNet(net, BRANCH_LABELS)
    assert LabeledPetriNet(net).labeling == {}
