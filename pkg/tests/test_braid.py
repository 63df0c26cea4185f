"""Tests for graph specs, edge rings, closures, framings, and the ideals."""

import random

import pytest

from braidgb.braid import (
    PRESETS,
    BraidGraphSpec,
    EdgeId,
    SpecError,
    SubsetDescriptor,
    build_edge_ring,
    close_strand,
    framing_preset,
    framings_at_level,
    linear_ideal,
    nonlocal_ideal,
    preset_framings,
    quadratic_ideal,
    subset_generator,
)
from braidgb.coeff import RationalFunction
from braidgb.groebner import canonical_basis, ideal_equal

t = RationalFunction.from_t_power

TWO_EVENTS = BraidGraphSpec(3, (2, 1), 1)


def test_spec_validation():
    with pytest.raises(SpecError):
        BraidGraphSpec(1, ())
    with pytest.raises(SpecError):
        BraidGraphSpec(2, (2,))
    with pytest.raises(SpecError):
        BraidGraphSpec(2, (0,))
    with pytest.raises(SpecError):
        BraidGraphSpec(2, (1,), 2)
    with pytest.raises(SpecError):
        BraidGraphSpec(2, (1,), -1)
    with pytest.raises(SpecError):
        BraidGraphSpec(2, (1,), 0, {"x9": 1})
    with pytest.raises(SpecError):
        BraidGraphSpec(2, (1,), 0, {"x0": True})
    with pytest.raises(SpecError):
        BraidGraphSpec(2, (1,), 0, {"x0": "big"})


def test_json_round_trip():
    spec = BraidGraphSpec(3, (2, 1, 1), 1, {"x0": 2, "x5": -1})
    again = BraidGraphSpec.from_json_dict(spec.to_json_dict())
    assert again == spec
    assert BraidGraphSpec.from_json_dict(
        {"strands": 3, "events": [{"pos": 2}, {"pos": 1}], "closed": 1}
    ) == TWO_EVENTS
    assert BraidGraphSpec.from_json_dict({"strands": 3, "events": [2, 1], "closed": 1}) == TWO_EVENTS


def test_json_rejects_garbage():
    with pytest.raises(SpecError):
        BraidGraphSpec.from_json_dict({"strands": 2, "loops": 1})
    with pytest.raises(SpecError):
        BraidGraphSpec.from_json_dict({"events": [1]})
    with pytest.raises(SpecError):
        BraidGraphSpec.from_json_dict({"strands": 2, "events": [{"at": 1}]})
    with pytest.raises(SpecError):
        BraidGraphSpec.from_json_dict({"strands": 2, "events": [1], "preset": "odd"})


def test_json_preset_overrides_framings():
    spec = BraidGraphSpec.from_json_dict(
        {"strands": 2, "events": [1], "framings": {"x0": 7}, "preset": "plus_one"}
    )
    assert spec.framings == {"x0": 1, "x1": 1, "x2": 1, "x3": 1}


def test_two_event_ring_structure():
    ring = build_edge_ring(TWO_EVENTS)
    assert ring.order.names == ("x0", "x1", "x2", "x3", "x4", "x5")
    assert ring.tail(EdgeId(3, None)) == 0 and ring.head(EdgeId(3, None)) == 0
    assert ring.labels[EdgeId(3, None)] == "x0"
    assert ring.tail(EdgeId(2, 0)) == 0 and ring.head(EdgeId(2, 0)) is None
    assert ring.tail(EdgeId(2, 1)) == 1 and ring.head(EdgeId(2, 1)) == 0
    assert ring.tail(EdgeId(2, 2)) is None and ring.head(EdgeId(2, 2)) == 1
    assert ring.labels[EdgeId(1, 0)] == "x4" and ring.labels[EdgeId(1, 1)] == "x5"
    assert ring.aliases() == {
        "zt1": "x0", "zt2": "x1", "zb2": "x3", "zt3": "x4", "zb3": "x5",
    }
    lines = ring.describe()
    assert any("closure edge of column 3" in ln for ln in lines)


def test_two_event_ring_after_closure():
    ring2 = close_strand(build_edge_ring(TWO_EVENTS)).after
    assert ring2.order.names == ("x1", "x0", "x2", "x4", "x5")
    assert ring2.tail(EdgeId(2, None)) == 0 and ring2.head(EdgeId(2, None)) == 1
    assert ring2.labels[EdgeId(2, None)] == "x1"


def test_open_level_ideals():
    spec = BraidGraphSpec(3, (2, 1), 0)
    ring = build_edge_ring(spec)
    assert ring.order.names == ("x0", "x1", "x2", "x3", "x4", "x5", "x6")
    assert [str(g) for g in linear_ideal(ring).generators] == [
        "x0 + x2 - x1 - x3",
        "x3 + x5 - x4 - x6",
    ]
    assert [str(g) for g in quadratic_ideal(ring).generators] == [
        "x0*x2 - x1*x3",
        "x3*x5 - x4*x6",
    ]
    assert [str(g) for g in nonlocal_ideal(ring).generators] == [
        "x0*x2 - x1*x3",
        "x3*x5 - x4*x6",
        "x0*x2*x5 - x1*x4*x6",
    ]


def test_framed_linear_and_quadratic():
    spec = BraidGraphSpec(2, (1,), 0, {"x1": 2, "x3": -1})
    ring = build_edge_ring(spec)
    assert [str(g) for g in linear_ideal(ring).generators] == [
        "x0 + x2 - t^-2*x1 - t*x3",
    ]
    assert [str(g) for g in quadratic_ideal(ring).generators] == [
        "x0*x2 - t^-1*x1*x3",
    ]
    assert str(subset_generator(ring, SubsetDescriptor.of(0))) == "t*x0*x2 - x1*x3"


def test_closed_graph_generators_match_hand_values():
    ring = build_edge_ring(BraidGraphSpec(2, (1,), 1, {"x0": 2}))
    assert [str(g) for g in nonlocal_ideal(ring).generators] == ["t^2*x1 - x2"]
    ring = build_edge_ring(BraidGraphSpec(3, (2, 1), 2, {"x0": 1, "x2": 2, "x3": 3}))
    assert [str(g) for g in nonlocal_ideal(ring).generators] == [
        "t^4*x1 - x2",
        "t^2*x2*x3 - x1*x4",
        "t^6*x3 - x4",
    ]


def test_fully_closed_component_generator():
    # a two-strand graph closed once where the subset swallows the whole
    # component: the generator degenerates to a constant
    ring = build_edge_ring(BraidGraphSpec(2, (1,), 1, {"x0": 2}))
    ring2 = close_strand(ring).after
    gens = nonlocal_ideal(ring2).generators
    assert [str(g) for g in gens] == ["t^4 - 1"]
    assert ideal_equal(nonlocal_ideal(ring2), [ring2.order.one()])
    # with total framing zero the generator vanishes and the ideal is empty
    flat = close_strand(build_edge_ring(BraidGraphSpec(2, (1,), 1))).after
    assert nonlocal_ideal(flat).generators == ()


def test_presets():
    assert sorted(PRESETS) == ["blackboard", "layered", "plus_one"]
    assert preset_framings(3, (2, 1), 0, "blackboard") == {}
    assert preset_framings(2, (1,), 0, "plus_one") == {"x0": 1, "x1": 1, "x2": 1, "x3": 1}
    # closing a strand zeroes its bottom edge so the closure edge stays at +1
    assert preset_framings(3, (2, 1), 1, "plus_one") == {
        "x0": 1, "x1": 0, "x2": 1, "x3": 1, "x4": 1, "x5": 1, "x6": 1,
    }
    assert preset_framings(3, (2, 1), 0, "layered") == {
        "x0": 1, "x1": 2, "x2": 1, "x3": 1, "x4": 1, "x5": 2, "x6": 1,
    }
    assert preset_framings(2, (1, 1), 0, "layered") == {
        "x0": 1, "x1": 1, "x2": 1, "x3": 1, "x4": 1, "x5": 1,
    }
    with pytest.raises(SpecError):
        preset_framings(2, (1,), 0, "nope")
    spec = framing_preset(BraidGraphSpec(2, (1,)), "plus_one")
    assert spec.framings["x3"] == 1


def test_layered_strand_totals():
    for b, events in [(2, (1, 1, 1)), (3, (2, 1, 2)), (3, (1, 1, 2, 2))]:
        table = preset_framings(b, events, 0, "layered")
        ring = build_edge_ring(BraidGraphSpec(b, events, 0, table))
        for col in range(1, b + 1):
            segs = [e for e in ring.edges if e.column == col]
            assert sum(ring.framing(e) for e in segs) == len(events) + 1


def test_framings_at_level():
    # a table given over the once-closed labels lands on the base edges
    table = {"x0": 1, "x1": 0, "x2": -1, "x3": 2, "x4": 0, "x5": 1}
    level0 = framings_at_level(3, (2, 1), 1, table)
    assert level0 == {"x0": 1, "x2": 0, "x3": -1, "x4": 2, "x5": 0, "x6": 1}
    ring = build_edge_ring(BraidGraphSpec(3, (2, 1), 1, level0))
    assert [ring.framing(e) for e in ring.edges] == [1, 0, -1, 2, 0, 1]


FRAMED = BraidGraphSpec(3, (2, 1), 1,
                        framings_at_level(3, (2, 1), 1,
                                          {"x0": 1, "x2": -1, "x3": 2, "x5": 1}))


def test_framed_weights():
    ring1 = build_edge_ring(FRAMED)
    ring2 = close_strand(ring1).after
    for ring in (ring1, ring2):
        assert ring.subset_weights(SubsetDescriptor.of(0)).total == 0
        assert ring.subset_weights(SubsetDescriptor.of(1)).total == 3
        assert ring.subset_weights(SubsetDescriptor.of(0, 1)).total == 3
    w = ring1.subset_weights(SubsetDescriptor.of(0))
    assert (w.internal, w.incoming, w.closure_incoming) == (1, -1, 0)


def test_framed_subset_generators():
    ring1 = build_edge_ring(FRAMED)
    cl = close_strand(ring1)
    ring2 = cl.after
    assert cl.twist == 0
    assert str(subset_generator(ring1, 0b01)) == "x1 - x2"
    assert str(subset_generator(ring1, 0b10)) == "t^3*x2*x4 - x3*x5"
    assert str(subset_generator(ring1, 0b11)) == "t^3*x1*x4 - x3*x5"
    assert str(subset_generator(ring2, 0b01)) == "x1 - x2"
    assert str(subset_generator(ring2, 0b10)) == "t^3*x2*x4 - x1*x5"
    assert str(subset_generator(ring2, 0b11)) == "t^3*x4 - x5"


def test_closure_twist_and_projection():
    spec = BraidGraphSpec(2, (1,), 0, {"x0": 1, "x1": -2, "x3": 3})
    cl = close_strand(build_edge_ring(spec))
    assert cl.twist == 1 and cl.kept_label == "x0" and cl.dropped_label == "x1"
    p = cl.before.parse("x1*x3")
    assert str(cl.project(p)) == "t^-1*x0*x3"
    with pytest.raises(ValueError):
        cl.project(cl.after.var("x0"))


def test_projection_scales_subset_generators():
    # pushing a generator through a closure multiplies it by the kept
    # variable exactly when the closing strand passes through the subset,
    # after the twist exponent of the strand's own top edge is peeled off
    rng = random.Random(77)
    for _ in range(40):
        b = rng.choice((2, 3))
        events = tuple(rng.choice(range(1, b)) for _ in range(rng.randint(1, 3)))
        labels = [f"x{i}" for i in range(b + 2 * len(events))]
        spec = BraidGraphSpec(b, events, 0, {n: rng.randint(-2, 2) for n in labels})
        ring = build_edge_ring(spec)
        for _ in range(b - 1):
            cl = close_strand(ring)
            nxt = cl.after
            for mask in range(1, 1 << len(events)):
                before = subset_generator(ring, mask)
                after = subset_generator(nxt, mask)
                w_tau = ring.subset_weights(mask).closure_incoming
                lhs = cl.project(before) * t(w_tau)
                col = ring.strands - ring.closed
                evs = [v for v in range(len(events))
                       if events[v] in (col - 1, col)]
                top_out = any(ring.tail(EdgeId(col, 0)) == v and (mask >> v) & 1
                              for v in evs)
                bot_in = any(ring.head(EdgeId(col, len(ring._cols[col]))) == v
                             and (mask >> v) & 1 for v in evs)
                zeta = nxt.var(cl.kept_label) if top_out and bot_in else nxt.order.one()
                assert lhs == zeta * after
            ring = nxt


def test_weight_total_is_closure_invariant():
    rng = random.Random(99)
    for _ in range(40):
        b = rng.choice((2, 3))
        events = tuple(rng.choice(range(1, b)) for _ in range(rng.randint(1, 4)))
        labels = [f"x{i}" for i in range(b + 2 * len(events))]
        spec = BraidGraphSpec(b, events, 0, {n: rng.randint(-3, 3) for n in labels})
        ring = build_edge_ring(spec)
        totals = {m: ring.subset_weights(m).total for m in range(1, 1 << len(events))}
        for _ in range(b - 1):
            ring = close_strand(ring).after
            for m, w in totals.items():
                assert ring.subset_weights(m).total == w


def test_plus_one_weight_identity():
    # with every edge framed +1 the generator exponent counts the in-slots
    for b, events in [(2, (1,)), (3, (2, 1)), (3, (1, 2, 1))]:
        spec = framing_preset(BraidGraphSpec(b, events), "plus_one")
        ring = build_edge_ring(spec)
        for mask in range(1, 1 << len(events)):
            w = ring.subset_weights(mask)
            assert w.internal + w.incoming == 2 * bin(mask).count("1")


def test_eventless_closure_is_a_free_loop():
    spec = BraidGraphSpec(3, (1,), 0, {"x0": 5})
    cl = close_strand(build_edge_ring(spec))
    assert cl.dropped_label is None and cl.twist == 5
    ring1 = cl.after
    loop = EdgeId(3, None)
    assert ring1.tail(loop) is None and ring1.head(loop) is None
    assert ring1.framing(loop) == 5
    assert ideal_equal(cl.project_ideal(nonlocal_ideal(cl.before)), nonlocal_ideal(ring1))


def test_inherited_labels_match_fresh_construction():
    spec = BraidGraphSpec(3, (2, 1), 0, {"x0": 1, "x3": -2})
    inherited = close_strand(build_edge_ring(spec)).after
    fresh = build_edge_ring(BraidGraphSpec(3, (2, 1), 1, {"x0": 1, "x3": -2}))
    rename = {inherited.labels[e]: fresh.labels[e] for e in inherited.edges}
    moved = [g.map_to(fresh.order, rename) for g in nonlocal_ideal(inherited).generators]
    assert canonical_basis(moved).elements == canonical_basis(nonlocal_ideal(fresh)).elements
    for e in inherited.edges:
        assert inherited.framing(e) == fresh.framing(e)
        assert inherited.tail(e) == fresh.tail(e)
        assert inherited.head(e) == fresh.head(e)


def test_subset_arguments():
    ring = build_edge_ring(TWO_EVENTS)
    a = subset_generator(ring, SubsetDescriptor.of(0, 1))
    assert a == subset_generator(ring, 0b11) == subset_generator(ring, [0, 1])
    assert SubsetDescriptor.of(1).members == (1,)
    with pytest.raises(SpecError):
        subset_generator(ring, 0)
    with pytest.raises(SpecError):
        subset_generator(ring, 0b100)


def test_ring_parse_aliases():
    ring = build_edge_ring(TWO_EVENTS)
    assert ring.parse("zt2 - zb2") == ring.var("x1") - ring.var("x3")
    p = ring.parse("nu*zt1 - 1", with_nu=True)
    assert str(p) == "nu*x0 - 1"
    with pytest.raises(SpecError):
        ring.var("zb1")
    assert ring.var_of(EdgeId(2, 1)) == ring.var("x2")


def test_closure_stops_at_last_strand():
    ring = build_edge_ring(BraidGraphSpec(2, (1,), 1))
    with pytest.raises(SpecError):
        close_strand(ring)
