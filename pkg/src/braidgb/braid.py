"""Framed braid-form graphs, their edge rings, and the edge ideals.

A graph is described by a number of strands (vertical columns, numbered 1..b
left to right), a top-to-bottom list of events (an event at position i is a
thick horizontal edge joining columns i and i+1), a count of closed strands
(strands close from the right; closing merges a column's top and bottom edges
into a single closure edge that leaves its topmost event and re-enters its
bottommost one), and integer framings on the thin edges.  Thin edges are
oriented upward.

Edge labels are x0, x1, ...: strands are scanned right to left and each
strand's edges top to bottom, with a closure edge taking its strand's top
slot.  build_edge_ring labels the graph fresh at its own closure level;
close_strand keeps the existing labels, the closure edge inheriting the label
of the top edge it absorbs.  The monomial order puts the most recent closure
edge first and the remaining labels in ascending numeric order.

Framings are stored on the fully open (level-0) edges; a closure edge is
framed by the sum of the two edges it merges.  The alias ztJ (and zbJ while
open) names the top (bottom) edge of the J-th strand counted from the right,
matching the closure order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coeff import RationalFunction
from .groebner import Ideal
from .poly import Polynomial, VariableOrder, parse_polynomial


class SpecError(ValueError):
    """Invalid graph description."""


PRESETS = ("blackboard", "plus_one", "layered")


@dataclass(frozen=True)
class EdgeId:
    """A thin edge: segment j of a column (top to bottom), or its closure."""

    column: int
    segment: int | None

    @property
    def is_closure(self) -> bool:
        return self.segment is None


def _column_events(strands: int, events) -> list[list[int]]:
    cols: list[list[int]] = [[] for _ in range(strands + 1)]
    for v, pos in enumerate(events):
        cols[pos].append(v)
        cols[pos + 1].append(v)
    return cols


def _edge_sequence(strands: int, cols, closed: int) -> list[EdgeId]:
    """All edges in label order: strands right to left, top to bottom."""
    out: list[EdgeId] = []
    for c in range(strands, 0, -1):
        m = len(cols[c])
        if c > strands - closed:
            out.append(EdgeId(c, None))
            out.extend(EdgeId(c, j) for j in range(1, m))
        else:
            out.extend(EdgeId(c, j) for j in range(m + 1))
    return out


def _fresh_labels(strands: int, events, closed: int) -> dict[EdgeId, str]:
    cols = _column_events(strands, events)
    return {e: f"x{i}" for i, e in enumerate(_edge_sequence(strands, cols, closed))}


def _label_number(label: str) -> int:
    return int(label[1:])


@dataclass(frozen=True, eq=True)
class BraidGraphSpec:
    """Plain description of a framed braid-form graph.

    framings is keyed by the level-0 edge labels (the labeling of the fully
    open graph), whatever the closed count is; missing labels mean framing 0.
    """

    strands: int
    events: tuple[int, ...] = ()
    closed: int = 0
    framings: dict[str, int] = field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        if not isinstance(self.strands, int) or self.strands < 1:
            raise SpecError(f"strands must be a positive integer, got {self.strands!r}")
        events = tuple(self.events)
        object.__setattr__(self, "events", events)
        for pos in events:
            if not isinstance(pos, int) or not 1 <= pos <= self.strands - 1:
                raise SpecError(
                    f"event position {pos!r} is not in 1..{self.strands - 1}"
                )
        if not isinstance(self.closed, int) or not 0 <= self.closed <= self.strands - 1:
            raise SpecError(
                f"closed must be in 0..{self.strands - 1} (the outermost strand stays open)"
            )
        valid = set(_fresh_labels(self.strands, events, 0).values())
        framings = dict(self.framings)
        object.__setattr__(self, "framings", framings)
        for label, value in framings.items():
            if label not in valid:
                raise SpecError(f"framing label {label!r} is not a level-0 edge label")
            if not isinstance(value, int) or isinstance(value, bool):
                raise SpecError(f"framing of {label} must be an integer, got {value!r}")

    @classmethod
    def from_json_dict(cls, obj: dict) -> "BraidGraphSpec":
        if not isinstance(obj, dict):
            raise SpecError("graph description must be a JSON object")
        allowed = {"strands", "events", "framings", "closed", "preset"}
        unknown = set(obj) - allowed
        if unknown:
            raise SpecError(f"unknown keys {sorted(unknown)}; allowed: {sorted(allowed)}")
        if "strands" not in obj:
            raise SpecError("missing required key: strands")
        strands = obj["strands"]
        raw_events = obj.get("events", [])
        if not isinstance(raw_events, list):
            raise SpecError("events must be a list")
        events = []
        for item in raw_events:
            if isinstance(item, dict):
                extra = set(item) - {"pos"}
                if extra or "pos" not in item:
                    raise SpecError(f"event entries look like {{\"pos\": 2}}, got {item!r}")
                events.append(item["pos"])
            else:
                events.append(item)
        closed = obj.get("closed", 0)
        preset = obj.get("preset")
        if preset is not None:
            framings = preset_framings(strands, tuple(events), closed, preset)
        else:
            framings = obj.get("framings", {})
            if not isinstance(framings, dict):
                raise SpecError("framings must be an object of label -> integer")
        return cls(strands, tuple(events), closed, dict(framings))

    def to_json_dict(self) -> dict:
        return {
            "strands": self.strands,
            "events": [{"pos": p} for p in self.events],
            "framings": dict(self.framings),
            "closed": self.closed,
        }


def preset_framings(strands: int, events, closed: int, name: str) -> dict[str, int]:
    """Framing table (level-0 labels) for a named preset at the given closure."""
    probe = BraidGraphSpec(strands, tuple(events), closed)
    labels = _fresh_labels(probe.strands, probe.events, 0)
    cols = _column_events(probe.strands, probe.events)
    if name == "blackboard":
        return {}
    if name == "plus_one":
        out = {lbl: 1 for lbl in labels.values()}
        for c in range(probe.strands - probe.closed + 1, probe.strands + 1):
            if cols[c]:
                out[labels[EdgeId(c, len(cols[c]))]] = 0
        return out
    if name == "layered":
        n = len(probe.events)
        out = {}
        for e, lbl in labels.items():
            evs = cols[e.column]
            j = e.segment
            row_above = 0 if j == 0 else evs[j - 1] + 1
            row_below = (n + 1) if j == len(evs) else evs[j] + 1
            out[lbl] = row_below - row_above
        return out
    raise SpecError(f"unknown preset {name!r}; choose from {PRESETS}")


def framing_preset(spec: BraidGraphSpec, name: str) -> BraidGraphSpec:
    """The same graph with its framings replaced by a preset."""
    return BraidGraphSpec(
        spec.strands, spec.events, spec.closed,
        preset_framings(spec.strands, spec.events, spec.closed, name),
    )


def framings_at_level(strands: int, events, closed: int, table: dict[str, int]) -> dict[str, int]:
    """Convert framings keyed by the fresh labels AT the given closure level
    into the level-0 table (a closure edge's framing lands on its top edge)."""
    probe = BraidGraphSpec(strands, tuple(events), closed)
    here = _fresh_labels(probe.strands, probe.events, closed)
    base = _fresh_labels(probe.strands, probe.events, 0)
    by_label = {lbl: e for e, lbl in here.items()}
    out: dict[str, int] = {}
    for label, value in table.items():
        if label not in by_label:
            raise SpecError(f"{label!r} is not an edge label at closure level {closed}")
        e = by_label[label]
        out[base[EdgeId(e.column, 0) if e.is_closure else e]] = value
    return out


class EdgeRing:
    """The polynomial ring Q(t)[x_e] over the edges of a partially closed graph."""

    __slots__ = (
        "strands", "events", "closed", "level0_framings", "labels",
        "edges", "order", "_cols", "_framing", "_tail", "_head",
        "_out_slot", "_in_slot", "_by_label",
    )

    def __init__(self, strands: int, events, closed: int,
                 level0_framings: dict[EdgeId, int], labels: dict[EdgeId, str]) -> None:
        self.strands = strands
        self.events = tuple(events)
        self.closed = closed
        self.level0_framings = dict(level0_framings)
        self.labels = dict(labels)
        self._cols = _column_events(strands, self.events)
        self.edges = tuple(sorted(self.labels, key=lambda e: _label_number(self.labels[e])))
        names = [self.labels[e] for e in self.edges]
        if closed >= 1:
            promoted = self.labels[EdgeId(strands + 1 - closed, None)]
            names.remove(promoted)
            names.insert(0, promoted)
        self.order = VariableOrder(names)
        self._framing = {}
        self._tail = {}
        self._head = {}
        self._out_slot = {}
        self._in_slot = {}
        for e in self.edges:
            evs = self._cols[e.column]
            if e.is_closure:
                if evs:
                    f = (self.level0_framings.get(EdgeId(e.column, 0), 0)
                         + self.level0_framings.get(EdgeId(e.column, len(evs)), 0))
                    tail, head = evs[0], evs[-1]
                else:
                    f = self.level0_framings.get(EdgeId(e.column, 0), 0)
                    tail = head = None
            else:
                f = self.level0_framings.get(e, 0)
                j = e.segment
                head = evs[j - 1] if j >= 1 else None
                tail = evs[j] if j < len(evs) else None
            self._framing[e] = f
            self._tail[e] = tail
            self._head[e] = head
            if tail is not None:
                self._out_slot[(e.column, tail)] = e
            if head is not None:
                self._in_slot[(e.column, head)] = e
        self._by_label = {lbl: e for e, lbl in self.labels.items()}

    # --- basic queries ----------------------------------------------------

    @property
    def n_events(self) -> int:
        return len(self.events)

    def framing(self, edge: EdgeId) -> int:
        return self._framing[edge]

    def tail(self, edge: EdgeId) -> int | None:
        return self._tail[edge]

    def head(self, edge: EdgeId) -> int | None:
        return self._head[edge]

    def edge_of(self, label: str) -> EdgeId:
        try:
            return self._by_label[label]
        except KeyError:
            raise SpecError(f"no edge labeled {label}") from None

    def var(self, label: str) -> Polynomial:
        return self.order.variable(label)

    def var_of(self, edge: EdgeId) -> Polynomial:
        return self.order.variable(self.labels[edge])

    def out_slots(self, v: int) -> tuple[EdgeId, EdgeId]:
        p = self.events[v]
        return (self._out_slot[(p, v)], self._out_slot[(p + 1, v)])

    def in_slots(self, v: int) -> tuple[EdgeId, EdgeId]:
        p = self.events[v]
        return (self._in_slot[(p, v)], self._in_slot[(p + 1, v)])

    def aliases(self) -> dict[str, str]:
        out: dict[str, str] = {}
        for j in range(1, self.strands + 1):
            c = self.strands + 1 - j
            evs = self._cols[c]
            if c > self.strands - self.closed:
                out[f"zt{j}"] = self.labels[EdgeId(c, None)]
            else:
                out[f"zt{j}"] = self.labels[EdgeId(c, 0)]
                out[f"zb{j}"] = self.labels[EdgeId(c, len(evs))]
        return out

    def parse(self, text: str, *, with_nu: bool = False) -> Polynomial:
        """Parse polynomial text over this ring, accepting ztJ/zbJ aliases."""
        order = self.order.with_nu() if with_nu else self.order
        return parse_polynomial(text, order, synonyms=self.aliases())

    # --- subsets and weights ------------------------------------------------

    def subset_mask(self, subset) -> int:
        if isinstance(subset, SubsetDescriptor):
            return subset.mask
        if isinstance(subset, int):
            mask = subset
        else:
            mask = 0
            for v in subset:
                mask |= 1 << v
        if not 0 <= mask < (1 << self.n_events):
            raise SpecError(f"subset {subset!r} is out of range for {self.n_events} events")
        return mask

    def subset_partition(self, subset) -> tuple[list[EdgeId], list[EdgeId], list[EdgeId]]:
        """(internal, outgoing, incoming) edges of a set of events."""
        mask = self.subset_mask(subset)
        internal: list[EdgeId] = []
        outgoing: list[EdgeId] = []
        incoming: list[EdgeId] = []
        for e in self.edges:
            tail, head = self._tail[e], self._head[e]
            tin = tail is not None and (mask >> tail) & 1
            hin = head is not None and (mask >> head) & 1
            if tin and hin:
                internal.append(e)
            elif tin:
                outgoing.append(e)
            elif hin:
                incoming.append(e)
        return internal, outgoing, incoming

    def subset_weights(self, subset) -> "WeightData":
        mask = self.subset_mask(subset)
        internal, _, incoming = self.subset_partition(mask)
        w = sum(self._framing[e] for e in internal)
        w_in = sum(self._framing[e] for e in incoming)
        w_tau = 0
        c = self.strands - self.closed
        if c >= 2:
            evs = self._cols[c]
            if evs:
                bottom = EdgeId(c, len(evs))
                head = self._head[bottom]
                if head is not None and (mask >> head) & 1:
                    w_tau = self._framing[EdgeId(c, 0)]
        return WeightData(w, w_in, w_tau)

    def describe(self) -> list[str]:
        lines = [
            f"strands: {self.strands}   events (top to bottom): "
            + (" ".join(str(p) for p in self.events) if self.events else "none")
            + f"   closed: {self.closed}",
            "order: " + " > ".join(self.order.names),
        ]
        alias_of: dict[str, list[str]] = {}
        for alias, lbl in self.aliases().items():
            alias_of.setdefault(lbl, []).append(alias)
        for e in self.edges:
            lbl = self.labels[e]
            if e.is_closure and self._tail[e] is None:
                kind = f"free loop on strand column {e.column}"
            elif e.is_closure:
                kind = f"closure edge of column {e.column}"
            else:
                kind = f"column {e.column} segment {e.segment}"
            tail = "bottom" if self._tail[e] is None else f"e{self._tail[e]}"
            head = "top" if self._head[e] is None else f"e{self._head[e]}"
            if e.is_closure:
                tail = "-" if self._tail[e] is None else f"e{self._tail[e]}"
                head = "-" if self._head[e] is None else f"e{self._head[e]}"
            note = f"  [{','.join(sorted(alias_of[lbl]))}]" if lbl in alias_of else ""
            lines.append(
                f"  {lbl:<4} {kind:<34} tail={tail:<7} head={head:<7} framing={self._framing[e]:>3}{note}"
            )
        return lines


@dataclass(frozen=True)
class SubsetDescriptor:
    """A nonempty collection of events, stored as a bitmask."""

    mask: int

    @classmethod
    def of(cls, *events: int) -> "SubsetDescriptor":
        mask = 0
        for v in events:
            mask |= 1 << v
        return cls(mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.mask.bit_length()) if (self.mask >> v) & 1)


@dataclass(frozen=True)
class WeightData:
    """Framing weights of a subset: internal, incoming, and the incoming
    contribution of the next strand to close (its top edge's framing, counted
    when its bottom edge enters the subset)."""

    internal: int
    incoming: int
    closure_incoming: int

    @property
    def total(self) -> int:
        return self.internal + self.incoming + self.closure_incoming


def build_edge_ring(spec: BraidGraphSpec) -> EdgeRing:
    """Edge ring of the graph, labeled fresh at the spec's own closure level."""
    base = _fresh_labels(spec.strands, spec.events, 0)
    by_label = {lbl: e for e, lbl in base.items()}
    level0 = {by_label[lbl]: val for lbl, val in spec.framings.items()}
    labels = _fresh_labels(spec.strands, spec.events, spec.closed)
    return EdgeRing(spec.strands, spec.events, spec.closed, level0, labels)


@dataclass
class Closure:
    """One strand-closure step: the two rings and the edge substitution."""

    before: EdgeRing
    after: EdgeRing
    twist: int
    kept_label: str
    dropped_label: str | None

    def project(self, p: Polynomial) -> Polynomial:
        if p.order != self.before.order:
            raise ValueError("polynomial lives in a different ring")
        if self.dropped_label is not None:
            repl = self.before.var(self.kept_label) * RationalFunction.from_t_power(-self.twist)
            p = p.substitute(self.dropped_label, repl)
        return p.map_to(self.after.order)

    def project_ideal(self, ideal: Ideal) -> Ideal:
        return Ideal(self.after.order, tuple(self.project(g) for g in ideal.generators))


def close_strand(ring: EdgeRing) -> Closure:
    """Close the next strand (counted from the right), identifying its bottom
    edge with t^-a times its top edge, a being the top edge's framing."""
    if ring.closed >= ring.strands - 1:
        raise SpecError("the outermost strand is never closed")
    c = ring.strands - ring.closed
    evs = ring._cols[c]
    labels = dict(ring.labels)
    if evs:
        top = EdgeId(c, 0)
        bottom = EdgeId(c, len(evs))
        kept = labels.pop(top)
        dropped = labels.pop(bottom)
        labels[EdgeId(c, None)] = kept
        twist = ring.framing(top)
    else:
        top = EdgeId(c, 0)
        kept = labels.pop(top)
        dropped = None
        labels[EdgeId(c, None)] = kept
        twist = ring.framing(top)
    after = EdgeRing(ring.strands, ring.events, ring.closed + 1, ring.level0_framings, labels)
    return Closure(ring, after, twist, kept, dropped)


# --- the edge ideals --------------------------------------------------------


def framing_ideal(ring: EdgeRing) -> Ideal:
    """The head/tail identification relations t^f * y_e - x_e, in a doubled
    ring with an extra y-variable per edge.  Eliminating every y_e is what
    makes the plain edge ring and the other ideals' t-power coefficients
    correct, so this ideal exists for display and cross-checking only."""
    x_names = list(ring.order.names)
    y_names = ["y" + n[1:] for n in x_names]
    doubled = VariableOrder(x_names + y_names)
    gens = []
    for e in ring.edges:
        x = doubled.variable(ring.labels[e])
        y = doubled.variable("y" + ring.labels[e][1:])
        gens.append(y * RationalFunction.from_t_power(ring.framing(e)) - x)
    return Ideal(doubled, gens)


def linear_ideal(ring: EdgeRing) -> Ideal:
    """One generator per event: outputs minus framing-twisted inputs."""
    gens = []
    for v in range(ring.n_events):
        p = ring.order.zero()
        for e in ring.out_slots(v):
            p = p + ring.var_of(e)
        for e in ring.in_slots(v):
            p = p - ring.var_of(e) * RationalFunction.from_t_power(-ring.framing(e))
        gens.append(p)
    return Ideal(ring.order, gens)


def quadratic_ideal(ring: EdgeRing) -> Ideal:
    """One generator per event: output product minus twisted input product."""
    gens = []
    for v in range(ring.n_events):
        lhs = ring.order.one()
        for e in ring.out_slots(v):
            lhs = lhs * ring.var_of(e)
        rhs = ring.order.one()
        for e in ring.in_slots(v):
            rhs = rhs * (ring.var_of(e) * RationalFunction.from_t_power(-ring.framing(e)))
        gens.append(lhs - rhs)
    return Ideal(ring.order, gens)


def subset_generator(ring: EdgeRing, subset) -> Polynomial:
    """t^(w + w_in) * (product of outgoing) - (product of incoming)."""
    mask = ring.subset_mask(subset)
    if mask == 0:
        raise SpecError("subset generators need a nonempty subset")
    internal, outgoing, incoming = ring.subset_partition(mask)
    w = sum(ring.framing(e) for e in internal)
    w_in = sum(ring.framing(e) for e in incoming)
    lhs = ring.order.constant(RationalFunction.from_t_power(w + w_in))
    for e in outgoing:
        lhs = lhs * ring.var_of(e)
    rhs = ring.order.one()
    for e in incoming:
        rhs = rhs * ring.var_of(e)
    return lhs - rhs


def nonlocal_ideal(ring: EdgeRing) -> Ideal:
    """One generator per nonempty subset of events, in ascending mask order."""
    return Ideal(
        ring.order,
        tuple(subset_generator(ring, mask) for mask in range(1, 1 << ring.n_events)),
    )
