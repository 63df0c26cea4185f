"""End-to-end checks: closure steps as ideal quotients, the full closure
chain against the quadratic ideal, Q = N on open graphs, nonzerodivisor
tests, and the worked three-strand example with its frozen intermediate
bases.  Also hosts the built-in corpus of small graphs that the sweep
drivers and the acceptance tests share."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product

from .braid import (
    PRESETS,
    BraidGraphSpec,
    EdgeRing,
    build_edge_ring,
    close_strand,
    framing_preset,
    nonlocal_ideal,
    quadratic_ideal,
)
from .coeff import RationalFunction
from .groebner import (
    GroebnerBasis,
    Ideal,
    canonical_basis,
    ideal_equal,
    quotient,
    quotient_by_product,
    reduce_to_canonical,
)
from .poly import ExactDivisionError, Polynomial, VariableOrder


@dataclass
class VerificationReport:
    claim: str
    passed: bool
    checks: int
    failures: list[str] = field(default_factory=list)
    details: list[str] = field(default_factory=list)
    parameters: dict = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "passed": self.passed,
            "checks": self.checks,
            "failures": list(self.failures),
            "details": list(self.details),
            "parameters": dict(self.parameters),
            "elapsed_seconds": self.elapsed_seconds,
        }

    def summary(self) -> list[str]:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"{status} {self.claim}: {self.checks} check(s), "
            f"{len(self.failures)} failure(s), {self.elapsed_seconds:.2f}s"
        ]
        lines.extend(f"  {d}" for d in self.details)
        lines.extend(f"  failed: {f}" for f in self.failures[:20])
        if len(self.failures) > 20:
            lines.append(f"  ... and {len(self.failures) - 20} more")
        return lines


REPORT_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": [
        "claim", "passed", "checks", "failures",
        "details", "parameters", "elapsed_seconds",
    ],
    "properties": {
        "claim": {"type": "string"},
        "passed": {"type": "boolean"},
        "checks": {"type": "integer", "minimum": 0},
        "failures": {"type": "array", "items": {"type": "string"}},
        "details": {"type": "array", "items": {"type": "string"}},
        "parameters": {"type": "object"},
        "elapsed_seconds": {"type": "number", "minimum": 0},
    },
}


def _ring_at(spec: BraidGraphSpec, level: int) -> EdgeRing:
    if level < spec.closed or level > spec.strands - 1:
        raise ValueError(f"closure level {level} unreachable from closed={spec.closed}")
    ring = build_edge_ring(spec)
    while ring.closed < level:
        ring = close_strand(ring).after
    return ring


def theorem_step_holds(spec: BraidGraphSpec, k: int) -> tuple[bool, str]:
    """Does closing strand k+1 turn the pushed-forward subset ideal into the
    next level's subset ideal by quotienting out the closure variable?"""
    ring = _ring_at(spec, k)
    n_k = nonlocal_ideal(ring)
    cl = close_strand(ring)
    projected = cl.project_ideal(n_k)
    z = cl.after.var(cl.kept_label)
    try:
        lhs = quotient(projected, z)
    except ExactDivisionError as e:
        return False, f"division defect: {e}"
    rhs = nonlocal_ideal(cl.after)
    if ideal_equal(lhs, rhs):
        return True, ""
    return False, "quotient differs from the closed graph's subset ideal"


def verify_theorem_step(spec: BraidGraphSpec, k: int) -> VerificationReport:
    t0 = time.perf_counter()
    if not spec.closed <= k <= spec.strands - 2:
        raise ValueError(f"step k must be in {spec.closed}..{spec.strands - 2}")
    ok, why = theorem_step_holds(spec, k)
    ring = _ring_at(spec, k + 1)
    details = [f"closure level {k} -> {k + 1}"]
    details += [f"basis: {g}" for g in canonical_basis(nonlocal_ideal(ring)).elements]
    return VerificationReport(
        claim="theorem",
        passed=ok,
        checks=1,
        failures=[] if ok else [f"{spec.to_json_dict()} at k={k}: {why}"],
        details=details,
        parameters={"spec": spec.to_json_dict(), "k": k},
        elapsed_seconds=time.perf_counter() - t0,
    )


def corollary_holds(spec: BraidGraphSpec) -> tuple[bool, str]:
    """Does quotienting the pushed-forward quadratic ideal by the product of
    all closure variables give the fully closed graph's subset ideal?"""
    ring = build_edge_ring(spec)
    idl = quadratic_ideal(ring)
    kept: list[str] = []
    while ring.closed < ring.strands - 1:
        cl = close_strand(ring)
        idl = cl.project_ideal(idl)
        kept.append(cl.kept_label)
        ring = cl.after
    try:
        lhs = quotient_by_product(idl, [ring.var(lbl) for lbl in kept])
    except ExactDivisionError as e:
        return False, f"division defect: {e}"
    rhs = nonlocal_ideal(ring)
    if ideal_equal(lhs, rhs):
        return True, ""
    return False, "iterated quotient differs from the closed graph's subset ideal"


def verify_corollary(spec: BraidGraphSpec) -> VerificationReport:
    t0 = time.perf_counter()
    ok, why = corollary_holds(spec)
    return VerificationReport(
        claim="corollary",
        passed=ok,
        checks=1,
        failures=[] if ok else [f"{spec.to_json_dict()}: {why}"],
        parameters={"spec": spec.to_json_dict()},
        elapsed_seconds=time.perf_counter() - t0,
    )


def open_qn_holds(spec: BraidGraphSpec) -> bool:
    """On a fully open graph the quadratic ideal equals the subset ideal."""
    if spec.closed != 0:
        raise ValueError("the Q = N comparison applies to fully open graphs")
    ring = build_edge_ring(spec)
    return ideal_equal(quadratic_ideal(ring), nonlocal_ideal(ring))


def verify_open_qn(spec: BraidGraphSpec) -> VerificationReport:
    t0 = time.perf_counter()
    ok = open_qn_holds(spec)
    return VerificationReport(
        claim="open-qn",
        passed=ok,
        checks=1,
        failures=[] if ok else [f"{spec.to_json_dict()}: Q != N"],
        parameters={"spec": spec.to_json_dict()},
        elapsed_seconds=time.perf_counter() - t0,
    )


def is_nonzerodivisor(ideal: Ideal, f: Polynomial) -> bool:
    """Multiplication by f is injective on the quotient ring iff I : (f) = I.
    The zero polynomial gives I : (0) = (1), so it only passes on the unit
    ideal, matching the kernel of the zero map."""
    return ideal_equal(quotient(ideal, f), ideal)


def verify_nonzerodivisor(ideal: Ideal, f: Polynomial) -> VerificationReport:
    t0 = time.perf_counter()
    ok = is_nonzerodivisor(ideal, f)
    return VerificationReport(
        claim="nzd",
        passed=ok,
        checks=1,
        failures=[] if ok else [f"{f} is a zerodivisor on the quotient"],
        parameters={"poly": str(f)},
        elapsed_seconds=time.perf_counter() - t0,
    )


def _nzd_expectations(l: int, m: int, k: int) -> list[tuple[str, bool, bool]]:
    """The three small closed-graph checks for one framing triple:
    (name, actual, expected)."""
    t = RationalFunction.from_t_power
    out = []

    spec_a = BraidGraphSpec(2, (1,), 1, {"x0": l})
    ring_a = build_edge_ring(spec_a)
    f_a = (ring_a.order.constant(t(-l)) - 1) * (ring_a.var("x2") - ring_a.var("x0"))
    out.append((f"A(l={l})", is_nonzerodivisor(nonlocal_ideal(ring_a), f_a), l != 0))

    spec_b = BraidGraphSpec(3, (2, 1), 2, {"x0": m, "x2": k, "x3": l})
    ring_b = build_edge_ring(spec_b)
    n_b = nonlocal_ideal(ring_b)
    f_b = (ring_b.order.constant(t(m)) - 1) * (ring_b.var("x0") * t(-m) - ring_b.var("x1"))
    out.append((f"B(l={l},m={m},k={k})", is_nonzerodivisor(n_b, f_b), m != 0))

    f_c = (ring_b.order.constant(t(k + l + m)) - 1) * (ring_b.var("x1") * t(-k) - ring_b.var("x3"))
    out.append((f"C(l={l},m={m},k={k})", is_nonzerodivisor(n_b, f_c), k + l + m != 0))
    return out


def verify_nonzerodivisor_matrix() -> VerificationReport:
    """Sweep framings (l, m, k) over [-3, 3]^3: each candidate multiplier must
    be a nonzerodivisor exactly when its twist exponent is nonzero."""
    t0 = time.perf_counter()
    checks = 0
    failures = []
    for l in range(-3, 4):
        for m in range(-3, 4):
            for k in range(-3, 4):
                for name, actual, expected in _nzd_expectations(l, m, k):
                    checks += 1
                    if actual != expected:
                        failures.append(f"{name}: got {actual}, expected {expected}")
    return VerificationReport(
        claim="nzd",
        passed=not failures,
        checks=checks,
        failures=failures,
        details=["343 framing triples, 3 checks each"],
        parameters={"range": [-3, 3]},
        elapsed_seconds=time.perf_counter() - t0,
    )


# --- the worked three-strand example ----------------------------------------


GOLDEN_SPEC = BraidGraphSpec(3, (2, 1), 1)

_GOLDEN_WORKING_BASIS = (
    "nu*x1 - x1",
    "nu*x1 - nu*x2",
    "nu*x2*x4 - nu*x1*x5",
    "nu*x1*x4 - nu*x1*x5",
    "nu*x2 - x1",
    "nu*x2*x4 - x1*x5",
    "x1^2 - x1*x2",
    "x1*x2*x4 - x1^2*x5",
    "x1*x4 - x1*x5",
)

_GOLDEN_CANONICAL = ("nu*x1 - x1", "nu*x2 - x1", "x1^2 - x1*x2", "x1*x4 - x1*x5")
_GOLDEN_ELIMINATED = ("x1^2 - x1*x2", "x1*x4 - x1*x5")
_GOLDEN_QUOTIENT = ("x1 - x2", "x4 - x5")


def golden_example() -> VerificationReport:
    """Close the innermost strand of the two-event three-strand graph and
    check the working basis, the eliminated ideal, and the final quotient
    against their frozen values."""
    from .groebner import buchberger, intersect
    from .poly import parse_polynomial

    t0 = time.perf_counter()
    failures: list[str] = []
    details: list[str] = []

    ring1 = build_edge_ring(GOLDEN_SPEC)
    n1 = nonlocal_ideal(ring1)
    cl = close_strand(ring1)
    ring2 = cl.after
    projected = cl.project_ideal(n1)

    upper = ring2.order.with_nu()
    nu = upper.variable("nu")
    x1 = ring2.var("x1")
    working = [nu * g.map_to(upper) for g in projected.generators]
    working.append(nu * x1.map_to(upper) - x1.map_to(upper))
    got = reduce_to_canonical(buchberger(working))
    reference = reduce_to_canonical(
        GroebnerBasis(upper, [parse_polynomial(s, upper) for s in _GOLDEN_WORKING_BASIS])
    )
    frozen = tuple(parse_polynomial(s, upper) for s in _GOLDEN_CANONICAL)
    if got.elements != reference.elements or got.elements != frozen:
        failures.append("working-basis canonical form differs from its frozen value")
    details.append("working basis: " + "; ".join(str(g) for g in got.elements))

    eliminated = intersect(projected, Ideal(ring2.order, (x1,)))
    got_elim = canonical_basis(eliminated)
    frozen_elim = tuple(parse_polynomial(s, ring2.order) for s in _GOLDEN_ELIMINATED)
    n2 = nonlocal_ideal(ring2)
    n2_canon = canonical_basis(n2)
    scaled = tuple((x1 * b).monic() for b in n2_canon.elements)
    if got_elim.elements != frozen_elim or got_elim.elements != scaled:
        failures.append("eliminated ideal differs from x1 times the closed-level basis")
    details.append("eliminated: " + "; ".join(str(g) for g in got_elim.elements))

    quot = quotient(projected, x1)
    got_quot = canonical_basis(quot)
    frozen_quot = tuple(parse_polynomial(s, ring2.order) for s in _GOLDEN_QUOTIENT)
    if got_quot.elements != frozen_quot or got_quot.elements != n2_canon.elements:
        failures.append("final quotient differs from the closed graph's subset ideal")
    details.append("quotient: " + "; ".join(str(g) for g in got_quot.elements))

    return VerificationReport(
        claim="golden",
        passed=not failures,
        checks=3,
        failures=failures,
        details=details,
        parameters={"spec": GOLDEN_SPEC.to_json_dict()},
        elapsed_seconds=time.perf_counter() - t0,
    )


# --- corpus and sweep drivers ------------------------------------------------


RANDOM_FRAMINGS_PER_SHAPE = 20
FRAMING_BOUND = 2


def corpus_shapes() -> list[tuple[int, tuple[int, ...]]]:
    """All 2- and 3-strand braid-form shapes with at most four events."""
    shapes: list[tuple[int, tuple[int, ...]]] = []
    for b in (2, 3):
        positions = tuple(range(1, b))
        for length in range(5):
            for events in product(positions, repeat=length):
                shapes.append((b, events))
    return shapes


def corpus_specs(seed: int = 0) -> list[BraidGraphSpec]:
    """Open (closed=0) specs: every shape with each preset plus seeded random
    framings, deterministic for a given seed."""
    out: list[BraidGraphSpec] = []
    for idx, (b, events) in enumerate(corpus_shapes()):
        base = BraidGraphSpec(b, events)
        for name in PRESETS:
            out.append(framing_preset(base, name))
        rng = random.Random(1_000_003 * seed + idx)
        n_edges = b + 2 * len(events)
        for _ in range(RANDOM_FRAMINGS_PER_SHAPE):
            framings = {
                f"x{i}": rng.randint(-FRAMING_BOUND, FRAMING_BOUND)
                for i in range(n_edges)
            }
            out.append(BraidGraphSpec(b, events, 0, framings))
    return out


def verify_theorem_sweep(seed: int = 0) -> VerificationReport:
    t0 = time.perf_counter()
    checks = 0
    failures = []
    for spec in corpus_specs(seed):
        for k in range(spec.closed, spec.strands - 1):
            checks += 1
            ok, why = theorem_step_holds(spec, k)
            if not ok:
                failures.append(f"{spec.to_json_dict()} at k={k}: {why}")
    return VerificationReport(
        claim="theorem",
        passed=not failures,
        checks=checks,
        failures=failures,
        details=[f"{len(corpus_specs(seed))} corpus specs, every closure level"],
        parameters={"seed": seed, "corpus": True},
        elapsed_seconds=time.perf_counter() - t0,
    )


def verify_corollary_sweep(seed: int = 0) -> VerificationReport:
    t0 = time.perf_counter()
    checks = 0
    failures = []
    for spec in corpus_specs(seed):
        checks += 1
        ok, why = corollary_holds(spec)
        if not ok:
            failures.append(f"{spec.to_json_dict()}: {why}")
    return VerificationReport(
        claim="corollary",
        passed=not failures,
        checks=checks,
        failures=failures,
        parameters={"seed": seed, "corpus": True},
        elapsed_seconds=time.perf_counter() - t0,
    )


def verify_open_qn_sweep(seed: int = 0) -> VerificationReport:
    t0 = time.perf_counter()
    checks = 0
    failures = []
    for spec in corpus_specs(seed):
        checks += 1
        if not open_qn_holds(spec):
            failures.append(f"{spec.to_json_dict()}: Q != N")
    return VerificationReport(
        claim="open-qn",
        passed=not failures,
        checks=checks,
        failures=failures,
        parameters={"seed": seed, "corpus": True},
        elapsed_seconds=time.perf_counter() - t0,
    )


# --- randomized inputs shared by the test batteries --------------------------


def coefficient_pool() -> list[RationalFunction]:
    t = RationalFunction.from_t_power
    return [
        RationalFunction(1), RationalFunction(-1),
        RationalFunction(2), RationalFunction(-2), RationalFunction(3),
        t(1), t(-1), t(2), t(1, -1),
        t(1) + 1, t(2) - 1,
    ]


def random_monomial(rng: random.Random, width: int, max_degree: int = 3):
    mono = [0] * width
    for _ in range(rng.randint(0, max_degree)):
        mono[rng.randrange(width)] += 1
    return tuple(mono)


def random_polynomial(rng: random.Random, order: VariableOrder,
                      max_terms: int = 3, max_degree: int = 3) -> Polynomial:
    pool = coefficient_pool()
    terms = [
        (random_monomial(rng, len(order), max_degree), rng.choice(pool))
        for _ in range(rng.randint(1, max_terms))
    ]
    return Polynomial(order, terms)


def random_ideal(rng: random.Random, order: VariableOrder,
                 max_gens: int = 3, max_terms: int = 3, max_degree: int = 3) -> Ideal:
    gens = []
    while not gens:
        gens = [
            p for p in (
                random_polynomial(rng, order, max_terms, max_degree)
                for _ in range(rng.randint(1, max_gens))
            )
            if not p.is_zero()
        ]
    return Ideal(order, gens)
