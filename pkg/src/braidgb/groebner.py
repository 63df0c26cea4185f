"""Buchberger's algorithm, canonical reduced bases, and ideal operations.

The pair queue is strictly FIFO over an expanding basis: every inserted
element (initial generators included) enqueues its pairs against all earlier
elements, and S-polynomial remainders are computed by first-match division
against the basis in insertion order.  The optional coprime-leading-monomial
criterion is the only pair filter.  reduce_to_canonical turns any Groebner
basis into the unique monic auto-reduced basis sorted by descending leading
monomial, which is what all ideal-equality checks compare.
"""

from __future__ import annotations

from collections import deque

from .poly import (
    ExactDivisionError,
    Polynomial,
    VariableOrder,
    exact_divide,
    mono_divides,
    mono_gcd,
    mono_is_one,
    reduce,
    s_polynomial,
)


class Ideal:
    """A list of generators in a fixed ring; zero generators are dropped."""

    __slots__ = ("order", "generators")

    def __init__(self, order: VariableOrder, generators=()) -> None:
        gens = []
        for g in generators:
            if g.order != order:
                raise ValueError("generator lives in a different ring")
            if not g.is_zero():
                gens.append(g)
        self.order = order
        self.generators = tuple(gens)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Ideal)
            and self.order == other.order
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return hash((self.order, self.generators))

    def __repr__(self) -> str:
        return f"Ideal({', '.join(str(g) for g in self.generators)})"


class GroebnerBasis:
    """Basis elements in insertion order; reduced=True marks canonical form."""

    __slots__ = ("order", "elements", "reduced")

    def __init__(self, order: VariableOrder, elements, reduced: bool = False) -> None:
        self.order = order
        self.elements = tuple(elements)
        self.reduced = reduced

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroebnerBasis)
            and self.order == other.order
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.order, self.elements))

    def __repr__(self) -> str:
        flag = "reduced" if self.reduced else "raw"
        return f"GroebnerBasis[{flag}]({', '.join(str(g) for g in self.elements)})"


def _generators(source) -> tuple[VariableOrder, list[Polynomial]]:
    if isinstance(source, Ideal):
        return source.order, list(source.generators)
    if isinstance(source, GroebnerBasis):
        return source.order, list(source.elements)
    gens = [g for g in source if not g.is_zero()]
    if not gens:
        raise ValueError("cannot infer the ring of an empty generator list")
    order = gens[0].order
    for g in gens:
        if g.order != order:
            raise ValueError("generators live in different rings")
    return order, gens


def buchberger(source, use_coprime_criterion: bool = True) -> GroebnerBasis:
    """Complete a generating set to a Groebner basis (FIFO pair queue)."""
    if isinstance(source, (Ideal, GroebnerBasis)):
        order, gens = _generators(source)
    else:
        gens = [g for g in source]
        if gens:
            order = gens[0].order
            gens = [g for g in gens if not g.is_zero()]
        else:
            raise ValueError("cannot infer the ring of an empty generator list")
    basis: list[Polynomial] = []
    lms = []
    queue: deque[tuple[int, int]] = deque()

    def insert(p: Polynomial) -> None:
        basis.append(p)
        lms.append(p.leading_monomial())
        j = len(basis) - 1
        for i in range(j):
            queue.append((i, j))

    for g in gens:
        insert(g)
    while queue:
        i, j = queue.popleft()
        if use_coprime_criterion and mono_is_one(mono_gcd(lms[i], lms[j])):
            continue
        s = s_polynomial(basis[i], basis[j])
        if s.is_zero():
            continue
        _, r = reduce(s, basis)
        if not r.is_zero():
            insert(r)
    return GroebnerBasis(order, basis, reduced=False)


def reduce_to_canonical(gb: GroebnerBasis) -> GroebnerBasis:
    """Minimal, monic, auto-reduced basis sorted by descending leading monomial."""
    if gb.reduced:
        return gb
    elems = [e for e in gb.elements if not e.is_zero()]
    by_lm = sorted(range(len(elems)), key=lambda i: (elems[i].leading_monomial(), i))
    kept: list[Polynomial] = []
    kept_lms = []
    for i in by_lm:
        lm = elems[i].leading_monomial()
        if not any(mono_divides(k, lm) for k in kept_lms):
            kept.append(elems[i])
            kept_lms.append(lm)
    final: list[Polynomial] = []
    for g in kept:
        if final:
            _, g = reduce(g, final)
        final.append(g.monic())
    final.sort(key=lambda p: p.leading_monomial(), reverse=True)
    return GroebnerBasis(gb.order, final, reduced=True)


def canonical_basis(source, use_coprime_criterion: bool = True) -> GroebnerBasis:
    """Canonical reduced Groebner basis of an ideal (the equality certificate)."""
    if isinstance(source, Ideal) and not source.generators:
        return GroebnerBasis(source.order, (), reduced=True)
    return reduce_to_canonical(buchberger(source, use_coprime_criterion))


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Remainder of f on division by a (Groebner) basis."""
    elems = basis.elements if isinstance(basis, GroebnerBasis) else tuple(basis)
    if not elems:
        return f
    _, r = reduce(f, elems)
    return r


def ideal_contains(source, f: Polynomial) -> bool:
    """Membership via reduction to zero against a Groebner basis."""
    if f.is_zero():
        return True
    if isinstance(source, GroebnerBasis):
        gb = source
    else:
        order, gens = _generators(source)
        if not gens:
            return False
        gb = buchberger(Ideal(order, gens))
    return normal_form(f, gb).is_zero()


def ideal_equal(left, right) -> bool:
    """Compare ideals through their canonical reduced bases."""
    lgb = left if isinstance(left, GroebnerBasis) else canonical_basis(left)
    rgb = right if isinstance(right, GroebnerBasis) else canonical_basis(right)
    lgb = reduce_to_canonical(lgb)
    rgb = reduce_to_canonical(rgb)
    if lgb.order != rgb.order:
        raise ValueError("ideals live in different rings")
    return lgb.elements == rgb.elements


def intersect(left: Ideal, right: Ideal) -> Ideal:
    """I cap J by eliminating a dummy variable nu from nu*I + (nu-1)*J."""
    if left.order != right.order:
        raise ValueError("ideals live in different rings")
    order = left.order
    if not left.generators or not right.generators:
        return Ideal(order, ())
    upper = order.with_nu()
    nu = upper.variable("nu")
    nu_minus_1 = nu - 1
    gens = [nu * g.map_to(upper) for g in left.generators]
    gens += [nu_minus_1 * g.map_to(upper) for g in right.generators]
    gb = buchberger(gens)
    kept = [e for e in gb.elements if e.leading_monomial()[0] == 0]
    return Ideal(order, tuple(e.map_to(order) for e in kept))


def quotient(ideal: Ideal, f: Polynomial) -> Ideal:
    """Ideal quotient I : (f).  I : (0) is the unit ideal."""
    if f.order != ideal.order:
        raise ValueError("polynomial lives in a different ring")
    if f.is_zero():
        return Ideal(ideal.order, (ideal.order.one(),))
    if not ideal.generators:
        return Ideal(ideal.order, ())
    inter = intersect(ideal, Ideal(ideal.order, (f,)))
    return Ideal(ideal.order, tuple(exact_divide(g, f) for g in inter.generators))


def quotient_by_product(ideal: Ideal, factors) -> Ideal:
    """Iterated quotient: I : (f1*...*fk) computed one factor at a time."""
    out = ideal
    for f in factors:
        out = quotient(out, f)
    return out
