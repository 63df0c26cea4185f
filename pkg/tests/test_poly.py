"""Tests for sparse lex polynomials, division, and the text grammar."""

import random

import pytest

from braidgb.coeff import IntLaurentPoly, RationalFunction
from braidgb.poly import (
    ExactDivisionError,
    ParseError,
    Polynomial,
    VariableOrder,
    exact_divide,
    lex_greater,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
    parse_polynomial,
    poly_text,
    reduce,
    s_polynomial,
)

t = RationalFunction.from_t_power
R = VariableOrder(["x1", "x2", "x4", "x5"])
x1, x2, x4, x5 = (R.variable(n) for n in ["x1", "x2", "x4", "x5"])


def rand_mono(rng, width, max_deg=4):
    mono = [0] * width
    for _ in range(rng.randint(0, max_deg)):
        mono[rng.randrange(width)] += 1
    return tuple(mono)


def rand_poly(rng, order, max_terms=4):
    pool = [RationalFunction(1), RationalFunction(-2), t(1), t(-1), t(2) - 1, t(1) + 1]
    terms = [(rand_mono(rng, len(order)), rng.choice(pool))
             for _ in range(rng.randint(0, max_terms))]
    return Polynomial(order, terms)


def test_monomial_helpers():
    a, b = (2, 0, 1, 0), (1, 1, 0, 0)
    assert mono_mul(a, b) == (3, 1, 1, 0)
    assert mono_lcm(a, b) == (2, 1, 1, 0)
    assert mono_gcd(a, b) == (1, 0, 0, 0)
    assert mono_divides(b, mono_lcm(a, b))
    assert not mono_divides(a, b)
    assert mono_div((3, 1, 1, 0), a) == (1, 1, 0, 0)
    with pytest.raises(ExactDivisionError):
        mono_div(b, a)


def test_lex_order_axioms():
    rng = random.Random(3)
    for _ in range(200):
        a, b, c = (rand_mono(rng, 4) for _ in range(3))
        # totality and antisymmetry
        assert (a == b) or lex_greater(a, b) or lex_greater(b, a)
        assert not (lex_greater(a, b) and lex_greater(b, a))
        # transitivity
        if lex_greater(a, b) and lex_greater(b, c):
            assert lex_greater(a, c)
        # multiplicative monotonicity and the well-order floor
        if lex_greater(a, b):
            assert lex_greater(mono_mul(a, c), mono_mul(b, c))
        if any(a):
            assert lex_greater(a, (0, 0, 0, 0))


def test_lex_examples():
    # leftmost variable dominates: x1 > x2^9, x2*x4 > x4^5
    assert lex_greater((1, 0, 0, 0), (0, 9, 0, 0))
    assert lex_greater((0, 1, 1, 0), (0, 0, 5, 0))
    assert poly_text(x1 + x2 ** 9) == "x1 + x2^9"


def test_variable_order_rules():
    with pytest.raises(ValueError):
        VariableOrder(["x1", "t"])
    with pytest.raises(ValueError):
        VariableOrder(["x1", "nu"])
    with pytest.raises(ValueError):
        VariableOrder(["x1", "x1"])
    with pytest.raises(ValueError):
        VariableOrder(["x 1"])
    up = R.with_nu()
    assert up.names[0] == "nu"
    assert up.without_nu() == R
    assert R.index("x4") == 2
    with pytest.raises(ValueError):
        R.index("x9")


def test_polynomial_construction():
    p = Polynomial(R, [((0, 1, 0, 0), t(0, 1)), ((1, 0, 0, 0), t(0, 2)),
                       ((0, 1, 0, 0), t(0, -1))])
    assert p == 2 * x1
    assert p.leading_monomial() == (1, 0, 0, 0)
    assert p.leading_coeff() == RationalFunction(2)
    assert (p - p).is_zero()
    with pytest.raises(ValueError):
        (p - p).leading_term()
    assert (x1 - x2).trailing_term() == ((0, 1, 0, 0), RationalFunction(-1))
    with pytest.raises(ValueError):
        (x1 + x2 + x4).trailing_term()


def test_arithmetic_matches_structure():
    rng = random.Random(7)
    for _ in range(150):
        f, g, h = (rand_poly(rng, R) for _ in range(3))
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) * h == f * h + g * h
        assert f * (g * h) == (f * g) * h
        assert (f - f).is_zero()
        for mono, coeff in (f * g).terms:
            assert not coeff.is_zero()
        terms = (f * g).terms
        for i in range(len(terms) - 1):
            assert lex_greater(terms[i][0], terms[i + 1][0])


def test_coefficient_mixing():
    p = x1 * t(1) + x2
    assert p * t(-1) == x1 + x2 * t(-1)
    assert (x1 + 1) * (x1 - 1) == x1 ** 2 - 1
    assert 3 * x1 == x1 + x1 + x1
    assert x1 * IntLaurentPoly({1: 1}) == x1 * t(1)


def test_monic():
    p = x1 * (t(1) + 1) + x2
    q = p.monic()
    assert q.leading_coeff().is_one()
    assert q == x1 + x2 * (1 / (t(1) + 1))
    assert p.monic() * (t(1) + 1) == p


def test_division_contract():
    rng = random.Random(13)
    for _ in range(150):
        f = rand_poly(rng, R)
        divisors = [g for g in (rand_poly(rng, R, 3) for _ in range(rng.randint(1, 3)))
                    if not g.is_zero()]
        if not divisors:
            continue
        qs, r = reduce(f, divisors)
        total = Polynomial(R)
        for q, g in zip(qs, divisors):
            total = total + q * g
        assert total + r == f
        # no remainder monomial is divisible by any leading monomial
        for mono, _ in r.terms:
            for g in divisors:
                assert not mono_divides(g.leading_monomial(), mono)


def test_division_example():
    qs, r = reduce(x1 ** 2, [x1 - x2])
    assert qs == (x1 + x2,)
    assert r == x2 ** 2
    qs, r = reduce(x1 * x2 + x2 ** 2, [x1 + x2, x2])
    assert qs[0] * (x1 + x2) + qs[1] * x2 + r == x1 * x2 + x2 ** 2


def test_division_first_match():
    # both divisors match x1*x2; the earlier one must be used
    f = x1 * x2
    qs, r = reduce(f, [x1 - x4, x2 - x5])
    assert qs == (x2, x4)
    assert r == x4 * x5


def test_reduce_rejects_bad_input():
    with pytest.raises(ValueError):
        reduce(x1, [Polynomial(R)])
    other = VariableOrder(["x1", "x2"])
    with pytest.raises(ValueError):
        reduce(x1, [other.variable("x1")])


def test_s_polynomial():
    f = x1 * x2 - x4
    g = x2 * x4 - x5
    assert s_polynomial(f, g) == x1 * x5 - x4 ** 2
    # matching leading terms cancel without multipliers
    assert s_polynomial(x1 - x2, x1 - x4) == -x2 + x4
    with pytest.raises(ValueError):
        s_polynomial(f, Polynomial(R))


def test_exact_divide():
    f = (x1 + x2) * (x4 - x5 * t(2))
    assert exact_divide(f, x1 + x2) == x4 - x5 * t(2)
    assert exact_divide(f, x4 - x5 * t(2)) == x1 + x2
    with pytest.raises(ExactDivisionError):
        exact_divide(f + 1, x1 + x2)
    with pytest.raises(ExactDivisionError):
        exact_divide(f, Polynomial(R))


def test_map_to_and_substitute():
    wider = VariableOrder(["x1", "x0", "x2", "x4", "x5"])
    p = x1 * x4 - x2
    q = p.map_to(wider)
    assert str(q) == "x1*x4 - x2"
    assert q.order == wider
    back = q.map_to(R)
    assert back == p
    with pytest.raises(ValueError):
        (wider.variable("x0")).map_to(R)
    s = (x1 * x2).substitute("x1", x4 * t(-2))
    assert s == x2 * x4 * t(-2)
    assert (x1 ** 2).substitute("x1", x2 + x5) == x2 ** 2 + 2 * x2 * x5 + x5 ** 2


def test_rename():
    twin = VariableOrder(["y1", "y2"])
    small = VariableOrder(["x1", "x2"])
    p = small.variable("x1") - small.variable("x2") * t(1)
    q = p.map_to(twin, rename={"x1": "y1", "x2": "y2"})
    assert str(q) == "y1 - t*y2"


def test_denominator_clear_flag():
    assert (x1 * t(-3) - x2).coefficient_denominators_clear()
    assert not (x1 * (1 / (t(1) + 1))).coefficient_denominators_clear()


@pytest.mark.parametrize("text", [
    "x1",
    "-x1",
    "x1 - x2",
    "x1*x4 - x3*x5",
    "t^2*x2 - x3",
    "x2 - t^-2*x3",
    "2*x1^3*x2 - 3*x4 + 1",
    "t*x1 + t^-1*x2",
    "x1 - 2*t^3",
    "x1^2 - x1*x2",
])
def test_round_trip_fixed(text):
    order = VariableOrder(["x1", "x2", "x3", "x4", "x5"])
    assert str(parse_polynomial(text, order)) == text


def test_round_trip_random():
    rng = random.Random(31)
    for _ in range(150):
        p = rand_poly(rng, R)
        assert parse_polynomial(str(p), R) == p


def test_parse_fraction_coefficients():
    p = parse_polynomial("(1)/(t + 1)*x1", R)
    assert p == x1 * (1 / (t(1) + 1))
    assert parse_polynomial(str(p), R) == p
    q = parse_polynomial("(t - 1)*x2 + (3)/(2)", R)
    assert q == x2 * (t(1) - 1) + RationalFunction(3, 2)


def test_parse_flexible_forms():
    assert parse_polynomial("+x1", R) == x1
    assert parse_polynomial("x1*t^2", R) == parse_polynomial("t^2*x1", R)
    assert parse_polynomial("x1*2*x2", R) == 2 * x1 * x2
    assert parse_polynomial("5", R) == R.constant(RationalFunction(5))
    assert parse_polynomial("x1 - 2*x2", R) == x1 - 2 * x2


@pytest.mark.parametrize("text,line,col", [
    ("x1 +* x2", 1, 5),
    ("x9", 1, 1),
    ("x1 + ", 1, 6),
    ("x1 x2", 1, 4),
    ("(t", 1, 3),
    ("x1^-2", 1, 4),
    ("", 1, 1),
    ("x1 +\n t^", 2, 4),
])
def test_parse_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as e:
        parse_polynomial(text, R)
    assert e.value.line == line
    assert e.value.col == col


def test_parse_synonyms():
    p = parse_polynomial("zt1 - zb1^2", R, synonyms={"zt1": "x1", "zb1": "x5"})
    assert p == x1 - x5 ** 2
    with pytest.raises(ParseError):
        parse_polynomial("zt9", R, synonyms={"zt1": "x1"})


def test_t_is_not_a_variable():
    # t only ever appears as a coefficient; t^x1 is nonsense
    with pytest.raises(ParseError):
        parse_polynomial("t^x1", R)
    p = parse_polynomial("t", R)
    assert p == R.constant(t(1))


def test_poly_text_coefficient_parens():
    p = x1 * (t(1) + 1)
    assert str(p) == "(t + 1)*x1"
    q = x1 * (1 / (t(1) - 1))
    assert str(q) == "(1)/(t - 1)*x1"
    assert str(-x1 * t(2)) == "-t^2*x1"
    assert str(R.constant(t(1) + 1)) == "t + 1"
    assert str(Polynomial(R)) == "0"
