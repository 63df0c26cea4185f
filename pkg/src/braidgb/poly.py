"""Sparse multivariate polynomials over Q(t) under lex orders, with parsing.

Monomials are exponent tuples aligned with a VariableOrder; position 0 is the
highest variable, so native tuple comparison is exactly the lex order.  The
variable t never appears as a ring variable (it lives in the coefficients)
and nu, when present, must sit at the top of the order.
"""

from __future__ import annotations

import math

from .coeff import (
    RF_ONE,
    RF_ZERO,
    IntLaurentPoly,
    RationalFunction,
    laurent_text,
    lp_divexact,
    lp_gcd,
    t_term_text,
)

Monomial = tuple[int, ...]


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ExactDivisionError("monomial does not divide")
    return out


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_is_one(a: Monomial) -> bool:
    return not any(a)


def lex_greater(a: Monomial, b: Monomial) -> bool:
    """True when a > b in the lex order (position 0 most significant)."""
    return a > b


class VariableOrder:
    """Ordered variable names; earlier names are higher in the lex order."""

    __slots__ = ("names", "_pos")

    def __init__(self, names) -> None:
        names = tuple(names)
        seen: set[str] = set()
        for n in names:
            if not isinstance(n, str) or not n.isidentifier():
                raise ValueError(f"bad variable name: {n!r}")
            if n == "t":
                raise ValueError("t is the coefficient variable, not a ring variable")
            if n in seen:
                raise ValueError(f"duplicate variable name: {n}")
            seen.add(n)
        if "nu" in seen and names[0] != "nu":
            raise ValueError("nu must be the highest variable when present")
        self.names = names
        self._pos = {n: i for i, n in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._pos

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VariableOrder) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VariableOrder({' > '.join(self.names)})"

    def index(self, name: str) -> int:
        try:
            return self._pos[name]
        except KeyError:
            raise ValueError(f"variable {name} is not in this ring") from None

    def with_nu(self) -> "VariableOrder":
        if "nu" in self._pos:
            raise ValueError("nu is already present")
        return VariableOrder(("nu",) + self.names)

    def without_nu(self) -> "VariableOrder":
        if not self.names or self.names[0] != "nu":
            raise ValueError("nu is not present")
        return VariableOrder(self.names[1:])

    def one_mono(self) -> Monomial:
        return (0,) * len(self.names)

    def variable(self, name: str) -> "Polynomial":
        mono = [0] * len(self.names)
        mono[self.index(name)] = 1
        return Polynomial._raw(self, ((tuple(mono), RF_ONE),))

    def constant(self, value) -> "Polynomial":
        c = _as_rf(value)
        if c.is_zero():
            return Polynomial._raw(self, ())
        return Polynomial._raw(self, ((self.one_mono(), c),))

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)


def _as_rf(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (int, IntLaurentPoly)):
        return RationalFunction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


class Polynomial:
    """Terms sorted strictly descending in lex order; zero coefficients dropped."""

    __slots__ = ("order", "terms", "_ff")

    def __init__(self, order: VariableOrder, terms=()) -> None:
        acc: dict[Monomial, RationalFunction] = {}
        width = len(order)
        for mono, coeff in terms:
            mono = tuple(mono)
            if len(mono) != width or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono} for {order!r}")
            c = acc.get(mono)
            c = _as_rf(coeff) if c is None else c + _as_rf(coeff)
            if c.is_zero():
                acc.pop(mono, None)
            else:
                acc[mono] = c
        self.order = order
        self.terms = tuple(sorted(acc.items(), reverse=True))
        self._ff = None

    @classmethod
    def _raw(cls, order: VariableOrder, terms) -> "Polynomial":
        p = object.__new__(cls)
        p.order = order
        p.terms = terms
        p._ff = None
        return p

    def is_zero(self) -> bool:
        return not self.terms

    def leading_term(self) -> tuple[Monomial, RationalFunction]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def leading_coeff(self) -> RationalFunction:
        return self.leading_term()[1]

    def trailing_term(self) -> tuple[Monomial, RationalFunction]:
        if len(self.terms) != 2:
            raise ValueError("trailing term is defined for binomials only")
        return self.terms[1]

    def _check_order(self, other: "Polynomial") -> None:
        if self.order != other.order:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, IntLaurentPoly, RationalFunction)):
            other = self.order.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_order(other)
        return Polynomial._raw(self.order, _merge(self.terms, other.terms, False))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, IntLaurentPoly, RationalFunction)):
            other = self.order.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_order(other)
        return Polynomial._raw(self.order, _merge(self.terms, other.terms, True))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.order, tuple((m, -c) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, (int, IntLaurentPoly, RationalFunction)):
            c = _as_rf(other)
            if c.is_zero():
                return Polynomial._raw(self.order, ())
            return Polynomial._raw(self.order, tuple((m, k * c) for m, k in self.terms))
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_order(other)
        if not self.terms or not other.terms:
            return Polynomial._raw(self.order, ())
        if len(other.terms) == 1:
            m, c = other.terms[0]
            return self.mul_term(m, c)
        if len(self.terms) == 1:
            m, c = self.terms[0]
            return other.mul_term(m, c)
        acc: dict[Monomial, RationalFunction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                c = c1 * c2
                s = acc.get(m)
                s = c if s is None else s + c
                if s.is_zero():
                    acc.pop(m, None)
                else:
                    acc[m] = s
        return Polynomial._raw(self.order, tuple(sorted(acc.items(), reverse=True)))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = self.order.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mul_term(self, mono: Monomial, coeff: RationalFunction) -> "Polynomial":
        if coeff.is_zero():
            return Polynomial._raw(self.order, ())
        if mono_is_one(mono) and coeff.is_one():
            return self
        return Polynomial._raw(
            self.order,
            tuple((mono_mul(m, mono), c * coeff) for m, c in self.terms),
        )

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc.is_one():
            return self
        inv = lc.inverse()
        return Polynomial._raw(self.order, tuple((m, c * inv) for m, c in self.terms))

    def map_to(self, new_order: VariableOrder, rename: dict[str, str] | None = None) -> "Polynomial":
        """Re-express in another ring, optionally renaming variables."""
        names = self.order.names
        out_terms = []
        width = len(new_order)
        for mono, coeff in self.terms:
            new = [0] * width
            for i, e in enumerate(mono):
                if e:
                    name = names[i]
                    if rename:
                        name = rename.get(name, name)
                    new[new_order.index(name)] += e
            out_terms.append((tuple(new), coeff))
        return Polynomial(new_order, out_terms)

    def substitute(self, name: str, replacement: "Polynomial") -> "Polynomial":
        """Replace a variable by a polynomial of the same ring."""
        self._check_order(replacement)
        idx = self.order.index(name)
        out = self.order.zero()
        plain = []
        for mono, coeff in self.terms:
            e = mono[idx]
            if not e:
                plain.append((mono, coeff))
                continue
            base = mono[:idx] + (0,) + mono[idx + 1:]
            out = out + (replacement ** e).mul_term(base, coeff)
        return out + Polynomial(self.order, plain)

    def coefficient_denominators_clear(self) -> bool:
        return all(c.denominator_is_one() for _, c in self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.order == other.order
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.order, self.terms))

    def __str__(self) -> str:
        return poly_text(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _merge(t1, t2, negate2: bool):
    """Merge two descending term tuples, adding coefficients on equal monomials."""
    out = []
    i = j = 0
    n1, n2 = len(t1), len(t2)
    while i < n1 and j < n2:
        m1, c1 = t1[i]
        m2, c2 = t2[j]
        if m1 > m2:
            out.append((m1, c1))
            i += 1
        elif m2 > m1:
            out.append((m2, -c2 if negate2 else c2))
            j += 1
        else:
            c = c1 - c2 if negate2 else c1 + c2
            if not c.is_zero():
                out.append((m1, c))
            i += 1
            j += 1
    if i < n1:
        out.extend(t1[i:])
    while j < n2:
        m2, c2 = t2[j]
        out.append((m2, -c2 if negate2 else c2))
        j += 1
    return tuple(out)


def _ilp_strip(terms):
    """Pull the common integer content and t-power out of ILP-coefficient
    terms, returning (stripped terms, extracted unit or None)."""
    if not terms:
        return terms, None
    s = min(c.min_exp() for _, c in terms)
    g = 0
    for _, c in terms:
        g = math.gcd(g, c.content())
        if g == 1:
            break
    if g == 1 and s == 0:
        return terms, None
    out = tuple(
        (m, IntLaurentPoly._raw(tuple((e - s, k // g) for e, k in c.terms)))
        for m, c in terms
    )
    return out, IntLaurentPoly.t_power(s, g)


def _cleared(p: Polynomial):
    """Rewrite p = u * (integer-coefficient terms) with u a nonzero constant:
    u collects the common denominator, integer content, and t-power.
    Cached on the polynomial, which never mutates."""
    if p._ff is not None:
        return p._ff
    d = None
    for _, c in p.terms:
        if not c.den.is_one():
            d = c.den if d is None else d * lp_divexact(c.den, lp_gcd(d, c.den))
    if d is None:
        terms = tuple((m, c.num) for m, c in p.terms)
    else:
        terms = tuple((m, c.num * lp_divexact(d, c.den)) for m, c in p.terms)
    terms, unit = _ilp_strip(terms)
    u = RationalFunction(1 if unit is None else unit, 1 if d is None else d)
    p._ff = (terms, u)
    return p._ff


def reduce(f: Polynomial, divisors) -> tuple[tuple[Polynomial, ...], Polynomial]:
    """Multivariate division: f = sum(q_i * divisors_i) + r.

    At each step the first divisor (in the given order) whose leading monomial
    divides the current leading monomial is used; no term of r is divisible by
    any divisor's leading monomial.  The loop runs fraction-free: coefficients
    stay integer Laurent polynomials and the scale lives in one running
    constant, so the returned quotients and remainder are still exact.
    """
    divisors = list(divisors)
    order = f.order
    hatted = []
    heads = []
    for g in divisors:
        if g.is_zero():
            raise ValueError("zero divisor in division")
        if g.order != order:
            raise ValueError("divisor lives in a different ring")
        terms, u = _cleared(g)
        hatted.append((terms, u))
        heads.append(terms[0])
    quots: list[list[tuple[Monomial, RationalFunction]]] = [[] for _ in divisors]
    rem: list[tuple[Monomial, RationalFunction]] = []
    work, sigma = _cleared(f)
    while work:
        lm, lw = work[0]
        for i, (dm, dl) in enumerate(heads):
            if mono_divides(dm, lm):
                q = mono_div(lm, dm)
                ghat, u_g = hatted[i]
                if len(dl.terms) == 1 and abs(dl.terms[0][1]) == 1:
                    # the lead of ghat is a unit: divide it into the
                    # subtracted term and leave the running scale alone
                    e, c0 = dl.terms[0]
                    lw_over = lw * IntLaurentPoly._raw(((-e, c0),))
                    quots[i].append((q, sigma * lw_over / u_g))
                    sub = tuple((mono_mul(m, q), c * lw_over) for m, c in ghat)
                    work, unit = _ilp_strip(_merge(work, sub, True))
                    if unit is not None:
                        sigma = sigma * unit
                else:
                    quots[i].append((q, sigma * RationalFunction(lw, dl) / u_g))
                    scaled = tuple((m, c * dl) for m, c in work)
                    sub = tuple((mono_mul(m, q), c * lw) for m, c in ghat)
                    work, unit = _ilp_strip(_merge(scaled, sub, True))
                    sigma = sigma * RationalFunction(1 if unit is None else unit, dl)
                break
        else:
            rem.append((lm, sigma * lw))
            work = work[1:]
    return (
        tuple(Polynomial(order, q) for q in quots),
        Polynomial(order, rem),
    )


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S(f, g) = (lcm/lt(f))*f - (lcm/lt(g))*g."""
    fm, fc = f.leading_term()
    gm, gc = g.leading_term()
    l = mono_lcm(fm, gm)
    return f.mul_term(mono_div(l, fm), fc.inverse()) - g.mul_term(mono_div(l, gm), gc.inverse())


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return f/g, raising ExactDivisionError if the division is not exact."""
    if g.is_zero():
        raise ExactDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    quots, rem = reduce(f, [g])
    if not rem.is_zero():
        raise ExactDivisionError(f"{g} does not exactly divide {f}")
    return quots[0]


# --- printing -------------------------------------------------------------


def _var_text(order: VariableOrder, mono: Monomial) -> str:
    parts = []
    for name, e in zip(order.names, mono):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _coeff_prefix(c: RationalFunction) -> tuple[str, bool]:
    """Text to put before '*vars' (empty for 1) and a sign-extracted flag."""
    if c.denominator_is_one():
        if c.is_one():
            return "", False
        if c.is_minus_one():
            return "", True
        if len(c.num.terms) == 1:
            e, k = c.num.terms[0]
            return t_term_text(e, abs(k)), k < 0
        return f"({laurent_text(c.num)})", False
    return f"({laurent_text(c.num)})/({laurent_text(c.den)})", False


def poly_text(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out: list[str] = []
    for mono, coeff in p.terms:
        if mono_is_one(mono):
            if coeff.denominator_is_one() and len(coeff.num.terms) == 1:
                e, k = coeff.num.terms[0]
                piece, neg = t_term_text(e, abs(k)), k < 0
            elif coeff.denominator_is_one():
                body = laurent_text(coeff.num)
                piece, neg = (body if not out else f"({body})"), False
            else:
                piece, neg = f"({laurent_text(coeff.num)})/({laurent_text(coeff.den)})", False
        else:
            prefix, neg = _coeff_prefix(coeff)
            vars_ = _var_text(p.order, mono)
            piece = f"{prefix}*{vars_}" if prefix else vars_
        if not out:
            out.append("-" + piece if neg else piece)
        else:
            out.append((" - " if neg else " + ") + piece)
    return "".join(out)


# --- parsing --------------------------------------------------------------


class ParseError(ValueError):
    """Polynomial text error, carrying 1-based line and column."""

    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


_OPS = set("+-*^()/")


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _OPS:
            tokens.append(("op", ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str, order: VariableOrder, synonyms=None) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0
        self.order = order
        self.synonyms = synonyms or {}

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        if tok[0] != "end":
            self.pos += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], tok[3])

    def expect_op(self, op: str):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            self.fail(f"expected {op!r}", tok)

    def parse_poly(self) -> Polynomial:
        terms = []
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        terms.append(self.parse_term(sign))
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                terms.append(self.parse_term(-1 if tok[1] == "-" else 1))
            else:
                break
        return Polynomial(self.order, terms)

    def parse_term(self, sign: int):
        coeff = RF_ONE if sign == 1 else -RF_ONE
        mono = [0] * len(self.order)
        while True:
            coeff = self.parse_factor(coeff, mono)
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                continue
            return tuple(mono), coeff

    def parse_factor(self, coeff, mono):
        tok = self.take()
        if tok[0] == "int":
            return coeff * int(tok[1])
        if tok[0] == "op" and tok[1] == "(":
            num = self.parse_laurent()
            self.expect_op(")")
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                self.expect_op("(")
                den = self.parse_laurent()
                self.expect_op(")")
                if den.is_zero():
                    self.fail("zero denominator", tok)
                return coeff * RationalFunction(num, den)
            return coeff * RationalFunction(num)
        if tok[0] == "ident":
            name = tok[1]
            if name == "t":
                return coeff * RationalFunction.from_t_power(self.parse_t_exponent())
            name = self.synonyms.get(name, name)
            if name not in self.order:
                self.fail(f"variable {name} is not in this ring", tok)
            exp = 1
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "^":
                self.take()
                etok = self.take()
                if etok[0] == "op" and etok[1] == "-":
                    self.fail("variable exponents must be nonnegative", etok)
                if etok[0] != "int":
                    self.fail("expected an exponent", etok)
                exp = int(etok[1])
            mono[self.order.index(name)] += exp
            return coeff
        self.fail("expected a number, coefficient, or variable", tok)

    def parse_t_exponent(self) -> int:
        tok = self.peek()
        if not (tok[0] == "op" and tok[1] == "^"):
            return 1
        self.take()
        sign = 1
        tok = self.take()
        if tok[0] == "op" and tok[1] == "-":
            sign = -1
            tok = self.take()
        if tok[0] != "int":
            self.fail("expected an integer exponent for t", tok)
        return sign * int(tok[1])

    def parse_laurent(self) -> IntLaurentPoly:
        acc = IntLaurentPoly(0)
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = acc + self.parse_laurent_term(sign)
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                acc = acc + self.parse_laurent_term(-1 if tok[1] == "-" else 1)
            else:
                return acc

    def parse_laurent_term(self, sign: int) -> IntLaurentPoly:
        tok = self.take()
        if tok[0] == "int":
            c = sign * int(tok[1])
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "*":
                self.take()
                ttok = self.take()
                if ttok[0] != "ident" or ttok[1] != "t":
                    self.fail("only t and integers may appear inside coefficient parentheses", ttok)
                return IntLaurentPoly.t_power(self.parse_t_exponent(), c)
            return IntLaurentPoly(c)
        if tok[0] == "ident" and tok[1] == "t":
            return IntLaurentPoly.t_power(self.parse_t_exponent(), sign)
        self.fail("only t and integers may appear inside coefficient parentheses", tok)


def parse_polynomial(text: str, order: VariableOrder, synonyms: dict[str, str] | None = None) -> Polynomial:
    """Parse polynomial text like '(t^2 - 1)*x1*x5 + x2*x4' in the given ring."""
    parser = _Parser(text, order, synonyms)
    result = parser.parse_poly()
    tok = parser.peek()
    if tok[0] != "end":
        parser.fail("unexpected trailing input", tok)
    return result
