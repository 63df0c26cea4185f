"""Exact arithmetic over Q(t): integer Laurent polynomials and their quotients.

Coefficients for the polynomial engine.  An IntLaurentPoly is a finite sum
of integer multiples of integer powers of t.  A RationalFunction is a
quotient num/den normalized so that equality is structural equality:

  * den lies in Z[t] with nonzero constant term (t-power shifts live in num),
  * the shifted numerator and den have no common factor in Z[t],
  * the integer contents of num and den are coprime,
  * the leading coefficient of den is positive,
  * zero is stored as 0/1.
"""

from __future__ import annotations

from math import gcd as _int_gcd


class IntLaurentPoly:
    """Finite Z-linear combination of integer powers of t."""

    __slots__ = ("terms",)

    def __init__(self, coeffs: dict[int, int] | int = 0) -> None:
        if isinstance(coeffs, int):
            coeffs = {0: coeffs} if coeffs else {}
        self.terms = tuple(sorted((e, c) for e, c in coeffs.items() if c))

    @classmethod
    def _raw(cls, terms: tuple[tuple[int, int], ...]) -> "IntLaurentPoly":
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def t_power(cls, exp: int, coeff: int = 1) -> "IntLaurentPoly":
        return cls._raw(((exp, coeff),) if coeff else ())

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == ((0, 1),)

    def min_exp(self) -> int:
        return self.terms[0][0]

    def max_exp(self) -> int:
        return self.terms[-1][0]

    def leading_int(self) -> int:
        """Coefficient of the highest power of t."""
        return self.terms[-1][1]

    def shifted(self, k: int) -> "IntLaurentPoly":
        if k == 0 or not self.terms:
            return self
        return IntLaurentPoly._raw(tuple((e + k, c) for e, c in self.terms))

    def content(self) -> int:
        g = 0
        for _, c in self.terms:
            g = _int_gcd(g, c)
            if g == 1:
                break
        return g

    def __neg__(self) -> "IntLaurentPoly":
        return IntLaurentPoly._raw(tuple((e, -c) for e, c in self.terms))

    def __add__(self, other) -> "IntLaurentPoly":
        if isinstance(other, int):
            other = IntLaurentPoly(other)
        elif not isinstance(other, IntLaurentPoly):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        acc = dict(self.terms)
        for e, c in other.terms:
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return IntLaurentPoly._raw(tuple(sorted(acc.items())))

    def __sub__(self, other) -> "IntLaurentPoly":
        if isinstance(other, int):
            other = IntLaurentPoly(other)
        elif not isinstance(other, IntLaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "IntLaurentPoly":
        if isinstance(other, int):
            other = IntLaurentPoly(other)
        elif not isinstance(other, IntLaurentPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return _LP_ZERO
        if len(self.terms) == 1:
            (e, c), = self.terms
            return IntLaurentPoly._raw(tuple((e + f, c * d) for f, d in other.terms))
        if len(other.terms) == 1:
            (e, c), = other.terms
            return IntLaurentPoly._raw(tuple((e + f, c * d) for f, d in self.terms))
        acc: dict[int, int] = {}
        for e, c in self.terms:
            for f, d in other.terms:
                k = e + f
                s = acc.get(k, 0) + c * d
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
        return IntLaurentPoly._raw(tuple(sorted(acc.items())))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntLaurentPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == IntLaurentPoly(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        return laurent_text(self)

    def __repr__(self) -> str:
        return f"IntLaurentPoly({dict(self.terms)!r})"


_LP_ZERO = IntLaurentPoly._raw(())
_LP_ONE = IntLaurentPoly._raw(((0, 1),))


def t_term_text(exp: int, coeff: int) -> str:
    """Render coeff*t^exp with coeff > 0, omitting redundant factors."""
    if exp == 0:
        return str(coeff)
    t = "t" if exp == 1 else f"t^{exp}"
    return t if coeff == 1 else f"{coeff}*{t}"


def laurent_text(p: IntLaurentPoly) -> str:
    """Render a Laurent polynomial with descending powers of t."""
    if not p.terms:
        return "0"
    out: list[str] = []
    for e, c in sorted(p.terms, reverse=True):
        piece = t_term_text(e, abs(c))
        if not out:
            out.append("-" + piece if c < 0 else piece)
        else:
            out.append((" - " if c < 0 else " + ") + piece)
    return "".join(out)


def _dense(p: IntLaurentPoly) -> list[int]:
    out = [0] * (p.max_exp() + 1)
    for e, c in p.terms:
        out[e] = c
    return out


def _from_dense(a: list[int], shift: int) -> IntLaurentPoly:
    return IntLaurentPoly._raw(tuple((i + shift, c) for i, c in enumerate(a) if c))


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = _int_gcd(g, c)
    return g


def _primitive(a: list[int]) -> list[int]:
    c = _content(a)
    if c > 1:
        return [x // c for x in a]
    return a[:]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    a = a[:]
    db = len(b) - 1
    lb = b[-1]
    while a and len(a) - 1 >= db:
        la = a[-1]
        a = [c * lb for c in a]
        k = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[k + i] -= la * bi
        _trim(a)
    return a


def _dense_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[t] with positive leading coefficient."""
    a, b = _primitive(a), _primitive(b)
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r)
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _dense_divexact(a: list[int], b: list[int]) -> list[int]:
    a = a[:]
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db) if len(a) > db else []
    while a and len(a) - 1 >= db:
        la = a[-1]
        if la % lb:
            raise ValueError("inexact polynomial division")
        c = la // lb
        k = len(a) - 1 - db
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] -= c * bi
        _trim(a)
    if a:
        raise ValueError("inexact polynomial division")
    return q


def lp_gcd(a: IntLaurentPoly, b: IntLaurentPoly) -> IntLaurentPoly:
    """Primitive gcd of two nonzero Laurent polynomials, up to t-power units:
    the result has a positive leading integer and no negative exponents."""
    da = _dense(a.shifted(-a.min_exp()))
    db = _dense(b.shifted(-b.min_exp()))
    return _from_dense(_dense_gcd(da, db), 0)


def lp_divexact(a: IntLaurentPoly, b: IntLaurentPoly) -> IntLaurentPoly:
    """Exact quotient a / b of Laurent polynomials (t-power shifts allowed)."""
    if a.is_zero():
        return a
    sa, sb = a.min_exp(), b.min_exp()
    q = _dense_divexact(_dense(a.shifted(-sa)), _dense(b.shifted(-sb)))
    return _from_dense(q, sa - sb)


def _canonical(num: IntLaurentPoly, den: IntLaurentPoly) -> tuple[IntLaurentPoly, IntLaurentPoly]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator in Q(t)")
    if num.is_zero():
        return _LP_ZERO, _LP_ONE
    shift = den.min_exp()
    if shift:
        den = den.shifted(-shift)
        num = num.shifted(-shift)
    if den.is_one():
        return num, den
    if den.terms == ((0, -1),):
        return -num, _LP_ONE
    nshift = num.min_exp()
    nd = _dense(num.shifted(-nshift))
    dd = _dense(den)
    g = _dense_gcd(nd, dd)
    if len(g) > 1:
        nd = _dense_divexact(nd, g)
        dd = _dense_divexact(dd, g)
    c = _int_gcd(_content(nd), _content(dd))
    if dd[-1] < 0:
        c = -c
    if c != 1:
        nd = [x // c for x in nd]
        dd = [x // c for x in dd]
    return _from_dense(nd, nshift), _from_dense(dd, 0)


class RationalFunction:
    """Element of Q(t) kept in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntLaurentPoly | int, den: IntLaurentPoly | int | None = None) -> None:
        if isinstance(num, int):
            num = IntLaurentPoly(num)
        if den is None:
            den = _LP_ONE
        elif isinstance(den, int):
            den = IntLaurentPoly(den)
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _raw(cls, num: IntLaurentPoly, den: IntLaurentPoly) -> "RationalFunction":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def from_t_power(cls, exp: int, coeff: int = 1) -> "RationalFunction":
        if coeff == 0:
            return RF_ZERO
        return cls._raw(IntLaurentPoly.t_power(exp, coeff), _LP_ONE)

    def is_zero(self) -> bool:
        return not self.num.terms

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_minus_one(self) -> bool:
        return self.num.terms == ((0, -1),) and self.den.is_one()

    def denominator_is_one(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> IntLaurentPoly:
        if not self.den.is_one():
            raise ValueError("not a Laurent polynomial (nontrivial denominator)")
        return self.num

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other: object) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            s = self.num + other.num
            if self.den.is_one():
                return RationalFunction._raw(s, _LP_ONE) if s.terms else RF_ZERO
            return RationalFunction(s, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: object) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            p = self.num * other.num
            return RationalFunction._raw(p, _LP_ONE) if p.terms else RF_ZERO
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(t)")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: object) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        out = RF_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num.terms == other.num.terms and self.den.terms == other.den.terms

    def __hash__(self) -> int:
        return hash((self.num.terms, self.den.terms))

    def __str__(self) -> str:
        if self.den.is_one():
            return laurent_text(self.num)
        return f"({laurent_text(self.num)})/({laurent_text(self.den)})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def _coerce(x: object):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, int):
        if x == 0:
            return RF_ZERO
        if x == 1:
            return RF_ONE
        return RationalFunction._raw(IntLaurentPoly(x), _LP_ONE)
    if isinstance(x, IntLaurentPoly):
        return RationalFunction._raw(x, _LP_ONE) if x.terms else RF_ZERO
    return NotImplemented


RF_ZERO = RationalFunction._raw(_LP_ZERO, _LP_ONE)
RF_ONE = RationalFunction._raw(_LP_ONE, _LP_ONE)
