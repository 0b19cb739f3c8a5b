"""Exact arithmetic in the field Q(q) of rational functions in one parameter.

Elements are stored as reduced fractions of integer Laurent polynomials.
The denominator is always an honest polynomial in q with nonzero constant
term and positive leading coefficient; any power of q is pushed into the
numerator.  With that normalisation two equal scalars have identical
representations, so ``==`` and ``hash`` are structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .errors import DenominatorVanishes, ParseError

__all__ = ["LaurentPoly", "QScalar", "q", "ONE", "ZERO", "as_pure_q_power", "specialize", "parse_scalar"]


# -- dense integer polynomials, ascending coefficient lists ------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _content(a):
    c = 0
    for x in a:
        c = gcd(c, x)
        if c == 1:
            break
    return c


def _primitive(a):
    c = _content(a)
    if c in (0, 1):
        return list(a)
    return [x // c for x in a]


def _prem(a, b):
    # pseudo-remainder, rescaling by lc(b) at every step
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, bi in enumerate(b):
            r[i + shift] -= lr * bi
        _trim(r)
    return r


def poly_gcd(a, b):
    """Gcd in Z[q] of two ascending coefficient lists (positive leading coefficient)."""
    a = _trim(list(a))
    b = _trim(list(b))
    if not a:
        g = b
    elif not b:
        g = a
    else:
        c = gcd(_content(a), _content(b))
        a, b = _primitive(a), _primitive(b)
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _prem(a, b)
            a, b = b, _primitive(r)
        g = [c * x for x in _primitive(a)]
    if g and g[-1] < 0:
        g = [-x for x in g]
    return g


def _divexact(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    out = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        c //= lb
        out[k - db] = c
        for i, bi in enumerate(b):
            a[k - db + i] -= c * bi
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return out


# -- Laurent polynomials -------------------------------------------------------

class LaurentPoly:
    """Integer Laurent polynomial ``q^low * (c0 + c1 q + ...)``.

    ``coeffs`` has nonzero first and last entries; zero is ``(0, ())``.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, low=0, coeffs=()):
        coeffs = list(coeffs)
        _trim(coeffs)
        k = 0
        while k < len(coeffs) and coeffs[k] == 0:
            k += 1
        if k == len(coeffs):
            self.low, self.coeffs = 0, ()
        else:
            self.low, self.coeffs = low + k, tuple(coeffs[k:])
        self._hash = None

    @classmethod
    def from_dict(cls, terms):
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, hi + 1)])

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls(exp, [coeff])

    def terms(self):
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def high(self):
        return self.low + len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(0, [other])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.low, self.coeffs))
        return self._hash

    def __neg__(self):
        return LaurentPoly(self.low, [-c for c in self.coeffs])

    def __add__(self, other):
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly(lo, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            return LaurentPoly(self.low + other.low, [a[0] * y for y in b])
        if len(b) == 1:
            return LaurentPoly(self.low + other.low, [x * b[0] for x in a])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return LaurentPoly(self.low + other.low, out)

    def evaluate(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        if self.low:
            acc = acc * Fraction(t) ** self.low
        return acc

    def to_str(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            e = self.low + i
            if e == 0:
                body, coef = str(abs(c)), ""
            else:
                body = "q" if e == 1 else f"q^{e}"
                coef = "" if abs(c) == 1 else f"{abs(c)}*"
            term = coef + body
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append((" - " if c < 0 else " + ") + term)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.to_str()!r})"


_LP_ONE = LaurentPoly(0, [1])
_LP_ZERO = LaurentPoly()


# -- field elements ------------------------------------------------------------

def _normalize(num, den):
    if not den.coeffs:
        raise ZeroDivisionError("zero denominator")
    if not num.coeffs:
        return _LP_ZERO, _LP_ONE
    shift = num.low - den.low
    n, d = list(num.coeffs), list(den.coeffs)
    if len(d) > 1 or abs(d[0]) != 1:
        g = poly_gcd(n, d)
        if len(g) > 1 or g[0] != 1:
            n, d = _divexact(n, g), _divexact(d, g)
    if d[-1] < 0:
        n, d = [-x for x in n], [-x for x in d]
    return LaurentPoly(shift, n), LaurentPoly(0, d)


class QScalar:
    """Immutable element of Q(q)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        n1, d1 = _as_pair(num)
        n2, d2 = _as_pair(den)
        num, den = n1 * d2, d1 * n2
        if den == _LP_ONE:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def q_power(cls, e, sign=1):
        return cls._raw(LaurentPoly(e, [sign]), _LP_ONE)

    # -- predicates --
    def is_zero(self):
        return not self.num.coeffs

    def __bool__(self):
        return bool(self.num.coeffs)

    def is_polynomial(self):
        return self.den == _LP_ONE

    # -- arithmetic --
    def __neg__(self):
        return QScalar._raw(-self.num, self.den)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == _LP_ONE and other.den == _LP_ONE:
            return QScalar._raw(self.num + other.num, _LP_ONE)
        if self.den == other.den:
            return QScalar(self.num + other.num, self.den)
        return QScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == _LP_ONE and other.den == _LP_ONE:
            return QScalar._raw(self.num * other.num, _LP_ONE)
        return QScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.coeffs:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        if len(self.num.coeffs) == 1 and self.den == _LP_ONE and abs(self.num.coeffs[0]) == 1:
            return QScalar._raw(LaurentPoly(-self.num.low, self.num.coeffs), _LP_ONE)
        return QScalar(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        result, e = ONE, abs(e)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            if self.den == _LP_ONE and len(self.num.coeffs) == 1 and self.num.low == 0:
                self._hash = hash(self.num.coeffs[0])
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    # -- evaluation & inspection --
    def specialize(self, t):
        return specialize(self, t)

    def as_pure_q_power(self):
        return as_pure_q_power(self)

    def __str__(self):
        if self.den == _LP_ONE:
            return self.num.to_str()
        return f"({self.num.to_str()})/({self.den.to_str()})"

    def __repr__(self):
        return f"QScalar({str(self)!r})"


def _as_pair(x):
    if isinstance(x, LaurentPoly):
        return x, _LP_ONE
    if isinstance(x, int):
        return LaurentPoly(0, [int(x)]), _LP_ONE
    if isinstance(x, Fraction):
        return LaurentPoly(0, [x.numerator]), LaurentPoly(0, [x.denominator])
    if isinstance(x, QScalar):
        return x.num, x.den
    raise TypeError(f"cannot build a scalar from {type(x).__name__}")


def _coerce(x):
    if isinstance(x, QScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return QScalar(x)
    return NotImplemented


ZERO = QScalar(0)
ONE = QScalar(1)
q = QScalar.q_power(1)


def as_pure_q_power(x):
    """Return ``(sign, e)`` when ``x == sign * q**e`` exactly, else ``None``."""
    x = _coerce(x)
    if x.den != _LP_ONE or len(x.num.coeffs) != 1:
        return None
    c = x.num.coeffs[0]
    if c not in (1, -1):
        return None
    return c, x.num.low


def specialize(x, t):
    """Exact value of ``x`` at ``q = t`` for a nonzero rational ``t``."""
    t = Fraction(t)
    if t == 0:
        raise DenominatorVanishes("specialisation point must be nonzero")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    d = x.den.evaluate(t)
    if d == 0:
        raise DenominatorVanishes(f"denominator {x.den.to_str()} vanishes at q={t}")
    return Fraction(x.num.evaluate(t)) / d


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text):
    out = []
    pos = 0
    text = text.replace("−", "-")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        pos = m.end()
        if m.group(1) is not None:
            out.append(("int", int(m.group(1))))
        elif m.group(2) is not None and not m.group(2).isspace():
            ch = m.group(2)
            if ch not in "q^+-*/()":
                raise ParseError(f"unexpected character {ch!r} in {text!r}")
            out.append((ch, ch))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise ParseError(f"unexpected end of input in {self.text!r}")
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError("empty scalar expression")
        val = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                if rhs.is_zero():
                    raise ParseError(f"division by zero in {self.text!r}")
                val = val / rhs
        return val

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            if self.peek() == "(":
                self.take()
                if self.peek() == "-":
                    self.take()
                    sign = -sign
                e = self.take("int")[1]
                self.take(")")
            else:
                e = self.take("int")[1]
            if base.is_zero() and sign < 0:
                raise ParseError(f"negative power of zero in {self.text!r}")
            return base ** (sign * e)
        return base

    def atom(self):
        kind = self.peek()
        if kind == "int":
            return QScalar(self.take()[1])
        if kind == "q":
            self.take()
            return q
        if kind == "(":
            self.take()
            val = self.expr()
            self.take(")")
            return val
        raise ParseError(f"unexpected token {kind!r} in {self.text!r}")


def parse_scalar(text):
    """Parse the canonical textual form (and the obvious infix grammar) into a QScalar."""
    if isinstance(text, QScalar):
        return text
    if isinstance(text, (int, Fraction)):
        return QScalar(text)
    return _Parser(str(text)).parse()
