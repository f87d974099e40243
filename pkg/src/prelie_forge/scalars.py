"""Exact coefficient field: rationals extended by named parameters.

A Scalar is an unreduced fraction num/den of integer-coefficient sparse
polynomials in the declared parameters.  Equality and zero testing use
cross-multiplication (a/b = c/d iff a*d - c*b is the zero polynomial), so
no gcd machinery is ever required for correctness.  Values are immutable
and all operations are pure.
"""

import re
from fractions import Fraction

from ._kernel import tm_add, tm_mul, tm_neg, tm_scale, tm_sub
from .errors import DivisionByZeroError, EvalDenZeroError, ParseError, UnknownParamError

_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


class ParamRing:
    """Ordered list of distinct parameter names; fixes the monomial order."""

    __slots__ = ("params", "_index")

    def __init__(self, params=()):
        params = tuple(params)
        seen = set()
        for name in params:
            if not _NAME_RE.match(name):
                raise UnknownParamError(f"invalid parameter name {name!r}")
            if name in seen:
                raise UnknownParamError(f"duplicate parameter name {name!r}")
            seen.add(name)
        self.params = params
        self._index = {name: i for i, name in enumerate(params)}

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownParamError(f"undeclared parameter {name!r}") from None

    def __eq__(self, other):
        return isinstance(other, ParamRing) and self.params == other.params

    def __hash__(self):
        return hash(self.params)

    def __repr__(self):
        return f"ParamRing({list(self.params)!r})"

    # convenience constructors
    def zero(self):
        return Scalar(Poly.const(self, 0), Poly.const(self, 1))

    def one(self):
        return Scalar(Poly.const(self, 1), Poly.const(self, 1))

    def const(self, value):
        value = Fraction(value)
        return Scalar(
            Poly.const(self, value.numerator), Poly.const(self, value.denominator)
        )

    def param(self, name):
        return Scalar(Poly.var(self, name), Poly.const(self, 1))

    def parse(self, text):
        return parse_scalar(text, self)


EMPTY_RING = ParamRing(())


class Poly:
    """Sparse polynomial: exponent tuple -> non-zero integer coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    @classmethod
    def const(cls, ring, k):
        if k == 0:
            return cls(ring, {})
        return cls(ring, {(0,) * len(ring.params): int(k)})

    @classmethod
    def var(cls, ring, name):
        mono = [0] * len(ring.params)
        mono[ring.index(name)] = 1
        return cls(ring, {tuple(mono): 1})

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * len(self.ring.params): 1}

    def __add__(self, other):
        return Poly(self.ring, tm_add(self.terms, other.terms))

    def __sub__(self, other):
        return Poly(self.ring, tm_sub(self.terms, other.terms))

    def __neg__(self):
        return Poly(self.ring, tm_neg(self.terms))

    def __mul__(self, other):
        return Poly(self.ring, tm_mul(self.terms, other.terms))

    def scale(self, k):
        return Poly(self.ring, tm_scale(self.terms, int(k)))

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None

    def params_used(self):
        used = set()
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e:
                    used.add(self.ring.params[i])
        return used

    def max_exp(self, vi):
        return max((mono[vi] for mono in self.terms), default=0)

    def subst_var(self, vi, p, q):
        """Return (q**d * self with parameter vi set to p/q, d).

        d is the highest power of the parameter, so the result stays over
        the integers.
        """
        d = self.max_exp(vi)
        if d == 0:
            return self, 0
        out = {}
        for mono, coeff in self.terms.items():
            e = mono[vi]
            new = list(mono)
            new[vi] = 0
            new = tuple(new)
            c = out.get(new, 0) + coeff * p**e * q ** (d - e)
            if c:
                out[new] = c
            elif new in out:
                del out[new]
        return Poly(self.ring, out), d

    def eval_fraction(self, values):
        """Evaluate at a full point; values is a list of Fractions per param."""
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = Fraction(coeff)
            for i, e in enumerate(mono):
                if e:
                    term *= values[i] ** e
            total += term
        return total

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            coeff = self.terms[mono]
            factors = []
            for i, e in enumerate(mono):
                if e == 1:
                    factors.append(self.ring.params[i])
                elif e > 1:
                    factors.append(f"{self.ring.params[i]}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(("-" if coeff < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({self.render()})"


class Scalar:
    """Element of the fraction field; den is never the zero polynomial."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if den.is_zero():
            raise DivisionByZeroError("denominator is identically zero")
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    @classmethod
    def coerce(cls, value, ring):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return ring.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Scalar")

    def _binary(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._binary(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.terms == d.terms:
            return Scalar(a + c, b)
        if b.is_one():
            return Scalar(a * d + c, d)
        if d.is_one():
            return Scalar(a + c * b, b)
        return Scalar(a * d + c * b, b * d)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._binary(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._binary(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return Scalar(-self.num, self.den)

    def __mul__(self, other):
        other = self._binary(other)
        if other is None:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num * other.num, self.den)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._binary(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise DivisionByZeroError("division by an identically-zero Scalar")
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._binary(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = self._binary(other)
        if other is None:
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None

    def params_used(self):
        return self.num.params_used() | self.den.params_used()

    def bind(self, bindings):
        """Substitute a subset of the parameters by rational values."""
        num, den = self.num, self.den
        ring = self.ring
        for name, value in bindings.items():
            vi = ring.index(name)
            value = Fraction(value)
            p, q = value.numerator, value.denominator
            num, dn = num.subst_var(vi, p, q)
            den, dd = den.subst_var(vi, p, q)
            num = num.scale(q**dd)
            den = den.scale(q**dn)
        if den.is_zero():
            raise EvalDenZeroError("denominator vanishes at the binding")
        return Scalar(num, den)

    def substitute(self, bindings):
        """Full evaluation: bindings must cover every occurring parameter."""
        missing = self.params_used() - set(bindings)
        if missing:
            raise UnknownParamError(
                f"bindings do not cover parameters {sorted(missing)}"
            )
        return self.bind(bindings)

    def to_fraction(self):
        used = self.params_used()
        if used:
            raise UnknownParamError(
                f"Scalar still depends on parameters {sorted(used)}"
            )
        zeros = [Fraction(0)] * len(self.ring.params)
        return self.num.eval_fraction(zeros) / self.den.eval_fraction(zeros)

    def render(self):
        num_str = self.num.render()
        if self.den.is_one():
            return num_str
        if len(self.num.terms) > 1 or num_str.startswith("-"):
            num_str = f"({num_str})"
        den_str = self.den.render()
        if not _atomic_for_division(self.den):
            den_str = f"({den_str})"
        return f"{num_str}/{den_str}"

    def __repr__(self):
        return f"Scalar({self.render()})"


def _atomic_for_division(poly):
    """True when the rendered poly may follow '/' without parentheses."""
    if len(poly.terms) != 1:
        return False
    ((mono, coeff),) = poly.terms.items()
    if coeff < 0:
        return False
    nvars = sum(1 for e in mono if e)
    if nvars == 0:
        return True  # bare positive integer
    return nvars == 1 and coeff == 1  # single power of one parameter


def is_zero(a):
    return a.is_zero()


def substitute(a, bindings):
    return a.substitute(bindings)


def render(a):
    return a.render()


# ---------------------------------------------------------------------------
# expression mini-parser
#
# expr   := term (('+'|'-') term)*
# term   := factor (('*'|'/') factor)*
# factor := '-' factor | power
# power  := atom ('^' INT)*
# atom   := INT | NAME | '(' expr ')'
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[at]!r}", at)
        if m.group("int") is not None:
            tokens.append(("int", m.group("int"), m.start("int")))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected):
        kind, value, offset = self.peek()
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(
            f"expected {' or '.join(expected)}, found {what}", offset, expected
        )

    def parse(self):
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(("operator", "end of input"))
        return value

    def expr(self):
        value = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.advance()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.advance()[1]
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self):
        if self.peek()[:2] == ("op", "-"):
            self.advance()
            return -self.factor()
        return self.power()

    def power(self):
        value = self.atom()
        while self.peek()[:2] == ("op", "^"):
            self.advance()
            kind, text, _ = self.peek()
            if kind != "int":
                self.fail(("non-negative integer exponent",))
            self.advance()
            value = value ** int(text)
        return value

    def atom(self):
        kind, text, offset = self.peek()
        if kind == "int":
            self.advance()
            return self.ring.const(int(text))
        if kind == "name":
            self.advance()
            return self.ring.param(text)
        if (kind, text) == ("op", "("):
            self.advance()
            value = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail(("')'",))
            self.advance()
            return value
        self.fail(("integer", "parameter", "'('", "'-'"))


def parse_scalar(text, ring):
    """Parse an expression under the grammar; total over the grammar."""
    return _Parser(text, ring).parse()
