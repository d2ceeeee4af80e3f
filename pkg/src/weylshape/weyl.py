"""Elements of the fractional-power Weyl algebras and their commutative shadows.

Both algebras share one storage layout: a map from support points
``(x_exponent, y_exponent)`` to nonzero rational coefficients, where the
x-exponent is a :class:`~fractions.Fraction` whose denominator divides the
element's level and the y-exponent is a nonnegative int. For a
:class:`WeylElement` the key ``(a, b)`` denotes the normal-ordered monomial
``X^a Y^b`` (all X's to the left), which is also the basis of the Laurent
algebra, so :func:`psi` is a plain copy.

Equality ignores the level: an element and its embedding into a larger level
compare equal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, lcm
from typing import Iterable, Iterator, Mapping, Union

from .errors import NotDivisible, ParseError
from .kernel import Scalar, as_rational, falling_factorial

Point = tuple[Fraction, int]
Terms = Mapping[Point, Fraction]

__all__ = [
    "Point",
    "WeylElement",
    "LaurentElement",
    "embed",
    "mul",
    "commutator",
    "psi",
    "parse",
    "parse_laurent",
    "format_element",
    "format_point",
    "parse_points",
]


def _level_of(terms: Iterable[Point]) -> int:
    level = 1
    for x, _ in terms:
        level = lcm(level, x.denominator)
    return level


class _Element:
    __slots__ = ("level", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple[Scalar, int], Scalar] | None = None, level: int | None = None):
        clean: dict[Point, Fraction] = {}
        for (x, y), c in (terms or {}).items():
            c = as_rational(c)
            if c == 0:
                continue
            if y < 0 or int(y) != y:
                raise ValueError(f"y-exponent must be a nonnegative integer, got {y}")
            key = (as_rational(x), int(y))
            clean[key] = clean.get(key, Fraction(0)) + c
            if clean[key] == 0:
                del clean[key]
        needed = _level_of(clean)
        if level is None:
            level = needed
        elif level <= 0 or level % needed:
            raise NotDivisible(f"level {level} cannot hold x-exponents with denominator dividing {needed}")
        self.level: int = level
        self.terms: dict[Point, Fraction] = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Point, Fraction], level: int):
        obj = cls.__new__(cls)
        obj.level = level
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def zero(cls, level: int = 1):
        return cls._raw({}, level)

    @classmethod
    def one(cls, level: int = 1):
        return cls._raw({(Fraction(0), 0): Fraction(1)}, level)

    @classmethod
    def monomial(cls, x: Scalar = 0, y: int = 0, coeff: Scalar = 1, level: int | None = None):
        return cls({(x, y): coeff}, level)

    @classmethod
    def constant(cls, c: Scalar, level: int = 1):
        return cls({(0, 0): c}, level)

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Point, Fraction]]:
        return iter(self.terms.items())

    def support(self) -> list[Point]:
        return sorted(self.terms)

    def coefficient(self, x: Scalar, y: int) -> Fraction:
        return self.terms.get((as_rational(x), y), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def with_level(self, level: int):
        return type(self)(self.terms, level)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, _Element):
            return type(self) is type(other) and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == type(self).constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self.terms.items())))
        return self._hash

    # linear structure
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self).constant(other, self.level)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return type(self)._raw(out, lcm(self.level, other.level))

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self.terms.items()}, self.level)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar):
        c = as_rational(c)
        if c == 0:
            return type(self).zero(self.level)
        return type(self)._raw({k: v * c for k, v in self.terms.items()}, self.level)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, type(self)):
            return self._product(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = type(self).one(self.level)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _product(self, other):
        raise NotImplementedError

    def format(self) -> str:
        return format_element(self)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.format()!r}, level={self.level})"


@lru_cache(maxsize=None)
def _ore_weights(b: int, c_num: int, c_den: int) -> tuple[tuple[int, Fraction], ...]:
    """Nonzero ``k! binom(b, k) binom(c, k)`` for k = 0..b, with c = c_num/c_den."""
    c = Fraction(c_num, c_den)
    out = []
    for k in range(b + 1):
        w = falling_factorial(Fraction(b), k) * falling_factorial(c, k) / factorial(k)
        if w == 0:
            break
        out.append((k, w))
    return tuple(out)


class WeylElement(_Element):
    """Normal-ordered element of the Weyl algebra with ``X^{1/level}`` adjoined.

    Negative x-exponents are allowed (the algebra contains ``X^{-1/l}``).
    """

    __slots__ = ()

    def _product(self, other: "WeylElement") -> "WeylElement":
        # (X^a Y^b)(X^c Y^d) = sum_k k! C(b,k) C(c,k) X^{a+c-k} Y^{b+d-k}
        L = lcm(self.level, other.level)
        left = [(int(x * L), y, c) for (x, y), c in self.terms.items()]
        right = [(int(x * L), y, c) for (x, y), c in other.terms.items()]
        acc: dict[tuple[int, int], Fraction] = {}
        for a, b, c1 in left:
            for cx, d, c2 in right:
                g = gcd(cx, L)
                weights = _ore_weights(b, cx // g, L // g)
                base = c1 * c2
                for k, w in weights:
                    key = (a + cx - k * L, b + d - k)
                    acc[key] = acc.get(key, 0) + base * w
        terms = {(Fraction(i, L), j): v for (i, j), v in acc.items() if v}
        return WeylElement._raw(terms, L)


class LaurentElement(_Element):
    """Element of the commutative algebra ``K[x^{1/l}, x^{-1/l}, y]``."""

    __slots__ = ()

    def _product(self, other: "LaurentElement") -> "LaurentElement":
        acc: dict[Point, Fraction] = {}
        for (a, b), c1 in self.terms.items():
            for (c, d), c2 in other.terms.items():
                key = (a + c, b + d)
                acc[key] = acc.get(key, 0) + c1 * c2
        terms = {k: v for k, v in acc.items() if v}
        return LaurentElement._raw(terms, lcm(self.level, other.level))


Element = Union[WeylElement, LaurentElement]


def embed(P: WeylElement, h: int) -> WeylElement:
    """View ``P`` inside the algebra of level ``h``; requires ``P.level | h``."""
    if h <= 0 or h % P.level:
        raise NotDivisible(f"level {P.level} does not divide {h}")
    return type(P)._raw(dict(P.terms), h)


def mul(P: WeylElement, Q: WeylElement) -> WeylElement:
    return P * Q


def commutator(P: WeylElement, Q: WeylElement) -> WeylElement:
    return P * Q - Q * P


def psi(P: WeylElement) -> LaurentElement:
    return LaurentElement._raw(dict(P.terms), P.level)


def psi_inverse(P: LaurentElement) -> WeylElement:
    return WeylElement._raw(dict(P.terms), P.level)


# ---------------------------------------------------------------------------
# text formats


def _format_exponent(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


def _format_monomial(x: Fraction, y: int, xv: str, yv: str) -> str:
    parts = []
    if x != 0:
        parts.append(xv if x == 1 else f"{xv}^{_format_exponent(x)}")
    if y != 0:
        parts.append(yv if y == 1 else f"{yv}^{y}")
    return "*".join(parts)


def format_element(P: _Element) -> str:
    """Render terms sorted by (x-exponent, y-exponent) descending.

    Weyl elements use ``X``/``Y``, Laurent elements ``x``/``y``.
    """
    if not P.terms:
        return "0"
    xv, yv = ("x", "y") if isinstance(P, LaurentElement) else ("X", "Y")
    chunks = []
    for (x, y) in sorted(P.terms, reverse=True):
        c = P.terms[(x, y)]
        mono = _format_monomial(x, y, xv, yv)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        chunks.append(("-" if c < 0 else "+", body))
    text = ("-" if chunks[0][0] == "-" else "") + chunks[0][1]
    for sign, body in chunks[1:]:
        text += f" {sign} {body}"
    return text


def format_point(p: tuple[Scalar, Scalar]) -> str:
    return f"({p[0]},{p[1]})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([XYxy])|([-+*/^()]))")


class _Parser:
    def __init__(self, text: str, variables: tuple[str, str]):
        self.text = text
        self.variables = variables
        self.tokens: list[tuple[int, str, str]] = []
        pos = 0
        n = len(text)
        while pos < n:
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError(_byte_offset(text, pos), f"unexpected character {text[pos]!r}")
            start = m.start(m.lastindex)
            if m.group(1) is not None:
                self.tokens.append((start, "int", m.group(1)))
            elif m.group(2) is not None:
                self.tokens.append((start, "var", m.group(2)))
            else:
                self.tokens.append((start, "op", m.group(3)))
            pos = m.end()
        self.i = 0
        self.level = 1

    def _offset(self) -> int:
        if self.i < len(self.tokens):
            return _byte_offset(self.text, self.tokens[self.i][0])
        return len(self.text.encode("utf-8"))

    def peek(self) -> tuple[str, str] | None:
        if self.i < len(self.tokens):
            return self.tokens[self.i][1:]
        return None

    def expect(self, kind: str, value: str | None = None) -> str:
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = "end of input" if tok is None else repr(tok[1])
            raise ParseError(self._offset(), f"expected {want}, got {got}")
        self.i += 1
        return tok[1]

    def accept(self, kind: str, value: str) -> bool:
        tok = self.peek()
        if tok == (kind, value):
            self.i += 1
            return True
        return False

    def signed_int(self) -> int:
        sign = -1 if self.accept("op", "-") else 1
        return sign * int(self.expect("int"))

    def positive_int(self) -> int:
        off = self._offset()
        v = int(self.expect("int"))
        if v == 0:
            raise ParseError(off, "denominator must be positive")
        return v

    def element(self) -> list[tuple[int, list]]:
        terms = []
        sign = 1
        if self.accept("op", "-"):
            sign = -1
        else:
            self.accept("op", "+")
        terms.append((sign, self.term()))
        while True:
            if self.accept("op", "+"):
                terms.append((1, self.term()))
            elif self.accept("op", "-"):
                terms.append((-1, self.term()))
            else:
                break
        if self.peek() is not None:
            raise ParseError(self._offset(), f"unexpected token {self.peek()[1]!r}")
        return terms

    def term(self) -> tuple[Fraction, list[tuple[str, Fraction]]]:
        coeff = Fraction(1)
        factors: list[tuple[str, Fraction]] = []
        tok = self.peek()
        if tok is not None and tok[0] == "int":
            num = int(self.expect("int"))
            den = 1
            if self.accept("op", "/"):
                den = self.positive_int()
            coeff = Fraction(num, den)
            if not self.accept("op", "*"):
                return coeff, factors
        factors.append(self.factor())
        while self.accept("op", "*"):
            factors.append(self.factor())
        return coeff, factors

    def factor(self) -> tuple[str, Fraction]:
        off = self._offset()
        name = self.expect("var")
        if name not in self.variables:
            raise ParseError(off, f"unknown variable {name!r}")
        exp = Fraction(1)
        if self.accept("op", "^"):
            if self.accept("op", "("):
                num = self.signed_int()
                self.expect("op", "/")
                den = self.positive_int()
                self.expect("op", ")")
                exp = Fraction(num, den)
            else:
                exp = Fraction(self.signed_int())
        if name == self.variables[1] and (exp.denominator != 1 or exp < 0):
            raise ParseError(off, f"{name} exponent must be a nonnegative integer")
        self.level = lcm(self.level, exp.denominator)
        return name, exp


def _byte_offset(text: str, char_index: int) -> int:
    return len(text[:char_index].encode("utf-8"))


def _build(parsed, variables, cls, level):
    xv, _ = variables
    total = cls.zero(level)
    for sign, (coeff, factors) in parsed:
        term = cls.constant(sign * coeff, level)
        for name, exp in factors:
            if name == xv:
                f = cls.monomial(exp, 0, 1, level)
            else:
                f = cls.monomial(0, int(exp), 1, level)
            term = term * f
        total = total + term
    return total


def parse(text: str) -> WeylElement:
    """Parse the element grammar; factors are multiplied in the written order.

    >>> str(parse("Y*X"))
    'X*Y + 1'
    """
    p = _Parser(text, ("X", "Y"))
    parsed = p.element()
    return _build(parsed, ("X", "Y"), WeylElement, p.level)


def parse_laurent(text: str) -> LaurentElement:
    p = _Parser(text, ("x", "y"))
    parsed = p.element()
    return _build(parsed, ("x", "y"), LaurentElement, p.level)


_POINT = re.compile(r"\(\s*(-?\d+(?:/\d+)?)\s*,\s*(-?\d+(?:/\d+)?)\s*\)")


def parse_points(text: str) -> list[tuple[Fraction, Fraction]]:
    """Parse a ``[(a,b), (c,d), ...]`` list as printed by the CLI."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError(0, "point list must be enclosed in brackets")
    inner = body[1:-1].strip()
    if not inner:
        return []
    out = []
    pos = 0
    while pos < len(inner):
        m = _POINT.match(inner, pos)
        if not m:
            raise ParseError(_byte_offset(text, text.index("[") + 1 + pos), "malformed point")
        out.append((Fraction(m.group(1)), Fraction(m.group(2))))
        pos = m.end()
        rest = inner[pos:].lstrip()
        if rest.startswith(","):
            pos = len(inner) - len(rest) + 1
            while pos < len(inner) and inner[pos].isspace():
                pos += 1
        elif rest:
            raise ParseError(pos, "expected ','")
        else:
            break
    return out
