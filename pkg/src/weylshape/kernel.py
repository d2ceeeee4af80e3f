"""Exact rational scalars and dense univariate polynomials over Q.

Scalars are :class:`fractions.Fraction`. Polynomials are immutable and store
their coefficients in increasing degree with trailing zeros trimmed, so the
zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence, Union

from .errors import NonDivisible, UndefinedGcd, ZeroPolynomial

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "UniPoly",
    "generalized_binomial",
    "falling_factorial",
    "squarefree_decomposition",
    "poly_kth_root",
    "poly_gcd",
]


def as_rational(value: Scalar | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@lru_cache(maxsize=None)
def falling_factorial(c: Fraction, k: int) -> Fraction:
    """c (c-1) ... (c-k+1); equals 1 for k = 0."""
    out = Fraction(1)
    for i in range(k):
        out *= c - i
    return out


def generalized_binomial(c: Scalar, k: int) -> Fraction:
    """Binomial coefficient ``binom(c, k)`` for rational ``c`` and integer ``k >= 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return falling_factorial(as_rational(c), k) / factorial(k)


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [as_rational(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class UniPoly:
    """Dense univariate polynomial with rational coefficients.

    ``UniPoly([1, 0, 3])`` is ``1 + 3x^2``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs: tuple[Fraction, ...] = _trim(coeffs)
        self._hash = None

    # construction helpers
    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "UniPoly":
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "UniPoly":
        out = cls.constant(1)
        for r in roots:
            out = out * cls((-as_rational(r), 1))
        return out

    # basic queries
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __call__(self, value: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def valuation(self) -> int:
        """Multiplicity of x as a factor; the zero polynomial has no valuation."""
        if not self.coeffs:
            raise ZeroPolynomial("valuation of the zero polynomial")
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise AssertionError("unreachable")

    # ring structure
    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other: "UniPoly | Scalar") -> "UniPoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: "UniPoly | Scalar") -> "UniPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "UniPoly":
        return _coerce(other) - self

    def __mul__(self, other: "UniPoly | Scalar") -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative exponent")
        result = UniPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, h: int) -> "UniPoly":
        """Multiply by ``x**h``."""
        if not self.coeffs:
            return self
        return UniPoly((0,) * h + self.coeffs)

    def scale(self, c: Scalar) -> "UniPoly":
        return self * as_rational(c)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            raise ZeroPolynomial("cannot normalise the zero polynomial")
        return self * (1 / self.lc)

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - dq - 1, -1, -1):
            coef = rem[i + dq] * inv
            quot[i] = coef
            if coef:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= coef * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else ())

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise NonDivisible(f"{other} does not divide {self}")
        return q

    def divides(self, other: "UniPoly") -> bool:
        if not self.coeffs:
            return not other.coeffs
        return not (other % self)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        return poly_gcd(self, other)

    def compress(self, r: int) -> "UniPoly | None":
        """Return ``g`` with ``self(x) == g(x**r)``, or None if no such g exists."""
        if any(c != 0 for i, c in enumerate(self.coeffs) if i % r):
            return None
        return UniPoly(self.coeffs[::r])

    def expand(self, r: int) -> "UniPoly":
        """Substitute ``x**r`` for ``x``."""
        out = [Fraction(0)] * (r * self.degree + 1 if self.coeffs else 0)
        for i, c in enumerate(self.coeffs):
            out[i * r] = c
        return UniPoly(out)

    def is_squarefree(self) -> bool:
        if not self.coeffs:
            return False
        return poly_gcd(self, self.derivative()).degree == 0

    # printing
    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"UniPoly({self.format()!r})"


def _coerce(value: "UniPoly | Scalar") -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly.constant(value)


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise UndefinedGcd("gcd(0, 0) is undefined")
    a, b = p, q
    while b:
        a, b = b, a % b
        if b:
            b = b.monic()
    return a.monic()


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm.

    Returns pairwise coprime, monic, squarefree ``s_i`` with multiplicities
    ``m_i`` such that ``p == p.lc * prod(s_i ** m_i)``. Constant factors are
    omitted, so a nonzero constant decomposes to ``[]``.
    """
    if p.is_zero():
        raise ZeroPolynomial("squarefree decomposition of zero")
    if p.degree == 0:
        return []
    f = p.monic()
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    out: list[tuple[UniPoly, int]] = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if d else b.monic()
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def poly_kth_root(p: UniPoly, k: int) -> UniPoly | None:
    """Monic ``g`` with ``g**k == p / p.lc``, or None when no such ``g`` exists.

    The coefficients of g are generated top-down by the power-series recursion
    for ``P(t)**(1/k)`` where ``P`` is the reversal of the monic ``p``; a monic
    root over an algebraic closure is forced to have these rational
    coefficients, so None means p is not a k-th power over any extension.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    if p.is_zero():
        raise ZeroPolynomial("k-th root of zero")
    n = p.degree
    if n % k:
        return None
    m = n // k
    monic = p.monic()
    rev = monic.coeffs[::-1]  # rev[0] == 1
    alpha = Fraction(1, k)
    g = [Fraction(1)]
    for t in range(1, m + 1):
        acc = Fraction(0)
        for j in range(1, min(t, n) + 1):
            acc += ((alpha + 1) * j - t) * rev[j] * g[t - j]
        g.append(acc / t)
    root = UniPoly(g[::-1])
    if root ** k != monic:
        return None
    return root


