"""Elementary automorphisms of the Weyl algebras and leading-term transport checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Union

from .errors import DirectionMismatch, UnsupportedElement
from .geometry import MAX_DIRECTION, Direction, dir_less, leading, v_deg
from .kernel import Scalar, as_rational
from .weyl import LaurentElement, WeylElement, _Element

__all__ = [
    "ShiftY",
    "ShiftYPoly",
    "ShiftXPoly",
    "Rotation",
    "Automorphism",
    "apply",
    "apply_L",
    "inverse",
    "shift_for",
    "verify_leading_transport",
]


@dataclass(frozen=True)
class ShiftY:
    """``X^{1/l} -> X^{1/l}``, ``Y -> Y + lam X^exponent``."""

    lam: Fraction
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", as_rational(self.lam))
        object.__setattr__(self, "exponent", as_rational(self.exponent))


@dataclass(frozen=True)
class ShiftYPoly:
    """``X -> X``, ``Y -> Y + sign lam X^n`` on the level-1 algebra."""

    lam: Fraction
    n: int
    sign: int = -1

    def __post_init__(self):
        object.__setattr__(self, "lam", as_rational(self.lam))
        if self.n < 1 or self.sign not in (1, -1):
            raise ValueError("need n >= 1 and sign in {1, -1}")


@dataclass(frozen=True)
class ShiftXPoly:
    """``X -> X + sign lam Y^n``, ``Y -> Y`` on the level-1 algebra."""

    lam: Fraction
    n: int
    sign: int = -1

    def __post_init__(self):
        object.__setattr__(self, "lam", as_rational(self.lam))
        if self.n < 1 or self.sign not in (1, -1):
            raise ValueError("need n >= 1 and sign in {1, -1}")


@dataclass(frozen=True)
class Rotation:
    """``(X, Y) -> (Y, -X)`` applied ``turns`` times."""

    turns: int = 1

    def __post_init__(self):
        object.__setattr__(self, "turns", self.turns % 4)


Automorphism = Union[ShiftY, ShiftYPoly, ShiftXPoly, Rotation]


def shift_for(d: Direction, lam: Scalar) -> ShiftY:
    """The shift ``Y -> Y + lam X^{sigma/rho}`` attached to a direction with rho > 0."""
    if d.rho <= 0:
        raise DirectionMismatch(f"{d} has no attached shift")
    return ShiftY(as_rational(lam), Fraction(d.sigma, d.rho))


def inverse(a: Automorphism) -> Automorphism:
    if isinstance(a, ShiftY):
        return ShiftY(-a.lam, a.exponent)
    if isinstance(a, (ShiftYPoly, ShiftXPoly)):
        return type(a)(-a.lam, a.n, a.sign)
    return Rotation(4 - a.turns)


def _require_integral(P: _Element, what: str) -> None:
    for x, _ in P.terms:
        if x.denominator != 1 or x < 0:
            raise UnsupportedElement(f"{what} needs nonnegative integer x-exponents")


def _images(a: Automorphism, cls, level: int):
    """Images of ``X^(1/level)`` (or X) and of Y, plus the unit exponent they refer to."""
    mono = cls.monomial
    if isinstance(a, ShiftY):
        return mono(Fraction(1, level), 0, 1, level), mono(0, 1, 1, level) + mono(a.exponent, 0, a.lam, level)
    if isinstance(a, ShiftYPoly):
        return mono(1, 0), mono(0, 1) + mono(a.n, 0, a.sign * a.lam)
    if isinstance(a, ShiftXPoly):
        return mono(1, 0) + mono(0, a.n, a.sign * a.lam), mono(0, 1)
    x_img, y_img = mono(1, 0), mono(0, 1)
    for _ in range(a.turns):
        x_img, y_img = y_img, -x_img
    return x_img, y_img


def _substitute(P: _Element, a: Automorphism, cls) -> _Element:
    if isinstance(a, ShiftY):
        level = lcm(P.level, a.exponent.denominator)
        x_img, y_img = _images(a, cls, level)
        # X^{1/level} is fixed, so only powers of the Y image are needed
        y_pows = [cls.one(level)]
        out = cls.zero(level)
        for (x, y), c in P.terms.items():
            while len(y_pows) <= y:
                y_pows.append(y_pows[-1] * y_img)
            out = out + cls.monomial(x, 0, c, level) * y_pows[y]
        return out
    _require_integral(P, type(a).__name__)
    x_img, y_img = _images(a, cls, 1)
    x_pows = [cls.one()]
    y_pows = [cls.one()]
    out = cls.zero()
    for (x, y), c in P.terms.items():
        x = int(x)
        while len(x_pows) <= x:
            x_pows.append(x_pows[-1] * x_img)
        while len(y_pows) <= y:
            y_pows.append(y_pows[-1] * y_img)
        out = out + (x_pows[x] * y_pows[y]).scale(c)
    return out


def apply(a: Automorphism, P: WeylElement) -> WeylElement:
    """Image of ``P``; products are renormalised with the Weyl multiplication."""
    return _substitute(P, a, WeylElement)


def apply_L(a: Automorphism, P: LaurentElement) -> LaurentElement:
    """The induced commutative substitution."""
    return _substitute(P, a, LaurentElement)


def _probe_directions(d: Direction, extra: Iterable[Direction] = ()) -> list[Direction]:
    probes = set(extra)
    for rho in range(-5, 6):
        for sigma in range(-5, 6):
            try:
                probes.add(Direction(rho, sigma))
            except ValueError:
                pass
    return sorted(p for p in probes if dir_less(d, p) and dir_less(p, MAX_DIRECTION))


def verify_leading_transport(
    a: ShiftY, P: WeylElement, d: Direction, probes: Iterable[Direction] | None = None
) -> bool:
    """Check leading-term transport at ``d`` and leading-term invariance above ``d``.

    ``a`` must be the shift attached to ``d``. Directions strictly between
    ``d`` and ``(-1,1)`` are sampled from ``probes`` (default: every direction
    with entries bounded by 5).
    """
    if not isinstance(a, ShiftY) or d.rho <= 0 or not d.strict or a.exponent != Fraction(d.sigma, d.rho):
        raise DirectionMismatch(f"automorphism {a} does not match direction {d}")
    if not P.terms:
        return True
    image = apply(a, P)
    if v_deg(image, d) != v_deg(P, d):
        return False
    if leading(image, d) != apply_L(a, leading(P, d)):
        return False
    above = _probe_directions(d) if probes is None else [p for p in probes if dir_less(d, p) and dir_less(p, MAX_DIRECTION)]
    return all(leading(image, d1) == leading(P, d1) for d1 in above)
