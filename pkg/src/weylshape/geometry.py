"""Directions, degree functionals, leading terms and the Newton-polygon edges of a support."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DiagonalPoint, ForbiddenDirection, InvalidDirection, PreconditionViolated, ZeroElement
from .kernel import Scalar
from .weyl import LaurentElement, Point, WeylElement, _Element

__all__ = [
    "Direction",
    "NEG_INF",
    "MIN_DIRECTION",
    "MAX_DIRECTION",
    "cross",
    "dir_less",
    "v_point",
    "v_deg",
    "leading",
    "w_corner",
    "wbar_corner",
    "st",
    "en",
    "dir_of",
    "directions",
    "directions_bruteforce",
    "directions_closure",
    "succ",
    "pred",
    "is_subrectangular",
    "subrectangular_vertex",
    "divisibility_filter",
    "hull_edges",
]


class _NegInfinity:
    """Degree of the zero element; compares below every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-inf")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self

    def __repr__(self):
        return "NEG_INF"

    __str__ = lambda self: "-inf"  # noqa: E731


NEG_INF = _NegInfinity()


@total_ordering
@dataclass(frozen=True)
class Direction:
    """Coprime pair ``(rho, sigma)`` with ``rho + sigma >= 0``.

    Ordered counterclockwise from ``(1,-1)`` (the minimum) to ``(-1,1)``.
    """

    rho: int
    sigma: int

    def __post_init__(self):
        if gcd(self.rho, self.sigma) != 1:
            raise InvalidDirection(f"({self.rho},{self.sigma}) is not a coprime pair")
        if self.rho + self.sigma < 0:
            raise InvalidDirection(f"({self.rho},{self.sigma}) has rho + sigma < 0")

    @classmethod
    def normalized(cls, a: Scalar, b: Scalar) -> "Direction":
        """Primitive integer direction positively proportional to ``(a, b)``."""
        a, b = Fraction(a), Fraction(b)
        if a == 0 and b == 0:
            raise InvalidDirection("zero vector has no direction")
        m = lcm(a.denominator, b.denominator)
        ia, ib = int(a * m), int(b * m)
        g = gcd(ia, ib)
        return cls(ia // g, ib // g)

    @classmethod
    def parse(cls, text: str) -> "Direction":
        parts = text.replace("(", "").replace(")", "").split(",")
        if len(parts) != 2:
            raise InvalidDirection(f"expected 'rho,sigma', got {text!r}")
        try:
            return cls(int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise InvalidDirection(f"expected integers in {text!r}") from exc

    @property
    def strict(self) -> bool:
        """Membership in the open set (rho + sigma > 0)."""
        return self.rho + self.sigma > 0

    @property
    def in_v0(self) -> bool:
        return self.strict and self.rho > 0

    def value(self, point: tuple[Scalar, Scalar]) -> Fraction:
        return self.rho * Fraction(point[0]) + self.sigma * Fraction(point[1])

    def __lt__(self, other: "Direction") -> bool:
        if not isinstance(other, Direction):
            return NotImplemented
        return dir_less(self, other)

    def __str__(self) -> str:
        return f"({self.rho},{self.sigma})"


MIN_DIRECTION = Direction(1, -1)
MAX_DIRECTION = Direction(-1, 1)


def cross(a: Sequence[Scalar], b: Sequence[Scalar]):
    """Determinant ``a[0] b[1] - a[1] b[0]``; accepts Directions or points."""
    if isinstance(a, Direction):
        a = (a.rho, a.sigma)
    if isinstance(b, Direction):
        b = (b.rho, b.sigma)
    return a[0] * b[1] - a[1] * b[0]


def dir_less(d1: Direction, d2: Direction) -> bool:
    if d1 == d2:
        return False
    if d1 == MIN_DIRECTION or d2 == MAX_DIRECTION:
        return True
    if d2 == MIN_DIRECTION or d1 == MAX_DIRECTION:
        return False
    return cross(d1, d2) > 0


def v_point(d: Direction, point: tuple[Scalar, Scalar]) -> Fraction:
    return d.value(point)


def _require_nonzero(P: _Element) -> None:
    if not P.terms:
        raise ZeroElement("operation undefined on the zero element")


def v_deg(P: _Element, d: Direction):
    """Maximal ``d``-degree over the support; ``NEG_INF`` for zero."""
    if not P.terms:
        return NEG_INF
    scaled = _scaled_degrees(P, d)
    return Fraction(max(scaled.values()), P.level)


def _scaled_degrees(P: _Element, d: Direction) -> dict:
    """``level * v_d`` of every support point, as exact integers."""
    L = P.level
    rho, sig = d.rho, d.sigma * L
    return {k: rho * k[0].numerator * (L // k[0].denominator) + sig * k[1] for k in P.terms}


def leading(P: _Element, d: Direction) -> LaurentElement:
    _require_nonzero(P)
    scaled = _scaled_degrees(P, d)
    top = max(scaled.values())
    terms = {k: P.terms[k] for k, v in scaled.items() if v == top}
    return LaurentElement._raw(terms, P.level)


def _points(P: _Element | Iterable[Point]) -> list[Point]:
    if isinstance(P, _Element):
        _require_nonzero(P)
        return list(P.terms)
    pts = list(P)
    if not pts:
        raise ZeroElement("empty support")
    return pts


def w_corner(P) -> Point:
    """Point of the (1,-1)-leading edge with largest x-coordinate."""
    pts = _points(P)
    top = max(x - y for x, y in pts)
    return max(p for p in pts if p[0] - p[1] == top)


def wbar_corner(P) -> Point:
    """Point of the (-1,1)-leading edge with largest x-coordinate."""
    pts = _points(P)
    top = max(y - x for x, y in pts)
    return max(p for p in pts if p[1] - p[0] == top)


def st(P: _Element, d: Direction) -> Point:
    if d == MIN_DIRECTION:
        raise ForbiddenDirection("st is undefined for (1,-1)")
    return w_corner(leading(P, d))


def en(P: _Element, d: Direction) -> Point:
    if d == MAX_DIRECTION:
        raise ForbiddenDirection("en is undefined for (-1,1)")
    return wbar_corner(leading(P, d))


def dir_of(point: tuple[Scalar, Scalar]) -> Direction:
    """The unique strict direction annihilating ``point``."""
    a, b = Fraction(point[0]), Fraction(point[1])
    if a == b:
        raise DiagonalPoint(f"({a},{b}) lies on the diagonal")
    if a - b > 0:
        return Direction.normalized(-b, a)
    return Direction.normalized(b, -a)


def _convex_hull(points: list[Point]) -> list[Point]:
    """Counterclockwise hull without collinear interior points (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def hull_edges(P) -> list[tuple[Point, Point, Direction]]:
    """Hull edges whose outward normal is a strict direction, sorted by that direction.

    Each entry is ``(start, end, direction)`` with ``start``/``end`` the st/en
    corners of the edge for its direction.
    """
    pts = _points(P)
    hull = _convex_hull(pts)
    if len(hull) < 2:
        return []
    if len(hull) == 2:
        cycle = [(hull[0], hull[1]), (hull[1], hull[0])]
    else:
        cycle = [(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]
    out = []
    for p, q in cycle:
        ex, ey = q[0] - p[0], q[1] - p[1]
        normal = Direction.normalized(ey, -ex) if (ey - ex) >= 0 else None
        if normal is None or not normal.strict:
            continue
        a, b = sorted((p, q), key=lambda t: t[1] - t[0])
        out.append((a, b, normal))
    out.sort(key=lambda e: _DirKey(e[2]))
    return out


class _DirKey:
    __slots__ = ("d",)

    def __init__(self, d: Direction):
        self.d = d

    def __lt__(self, other: "_DirKey") -> bool:
        return dir_less(self.d, other.d)


def directions(P) -> list[Direction]:
    """Strict directions whose leading edge has more than one point, ascending."""
    return [d for _, _, d in hull_edges(P)]


def directions_bruteforce(P) -> list[Direction]:
    """Reference computation of :func:`directions` from pairwise differences."""
    pts = _points(P)
    cands = set()
    for p in pts:
        for q in pts:
            diff = (q[0] - p[0], q[1] - p[1])
            if diff[0] != diff[1]:
                cands.add(dir_of(diff))
    elem = P if isinstance(P, _Element) else LaurentElement({p: 1 for p in pts})
    found = [d for d in cands if len(leading(elem, d).terms) > 1]
    return sorted(found)


def directions_closure(P) -> list[Direction]:
    """``directions(P)`` with the two extreme directions added."""
    return [MIN_DIRECTION] + directions(P) + [MAX_DIRECTION]


def succ(P, d: Direction) -> Direction | None:
    bigger = [e for e in directions(P) if dir_less(d, e)]
    return min(bigger) if bigger else None


def pred(P, d: Direction) -> Direction | None:
    smaller = [e for e in directions(P) if dir_less(e, d)]
    return max(smaller) if smaller else None


def subrectangular_vertex(P: WeylElement) -> Point | None:
    """Vertex ``(a, b)`` if ``P`` is subrectangular, else None."""
    _require_nonzero(P)
    if P.level != 1 and any(x.denominator != 1 for x, _ in P.terms):
        raise PreconditionViolated("subrectangularity is defined for level-1 elements")
    a = max(x for x, _ in P.terms)
    b = max(y for _, y in P.terms)
    if (a, b) not in P.terms:
        return None
    if any(x < 0 or y < 0 for x, y in P.terms):
        return None
    return (a, b)


def is_subrectangular(P: WeylElement) -> bool:
    return subrectangular_vertex(P) is not None


def divisibility_filter(p: int, q: int) -> bool:
    """True when neither of ``p``, ``q`` divides the other."""
    if p < 1 or q < 1:
        raise ValueError("arguments must be positive")
    return q % p != 0 and p % q != 0
