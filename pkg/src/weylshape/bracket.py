"""The (rho, sigma)-bracket, f-polynomials and the differential identities they satisfy."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (
    ForbiddenDirection,
    IdentityViolation,
    NonPositiveRho,
    PreconditionViolated,
    ZeroAtOrigin,
    ZeroElement,
)
from .geometry import Direction, leading, st, v_deg
from .kernel import Scalar, UniPoly, as_rational, poly_gcd, poly_kth_root, squarefree_decomposition
from .weyl import LaurentElement, WeylElement, _Element, commutator

__all__ = [
    "BracketOutcome",
    "PEWitness",
    "ProportionalCase",
    "CommonRoot",
    "MultiplicityVerdict",
    "is_proportional",
    "bracket",
    "bracket_by_definition",
    "bracket_by_formula",
    "f_poly",
    "from_f_poly",
    "check_identity_1",
    "extract_common_root",
    "pe_check",
    "multiplicity_report",
    "is_power_of_binomial",
]


@dataclass(frozen=True)
class BracketOutcome:
    proportional: bool
    value: LaurentElement

    def __str__(self) -> str:
        if self.proportional:
            return "0 (proportional)"
        return str(self.value)


@dataclass(frozen=True)
class PEWitness:
    h: int
    c: Fraction

    @property
    def c_is_integral(self) -> bool:
        return self.c.denominator == 1


@dataclass(frozen=True)
class ProportionalCase:
    c: Fraction


def _nonzero(*elems: _Element) -> None:
    for e in elems:
        if not e.terms:
            raise ZeroElement("bracket arguments must be nonzero")


def is_proportional(P: WeylElement, Q: WeylElement, d: Direction) -> bool:
    _nonzero(P, Q)
    return v_deg(commutator(P, Q), d) < v_deg(P, d) + v_deg(Q, d) - (d.rho + d.sigma)


def bracket_by_definition(P: WeylElement, Q: WeylElement, d: Direction) -> BracketOutcome:
    _nonzero(P, Q)
    comm = commutator(P, Q)
    bound = v_deg(P, d) + v_deg(Q, d) - (d.rho + d.sigma)
    if v_deg(comm, d) < bound:
        return BracketOutcome(True, LaurentElement.zero(comm.level))
    return BracketOutcome(False, leading(comm, d))


def _require_v0(d: Direction) -> None:
    if d.rho <= 0:
        raise NonPositiveRho(f"{d} needs rho > 0")
    if not d.strict:
        raise ForbiddenDirection(f"{d} needs rho + sigma > 0")


def _progression(P: _Element, d: Direction) -> tuple[tuple[Fraction, int], dict[int, Fraction]]:
    """Start corner of the leading edge and its coefficients indexed by y-offset."""
    lead = leading(P, d)
    start = st(lead, d)
    return start, {y - start[1]: c for (x, y), c in lead.terms.items()}


def bracket_by_formula(P: WeylElement, Q: WeylElement, d: Direction) -> BracketOutcome:
    """Bracket from the leading edges alone, via the cross-product coefficients."""
    _nonzero(P, Q)
    _require_v0(d)
    (rp, s), lam = _progression(P, d)
    (up, v), mu = _progression(Q, d)
    step = Fraction(-d.sigma, d.rho)
    acc: dict[tuple[Fraction, int], Fraction] = {}
    for i, li in lam.items():
        p_pt = (rp + i * step, s + i)
        for j, mj in mu.items():
            q_pt = (up + j * step, v + j)
            cij = q_pt[0] * p_pt[1] - q_pt[1] * p_pt[0]
            if cij == 0:
                continue
            key = (rp + up + (i + j) * step - 1, s + v + i + j - 1)
            acc[key] = acc.get(key, 0) + li * mj * cij
    terms = {k: c for k, c in acc.items() if c}
    level = lcm(P.level, Q.level)
    if not terms:
        return BracketOutcome(True, LaurentElement.zero(level))
    return BracketOutcome(False, LaurentElement(terms, level))


def bracket(P: WeylElement, Q: WeylElement, d: Direction) -> BracketOutcome:
    return bracket_by_definition(P, Q, d)


def f_poly(P: _Element, d: Direction) -> UniPoly:
    """Coefficient profile of the d-leading edge, read upward from its start corner."""
    if not P.terms:
        raise ZeroElement("f-polynomial of zero")
    _require_v0(d)
    _, coeffs = _progression(P, d)
    out = [Fraction(0)] * (max(coeffs) + 1)
    for i, c in coeffs.items():
        out[i] = c
    return UniPoly(out)


def from_f_poly(f: UniPoly, start: tuple[Scalar, int], d: Direction, level: int | None = None) -> LaurentElement:
    """Rebuild ``x^r y^s f(x^{-sigma/rho} y)`` from an f-polynomial and start corner."""
    _require_v0(d)
    r, s = as_rational(start[0]), int(start[1])
    step = Fraction(-d.sigma, d.rho)
    terms = {(r + i * step, s + i): c for i, c in enumerate(f.coeffs) if c}
    if level is None:
        return LaurentElement(terms)
    need = 1
    for x, _ in terms:
        need = lcm(need, x.denominator)
    return LaurentElement(terms, lcm(level, need))


def _identity_rhs(fp: UniPoly, fq: UniPoly, a: Fraction, b: Fraction, c: Fraction) -> UniPoly:
    x = UniPoly.x()
    return fp * fq * c + x * fp.derivative() * fq * a - x * fq.derivative() * fp * b


def check_identity_1(P: WeylElement, Q: WeylElement, d: Direction) -> PEWitness | ProportionalCase:
    """Verify ``x^h f_[P,Q] = c f_P f_Q + a x f_P' f_Q - b x f_Q' f_P``.

    ``a = v(Q)/rho``, ``b = v(P)/rho`` and ``c = st(Q) x st(P)`` are all read
    off the inputs; ``h`` is the x-adic valuation of the right-hand side.
    """
    _nonzero(P, Q)
    _require_v0(d)
    fp, fq = f_poly(P, d), f_poly(Q, d)
    a = Fraction(v_deg(Q, d)) / d.rho
    b = Fraction(v_deg(P, d)) / d.rho
    sp, sq = st(P, d), st(Q, d)
    c = sq[0] * sp[1] - sq[1] * sp[0]
    rhs = _identity_rhs(fp, fq, a, b, c)
    out = bracket_by_definition(P, Q, d)
    if out.proportional:
        if rhs:
            raise IdentityViolation(f"proportional pair but right-hand side is {rhs}")
        return ProportionalCase(c)
    if not rhs:
        raise IdentityViolation("nonzero bracket but the right-hand side vanishes")
    h = rhs.valuation()
    f_br = f_poly(out.value, d)
    if f_br.shift(h) != rhs:
        raise IdentityViolation(f"x^{h} * ({f_br}) != {rhs}")
    return PEWitness(h, c)


@dataclass(frozen=True)
class CommonRoot:
    m: int
    n: int
    lam_p: Fraction
    lam_q: Fraction
    root: LaurentElement


def _common_root_poly(fp: UniPoly, fq: UniPoly, m: int, n: int) -> UniPoly | None:
    g = poly_kth_root(fp, m)
    if g is None:
        return None
    if g ** n * fq.lc != fq:
        return None
    return g


def extract_common_root(P: WeylElement, Q: WeylElement, d: Direction) -> CommonRoot | None:
    """Find ``R`` with ``l(P) = lam_P R^m`` and ``l(Q) = lam_Q R^n``; None if no such R over Q."""
    _nonzero(P, Q)
    _require_v0(d)
    vp, vq = v_deg(P, d), v_deg(Q, d)
    if not (vp > 0 and vq > 0):
        raise PreconditionViolated("both degrees must be positive")
    if not is_proportional(P, Q, d):
        raise PreconditionViolated("P and Q are not proportional in this direction")
    ratio = Fraction(vp) / Fraction(vq)
    m, n = ratio.numerator, ratio.denominator
    fp, fq = f_poly(P, d), f_poly(Q, d)
    g = _common_root_poly(fp, fq, m, n)
    if g is None:
        return None
    sp = st(P, d)
    start = (sp[0] / m, Fraction(sp[1], m))
    if start[1].denominator != 1:
        return None
    root = from_f_poly(g, (start[0], int(start[1])), d, lcm(P.level, Q.level))
    return CommonRoot(m, n, fp.lc, fq.lc, root)


def pe_check(
    f: UniPoly, g: UniPoly, k: int, j: int, eps: Scalar, b: Scalar, c: Scalar
) -> tuple[bool, int | None]:
    """Does ``x^h f^(k+j) = c f^k g + a x (f^k)' g - b x g' f^k`` hold for some h >= 0?

    Here ``a = (j/k) b + eps``. Returns ``(holds, h)``.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroElement("pe_check needs nonzero polynomials")
    eps, b, c = as_rational(eps), as_rational(b), as_rational(c)
    a = Fraction(j, k) * b + eps
    x = UniPoly.x()
    fk = f ** k
    rhs = fk * g * c + x * fk.derivative() * g * a - x * g.derivative() * fk * b
    if rhs.is_zero():
        return False, None
    lhs = f ** (k + j)
    h = rhs.valuation() - lhs.valuation()
    if h < 0 or lhs.shift(h) != rhs:
        return False, None
    return True, h


@dataclass(frozen=True)
class MultiplicityVerdict:
    passed: bool
    layer: UniPoly | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.passed


def multiplicity_report(f: UniPoly, g: UniPoly, j: int) -> MultiplicityVerdict:
    """Check that every squarefree layer of ``f`` at multiplicity m divides g exactly j*m+1 times.

    Also checks that ``g / f^j`` is separable.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroElement("multiplicity_report needs nonzero polynomials")
    if f(0) == 0 or g(0) == 0:
        raise ZeroAtOrigin("f and g must not vanish at 0")
    for layer, m in squarefree_decomposition(f):
        rest = g
        need = j * m + 1
        for _ in range(need):
            q, r = divmod(rest, layer)
            if r:
                return MultiplicityVerdict(False, layer, f"multiplicity below {need}")
            rest = q
        if poly_gcd(rest, layer).degree > 0:
            return MultiplicityVerdict(False, layer, f"multiplicity above {need}")
    q, r = divmod(g, f ** j)
    if r:
        return MultiplicityVerdict(False, None, "f^j does not divide g")
    if q.degree > 0 and not q.is_squarefree():
        return MultiplicityVerdict(False, None, "g / f^j is not separable")
    return MultiplicityVerdict(True)


def is_power_of_binomial(f: UniPoly, rho: int) -> bool:
    """True iff ``f = mu (x^rho - lam)^gamma`` with ``gamma = deg(f)/rho``."""
    if f.is_zero():
        raise ZeroElement("zero polynomial")
    if rho <= 0:
        raise ValueError("rho must be positive")
    if f.degree == 0:
        return True
    if f.degree % rho:
        return False
    squeezed = f.compress(rho)
    if squeezed is None:
        return False
    gamma = squeezed.degree
    root = poly_kth_root(squeezed, gamma)
    return root is not None and root.degree == 1
