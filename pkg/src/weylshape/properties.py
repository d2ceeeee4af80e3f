"""Seeded random generators and property suites.

Each suite takes a :class:`random.Random` and a case count and returns a
:class:`SuiteResult`. The CLI ``selftest`` command and the test-suite share
these functions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable

from .automorphisms import Rotation, ShiftXPoly, ShiftY, ShiftYPoly, apply, inverse, shift_for, verify_leading_transport
from .bracket import (
    PEWitness,
    bracket_by_definition,
    bracket_by_formula,
    check_identity_1,
    extract_common_root,
    f_poly,
    multiplicity_report,
    pe_check,
)
from .errors import IdentityViolation
from .geometry import (
    MAX_DIRECTION,
    MIN_DIRECTION,
    Direction,
    NEG_INF,
    cross,
    dir_less,
    dir_of,
    directions,
    directions_bruteforce,
    directions_closure,
    en,
    is_subrectangular,
    leading,
    st,
    v_deg,
    w_corner,
    wbar_corner,
)
from .kernel import UniPoly
from .weyl import WeylElement, commutator, psi

__all__ = [
    "SuiteResult",
    "COEFFICIENTS",
    "random_element",
    "random_pair",
    "sample_directions",
    "sample_v0",
    "SUITES",
    "run_all",
]

COEFFICIENTS = tuple(
    Fraction(c) for c in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3)
)
MAX_EXPONENT = 6
MAX_TERMS = 5


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, detail: Callable[[], str] | str = "") -> bool:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(detail() if callable(detail) else detail)
        return ok

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.passed} passed, {self.failed} failed"


# generators


def random_element(rng: random.Random, level: int | None = None, nonzero: bool = True) -> WeylElement:
    """Up to five terms, exponents in [0, 6] (x in steps of 1/level), small coefficients."""
    while True:
        lvl = level if level is not None else rng.choice((1, 2, 3))
        terms = {}
        for _ in range(rng.randint(1, MAX_TERMS)):
            x = Fraction(rng.randint(0, MAX_EXPONENT * lvl), lvl)
            y = rng.randint(0, MAX_EXPONENT)
            terms[(x, y)] = rng.choice(COEFFICIENTS)
        P = WeylElement(terms, lvl)
        if P.terms or not nonzero:
            return P


def random_pair(rng: random.Random) -> tuple[WeylElement, WeylElement]:
    return random_element(rng), random_element(rng)


def sample_directions(bound: int = 5) -> list[Direction]:
    """All of the closed direction set with entries bounded by ``bound``, ascending."""
    found = {MIN_DIRECTION, MAX_DIRECTION, Direction(1, 0), Direction(0, 1), Direction(1, 1)}
    for rho in range(-bound, bound + 1):
        for sigma in range(-bound, bound + 1):
            if rho + sigma >= 0 and gcd(rho, sigma) == 1:
                found.add(Direction(rho, sigma))
    return sorted(found)


DIRECTIONS = sample_directions()
STRICT = [d for d in DIRECTIONS if d.strict]
V0 = [d for d in STRICT if d.rho > 0]


def sample_v0() -> list[Direction]:
    return list(V0)


def _mediant(d1: Direction, d2: Direction) -> Direction:
    return Direction.normalized(d1.rho + d2.rho, d1.sigma + d2.sigma)


def _between(lo: Direction, hi: Direction) -> list[Direction]:
    """Three directions strictly between ``lo < hi`` built from mediants."""
    if lo == MIN_DIRECTION and hi == MAX_DIRECTION:
        return [Direction(1, 0), Direction(1, 1), Direction(0, 1)]
    mid = _mediant(lo, hi)
    return [mid, _mediant(lo, mid), _mediant(mid, hi)]


def _sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def _add(p, q):
    return (p[0] + q[0], p[1] + q[1])


# suites


def suite_ore(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("ore-relations")
    Y = WeylElement.monomial(0, 1)
    for l in range(1, 7):
        xl = WeylElement.monomial(Fraction(1, l), 0, 1, l)
        expected = WeylElement.monomial(Fraction(1, l) - 1, 0, Fraction(1, l), l)
        res.check(commutator(Y, xl) == expected, f"[Y, X^(1/{l})]")
    for _ in range(cases):
        A, B, C = random_element(rng), random_element(rng), random_element(rng)
        res.check((A * B) * C == A * (B * C), lambda: f"associativity fails for {A} | {B} | {C}")
    return res


def suite_multiplicative(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("degree-corner-multiplicativity")
    for _ in range(cases):
        P, Q = random_pair(rng)
        PQ = P * Q
        ok = w_corner(PQ) == _add(w_corner(P), w_corner(Q))
        ok &= wbar_corner(PQ) == _add(wbar_corner(P), wbar_corner(Q))
        for d in DIRECTIONS:
            ok &= v_deg(PQ, d) == v_deg(P, d) + v_deg(Q, d)
            if not d.strict:
                continue
            ok &= leading(PQ, d) == leading(P, d) * leading(Q, d)
            ok &= st(PQ, d) == _add(st(P, d), st(Q, d))
            ok &= en(PQ, d) == _add(en(P, d), en(Q, d))
        res.check(ok, lambda: f"multiplicativity fails for {P} | {Q}")
    return res


def suite_commutator_corners(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("commutator-corners")
    one = (1, 1)
    for _ in range(cases):
        P, Q = random_pair(rng)
        C = commutator(P, Q)
        ok = True
        for corner in (w_corner, wbar_corner):
            apart = cross(corner(P), corner(Q)) != 0
            shifted = bool(C.terms) and corner(C) == _sub(_add(corner(P), corner(Q)), one)
            ok &= apart == shifted
        for d in DIRECTIONS:
            ok &= v_deg(C, d) <= v_deg(P, d) + v_deg(Q, d) - (d.rho + d.sigma)
        res.check(ok, lambda: f"commutator corners fail for {P} | {Q}")
    return res


def _perturb(rng: random.Random, P: WeylElement, d: Direction) -> WeylElement:
    """Add a few terms of strictly lower ``d``-degree."""
    top = v_deg(P, d)
    extra = {}
    for _ in range(rng.randint(1, 3)):
        for _attempt in range(50):
            x = Fraction(rng.randint(0, MAX_EXPONENT * P.level), P.level)
            y = rng.randint(0, MAX_EXPONENT)
            if d.rho * x + d.sigma * y < top:
                extra[(x, y)] = rng.choice(COEFFICIENTS)
                break
    return P + WeylElement(extra, P.level)


def suite_bracket(rng: random.Random, cases: int, perturbed: int | None = None) -> SuiteResult:
    res = SuiteResult("bracket-equivalence")
    for _ in range(cases):
        P, Q = random_pair(rng)
        ok = all(bracket_by_definition(P, Q, d) == bracket_by_formula(P, Q, d) for d in V0)
        res.check(ok, lambda: f"definition and formula disagree for {P} | {Q}")
    for _ in range(perturbed if perturbed is not None else max(1, cases * 2 // 5)):
        P, Q = random_pair(rng)
        d = rng.choice(V0)
        P1, Q1 = _perturb(rng, P, d), _perturb(rng, Q, d)
        same = leading(P1, d) == leading(P, d) and leading(Q1, d) == leading(Q, d)
        res.check(
            same and bracket_by_definition(P, Q, d) == bracket_by_definition(P1, Q1, d),
            lambda: f"bracket changed under perturbation at {d}: {P} | {Q}",
        )
    return res


def suite_bracket_corners(rng: random.Random, cases: int) -> SuiteResult:
    """Zero brackets align corners; nonzero ones add corners exactly when they are not aligned."""
    res = SuiteResult("bracket-corners")
    for _ in range(cases):
        P, Q = random_pair(rng)
        d = rng.choice(V0)
        out = bracket_by_definition(P, Q, d)
        sp, sq, ep, eq = st(P, d), st(Q, d), en(P, d), en(Q, d)
        if out.proportional:
            res.check(cross(sp, sq) == 0 and cross(ep, eq) == 0, lambda: f"zero bracket unaligned at {d}: {P} | {Q}")
            continue
        R = out.value
        ok = (cross(sp, sq) != 0) == (st(R, d) == _sub(_add(sp, sq), (1, 1)))
        ok &= (cross(ep, eq) != 0) == (en(R, d) == _sub(_add(ep, eq), (1, 1)))
        res.check(ok, lambda: f"bracket corner arithmetic fails at {d}: {P} | {Q}")
    return res


def suite_identity(rng: random.Random, cases: int, stats: dict | None = None) -> SuiteResult:
    """The f-polynomial identity on pairs with nonzero bracket; non-integral c is counted, not failed."""
    res = SuiteResult("f-polynomial-identity")
    non_integral = 0
    while res.passed + res.failed < cases:
        P, Q = random_pair(rng)
        d = rng.choice(V0)
        if bracket_by_definition(P, Q, d).proportional:
            continue
        try:
            w = check_identity_1(P, Q, d)
        except IdentityViolation as exc:
            res.check(False, f"{exc} at {d}: {P} | {Q}")
            continue
        res.check(isinstance(w, PEWitness), "expected a witness for a nonzero bracket")
        if isinstance(w, PEWitness) and not w.c_is_integral:
            non_integral += 1
    if stats is not None:
        stats["non_integral_c"] = non_integral
    return res


def suite_f_poly(rng: random.Random, cases: int) -> SuiteResult:
    """f-polynomials multiply, and common roots rebuild the leading terms of commuting powers."""
    res = SuiteResult("f-polynomial-structure")
    for _ in range(cases):
        P, Q = random_pair(rng)
        d = rng.choice(V0)
        res.check(f_poly(P * Q, d) == f_poly(P, d) * f_poly(Q, d), lambda: f"f_poly not multiplicative at {d}")
    for _ in range(max(1, cases // 5)):
        base = random_element(rng)
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        P, Q = base ** m, base ** n
        d = rng.choice(V0)
        if not (v_deg(P, d) > 0 and v_deg(Q, d) > 0):
            continue
        root = extract_common_root(P, Q, d)
        res.check(
            root is not None
            and leading(P, d) == (root.root ** root.m).scale(root.lam_p)
            and leading(Q, d) == (root.root ** root.n).scale(root.lam_q),
            lambda: f"common root round trip fails for {base} at {d}",
        )
    return res


def suite_consecutive(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("consecutive-directions")
    for _ in range(cases):
        P = random_element(rng)
        closure = directions_closure(P)
        ok = True
        for lo, hi in zip(closure, closure[1:]):
            for d in _between(lo, hi):
                supp = set(leading(P, d).terms)
                ok &= supp == {st(P, hi)} == {en(P, lo)}
        for d in directions(P):
            for d1 in DIRECTIONS:
                if dir_less(d, d1):
                    ok &= d1.value(st(P, d)) < d1.value(en(P, d))
                elif dir_less(d1, d):
                    ok &= d1.value(st(P, d)) > d1.value(en(P, d))
        ok &= directions(P) == directions_bruteforce(P)
        for p in P.terms:
            for q in P.terms:
                diff = _sub(q, p)
                if diff[0] != diff[1]:
                    e = dir_of(diff)
                    ok &= e.strict and e.value(diff) == 0
        res.check(ok, lambda: f"consecutive-direction geometry fails for {P}")
    return res


def _transport_case(rng: random.Random):
    d = rng.choice(V0)
    level = rng.choice((1, 2, 3))
    if rng.random() < 0.5:
        # force the shift to raise the level
        choices = [e for e in V0 if level % e.rho]
        d = rng.choice(choices) if choices else d
    lam = rng.choice(COEFFICIENTS + (Fraction(0),))
    return shift_for(d, lam), random_element(rng, level), d


def suite_transport(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("automorphism-transport")
    raised = 0
    for _ in range(cases):
        a, P, d = _transport_case(rng)
        raised += apply(a, P).level > P.level
        res.check(verify_leading_transport(a, P, d), lambda: f"transport fails for {a} on {P} at {d}")
    res.check(raised > 0, "no case raised the level")
    return res


def _level_one(rng: random.Random) -> WeylElement:
    return random_element(rng, level=1)


def suite_automorphism_algebra(rng: random.Random, cases: int) -> SuiteResult:
    """Automorphisms preserve commutators and invert; rotation permutes the degree functionals."""
    res = SuiteResult("automorphism-algebra")
    for _ in range(cases):
        P, Q = _level_one(rng), _level_one(rng)
        kind = rng.randrange(4)
        lam = rng.choice(COEFFICIENTS)
        if kind == 0:
            a = shift_for(rng.choice(V0), lam)
            P, Q = random_pair(rng)
        elif kind == 1:
            a = ShiftYPoly(lam, rng.randint(1, 2), rng.choice((1, -1)))
        elif kind == 2:
            a = ShiftXPoly(lam, rng.randint(1, 2), rng.choice((1, -1)))
        else:
            a = Rotation(rng.randint(1, 3))
        ok = commutator(apply(a, P), apply(a, Q)) == apply(a, commutator(P, Q))
        ok &= apply(inverse(a), apply(a, P)) == P
        if isinstance(a, Rotation) and a.turns == 1:
            R = apply(a, P)
            ok &= v_deg(R, Direction(1, 1)) == v_deg(P, Direction(1, 1))
            ok &= v_deg(R, Direction(1, 0)) == v_deg(P, Direction(0, 1))
            ok &= v_deg(R, Direction(0, 1)) == v_deg(P, Direction(1, 0))
        res.check(ok, lambda: f"automorphism identity fails for {a} on {P} | {Q}")
    return res


def _in_interval(d: Direction) -> bool:
    return dir_less(Direction(1, 0), d) and dir_less(d, Direction(0, 1))


def suite_subrectangular(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("subrectangularity")
    hits = 0
    while res.passed + res.failed < cases:
        P = _level_one(rng)
        if rng.random() < 0.5:
            a = max(int(x) for x, _ in P.terms)
            b = max(y for _, y in P.terms)
            P = P + WeylElement.monomial(a, b, rng.choice(COEFFICIENTS))
        if not P.terms or all(y == 0 for _, y in P.terms) or all(x == 0 for x, _ in P.terms):
            continue
        direct = is_subrectangular(P)
        hits += direct
        by_dirs = not any(_in_interval(d) for d in directions(P))
        res.check(direct == by_dirs, lambda: f"subrectangularity criteria disagree for {P}")
    return res


# PE / multiplicity


def pe_family(rng: random.Random, positive: bool):
    """A pair satisfying the PE identity (positive) or one breaking the multiplicity law.

    Returns ``(f, g, k, j, eps, b, c, expected_h)``.
    """
    r = Fraction(rng.choice((1, 2, 3, -1, -2, Fraction(1, 2))))
    m, k, j = rng.randint(1, 3), rng.randint(1, 3), rng.randint(0, 2)
    mu, nu = rng.choice(COEFFICIENTS), Fraction(rng.choice((1, 2, 3, Fraction(1, 2))))
    b = Fraction(rng.choice((1, 2, 3)))
    x = UniPoly.x()
    two_roots = rng.random() < 0.5
    base = x * x - r * r if two_roots else x - r
    f = (base ** m).scale(mu)
    if positive:
        g = (f ** j) * base.scale(nu)
        eps = ((1 / (2 * nu) if two_roots else 1 / nu) + b) / (k * m)
        return f, g, k, j, eps, b, Fraction(0), 2 if two_roots else 1
    # wrong multiplicity: one power too many, or a missing factor when j*m+1 = 1
    if j == 0 and rng.random() < 0.5:
        g = (x - 7 * r).scale(nu)
    else:
        g = (f ** j) * (base ** 2).scale(nu)
    eps = (1 / nu + b) / (k * m)
    return f, g, k, j, eps, b, Fraction(0), None


def suite_pe(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("pe-multiplicity")
    x = UniPoly.x()
    for f, g, eps in (((x - 1), (x - 1), 2), ((x - 1) ** 2, (x - 1), 1)):
        holds, h = pe_check(f, g, 1, 0, eps, 1, 0)
        res.check(holds and h == 1 and multiplicity_report(f, g, 0).passed, f"fixed instance {f}, {g}")
    for i in range(cases):
        positive = i % 2 == 0
        f, g, k, j, eps, b, c, h_expected = pe_family(rng, positive)
        holds, h = pe_check(f, g, k, j, eps, b, c)
        verdict = multiplicity_report(f, g, j).passed
        if positive:
            ok = holds and h == h_expected and verdict
        else:
            ok = not holds and not verdict
        res.check(ok, lambda: f"PE classification wrong for f={f}, g={g}, k={k}, j={j}")
    return res


SUITES: dict[str, Callable[[random.Random, int], SuiteResult]] = {
    "ore-relations": suite_ore,
    "degree-corner-multiplicativity": suite_multiplicative,
    "commutator-corners": suite_commutator_corners,
    "bracket-equivalence": suite_bracket,
    "bracket-corners": suite_bracket_corners,
    "f-polynomial-identity": suite_identity,
    "f-polynomial-structure": suite_f_poly,
    "consecutive-directions": suite_consecutive,
    "automorphism-transport": suite_transport,
    "automorphism-algebra": suite_automorphism_algebra,
    "subrectangularity": suite_subrectangular,
    "pe-multiplicity": suite_pe,
}


def run_all(seed: int, cases: int) -> list[SuiteResult]:
    """Run every suite with its own generator derived from ``seed``."""
    out = []
    for index, (name, suite) in enumerate(SUITES.items()):
        rng = random.Random(f"{seed}:{name}")
        out.append(suite(rng, cases))
    return out
