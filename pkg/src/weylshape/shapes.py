"""Enumeration and refutation of corner configurations for small total-degree gcds."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import UnknownFormat
from .geometry import Direction, dir_of

__all__ = [
    "CornerCandidate",
    "CandidateReport",
    "BoundSummary",
    "enumerate_candidates",
    "refute",
    "check_bound",
    "emit_table",
    "summary_lines",
    "REFUTED_NO_C1",
    "REFUTED_CONDITION_6",
]

REFUTED_NO_C1 = "no C₁"
REFUTED_CONDITION_6 = "condition (6)"
CROSS = "×"


@dataclass(frozen=True)
class CornerCandidate:
    u: int
    v: int
    f1: int
    f2: int
    rho: int
    sigma: int
    c1_solutions: tuple[tuple[int, int], ...]
    d: int

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.u, self.v, self.f1)

    @property
    def direction(self) -> Direction:
        return Direction(self.rho, self.sigma)


@dataclass(frozen=True)
class Cut:
    """Derived data ``(gamma, C2)`` for one start-corner solution, plus whether C2 is forbidden."""

    c1: tuple[int, int]
    gamma: Fraction
    c2: tuple[Fraction, Fraction]
    forbidden: bool


@dataclass(frozen=True)
class CandidateReport:
    candidate: CornerCandidate
    cuts: tuple[Cut, ...]
    verdict: str  # "refuted" or "unresolved"
    reason: str = ""

    @property
    def gamma(self) -> Fraction | None:
        return self.cuts[0].gamma if self.cuts else None

    @property
    def c2(self) -> tuple[Fraction, Fraction] | None:
        return self.cuts[0].c2 if self.cuts else None

    @property
    def refuted(self) -> bool:
        return self.verdict == "refuted"

    @property
    def verdict_text(self) -> str:
        return f"refuted:{self.reason}" if self.refuted else "unresolved"


@dataclass(frozen=True)
class BoundSummary:
    max_sum: int
    reports: tuple[CandidateReport, ...] = field(repr=False)
    candidates: int = 0
    refuted: int = 0
    unresolved: int = 0

    @property
    def bound_conclusion(self) -> str | None:
        return f"B > {self.max_sum}" if self.unresolved == 0 else None


def _start_corner_solutions(u: int, v: int, rho: int, sigma: int) -> tuple[tuple[int, int], ...]:
    target = rho * u + sigma * v
    out = []
    for r in range(1, u):
        for s in range(r):
            if rho * r + sigma * s == target:
                out.append((r, s))
    return tuple(out)


def _admissible_pairs(max_sum: int) -> Iterable[tuple[int, int]]:
    for u in range(3, max_sum + 1):
        for v in range(u + 1, max_sum - u + 1):
            if gcd(u, v) > 1:
                yield u, v


def enumerate_candidates(max_sum: int) -> list[CornerCandidate]:
    """Every candidate configuration with ``u + v <= max_sum``, sorted by ``(u, v, f1)``."""
    if max_sum < 5:
        raise ValueError("max_sum must be at least 5")
    out = []
    for u, v in _admissible_pairs(max_sum):
        g = gcd(u, v)
        for t in range(1, g):
            f1, f2 = t * u // g, t * v // g
            if f1 < 2:
                continue
            direction = dir_of((f1 - 1, f2 - 1))
            if direction.sigma >= 0:
                continue
            out.append(
                CornerCandidate(
                    u, v, f1, f2,
                    direction.rho, direction.sigma,
                    _start_corner_solutions(u, v, direction.rho, direction.sigma),
                    gcd(f1 - 1, f2 - 1),
                )
            )
    out.sort(key=lambda c: c.key)
    return out


def _cut(c: CornerCandidate, c1: tuple[int, int]) -> Cut:
    r1, s1 = c1
    gamma = Fraction(c.v - s1, c.rho)
    step = gamma - s1
    c2 = (r1 + step * Fraction(-c.sigma, c.rho), s1 + step)
    rbar = c2[1]
    forbidden = rbar >= 2 and c2[0] == rbar - Fraction(1, c.rho)
    return Cut(c1, gamma, c2, forbidden)


def refute(c: CornerCandidate) -> CandidateReport:
    if not c.c1_solutions:
        return CandidateReport(c, (), "refuted", REFUTED_NO_C1)
    cuts = tuple(_cut(c, c1) for c1 in c.c1_solutions)
    # the C2 obstruction is only available when d = 1
    if c.d == 1 and all(cut.forbidden for cut in cuts):
        return CandidateReport(c, cuts, "refuted", REFUTED_CONDITION_6)
    return CandidateReport(c, cuts, "unresolved")


def check_bound(max_sum: int, jobs: int = 1) -> BoundSummary:
    candidates = enumerate_candidates(max_sum)
    if jobs > 1 and len(candidates) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(refute, candidates, chunksize=max(1, len(candidates) // (4 * jobs))))
    else:
        reports = [refute(c) for c in candidates]
    refuted = sum(r.refuted for r in reports)
    return BoundSummary(max_sum, tuple(reports), len(reports), refuted, len(reports) - refuted)


def summary_lines(summary: BoundSummary) -> list[str]:
    lines = [
        f"candidates: {summary.candidates}",
        f"refuted: {summary.refuted}",
        f"unresolved: {summary.unresolved}",
    ]
    lines.append(summary.bound_conclusion or f"no bound claim: {summary.unresolved} unresolved")
    return lines


def _pt(p: Sequence) -> str:
    return f"({p[0]},{p[1]})"


COLUMNS = ["C₀", "(f₁,f₂)", "(ρ,σ)", "C₁", "d", "γ", "C₂", "verdict"]


def _cells(r: CandidateReport) -> list[str]:
    c = r.candidate
    head = [_pt((c.u, c.v)), _pt((c.f1, c.f2)), _pt((c.rho, c.sigma))]
    if not r.cuts:
        return head + [CROSS, "", "", "", r.verdict_text]
    return head + [
        "; ".join(_pt(cut.c1) for cut in r.cuts),
        str(c.d),
        "; ".join(str(cut.gamma) for cut in r.cuts),
        "; ".join(_pt(cut.c2) for cut in r.cuts),
        r.verdict_text,
    ]


def _json_row(r: CandidateReport) -> dict:
    c = r.candidate
    return {
        "C0": [c.u, c.v],
        "F": [c.f1, c.f2],
        "dir": [c.rho, c.sigma],
        "C1": [list(p) for p in c.c1_solutions],
        "d": c.d,
        "gamma": None if r.gamma is None else str(r.gamma),
        "C2": None if r.c2 is None else [str(r.c2[0]), str(r.c2[1])],
        "verdict": r.verdict_text,
        "cuts": [
            {"C1": list(cut.c1), "gamma": str(cut.gamma), "C2": [str(cut.c2[0]), str(cut.c2[1])]}
            for cut in r.cuts
        ],
    }


def emit_table(reports: Sequence[CandidateReport], fmt: str = "md") -> str:
    """Render reports as a markdown table, CSV, or a JSON array."""
    if fmt == "md":
        lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
        for r in reports:
            lines.append("| " + " | ".join(_cells(r)) + " |")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        writer.writerows(_cells(r) for r in reports)
        return buf.getvalue()
    if fmt == "json":
        if not reports:
            return "[]\n"
        rows = ",\n".join("  " + json.dumps(_json_row(r), ensure_ascii=False) for r in reports)
        return "[\n" + rows + "\n]\n"
    raise UnknownFormat(f"unknown table format {fmt!r}")
