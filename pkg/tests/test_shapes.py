import json
from fractions import Fraction
from math import gcd

import pytest

from published_table import ROWS
from weylshape.errors import UnknownFormat
from weylshape.shapes import (
    REFUTED_CONDITION_6,
    REFUTED_NO_C1,
    check_bound,
    emit_table,
    enumerate_candidates,
    refute,
)


def brute_candidates(max_sum):
    """Straight transcription of the admissibility conditions, without library helpers."""
    out = []
    for u in range(1, max_sum):
        for v in range(1, max_sum):
            if not (v > u >= 3 and u + v <= max_sum and gcd(u, v) > 1):
                continue
            for f1 in range(2, u):
                # (f1, f2) = mu (u, v) with 0 < mu < 1 and integral f2
                if (f1 * v) % u:
                    continue
                f2 = f1 * v // u
                a, b = f1 - 1, f2 - 1
                g = gcd(a, b)
                rho, sigma = b // g, -a // g
                sols = [
                    (r, s)
                    for r in range(u)
                    for s in range(r)
                    if rho * r + sigma * s == rho * u + sigma * v
                ]
                out.append((u, v, f1, f2, rho, sigma, tuple(sols), gcd(f1 - 1, f2 - 1)))
    return sorted(out)


def as_tuple(c):
    return (c.u, c.v, c.f1, c.f2, c.rho, c.sigma, c.c1_solutions, c.d)


@pytest.mark.parametrize("max_sum", [5, 9, 15, 22, 30])
def test_enumeration_matches_bruteforce(max_sum):
    assert [as_tuple(c) for c in enumerate_candidates(max_sum)] == brute_candidates(max_sum)


def test_enumeration_examples():
    cands = enumerate_candidates(15)
    assert len(cands) == 13
    assert len({(c.u, c.v) for c in cands}) == 9
    assert enumerate_candidates(8) == []
    assert [(c.f1, c.f2) for c in cands if (c.u, c.v) == (5, 10)] == [(2, 4), (3, 6), (4, 8)]
    with pytest.raises(ValueError):
        enumerate_candidates(4)


def test_table_rows_match_published_values():
    reports = check_bound(15).reports
    assert len(reports) == len(ROWS)
    for r, (c0, f, d, c1, dd, gamma, c2) in zip(reports, ROWS):
        c = r.candidate
        assert ((c.u, c.v), (c.f1, c.f2), (c.rho, c.sigma)) == (c0, f, d)
        if c1 is None:
            assert c.c1_solutions == () and r.reason == REFUTED_NO_C1
        else:
            assert c.c1_solutions == (c1,)
            assert (c.d, r.gamma, r.c2) == (dd, gamma, c2)
            assert r.reason == REFUTED_CONDITION_6


def test_refute_examples():
    by_key = {(c.u, c.v, c.f1): c for c in enumerate_candidates(15)}
    r = refute(by_key[(3, 6, 2)])
    assert r.refuted and r.gamma == 2 and r.c2 == (Fraction(5, 3), 2)
    assert refute(by_key[(3, 9, 2)]).reason == REFUTED_NO_C1
    assert refute(by_key[(6, 9, 2)]).c2 == (Fraction(7, 2), 4)


def test_candidate_invariants_and_monotonicity():
    small = {as_tuple(c) for c in enumerate_candidates(15)}
    big = enumerate_candidates(30)
    assert small <= {as_tuple(c) for c in big}
    for c in big:
        assert c.sigma < 0 < c.rho + c.sigma and gcd(c.rho, c.sigma) == 1
        for r, s in c.c1_solutions:
            assert c.rho * c.u + c.sigma * c.v == c.rho * r + c.sigma * s


def test_bound_summaries():
    s15 = check_bound(15)
    assert (s15.candidates, s15.refuted, s15.unresolved, s15.bound_conclusion) == (13, 13, 0, "B > 15")
    s9 = check_bound(9)
    assert [(r.candidate.u, r.candidate.v) for r in s9.reports] == [(3, 6)]
    assert s9.bound_conclusion == "B > 9"
    s30 = check_bound(30)
    assert s30.unresolved > 0 and s30.bound_conclusion is None


def test_parallel_agrees_with_serial():
    assert check_bound(30, jobs=3).reports == check_bound(30).reports


def test_emit_formats():
    reports = check_bound(15).reports
    md = emit_table(reports, "md").splitlines()
    assert len(md) == 2 + 13
    assert md[2].startswith("| (3,6) | (2,4) | (3,-1) | (1,0) | 1 | 2 | (5/3,2) |")
    assert sum("| × |" in line for line in md) == 8
    assert emit_table([], "csv") == 'C₀,"(f₁,f₂)","(ρ,σ)",C₁,d,γ,C₂,verdict\n'
    rows = json.loads(emit_table(reports, "json"))
    assert rows[0] == {
        "C0": [3, 6], "F": [2, 4], "dir": [3, -1], "C1": [[1, 0]], "d": 1,
        "gamma": "2", "C2": ["5/3", "2"], "verdict": "refuted:condition (6)",
        "cuts": [{"C1": [1, 0], "gamma": "2", "C2": ["5/3", "2"]}],
    }
    assert rows[1]["C1"] == [] and rows[1]["gamma"] is None and rows[1]["verdict"] == "refuted:no C₁"
    assert json.loads(emit_table([], "json")) == []
    with pytest.raises(UnknownFormat):
        emit_table(reports, "xml")
