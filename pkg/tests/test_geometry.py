from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weylshape.errors import DiagonalPoint, ForbiddenDirection, InvalidDirection, ZeroElement
from weylshape.geometry import (
    MAX_DIRECTION,
    MIN_DIRECTION,
    NEG_INF,
    Direction,
    cross,
    dir_less,
    dir_of,
    directions,
    directions_bruteforce,
    divisibility_filter,
    en,
    is_subrectangular,
    leading,
    pred,
    st as st_corner,
    subrectangular_vertex,
    succ,
    v_deg,
    w_corner,
    wbar_corner,
)
from weylshape.weyl import WeylElement, parse

NINE_TERM = "X^3+X^5+X^6*Y+X*Y^3+X^6*Y^3+X^3*Y^4+X*Y^6+X^4*Y^6+X^2*Y^7"
D32 = Direction(3, 2)


def test_direction_validation():
    with pytest.raises(InvalidDirection):
        Direction(2, 4)
    with pytest.raises(InvalidDirection):
        Direction(-2, 1)
    assert Direction.parse("3,-1") == Direction(3, -1)
    assert not Direction(1, -1).strict and Direction(1, 0).in_v0


def test_order():
    assert cross(Direction(1, -1), Direction(2, -1)) == 1
    assert dir_less(Direction(1, -1), Direction(2, -1))
    assert dir_less(Direction(1, 0), Direction(0, 1))
    assert dir_less(MIN_DIRECTION, MAX_DIRECTION)
    assert not dir_less(Direction(0, 1), Direction(1, 0))
    ds = [Direction(-1, 2), Direction(1, 0), MAX_DIRECTION, Direction(1, 1), MIN_DIRECTION, Direction(2, -1)]
    assert sorted(ds) == [MIN_DIRECTION, Direction(2, -1), Direction(1, 0), Direction(1, 1), Direction(-1, 2), MAX_DIRECTION]


def test_degrees():
    P = parse(NINE_TERM)
    # brute force over the nine support points
    assert v_deg(P, D32) == max(3 * x + 2 * y for x, y in P.terms) == 24
    assert v_deg(parse("X^2*Y^3"), Direction(1, 1)) == 5
    assert v_deg(WeylElement.zero(), D32) is NEG_INF
    assert NEG_INF < -10 ** 9 and NEG_INF + 5 is NEG_INF


def test_nine_term_leading_edge():
    P = parse(NINE_TERM)
    assert str(leading(P, D32)) == "x^6*y^3 + x^4*y^6"
    assert st_corner(P, D32) == (6, 3)
    assert en(P, D32) == (4, 6)
    assert D32 in directions(P)


def test_leading_small_cases():
    assert str(leading(parse("X+Y"), Direction(1, 1))) == "x + y"
    assert str(leading(parse("3*X^2*Y"), Direction(2, -1))) == "3*x^2*y"
    with pytest.raises(ZeroElement):
        leading(WeylElement.zero(), D32)


def test_corners():
    assert w_corner(parse("X+Y")) == (1, 0)
    assert wbar_corner(parse("X+Y")) == (0, 1)
    M = parse("X^2*Y^5")
    for d in (Direction(1, 0), Direction(2, -1), Direction(-1, 3)):
        assert st_corner(M, d) == en(M, d) == (2, 5)
    with pytest.raises(ForbiddenDirection):
        st_corner(M, MIN_DIRECTION)
    with pytest.raises(ForbiddenDirection):
        en(M, MAX_DIRECTION)


def test_dir_of():
    assert dir_of((1, 3)) == Direction(3, -1)
    assert dir_of((2, -1)) == Direction(1, 2)
    assert dir_of((Fraction(1, 2), 0)) == Direction(0, 1)
    with pytest.raises(DiagonalPoint):
        dir_of((1, 1))


@settings(max_examples=200, deadline=None)
@given(st.fractions(min_value=-8, max_value=8, max_denominator=3), st.integers(-8, 8))
def test_dir_of_annihilates(a, b):
    if a == b:
        return
    d = dir_of((a, b))
    assert d.strict
    assert d.value((a, b)) == 0


def test_directions_examples():
    assert directions(parse("X*Y")) == []
    assert directions(parse("X+Y")) == [Direction(1, 1)]
    assert directions(parse(NINE_TERM)) == directions_bruteforce(parse(NINE_TERM))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=7), st.integers(1, 3))
def test_directions_agree_with_bruteforce(points, level):
    P = WeylElement({(Fraction(x, level), y): 1 for x, y in points}, level)
    assert directions(P) == directions_bruteforce(P)


def test_succ_pred():
    M = parse("X^3*Y")
    assert succ(M, Direction(1, 0)) is None and pred(M, Direction(1, 0)) is None
    assert succ(parse("X+Y"), Direction(1, 0)) == Direction(1, 1)
    assert succ(parse("X+Y"), Direction(1, 1)) is None
    assert pred(parse("X+Y"), Direction(0, 1)) == Direction(1, 1)


def test_subrectangular():
    assert is_subrectangular(parse("X^2*Y + X + Y"))
    assert subrectangular_vertex(parse("X^2*Y + X + Y")) == (2, 1)
    assert not is_subrectangular(parse("X + Y"))
    assert subrectangular_vertex(parse("X*Y")) == (1, 1)


def test_divisibility_filter():
    assert divisibility_filter(4, 6)
    assert not divisibility_filter(3, 6)
    assert not divisibility_filter(5, 5)
