import warnings
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import words
from scgrowth.cayley import enumerate_ball
from scgrowth.errors import BBelowThreshold, InputOutOfRange, NonPositiveTranslation, UnsupportedStrategy
from scgrowth.freesets import (
    axis_fellow_travelling,
    build_pingpong_set,
    check_reduced,
    classes_mod_elementary,
    loxodromic_count_a0,
    pingpong_b0,
    symmetric_closure,
)
from scgrowth.shortening import evaluate
from scgrowth.words import free_reduce, make_presentation, power
from oracles import tree_reduce

A10, B10 = power((1,), 10), power((2,), 10)


@pytest.fixture(scope="module")
def ball(F2):
    return enumerate_ball(F2, None, 2)


def test_powers_are_reduced(ball):
    rep = check_reduced(ball, [A10, B10], (), 1, 0)
    assert rep.verdict and rep.failing_pair is None
    # four elements, six unordered pairs
    assert len(rep.pair_margins) == 6


def test_overlapping_pair_fails(ball, F2):
    rep = check_reduced(ball, [F2.word("a"), F2.word("ab")], (), Fraction(1, 100), 0)
    assert not rep.verdict and rep.failing_pair == ((1,), (1, 2))


def test_inverse_pair_fails(ball):
    rep = check_reduced(ball, [(1,), (-1,)], (), 1, 0)
    assert rep.reason == "U meets its inverse set"


def test_alpha_floor(ball):
    with pytest.raises(InputOutOfRange):
        check_reduced(ball, [A10], (), Fraction(1, 100), Fraction(1, 100))


@given(words(2, 6, reduced=True))
def test_reduced_set_quasi_isometry_bounds(w):
    # |w|_U <= 2 alpha^-1 |wp - p| and |wp - p| <= L |w|_U, alpha = 1, L = 10
    U = [A10, B10]
    g = evaluate(w, U)
    disp = len(tree_reduce(g))
    assert 2 * 1 * len(w) <= disp <= 10 * len(w)


@given(words(2, 5, reduced=True), words(2, 5, reduced=True))
def test_reduced_set_words_are_distinct(u, v):
    U = [A10, B10]
    if u != v:
        assert free_reduce(evaluate(u, U)) != free_reduce(evaluate(v, U))


def test_symmetric_closure_order():
    assert symmetric_closure([(1,), (2,), (-1,)]) == [(1,), (2,), (-1,), (-2,)]


def test_classes_mod_elementary():
    U = [(1,), (-1,), (2,), (-2,)]
    assert classes_mod_elementary(U, (1,)).classes == [[(1,), (-1,)], [(2,)], [(-2,)]]
    # A^-1 b = ab lies in <ab>, so A and b share a class
    cls = classes_mod_elementary(U, (1, 2)).classes
    assert len(cls) == 3 and [(-1,), (2,)] in cls


def test_classes_refuse_relators(SURF):
    with pytest.raises(UnsupportedStrategy):
        classes_mod_elementary([(1,)], (1,), SURF)


def test_b0_formula():
    assert pingpong_b0(1, 0, 1, Fraction(5, 1000), Fraction(15, 1000)) == Fraction(1107, 100)
    with pytest.raises(NonPositiveTranslation):
        pingpong_b0(0, 0, 1, 0, 0)


def test_a0_formula():
    assert loxodromic_count_a0(1, 2, 1) == 34


def test_axis_fellow_travelling_free(F2):
    assert axis_fellow_travelling(F2, (1,), 0) == 0
    assert axis_fellow_travelling(F2, (1,), Fraction(1, 20)) == 1


def test_pingpong_set(F2, ball):
    U = [(1,), (-1,), (2,), (-2,)]
    alpha, delta = Fraction(15, 1000), Fraction(5, 1000)
    with warnings.catch_warnings():
        warnings.simplefilter("error", BBelowThreshold)
        res = build_pingpong_set(ball, U, (1,), 13, alpha, delta)
    assert res.b0 == Fraction(1107, 100)
    assert [F2.spell(s) for s in res.S] == ["a" * 13, "b" + "a" * 13 + "B", "B" + "a" * 13 + "b"]
    assert all(res.posts.values())
    with pytest.warns(BBelowThreshold):
        build_pingpong_set(ball, U, (1,), 11, alpha, delta)


def test_pingpong_needs_free_group(SURF):
    with pytest.raises(UnsupportedStrategy):
        build_pingpong_set(enumerate_ball(SURF, None, 1), [(1,), (-1,)], (1,), 20, 1, 0)
