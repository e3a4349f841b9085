import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import words
from scgrowth.cayley import (
    DEHN,
    FREE,
    OUT_OF_RANGE,
    FreeCertificate,
    distance,
    enumerate_ball,
    growth_rate_bounds,
    standard_metric,
)
from scgrowth.errors import UnsupportedWordProblem
from scgrowth.words import free_reduce, inverse, make_presentation, mul
from oracles import tree_words


def test_free_sphere_sizes(F2):
    ball = enumerate_ball(F2, None, 6)
    assert ball.strategy == FREE
    assert ball.ball_sizes == [2 * 3**n - 1 for n in range(7)]


def test_free_ball_matches_brute_force(F2):
    ball = enumerate_ball(F2, None, 4)
    assert ball.sphere_sizes == [len(tree_words(2, n)) for n in range(5)]
    assert set(ball.elements) == {w for n in range(5) for w in tree_words(2, n)}


def test_surface_spheres(SURF):
    ball = enumerate_ball(SURF, None, 4)
    assert ball.strategy == DEHN
    assert ball.sphere_sizes == [1, 8, 56, 392, 2736]


def test_zz_is_refused(ZZ):
    with pytest.raises(UnsupportedWordProblem):
        enumerate_ball(ZZ, None, 2)


def test_nonstandard_generators(F2):
    # U = {a^2, b} generates an index-2 subgroup; its ball is a free ball too
    ball = enumerate_ball(F2, ["aa", "AA", "b", "B"], 3)
    assert ball.ball_sizes == [1, 5, 17, 53]
    assert distance(ball, (), F2.word("aab")) == 2
    assert distance(ball, (), F2.word("a")) is OUT_OF_RANGE


def test_asymmetric_set_rejected(F2):
    with pytest.raises(ValueError):
        enumerate_ball(F2, ["a", "b"], 2)


def test_growth_bracket(F2):
    rep = growth_rate_bounds(enumerate_ball(F2, None, 8), FreeCertificate(((1,), (2,)), 1))
    assert rep.lower_bound == pytest.approx(math.log(2))
    assert rep.lower_bound <= math.log(3) <= rep.upper_bound
    assert rep.subadditive_ok
    assert rep.to_csv().splitlines()[0] == "n,ball_size,fekete_upper"


def test_bad_certificate_is_rejected(F2):
    # a and A do not generate a free semigroup
    rep = growth_rate_bounds(enumerate_ball(F2, None, 3), FreeCertificate(((1,), (-1,)), 1))
    assert rep.lower_bound == 0.0 and rep.provenance.get("rejected")


@given(words(4, 2, reduced=True), words(4, 2, reduced=True))
def test_surface_metric_is_symmetric_and_invariant(x, y):
    p = make_presentation("abcd", ["abABcdCD"])
    m = standard_metric(p)
    d = m.dist(x, y)
    assert d == m.dist(y, x)
    assert d == m.dist((1,) + x, (1,) + y)
    assert d <= len(free_reduce(mul(inverse(x), y)))


@given(words(2, 8))
def test_free_length_is_reduced_length(w):
    m = standard_metric(make_presentation("ab"))
    assert m.length(w) == len(free_reduce(w))
