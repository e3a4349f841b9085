from fractions import Fraction

import pytest

from scgrowth.cayley import enumerate_ball
from scgrowth.errors import EmptyGeneratingSet, IdentityElement, NotLoxodromic
from scgrowth.hypgeom import (
    _delta_at,
    acylindricity_axis_bound,
    distance_matrix,
    energy_profile,
    estimate_delta,
    fellow_travelling_delta,
    four_point_holds,
    gromov_product,
    stable_translation_length,
    translation_lengths,
)
from oracles import brute_delta, tree_dist


@pytest.fixture(scope="module")
def f2_ball(F2):
    return enumerate_ball(F2, None, 3)


def test_gromov_product_in_tree(F2, f2_ball):
    a, b = F2.word("aab"), F2.word("aB")
    assert gromov_product(f2_ball, a, b, ()) == 1


def test_tree_delta_is_zero(F2, f2_ball):
    assert estimate_delta(f2_ball) == 0
    small = enumerate_ball(F2, None, 2)
    assert brute_delta(small.elements, tree_dist) == 0
    assert four_point_holds(small, 0)


def test_sampled_mode_is_seeded(f2_ball):
    a = estimate_delta(f2_ball, "sampled", samples=2000, seed=3)
    b = estimate_delta(f2_ball, "sampled", samples=2000, seed=3)
    assert a == b == 0


def test_surface_delta_matches_brute_force(SURF):
    ball = enumerate_ball(SURF, None, 2)
    pts = ball.elements[:30]
    D = distance_matrix(ball, pts)
    fast = max(_delta_at(D, t, 64) for t in range(len(pts)))
    assert max(fast, 0) == brute_delta(pts, ball.xdist)
    d = estimate_delta(ball)
    assert d >= Fraction(max(fast, 0), 2)


def test_unknown_mode(f2_ball):
    with pytest.raises(ValueError):
        estimate_delta(f2_ball, "fast")


def test_energy_minimum(F2):
    ball = enumerate_ball(F2, None, 4)
    rep = energy_profile(ball, [F2.word("a"), F2.word("abA")])
    assert rep.min_value == 1 and rep.argmin == F2.word("a")
    assert rep.to_json(F2)["argmin"] == "a"


def test_energy_empty(F2):
    with pytest.raises(EmptyGeneratingSet):
        energy_profile(enumerate_ball(F2, None, 2), [])


def test_translation_lengths(F2):
    ball = enumerate_ball(F2, None, 4)
    assert translation_lengths(ball, F2.word("ab")).tlen == 2
    rep = translation_lengths(ball, F2.word("abA"))
    assert rep.tlen == rep.tlen_scan == 1 and rep.exact
    assert stable_translation_length(ball, F2.word("aabAA")) == 1
    with pytest.raises(IdentityElement):
        translation_lengths(ball, F2.word("aA"))


def test_surface_translation_brackets(SURF):
    ball = enumerate_ball(SURF, None, 1)
    rep = translation_lengths(ball, SURF.word("ac"), power_cap=2, delta=Fraction(1))
    assert not rep.exact
    assert rep.stable_bracket[0] <= rep.stable_bracket[1]
    assert rep.consistent


def test_fellow_travelling(F2):
    ball = enumerate_ball(F2, None, 4)
    rep = fellow_travelling_delta(ball, F2.word("a"), [F2.word(w) for w in ("", "b", "B", "a")], eps=1)
    # translates by powers of a are the same axis and are skipped
    assert any(pair == ((), (1,)) for pair in rep.skipped)
    assert rep.value == 1
    assert fellow_travelling_delta(ball, F2.word("a"), [(), (2,)], eps=0).value == 0


def test_fellow_travelling_refuses_identity(F2):
    with pytest.raises(NotLoxodromic):
        fellow_travelling_delta(enumerate_ball(F2, None, 2), (), [()], eps=0)


def test_acylindricity_bound():
    assert acylindricity_axis_bound(1, 2, 3, Fraction(1, 100)) == 14
