from fractions import Fraction
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scgrowth.axes import ball_words
from scgrowth.cayley import enumerate_ball
from scgrowth.errors import EmptyFamily, NotLoxodromic, NotReducedWord, TauBelowGate, UnsupportedStrategy
from scgrowth.shortening import (
    build_moving_family,
    check_sc_condition,
    endpoint_projection_gap,
    enumerate_shortening_free,
    evaluate,
    find_minimal_shortenings,
    find_shortening_subword,
    is_shortening_word,
    orbit_family,
    verify_counting_bound,
)
from scgrowth.smallcancel import check_small_cancellation, words_equal
from scgrowth.words import make_presentation, power

U = [power((1,), 10), power((2,), 10)]
TAU = 15


@pytest.fixture(scope="module")
def ball(F2):
    return enumerate_ball(F2, None, 0)


@pytest.fixture(scope="module")
def fam(ball):
    return orbit_family(ball, (1,), 25)


@pytest.fixture(scope="module")
def axis_a(fam):
    return fam.members_near((), 0)[0]


def reduced_words(k, n):
    letters = [x for i in range(1, k + 1) for x in (i, -i)]
    for m in range(n + 1):
        for w in itertools.product(letters, repeat=m):
            if all(w[i] != -w[i + 1] for i in range(m - 1)):
                yield w


def test_explicit_family_dedups(ball):
    fam = build_moving_family(ball, power((1,), 40), [(), power((1,), 3), (2,)])
    assert [m.u for m in fam.members] == [(), (2,)]
    assert fam.T_estimate == 40


def test_explicit_family_condition(ball, F2):
    conj = enumerate_ball(F2, None, 2).elements
    fam = build_moving_family(ball, power((1,), 40), conj)
    assert len(fam.members) == 9
    assert fam.Delta_estimate == 0
    assert check_sc_condition(fam, Fraction(1, 100), 10, 1).verdict
    assert not check_sc_condition(fam, Fraction(1, 100), 10**4, 1).verdict


def test_family_errors(ball, SURF):
    with pytest.raises(EmptyFamily):
        build_moving_family(ball, (1,), [])
    with pytest.raises(NotLoxodromic):
        orbit_family(ball, (1, -1), 2)
    with pytest.raises(UnsupportedStrategy):
        orbit_family(enumerate_ball(SURF, None, 0), (1,), 2)


def test_orbit_family_matches_explicit_listing(ball, F2):
    R = 3
    orbit = orbit_family(ball, (1, 2), R)
    explicit = build_moving_family(ball, (1, 2), enumerate_ball(F2, None, R).elements)
    for p in [(), (2,), (1, 1, -2)]:
        a = {m.line.canonical() for m in orbit.members_near(p, 2)}
        b = {m.line.canonical() for m in explicit.members_near(p, 2)}
        assert a == b


def test_orbit_delta_uses_whole_orbit(ball):
    assert orbit_family(ball, (1,), 5, eps=1).Delta_estimate == 1


def test_shortening_examples(axis_a):
    assert is_shortening_word((1, 1), axis_a, TAU, U).is_shortening
    assert not is_shortening_word((1,), axis_a, TAU, U).is_shortening
    assert not is_shortening_word((2,), axis_a, TAU, U).is_shortening
    assert endpoint_projection_gap((1, 1), axis_a, U) == 20


def test_shortening_input_checks(axis_a):
    with pytest.raises(NotReducedWord):
        is_shortening_word((1, -1), axis_a, TAU, U)
    with pytest.raises(NotReducedWord):
        is_shortening_word((), axis_a, TAU, U)
    with pytest.raises(TauBelowGate):
        is_shortening_word((1, 1), axis_a, TAU, U, Delta0=10, L0=10)


@pytest.mark.parametrize("tau, expected", [
    (15, [(1, 1), (-1, -1)]),
    (25, [(1, 1, 1), (-1, -1, -1)]),
    (100, []),
])
def test_minimal_shortenings(axis_a, tau, expected):
    assert find_minimal_shortenings(axis_a, tau, U, max_len=4) == expected


def test_counts_and_bound(fam, ball):
    res = enumerate_shortening_free(U, fam, TAU, (), 1, ball, 4)
    assert res.counts == [1, 5, 15, 41, 107]
    assert verify_counting_bound(res.counts, 2).ok
    assert res.to_csv(2).splitlines()[-1] == "4,107,true"
    free = enumerate_shortening_free(U, None, TAU, (), 1, ball, 4)
    assert free.counts == [1, 5, 17, 53, 161]


def test_counting_bound_detects_failure():
    chk = verify_counting_bound([1, 1, 3], 2)
    assert not chk.ok and chk.step_failures == [0] and chk.power_failures == [1, 2]


def test_enumeration_agrees_with_subword_search(fam, ball):
    # a word is shortening-free iff no subword is shortening
    res = enumerate_shortening_free(U, fam, TAU, (), 1, ball, 3)
    brute = [w for w in reduced_words(2, 3) if find_shortening_subword(w, fam, TAU, U) is None]
    assert sorted(res.words) == sorted(brute)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=6))
def test_barrier_prefixes(w):
    # prefixes of shortening-free words are shortening-free
    ball = enumerate_ball(make_presentation("ab"), None, 0)
    fam = orbit_family(ball, (1,), 25)
    w = tuple(w)
    if any(w[i] == -w[i + 1] for i in range(len(w) - 1)):
        return
    if find_shortening_subword(w, fam, TAU, U) is None:
        for k in range(1, len(w)):
            assert find_shortening_subword(w[:k], fam, TAU, U) is None


def test_injection_into_quotient(fam, ball):
    # in <a, b | a^40> the shortening-free words of length <= 3 stay distinct,
    # while the excluded pair a^10 a^10, A^10 A^10 collides
    q = make_presentation("ab", ["a" * 40])
    assert check_small_cancellation(q, Fraction(1, 6)).verdict
    res = enumerate_shortening_free(U, fam, TAU, (), 1, ball, 3)
    images = [evaluate(w, U) for w in res.words]
    for i, x in enumerate(images):
        for y in images[i + 1 :]:
            assert not words_equal(x, y, q)
    assert words_equal(evaluate((1, 1), U), evaluate((-1, -1), U), q)


def test_ball_words_count():
    assert len(ball_words(2, 3)) == 53
