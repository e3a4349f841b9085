from hypothesis import given
from hypothesis import strategies as st

from conftest import words
from scgrowth.axes import Line, ball_words, neighbourhood_overlap_diameter, translate_constant
from scgrowth.words import cyclic_reduce, inverse, mul, power
from oracles import tree_dist, tree_reduce, tree_words


def oracle_line(base, root, span):
    """Points of base . line(root) with |t| <= span, built letter by letter."""
    fwd = tuple(root) * (span // len(root) + 1)
    bwd = tuple(-x for x in reversed(root)) * (span // len(root) + 1)
    pts = [tree_reduce(tuple(base) + fwd[:t]) for t in range(span + 1)]
    pts += [tree_reduce(tuple(base) + bwd[:t]) for t in range(1, span + 1)]
    return pts


def oracle_dist_to_line(x, pts):
    return min(tree_dist(x, q) for q in pts)


roots = st.sampled_from([(1,), (1, 2), (1, 1, 2), (1, -2)])


@given(words(2, 4, reduced=True), roots, words(2, 6, reduced=True))
def test_projection_is_nearest_point(base, root, x):
    line = Line(base, root)
    pts = oracle_line(base, root, 24)
    d = oracle_dist_to_line(x, pts)
    assert line.distance(x) == d
    assert tree_dist(x, line.project(x)) == d


@given(words(2, 5, reduced=True))
def test_axis_is_translated_by_g(g):
    core, _ = cyclic_reduce(g)
    if not core:
        return
    line = Line.axis_of(g)
    for t in range(-3, 4):
        x = line.point(t)
        assert tree_dist(x, mul(g, x)) == len(core)


def brute_translate_constant(root, e, rank, radius):
    """sup diam over a finite window: points of the radius ball near both lines."""
    L = oracle_line((), root, radius + e)
    pts = [w for n in range(radius + 1) for w in tree_words(rank, n)]
    near_L = [x for x in pts if oracle_dist_to_line(x, L) <= e]
    best = 0
    for v in ball_words(rank, 2 * e + len(root)):
        if Line((), root).same_as(Line(v, root)):
            continue
        M = oracle_line(v, root, radius + e + len(v))
        both = [x for x in near_L if oracle_dist_to_line(x, M) <= e]
        diam = max((tree_dist(a, b) for a in both for b in both), default=0)
        best = max(best, diam)
    return best


def test_translate_constant_matches_brute_force():
    for e in (0, 1, 2):
        assert translate_constant(Line((), (1,)), e, 2) == brute_translate_constant((1,), e, 2, 5)
    assert translate_constant(Line((), (1, 2)), 1, 2) == brute_translate_constant((1, 2), 1, 2, 5)


def test_translate_constant_values():
    assert [translate_constant(Line((), (1,)), e, 2) for e in range(3)] == [0, 1, 3]


def test_overlap_diameter_shared_segment():
    l1 = Line((), (1, 2))
    l2 = Line((1, 2, 1), (2, 2, 1))  # meets l1 along the edge a b a ... then leaves
    d = neighbourhood_overlap_diameter(l1, l2, 0)
    pts1 = set(oracle_line((), (1, 2), 30))
    pts2 = set(oracle_line(l2.base, l2.root, 30))
    both = pts1 & pts2
    assert d == max(tree_dist(a, b) for a in both for b in both)


def test_same_as_and_canonical():
    a = Line((), (1, 2))
    b = Line(power((1, 2), 3), (1, 2))
    c = Line((), inverse((1, 2)))
    assert a.same_as(b) and a.same_as(c)
    assert a.canonical() == b.canonical()
