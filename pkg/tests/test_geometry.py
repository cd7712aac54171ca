"""Geometric intersection numbers and configuration predicates."""

import itertools

import pytest

from crosscap.curves import (
    Surface,
    core_curve,
    enumerate_classes,
    geometric_intersection,
    hole_subset_curve,
    isotopic,
    itinerary_curve,
    one_sided_loop,
    two_sided_chord,
)
from crosscap.geometry import (
    are_disjoint,
    intersection_matrix,
    is_top_pants_decomposition,
    verify_induced_path,
    verify_pentagon,
)


def test_identical_classes_rejected():
    s = Surface.get(3, 0)
    a = core_curve(s, 1)
    with pytest.raises(ValueError):
        geometric_intersection(a, a)


def test_symmetry_on_census_pairs():
    s = Surface.get(2, 1)
    cls = enumerate_classes(s, 8)
    for x, y in itertools.combinations(cls, 2):
        assert geometric_intersection(x, y) == geometric_intersection(y, x)


def test_one_holed_klein_census_values():
    s = Surface.get(1, 2)
    a, b = enumerate_classes(s, 8)
    assert geometric_intersection(a, b) == 1


def test_headline_values_on_4_1():
    s = Surface.get(4, 1)
    w2 = hole_subset_curve(s, [1, 3])
    assert geometric_intersection(w2, two_sided_chord(s, 1, 3)) == 2
    assert geometric_intersection(w2, two_sided_chord(s, 2, 5)) == 2
    assert geometric_intersection(w2, two_sided_chord(s, 3, 5)) == 0
    assert geometric_intersection(
        two_sided_chord(s, 1, 3), two_sided_chord(s, 2, 4)) == 2


def test_chord_disjointness_follows_interleaving():
    # blocks of holes: two chord curves are disjoint exactly when their
    # blocks nest or are disjoint
    s = Surface.get(4, 1)
    pairs = [((1, 3), (3, 5), True), ((1, 3), (2, 4), False),
             ((1, 4), (2, 4), True), ((2, 4), (3, 5), False)]
    for (i1, j1), (i2, j2), disjoint in pairs:
        x = two_sided_chord(s, i1, j1)
        y = two_sided_chord(s, i2, j2)
        assert are_disjoint(x, y) == disjoint, ((i1, j1), (i2, j2))


def test_intersection_matrix_shape():
    s = Surface.get(3, 0)
    cs = [core_curve(s, i) for i in (1, 2, 3)]
    mat = intersection_matrix(cs)
    assert mat == [[0, 0, 0], [0, 0, 0], [0, 0, 0]]


def test_pants_maximality_structural():
    s = Surface.get(4, 1)
    P = [core_curve(s, i) for i in range(1, 5)]
    P += [two_sided_chord(s, 1, 3), two_sided_chord(s, 3, 5)]
    ok, cert = is_top_pants_decomposition(P, bound=6)
    assert ok
    assert cert[0] == "all complement pieces are pants"


def test_pants_failure_modes():
    s = Surface.get(4, 1)
    P = [core_curve(s, i) for i in range(1, 5)]
    P += [two_sided_chord(s, 1, 3), two_sided_chord(s, 3, 5)]
    ok, cert = is_top_pants_decomposition(P[:-1], bound=6)
    assert not ok
    bad = P[:4] + [two_sided_chord(s, 1, 3), two_sided_chord(s, 2, 4)]
    ok, cert = is_top_pants_decomposition(bad, bound=6)
    assert not ok
    assert cert[0] == "intersecting pair"


def test_pentagon_on_4_1():
    s = Surface.get(4, 1)
    from crosscap.complexes import r_curve, w_curve
    pent = [two_sided_chord(s, 3, 5), two_sided_chord(s, 1, 3),
            two_sided_chord(s, 1, 4), r_curve(s, 3), w_curve(s, 2)]
    assert verify_pentagon(*pent)
    # pairwise disjoint quintuples have extra edges
    cores = [core_curve(s, i) for i in range(1, 5)]
    assert not verify_pentagon(*(cores + [two_sided_chord(s, 1, 3)]))


def test_pentagon_arity():
    s = Surface.get(4, 1)
    with pytest.raises(TypeError):
        verify_pentagon(core_curve(s, 1), core_curve(s, 2))


def test_induced_path():
    s = Surface.get(3, 0)
    from crosscap.complexes import b30_curves
    N = b30_curves(s)
    assert verify_induced_path([N["e"], N["j"], N["l"], N["w"], N["a2"]])
    assert not verify_induced_path([N["a1"], N["a2"], N["a3"]])
    assert verify_induced_path([N["a1"], N["a2"]])
    with pytest.raises(ValueError):
        verify_induced_path([N["a1"]])
