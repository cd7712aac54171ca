"""Curve classes: construction, censuses, isotopy and cutting."""

import json

import pytest

from crosscap.curves import (
    Surface,
    TRIVIAL,
    classify_candidate,
    core_curve,
    enumerate_classes,
    geometric_intersection,
    hole_subset_curve,
    isotopic,
    itinerary_curve,
    one_sided_loop,
    two_sided_chord,
)
from crosscap.cells import SurfaceClass
from crosscap.diagram import Diagram, tighten


@pytest.mark.parametrize("g,n,want", [(1, 0, 1), (1, 1, 1), (1, 2, 2), (2, 0, 3)])
def test_small_census(g, n, want):
    s = Surface.get(g, n)
    assert len(enumerate_classes(s, 8)) == want


def test_census_monotone():
    s = Surface.get(1, 2)
    small = enumerate_classes(s, 6)
    large = enumerate_classes(s, 8)
    assert len(small) <= len(large)
    assert all(any(c is d for d in large) for c in small)


def test_census_all_one_sided_on_projective_like():
    s = Surface.get(1, 2)
    assert all(not c.is_two_sided for c in enumerate_classes(s, 8))


def test_core_curves_one_sided_with_expected_complement():
    s = Surface.get(3, 0)
    for i in (1, 2, 3):
        a = core_curve(s, i)
        assert not a.is_two_sided
        assert a.cut_along() == (SurfaceClass(False, 2, 1),)


def test_cores_pairwise_disjoint_and_distinct():
    s = Surface.get(4, 1)
    cores = [core_curve(s, i) for i in range(1, 5)]
    for i in range(4):
        for j in range(i + 1, 4):
            assert not isotopic(cores[i], cores[j])
            assert geometric_intersection(cores[i], cores[j]) == 0


def test_one_sided_loop_index_rule():
    s = Surface.get(3, 0)
    with pytest.raises(ValueError):
        one_sided_loop(s, 1, 1)
    with pytest.raises(ValueError):
        one_sided_loop(s, 2, 1)   # j = i-1 collapses to the core


def test_two_sided_chord_index_rule():
    s = Surface.get(4, 1)
    with pytest.raises(ValueError):
        two_sided_chord(s, 1, 2)
    with pytest.raises(ValueError):
        two_sided_chord(s, 1, 5)  # cyclic distance 1


def test_chord_curve_is_two_sided_and_separates():
    s = Surface.get(4, 1)
    b = two_sided_chord(s, 1, 3)
    assert b.is_two_sided
    pieces = b.cut_along()
    assert len(pieces) == 2
    assert sum(p.euler_characteristic for p in pieces) == -3


def test_one_sided_cut_leaves_single_boundary():
    s = Surface.get(3, 0)
    one_sided = itinerary_curve(s, ["s1", "s2", "s3", "e3"])
    pieces = one_sided.cut_along()
    assert len(pieces) == 1
    assert pieces[0] == SurfaceClass(True, 1, 1)


def test_triple_crosscap_curve_detects_orientable_complement():
    s = Surface.get(3, 0)
    l = itinerary_curve(s, ["s1", "s2", "s3", "e3"])
    assert not l.is_two_sided
    assert all(p.orientable for p in l.cut_along())


def test_subset_curve_disjoint_from_enclosed_cores():
    s = Surface.get(4, 1)
    w = hole_subset_curve(s, [1, 3])
    for i in range(1, 5):
        assert geometric_intersection(w, core_curve(s, i)) == 0


def test_isotopy_distinguishes_equal_partitions():
    # two separating curves with the same hole partition need not be isotopic
    from crosscap.symmetry import polygon_reflection
    s = Surface.get(4, 1)
    w2 = hole_subset_curve(s, [1, 3])
    w3 = hole_subset_curve(s, [2, 4])
    image = polygon_reflection(s, 3).apply(w2)
    assert not isotopic(image, w2)
    assert not isotopic(image, w3)


def test_tighten_removes_backtracks():
    s = Surface.get(1, 2)
    a = core_curve(s, 1)
    steps = list(a.diagram.curves[0])
    # insert a backtrack across an interior edge of the first face
    c0, f0 = steps[0]
    tri = s.tri
    spare = [e for e, ds in tri.edges.items()
             if len(ds) == 2 and any(tri.dart_face[d] == f0 for d in ds)
             and e != c0.edge][0]
    from fractions import Fraction
    from crosscap.diagram import Crossing
    other_face = [tri.dart_face[d] for d in tri.edges[spare]
                  if tri.dart_face[d] != f0][0]
    wiggle = [(Crossing(spare, Fraction(1, 3)), other_face),
              (Crossing(spare, Fraction(2, 3)), f0)]
    fat = Diagram(tri, [steps[:1] + wiggle + steps[1:]])
    slim = tighten(fat)
    assert slim.total_weight() == a.diagram.total_weight()


def test_trivial_candidates_are_rejected():
    s = Surface.get(2, 0)
    # a circle around the cone point of the first polygon bounds a disk
    from fractions import Fraction
    from crosscap.diagram import Crossing
    tri = s.tri
    loop = []
    for k in range(4):
        spoke = tri.edge_by_label(f"spoke0.{(k + 1) % 4}")
        loop.append((Crossing(spoke, Fraction(1, 2)), (k + 1) % 4))
    assert classify_candidate(s, Diagram(tri, [loop])) is TRIVIAL


def test_json_round_trip_schema():
    s = Surface.get(3, 0)
    a = core_curve(s, 1)
    payload = a.to_json_dict()
    assert payload["surface"] == [3, 0]
    assert len(payload["coords"]) == len(s.tri.edges)
    assert sum(payload["coords"]) == a.weight
    json.dumps(payload)
