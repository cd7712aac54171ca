"""Twists, slides and mapping-class words acting on curve classes."""

import pytest

from crosscap.cells import CellComplex, triangulate
from crosscap.curves import (
    Surface,
    core_curve,
    enumerate_classes,
    geometric_intersection,
    isotopic,
    itinerary_curve,
)
from crosscap.mcg import Generator, MappingClass, crosscap_slide, twist


def torus_holder():
    """A torus wrapped in the Surface interface: a handedness oracle."""
    class FakeSig:
        genus = 0
        boundary = 0
        holes = 0
    cc = CellComplex({0: (0, 1, 2, 3)}, {0: (0, 2), 1: (1, 3)},
                     {0: False, 1: False})
    holder = Surface.__new__(Surface)
    holder.sig = FakeSig()
    holder.complex = cc
    holder.tri = triangulate(cc)
    holder._classes = []
    holder._gi_cache = {}
    holder._eq_cache = {}
    return holder


def test_torus_twist_ladder():
    s = torus_holder()
    cls = enumerate_classes(s, 6)
    a, b = [c for c in cls if c.weight == 3]
    x = b
    for m in (1, 2, 3):
        x = twist(a, x, 1)
        assert geometric_intersection(x, b) == m
        assert geometric_intersection(x, a) == 1
    back = twist(a, twist(a, x, -1), -1)
    assert geometric_intersection(back, b) == 1


def test_twist_requires_two_sided_core():
    s = Surface.get(3, 0)
    with pytest.raises(ValueError):
        twist(core_curve(s, 1), core_curve(s, 2), 1)


def test_twist_fixes_core_and_disjoint_targets():
    s = Surface.get(3, 0)
    c1 = itinerary_curve(s, ["s1", "s2"])
    assert isotopic(twist(c1, c1, 1), c1)
    a3 = core_curve(s, 3)
    assert isotopic(twist(c1, a3, 1), a3)


def test_twist_round_trip_and_intersection_with_core():
    s = Surface.get(3, 0)
    c1 = itinerary_curve(s, ["s1", "s2"])
    c2 = itinerary_curve(s, ["s2", "s3"])
    image = twist(c1, c2, 1)
    assert isotopic(twist(c1, image, -1), c2)
    assert geometric_intersection(image, c1) == geometric_intersection(c2, c1)


def test_fan_distinctness_2_1():
    s = Surface.get(2, 1)
    cls = enumerate_classes(s, 8)
    a = next(c for c in cls if c.is_two_sided)
    b = next(c for c in cls if not c.is_two_sided)
    fan = [twist(a, b, m) for m in range(-3, 4)]
    for i in range(len(fan)):
        for j in range(i + 1, len(fan)):
            assert not isotopic(fan[i], fan[j])


def test_slide_table_entries():
    s = Surface.get(3, 0)
    a3 = core_curve(s, 3)
    c1 = itinerary_curve(s, ["s1", "s2"])
    c2 = itinerary_curve(s, ["s2", "s3"])
    w = twist(c2, c1, 1)
    j = twist(c1, c2, 1)
    assert isotopic(crosscap_slide(a3, c2, c1), c1)
    assert isotopic(crosscap_slide(a3, c2, c2), c2)
    assert isotopic(crosscap_slide(a3, c2, w), j)


def test_slide_round_trip_and_preconditions():
    s = Surface.get(3, 0)
    a3 = core_curve(s, 3)
    c1 = itinerary_curve(s, ["s1", "s2"])
    c2 = itinerary_curve(s, ["s2", "s3"])
    d = itinerary_curve(s, ["s1", "e2"])
    image = crosscap_slide(a3, c2, d)
    assert isotopic(crosscap_slide(a3, c2, image, -1), d)
    with pytest.raises(ValueError):
        crosscap_slide(c2, c1, d)          # mu must be 1-sided
    with pytest.raises(ValueError):
        crosscap_slide(a3, c1, d)          # i(mu, alpha) != 1


def test_word_identity_and_cancellation():
    s = Surface.get(3, 0)
    c1 = itinerary_curve(s, ["s1", "s2"])
    c2 = itinerary_curve(s, ["s2", "s3"])
    g = Generator("twist", (c1,), name="t_c1")
    word = MappingClass((g, g.inverse()))
    assert isotopic(word.apply(c2), c2)
    assert isotopic(MappingClass().apply(c2), c2)
    squared = MappingClass((g, g))
    assert isotopic(squared.apply(c2), twist(c1, twist(c1, c2, 1), 1))


def test_word_serialization():
    s = Surface.get(3, 0)
    c1 = itinerary_curve(s, ["s1", "s2"], name="c1")
    a3 = core_curve(s, 3)
    c2 = itinerary_curve(s, ["s2", "s3"], name="c2")
    word = MappingClass((Generator("twist", (c1,), name="t_c1"),
                         Generator("slide", (a3, c2), name="y")))
    assert word.json_list() == [{"twist": "c1", "dir": 1},
                                {"slide": ["a3", "c2"], "dir": 1}]
