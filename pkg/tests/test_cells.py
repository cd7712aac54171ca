"""Cell complex construction, classification and serialization."""

import pytest

from crosscap.cells import (
    CellComplex,
    SurfaceSig,
    SurfaceClass,
    build_polygon_model,
    triangulate,
)


def square(flip_tb, flip_lr):
    """One square face, top/bottom and left/right glued with given flips."""
    faces = {0: (0, 1, 2, 3)}
    edges = {0: (0, 2), 1: (1, 3)}
    flip = {0: flip_tb, 1: flip_lr}
    return CellComplex(faces, edges, flip)


def test_torus_and_klein_bottle():
    torus = square(False, False)
    assert torus.euler_characteristic == 0
    assert torus.classify() == SurfaceClass(True, 1, 0)
    klein = square(True, False)
    assert klein.euler_characteristic == 0
    assert klein.classify() == SurfaceClass(False, 2, 0)


def test_annulus_and_mobius():
    # Square with only left/right glued; top and bottom stay boundary.
    faces = {0: (0, 1, 2, 3)}
    annulus = CellComplex(faces, {0: (1, 3), 1: (0,), 2: (2,)}, {0: False})
    assert annulus.classify() == SurfaceClass(True, 0, 2)
    assert len(annulus.boundary_cycles()) == 2
    mobius = CellComplex(faces, {0: (1, 3), 1: (0,), 2: (2,)}, {0: True})
    assert mobius.classify() == SurfaceClass(False, 1, 1)
    assert len(mobius.boundary_cycles()) == 1


def test_projective_plane():
    # Bigon with its two sides glued antipodally.
    faces = {0: (0, 1)}
    rp2 = CellComplex(faces, {0: (0, 1)}, {0: True})
    assert rp2.classify() == SurfaceClass(False, 1, 0)
    assert rp2.euler_characteristic == 1


@pytest.mark.parametrize("g,n", [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1),
                                 (3, 0), (3, 2), (4, 1), (5, 0)])
def test_polygon_model_classification(g, n):
    cc = build_polygon_model(SurfaceSig(g, n))
    assert cc.euler_characteristic == 2 - g - n
    assert len(cc.boundary_cycles()) == n
    assert cc.classify() == SurfaceClass(False, g, n)


def test_polygon_model_edge_counts():
    cc = build_polygon_model(SurfaceSig(4, 1))
    assert cc.euler_characteristic == -3
    assert len(cc.boundary_cycles()) == 1
    glued_e = [e for e, lab in cc.labels.items()
               if lab.startswith("e") and len(cc.edges[e]) == 2]
    assert len(glued_e) == 5


def test_polygon_model_rejects_genus_zero():
    with pytest.raises(ValueError):
        build_polygon_model(SurfaceSig(0, 2))


@pytest.mark.parametrize("g,n", [(1, 2), (3, 0), (2, 1)])
def test_triangulation_preserves_type(g, n):
    cc = build_polygon_model(SurfaceSig(g, n))
    tri = triangulate(cc)
    assert all(len(ds) == 3 for ds in tri.faces.values())
    assert tri.euler_characteristic == cc.euler_characteristic
    assert tri.classify() == cc.classify()


def test_crosscap_edges_carry_flip():
    tri = triangulate(build_polygon_model(SurfaceSig(3, 0)))
    s_edges = [e for e, lab in tri.labels.items() if lab in ("s1", "s2", "s3")]
    assert len(s_edges) == 3
    assert all(tri.flip[e] for e in s_edges)


def test_json_round_trip():
    cc = build_polygon_model(SurfaceSig(3, 1))
    text = cc.to_json()
    cc2 = CellComplex.from_json(text)
    assert cc2.to_json() == text
    assert cc2.classify() == cc.classify()


def test_small_exceptional_flags():
    assert SurfaceSig(1, 2).is_small_exceptional
    assert SurfaceSig(2, 0).is_small_exceptional
    assert SurfaceSig(2, 1).is_small_exceptional
    assert SurfaceSig(2, 2).is_small_exceptional
    assert SurfaceSig(1, 3).is_small_exceptional
    assert not SurfaceSig(3, 0).is_small_exceptional
    assert not SurfaceSig(4, 1).is_small_exceptional
