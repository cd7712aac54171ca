"""Symmetries of the polygon model as combinatorial automorphisms.

An automorphism is given by a dart bijection together with a per-face flag
telling whether the face's boundary cycle is traversed backwards by the map.
Applying an automorphism to a curve diagram is exact bookkeeping: edges map
to edges and crossing parameters transform by the face-reversal and gluing
conventions.  The dihedral symmetries of the defining polygon give useful
mapping classes for free, in particular the reflections that exchange two
crosscaps.
"""

from __future__ import annotations

from fractions import Fraction

from .cells import Triangulation, polygon_edge_word
from .curves import CurveClass, Surface, TRIVIAL, classify_candidate
from .diagram import Crossing, Diagram


class CellAutomorphism:
    """A simplicial self-map of a triangulation given by a dart bijection."""

    def __init__(self, tri: Triangulation, dart_map, face_reversed):
        self.tri = tri
        self.dart_map = dict(dart_map)
        self.face_reversed = dict(face_reversed)
        self.face_map = {}
        for f, ds in tri.faces.items():
            images = {tri.dart_face[self.dart_map[d]] for d in ds}
            if len(images) != 1:
                raise ValueError(f"dart map does not send face {f} to a face")
            self.face_map[f] = images.pop()
        self.edge_map = {}
        for e, ds in tri.edges.items():
            images = {tri.dart_edge[self.dart_map[d]] for d in ds}
            if len(images) != 1:
                raise ValueError(f"dart map does not send edge {e} to an edge")
            self.edge_map[e] = images.pop()
        self._check()

    def _check(self):
        tri = self.tri
        for f, ds in tri.faces.items():
            rev = self.face_reversed[f]
            for i, d in enumerate(ds):
                nd = ds[(i + 1) % len(ds)]
                want = tri.prev_dart(self.dart_map[d]) if rev \
                    else tri.next_dart(self.dart_map[d])
                if self.dart_map[nd] != want:
                    raise ValueError("dart map is not simplicial on face "
                                     f"{f}")
        for e, ds in tri.edges.items():
            e2 = self.edge_map[e]
            if len(ds) != len(tri.edges[e2]):
                raise ValueError("boundary edge mapped to interior edge")
            if len(ds) == 2:
                # parameter maps must intertwine the two gluings
                t = Fraction(1, 3)
                u1 = self._push_param(e, t, via=0)
                u2 = self._push_param(e, t, via=1)
                if u1 != u2:
                    raise ValueError(f"gluing conventions broken on edge {e}")

    def _push_param(self, e, t, via):
        """Image reference parameter of (e, t) computed through dart ``via``."""
        tri = self.tri
        d = tri.edges[e][via]
        local = t if via == 0 else \
            (t if tri.flip.get(e, False) else 1 - t)
        f = tri.dart_face[d]
        local2 = 1 - local if self.face_reversed[f] else local
        d2 = self.dart_map[d]
        e2 = self.edge_map[e]
        if d2 == tri.edges[e2][0]:
            return local2
        return local2 if tri.flip.get(e2, False) else 1 - local2

    def push_param(self, e, t):
        return self._push_param(e, t, via=0)

    def apply(self, curve: CurveClass) -> CurveClass:
        surface = curve.surface
        steps = []
        for c, f in curve.diagram.curves[0]:
            steps.append((Crossing(self.edge_map[c.edge],
                                   self.push_param(c.edge, c.param)),
                          self.face_map[f]))
        cand = classify_candidate(surface, Diagram(self.tri, [steps]))
        if cand is TRIVIAL:
            raise RuntimeError("automorphism produced an inessential curve")
        return surface.intern(cand)


def _base_to_cone(surface: Surface, base_dart_map, base_face_reversed):
    """Extend an automorphism of the two-polygon base to the triangulation."""
    tri = surface.tri
    base = surface.complex
    dart_map = {}
    face_reversed = {}
    for f, ds in tri.faces.items():
        d0 = ds[0]
        d0_img = base_dart_map[d0]
        f_img = tri.dart_face[d0_img]
        rev = base_face_reversed[base.dart_face[d0]]
        face_reversed[f] = rev
        ids = tri.faces[f_img]
        if ids[0] != d0_img:
            raise ValueError("cone triangle does not start with its base dart")
        if rev:
            dart_map[ds[0]] = ids[0]
            dart_map[ds[1]] = ids[2]
            dart_map[ds[2]] = ids[1]
        else:
            for a, b in zip(ds, ids):
                dart_map[a] = b
    return CellAutomorphism(tri, dart_map, face_reversed)


def polygon_reflection(surface: Surface, fixed_position: int):
    """Reflection of both polygons about the axis through ``fixed_position``.

    Positions index the polygon boundary word; the reflection sends position
    k to (2*fixed_position - k) mod m on both copies.  It exists as a cell
    automorphism only when the edge word is symmetric about the axis.
    """
    sig = surface.sig
    word = polygon_edge_word(sig)
    m = len(word)
    for k in range(m):
        k2 = (2 * fixed_position - k) % m
        if word[k][0] != word[k2][0]:
            raise ValueError("edge word is not symmetric about this axis")
    base = surface.complex
    base_dart_map = {}
    for k in range(m):
        k2 = (2 * fixed_position - k) % m
        base_dart_map[k] = k2                # copy A darts are 0..m-1
        base_dart_map[m + k] = m + k2        # copy B darts are m..2m-1
    base_face_reversed = {0: True, 1: True}
    return _base_to_cone(surface, base_dart_map, base_face_reversed)


def polygon_rotation(surface: Surface, shift_blocks: int):
    """Rotation of a closed-surface polygon by whole (s, e) blocks."""
    sig = surface.sig
    if sig.boundary != 0:
        raise ValueError("block rotations need a closed surface")
    m = 2 * sig.genus
    base_dart_map = {}
    for k in range(m):
        k2 = (k + 2 * shift_blocks) % m
        base_dart_map[k] = k2
        base_dart_map[m + k] = m + k2
    return _base_to_cone(surface, base_dart_map, base_face_reversed={0: False, 1: False})
