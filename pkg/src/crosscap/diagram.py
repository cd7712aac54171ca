"""Transverse curve diagrams on a triangulated surface.

A :class:`Diagram` is a system of simple closed curves drawn transversally to
the edges of a :class:`~crosscap.cells.Triangulation`.  Each curve is a cyclic
sequence of *steps* ``(crossing, face)``: after puncturing an edge at
``crossing`` the curve runs as a chord through ``face`` to the next crossing.
Crossings carry an exact rational parameter measured along the reference dart
(``edges[e][0]``) of their edge, so transverse positions are unambiguous and
the ``flip`` flag of an edge translates parameters across it exactly.

Inside a face, chords are realised as straight segments between points placed
on a strictly convex rational arc, so chord crossings, their order along a
chord and the rotation at a crossing are decided by exact integer arithmetic.

The central construction is :func:`cut_complex`: the complement of the curve
system assembled as an honest :class:`CellComplex`, whose faces are the
arrangement cells and whose interior edges are the surviving pieces of
triangulation edges.  Classification of complement components drives
everything downstream: essentiality tests, cutting, isotopy tests and bigon
detection.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cells import CellComplex, Triangulation


class Crossing:
    """A transverse intersection of a curve with a triangulation edge."""

    __slots__ = ("edge", "param")

    def __init__(self, edge, param):
        self.edge = edge
        self.param = Fraction(param)
        if not 0 < self.param < 1:
            raise ValueError("crossing parameter must lie strictly inside (0,1)")

    def __repr__(self):
        return f"Crossing(e{self.edge}@{self.param})"


class TrivialCurve(Exception):
    """Raised when tightening contracts a curve to nothing."""


def convex_point(coord):
    """Point on a strictly convex arc for boundary coordinate ``coord``.

    Rational circle parametrisation ((1-t^2)/(1+t^2), 2t/(1+t^2)): strictly
    monotone in angle for t >= 0, so distinct coordinates give points in
    strictly convex position.
    """
    t = Fraction(coord)
    den = 1 + t * t
    return ((1 - t * t) / den, (2 * t) / den)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _seg_intersection(p1, p2, p3, p4):
    """Interior intersection of segments p1p2 and p3p4, or None (exact)."""
    d1 = _cross(p3, p4, p1)
    d2 = _cross(p3, p4, p2)
    d3 = _cross(p1, p2, p3)
    d4 = _cross(p1, p2, p4)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
       ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        t = d1 / (d1 - d2)
        return (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))
    return None


def _angle_less(u, v):
    """Exact counterclockwise-from-positive-x comparison of direction vectors."""
    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1
    hu, hv = half(u), half(v)
    if hu != hv:
        return hu < hv
    return u[0] * v[1] - u[1] * v[0] > 0


def sort_by_angle(items):
    """Sort (vector, payload) pairs counterclockwise with the exact comparator."""
    out = list(items)
    for i in range(1, len(out)):
        j = i
        while j > 0 and _angle_less(out[j][0], out[j - 1][0]):
            out[j], out[j - 1] = out[j - 1], out[j]
            j -= 1
    return out


class Diagram:
    """A system of simple closed curves transverse to a triangulation."""

    def __init__(self, tri: Triangulation, curves):
        self.tri = tri
        self.curves = [list(c) for c in curves]
        self._check_steps()

    def _check_steps(self):
        for curve in self.curves:
            if not curve:
                raise ValueError("empty curve")
            for i, (c, f) in enumerate(curve):
                nc, _ = curve[(i + 1) % len(curve)]
                for x in (c, nc):
                    darts = self.tri.edges[x.edge]
                    if len(darts) != 2:
                        raise ValueError("curves may not cross boundary edges")
                    if not any(self.tri.dart_face[d] == f for d in darts):
                        raise ValueError(f"edge {x.edge} does not bound face {f}")

    # -- bookkeeping -------------------------------------------------------

    def all_crossings(self):
        out = []
        for curve in self.curves:
            out.extend(c for c, _ in curve)
        return out

    def edge_crossings(self):
        """Map edge -> crossings sorted by reference parameter."""
        by_edge = {}
        for c in self.all_crossings():
            by_edge.setdefault(c.edge, []).append(c)
        for e, lst in by_edge.items():
            lst.sort(key=lambda c: c.param)
            params = [c.param for c in lst]
            if len(set(params)) != len(params):
                raise ValueError(f"duplicate crossing parameters on edge {e}")
        return by_edge

    def total_weight(self):
        return sum(len(c) for c in self.curves)

    def dart_in_face(self, edge, face):
        darts = [d for d in self.tri.edges[edge]
                 if self.tri.dart_face[d] == face]
        if len(darts) != 1:
            raise ValueError(f"edge {edge} is not a simple side of face {face}")
        return darts[0]

    def local_param(self, edge, face, param):
        """Parameter of a crossing along the dart of ``edge`` inside ``face``."""
        d = self.dart_in_face(edge, face)
        if d == self.tri.edges[edge][0]:
            return param
        return param if self.tri.flip.get(edge, False) else 1 - param

    def ref_param(self, edge, face, local):
        """Inverse of :meth:`local_param`."""
        d = self.dart_in_face(edge, face)
        if d == self.tri.edges[edge][0]:
            return local
        return local if self.tri.flip.get(edge, False) else 1 - local

    def port_coord(self, face, crossing):
        """Boundary coordinate of a crossing on the boundary of ``face``."""
        d = self.dart_in_face(crossing.edge, face)
        slot = self.tri.dart_pos[d]
        return slot + self.local_param(crossing.edge, face, crossing.param)

    def face_chords(self):
        """Map face -> list of ((curve, step), crossing_in, crossing_out)."""
        chords = {f: [] for f in self.tri.faces}
        for k, curve in enumerate(self.curves):
            for i, (c, f) in enumerate(curve):
                nc, _ = curve[(i + 1) % len(curve)]
                chords[f].append(((k, i), c, nc))
        return chords

    def sided(self, k=0):
        """True for a 2-sided curve (even number of flipped-edge crossings)."""
        flips = sum(1 for c, _ in self.curves[k]
                    if self.tri.flip.get(c.edge, False))
        return flips % 2 == 0

    def homology_mod2(self, k=0):
        """Crossing parity with every flipped (crosscap) edge: a Z/2 fingerprint."""
        flip_edges = sorted(e for e in self.tri.edges if self.tri.flip.get(e))
        counts = {e: 0 for e in flip_edges}
        for c, _ in self.curves[k]:
            if c.edge in counts:
                counts[c.edge] += 1
        return tuple(counts[e] % 2 for e in flip_edges)

    def copy(self):
        return Diagram(self.tri, [list(c) for c in self.curves])


# ---------------------------------------------------------------------------
# face arrangements
# ---------------------------------------------------------------------------

class _FaceArrangement:
    """Planar subdivision of one triangular face by the chords inside it."""

    def __init__(self, diagram, face, chords):
        self.diagram = diagram
        self.face = face
        self.nodes = {}     # node id -> ("corner", k) | ("port", crossing) | ("x", pair)
        self.pos = {}
        self.coord = {}     # boundary node -> boundary coordinate
        self._next = 0

        def new_node(kind, point, coord=None):
            nid = self._next
            self._next += 1
            self.nodes[nid] = kind
            self.pos[nid] = point
            if coord is not None:
                self.coord[nid] = coord
            return nid

        for k in range(3):
            new_node(("corner", k), convex_point(k), Fraction(k))
        self.port_node = {}
        ports = set()
        for _, cin, cout in chords:
            ports.add(cin)
            ports.add(cout)
        for c in ports:
            coord = diagram.port_coord(face, c)
            self.port_node[c] = new_node(("port", c), convex_point(coord), coord)

        self.chords = []
        for label, cin, cout in chords:
            self.chords.append((label, self.port_node[cin], self.port_node[cout]))

        # a chord between two consecutive boundary nodes would coincide with
        # the boundary segment there; such backtrack chords are routed as a
        # polyline through a bend point pulled toward the face centroid
        bnodes = sorted(self.coord, key=lambda n: self.coord[n])
        consecutive = set()
        for i, n in enumerate(bnodes):
            m = bnodes[(i + 1) % len(bnodes)]
            consecutive.add((n, m))
            consecutive.add((m, n))
        centroid = (sum(self.pos[n][0] for n in bnodes) / len(bnodes),
                    sum(self.pos[n][1] for n in bnodes) / len(bnodes))
        self.polylines = []
        self._chord_time = {}
        others = []
        for cj, (_, a2, b2) in enumerate(self.chords):
            others.append((self.pos[a2], self.pos[b2]))

        placed = []

        def place_bend(ci, a, b):
            # a backtrack chord joins adjacent boundary nodes, so nothing can
            # genuinely cross it; the bend is pulled in just far enough to
            # avoid touching any other chord or previously placed bend
            mid = ((self.pos[a][0] + self.pos[b][0]) / 2,
                   (self.pos[a][1] + self.pos[b][1]) / 2)
            eps = Fraction(1, 4096)
            while True:
                pt = (mid[0] + (centroid[0] - mid[0]) * eps,
                      mid[1] + (centroid[1] - mid[1]) * eps)
                obstacles = [seg for cj, seg in enumerate(others) if cj != ci]
                obstacles += placed
                clean = True
                for p2, q2 in obstacles:
                    if _seg_intersection(self.pos[a], pt, p2, q2) or \
                       _seg_intersection(pt, self.pos[b], p2, q2):
                        clean = False
                        break
                if clean:
                    return pt
                eps /= 16

        for ci, (label, a, b) in enumerate(self.chords):
            self._chord_time[(ci, a)] = Fraction(0)
            self._chord_time[(ci, b)] = Fraction(1)
            if (a, b) in consecutive:
                pt = place_bend(ci, a, b)
                bend = new_node(("bend", ci), pt)
                self._chord_time[(ci, bend)] = Fraction(1, 2)
                self.polylines.append([a, bend, b])
                placed.append((self.pos[a], pt))
                placed.append((pt, self.pos[b]))
            else:
                self.polylines.append([a, b])

        self.crossing_pairs = []
        splits = {i: [] for i in range(len(self.chords))}
        for i in range(len(self.chords)):
            for j in range(i + 1, len(self.chords)):
                for si in range(len(self.polylines[i]) - 1):
                    for sj in range(len(self.polylines[j]) - 1):
                        a1, b1 = self.polylines[i][si], self.polylines[i][si + 1]
                        a2, b2 = self.polylines[j][sj], self.polylines[j][sj + 1]
                        pt = _seg_intersection(self.pos[a1], self.pos[b1],
                                               self.pos[a2], self.pos[b2])
                        if pt is None:
                            continue
                        nid = new_node(("x", (i, j, si, sj)), pt)
                        self.crossing_pairs.append((nid, i, j))
                        self._chord_time[(i, nid)] = self._seg_time(i, si, pt)
                        self._chord_time[(j, nid)] = self._seg_time(j, sj, pt)
                        splits[i].append(nid)
                        splits[j].append(nid)

        # undirected edges with provenance
        self.edge_list = []
        for i, n in enumerate(bnodes):
            m = bnodes[(i + 1) % len(bnodes)]
            ca = self.coord[n]
            cb = self.coord[m] if i + 1 < len(bnodes) else Fraction(3)
            slot = int(ca)
            self.edge_list.append((n, m, ("bseg", slot, ca - slot, cb - slot)))
        for ci in range(len(self.chords)):
            interior = list(self.polylines[ci][1:-1]) + splits[ci]
            on_chord = sorted(((self.chord_t(ci, x), x) for x in interior),
                              key=lambda p: p[0])
            seq = [self.polylines[ci][0]] + [x for _, x in on_chord] + \
                [self.polylines[ci][-1]]
            for pi in range(len(seq) - 1):
                self.edge_list.append((seq[pi], seq[pi + 1], ("arc", ci, pi)))

        self._build_rotations()

    def _seg_time(self, ci, si, pt):
        """Chord time of a point on segment ``si`` of polyline ``ci``."""
        poly = self.polylines[ci]
        a, b = poly[si], poly[si + 1]
        t0 = self._chord_time[(ci, a)]
        t1 = self._chord_time[(ci, b)]
        pa, pb = self.pos[a], self.pos[b]
        dx, dy = pb[0] - pa[0], pb[1] - pa[1]
        if abs(dx) >= abs(dy):
            frac = (pt[0] - pa[0]) / dx
        else:
            frac = (pt[1] - pa[1]) / dy
        return t0 + (t1 - t0) * frac

    def chord_t(self, ci, x):
        """Position of node ``x`` along chord ``ci`` (0 at entry, 1 at exit)."""
        return self._chord_time[(ci, x)]

    def _build_rotations(self):
        ends = {n: [] for n in self.nodes}
        for ei, (a, b, _) in enumerate(self.edge_list):
            va = (self.pos[b][0] - self.pos[a][0], self.pos[b][1] - self.pos[a][1])
            if va == (0, 0):
                raise RuntimeError("degenerate arrangement edge")
            ends[a].append((va, (ei, 0)))
            ends[b].append(((-va[0], -va[1]), (ei, 1)))
        self.rotation = {n: [pay for _, pay in sort_by_angle(lst)]
                         for n, lst in ends.items()}

    def trace_cells(self):
        """Interior cells as closed walks of directed edges (ei, flag).

        flag 0 walks a->b.  Cells keep the interior on the left; the single
        negatively-oriented walk is the outer boundary and is dropped.
        """
        def arrive(dedge):
            ei, flag = dedge
            a, b, _ = self.edge_list[ei]
            return b if flag == 0 else a

        def leave(dedge):
            n = arrive(dedge)
            rot = self.rotation[n]
            i = rot.index((dedge[0], 1 - dedge[1]))
            return rot[(i - 1) % len(rot)]

        seen = set()
        cells = []
        for ei in range(len(self.edge_list)):
            for flag in (0, 1):
                d0 = (ei, flag)
                if d0 in seen:
                    continue
                walk = []
                d = d0
                while d not in seen:
                    seen.add(d)
                    walk.append(d)
                    d = leave(d)
                if d != d0:
                    raise RuntimeError("face tracing failed to close a cell")
                area = Fraction(0)
                for (wei, wflag) in walk:
                    a, b, _ = self.edge_list[wei]
                    if wflag == 1:
                        a, b = b, a
                    pa, pb = self.pos[a], self.pos[b]
                    area += pa[0] * pb[1] - pb[0] * pa[1]
                if area > 0:
                    cells.append(walk)
        return cells


# ---------------------------------------------------------------------------
# cut complexes (complement of a diagram)
# ---------------------------------------------------------------------------

class CutComplex:
    """Complement of a diagram assembled as a cell complex.

    ``dart_info`` maps boundary darts of the complex to provenance tuples:
    ("curve", curve_index, step_index, piece_index, side) for one side of a
    curve sub-arc, or ("surface", edge_label, edge) for a piece of an original
    boundary edge.  ``vertex_kind`` marks vertices coming from curve-curve
    crossings ("x"), curve-edge punctures ("port") or triangulation vertices.
    """

    def __init__(self, complex_, dart_info, vertex_kind, vertex_xid,
                 face_owner=None, seg_orient=None):
        self.complex = complex_
        self.dart_info = dart_info
        self.vertex_kind = vertex_kind
        self.vertex_xid = vertex_xid
        self.face_owner = face_owner or {}
        self.seg_orient = seg_orient or {}
        self._circles = None

    def components(self):
        return self.complex.classify_components()

    def boundary_circles(self):
        """List of (darts, provenance list, corner crossing ids).

        A corner is a boundary vertex at a curve-curve crossing; the same
        crossing can contribute several corners (one per quadrant the circle
        touches), so corner identity matters and is reported per vertex.
        """
        if self._circles is not None:
            return self._circles
        vertex_of = self.complex._endpoint_classes()
        out = []
        for cyc in self.complex.boundary_cycles():
            prov = [self.dart_info[d] for d in cyc]
            verts = set()
            for d in cyc:
                verts.add(vertex_of[(d, 0)])
                verts.add(vertex_of[(d, 1)])
            corners = tuple(sorted(self.vertex_xid[v] for v in verts
                                   if v in self.vertex_xid))
            out.append((cyc, prov, corners))
        self._circles = out
        return out

    def component_report(self):
        """Per component: (SurfaceClass, circle summaries).

        Each circle summary is (curve-index set, has original boundary,
        corner crossing-id tuple, provenance list).
        """
        comps = self.components()
        circle_face = []
        for cyc, prov, corners in self.boundary_circles():
            f = self.complex.dart_face[cyc[0]]
            curves = {p[1] for p in prov if p[0] == "curve"}
            has_surface = any(p[0] == "surface" for p in prov)
            circle_face.append((f, (curves, has_surface, corners, prov)))
        out = []
        for sclass, comp in comps:
            comp_set = set(comp)
            circles = [summary for f, summary in circle_face if f in comp_set]
            out.append((sclass, circles))
        return out


def cut_complex(diagram: Diagram) -> CutComplex:
    """Cut the surface along every curve of the diagram."""
    tri = diagram.tri
    all_chords = diagram.face_chords()
    edge_cross = diagram.edge_crossings()
    vclasses = tri._endpoint_classes()

    faces = {}
    edges = {}
    flips = {}
    labels = {}
    dart_info = {}
    dart_endpoints = {}
    seg_sides = {}
    face_owner = {}
    seg_orient = {}
    next_dart = itertools.count()
    next_face = itertools.count()
    next_edge = itertools.count()

    for f in sorted(tri.faces):
        a = _FaceArrangement(diagram, f, all_chords[f])

        def node_key(nid):
            kind = a.nodes[nid]
            if kind[0] == "corner":
                d = tri.faces[f][kind[1]]
                return ("vertex", vclasses[(d, 0)])
            if kind[0] == "port":
                return ("port", id(kind[1]))
            if kind[0] == "bend":
                return ("bend", f, kind[1])
            return ("x", f, kind[1])

        for walk in a.trace_cells():
            face_darts = []
            for (ei, flag) in walk:
                na, nb, kind = a.edge_list[ei]
                if flag == 1:
                    na, nb = nb, na
                d = next(next_dart)
                face_darts.append(d)
                dart_endpoints[d] = (node_key(na), node_key(nb))
                if kind[0] == "bseg":
                    _, slot, la, lb = kind
                    if flag == 1:
                        la, lb = lb, la
                    dart0 = tri.faces[f][slot]
                    e = tri.dart_edge[dart0]
                    ra = diagram.ref_param(e, f, la)
                    rb = diagram.ref_param(e, f, lb)
                    lo, hi = min(ra, rb), max(ra, rb)
                    mid = (lo + hi) / 2
                    below = sum(1 for c in edge_cross.get(e, [])
                                if c.param < mid)
                    orient = 1 if ra < rb else -1
                    seg_sides.setdefault((e, below), []).append((d, orient))
                    dart_info[d] = ("surface", tri.labels.get(e, e), e)
                else:
                    _, ci, piece = kind
                    label, _, _ = a.chords[ci]
                    curve_idx, step_idx = label
                    ta = a.chord_t(ci, na)
                    tb = a.chord_t(ci, nb)
                    side = "L" if ta < tb else "R"
                    dart_info[d] = ("curve", curve_idx, step_idx, piece, side)
            nf = next(next_face)
            faces[nf] = tuple(face_darts)
            face_owner[nf] = f

    for key in sorted(seg_sides, key=lambda kv: (kv[0], kv[1])):
        e, idx = key
        sides = seg_sides[key]
        if len(tri.edges[e]) == 1:
            for d, _ in sides:
                ne = next(next_edge)
                edges[ne] = (d,)
                labels[ne] = ("bdseg", e, idx)
            continue
        if len(sides) != 2:
            raise RuntimeError(f"edge segment {key} met {len(sides)} cell sides")
        (d0, o0), (d1, o1) = sides
        ne = next(next_edge)
        edges[ne] = (d0, d1)
        flips[ne] = (o0 == o1)
        labels[ne] = ("seg", e, idx)
        seg_orient[ne] = o0

    for d, info in dart_info.items():
        if info[0] == "curve":
            ne = next(next_edge)
            edges[ne] = (d,)

    complex_ = CellComplex(faces, edges, flips, labels)
    vertex_of = complex_._endpoint_classes()
    vertex_kind = {}
    vertex_xid = {}
    rank = {"x": 3, "port": 2, "bend": 1, "vertex": 0}
    for d, (ka, kb) in dart_endpoints.items():
        for endpoint, key in ((0, ka), (1, kb)):
            v = vertex_of[(d, endpoint)]
            kind = key[0]
            if v not in vertex_kind or rank[kind] > rank[vertex_kind[v]]:
                vertex_kind[v] = kind
            if kind == "x":
                vertex_xid[v] = key
    return CutComplex(complex_, dart_info, vertex_kind, vertex_xid,
                      face_owner, seg_orient)


# ---------------------------------------------------------------------------
# curve-level predicates built on cut complexes
# ---------------------------------------------------------------------------

def self_crossings(diagram: Diagram) -> int:
    """Number of crossings between chords of the same curve (0 if embedded)."""
    count = 0
    all_chords = diagram.face_chords()
    for f in diagram.tri.faces:
        a = _FaceArrangement(diagram, f, all_chords[f])
        for nid, i, j in a.crossing_pairs:
            ci = a.chords[i][0][0]
            cj = a.chords[j][0][0]
            if ci == cj:
                count += 1
    return count


def crossing_count(diagram: Diagram) -> int:
    """Total number of interior chord-chord crossings of the diagram."""
    count = 0
    all_chords = diagram.face_chords()
    for f in diagram.tri.faces:
        a = _FaceArrangement(diagram, f, all_chords[f])
        count += len(a.crossing_pairs)
    return count


def is_connected_curve(diagram: Diagram) -> bool:
    return len(diagram.curves) == 1


def tighten(diagram: Diagram) -> Diagram:
    """Remove backtracks: chords returning through the same edge at adjacent
    parameters with nothing in between.  Purely weight-reducing; the result
    is a smaller diagram of the same isotopy class.
    """
    cur = diagram.copy()
    changed = True
    while changed:
        changed = False
        by_edge = cur.edge_crossings()
        order = {e: [c.param for c in lst] for e, lst in by_edge.items()}
        for k, curve in enumerate(cur.curves):
            n = len(curve)
            for i in range(n):
                (c1, f) = curve[i]
                (c2, _) = curve[(i + 1) % n]
                if c1 is c2 or c1.edge != c2.edge:
                    continue
                params = order[c1.edge]
                i1 = params.index(c1.param)
                i2 = params.index(c2.param)
                if abs(i1 - i2) != 1:
                    continue
                if n == 2:
                    raise TrivialCurve()
                # merge: predecessor chord continues to successor chord in
                # the face on the other side of the edge
                prev_step = curve[(i - 1) % n]
                next_step = curve[(i + 1) % n]
                g = next_step[1]
                new_curve = []
                for j in range(n):
                    if j == i or j == (i + 1) % n:
                        continue
                    if j == (i - 1) % n:
                        new_curve.append((curve[j][0], g))
                    else:
                        new_curve.append(curve[j])
                cur = Diagram(cur.tri, [new_curve if kk == k else cc
                                        for kk, cc in enumerate(cur.curves)])
                changed = True
                break
            if changed:
                break
    return cur


# ---------------------------------------------------------------------------
# overlays and bigon reduction
# ---------------------------------------------------------------------------

def reparametrize(diagram: Diagram, seed: int = 0) -> Diagram:
    """Re-space crossing parameters, preserving their order on every edge.

    Order-preserving reparametrisation does not change the diagram up to
    isotopy; it is used to escape accidental triple points in a face
    arrangement.
    """
    by_edge = diagram.edge_crossings()
    new_crossing = {}
    for e, lst in by_edge.items():
        m = len(lst)
        for k, c in enumerate(lst):
            jitter = Fraction((seed * 7919 + k * 104729 + e * 131) % 1000 + 1,
                              1000 * (m + 1) * 3)
            param = Fraction(2 * k + 1, 2 * (m + 1)) + jitter
            new_crossing[id(c)] = Crossing(e, param)
    curves = [[(new_crossing[id(c)], f) for c, f in curve]
              for curve in diagram.curves]
    return Diagram(diagram.tri, curves)


def robust_cut_complex(diagram: Diagram, max_tries: int = 8) -> CutComplex:
    """Cut complex with deterministic perturbation retries on degeneracy."""
    d = diagram
    last = None
    for attempt in range(max_tries):
        try:
            return cut_complex(d)
        except RuntimeError as exc:
            last = exc
            d = reparametrize(diagram, seed=attempt + 1)
    raise RuntimeError(
        f"could not resolve arrangement degeneracies: {last}")


def overlay(dx: Diagram, dy: Diagram) -> Diagram:
    """Superimpose two single-curve diagrams as one two-curve diagram.

    The second curve's parameters are squeezed, order preserved, into the top
    gap of every edge, which is a valid transverse position for the pair.
    """
    if dx.tri is not dy.tri:
        raise ValueError("overlay requires diagrams on the same triangulation")
    x_by_edge = dx.edge_crossings()
    y_by_edge = dy.edge_crossings()
    new_crossing = {}
    for e, lst in y_by_edge.items():
        xs = x_by_edge.get(e, [])
        lo = max((c.param for c in xs), default=Fraction(0))
        span = 1 - lo
        m = len(lst)
        for k, c in enumerate(lst):
            new_crossing[id(c)] = Crossing(e, lo + span * Fraction(k + 1, m + 1))
    y_curves = [[(new_crossing[id(c)], f) for c, f in curve]
                for curve in dy.curves]
    return Diagram(dx.tri, [list(c) for c in dx.curves] + y_curves)


def _find_bigon(cut: CutComplex):
    """Locate a reducible bigon component of an overlay complement.

    Returns (darts, provenance, fixed, moving) for a disk component bounded
    by one arc of each of two curves meeting at two distinct crossings; the
    higher-indexed curve is the one to reroute.  None when the diagram is in
    pairwise minimal position.
    """
    reports = cut.component_report()
    for sclass, circles in reports:
        if not (sclass.orientable and sclass.genus == 0
                and sclass.boundary == 1):
            continue
        (curves, has_surface, corners, prov) = circles[0]
        if has_surface or len(curves) != 2:
            continue
        # a reducible bigon touches two distinct crossings once each; two
        # corners at the same crossing certify an isotopy, not a bigon
        if len(corners) != 2 or corners[0] == corners[1]:
            continue
        circle = None
        for cyc, p, c in cut.boundary_circles():
            if p is prov:
                circle = (cyc, p)
                break
        fixed, moving = sorted(curves)
        return circle[0], circle[1], fixed, moving
    return None


def _side_of_chord_on_edge(diagram, face, chord_in, chord_out, crossing, delta):
    """Exact side of the point at ``crossing.param + delta`` relative to the
    chord (chord_in -> chord_out) inside ``face``.  Returns the sign of the
    cross product, computed on the convex arc."""
    pa = convex_point(diagram.port_coord(face, chord_in))
    pb = convex_point(diagram.port_coord(face, chord_out))
    d = diagram.dart_in_face(crossing.edge, face)
    slot = diagram.tri.dart_pos[d]
    local = diagram.local_param(crossing.edge, face, crossing.param)
    # delta is given in the reference frame; convert to the local frame
    if d != diagram.tri.edges[crossing.edge][0] and \
       not diagram.tri.flip.get(crossing.edge, False):
        delta = -delta
    q = convex_point(slot + local + delta)
    s = _cross(pa, pb, q)
    if s > 0:
        return 1
    if s < 0:
        return -1
    return 0


def _circle_runs(cyc, prov):
    """Split a two-curve bigon circle into its two curve runs.

    Returns {curve_index: [(step, piece, side), ...]} with each run listed in
    circle order.
    """
    n = len(prov)
    start = None
    for i in range(n):
        if prov[i][1] != prov[(i - 1) % n][1]:
            start = i
            break
    if start is None:
        raise ValueError("circle does not alternate between two curves")
    items = [prov[(start + i) % n] for i in range(n)]
    runs = {}
    current = []
    current_curve = items[0][1]
    for p in items:
        if p[1] != current_curve:
            runs[current_curve] = current
            current = []
            current_curve = p[1]
        current.append((p[2], p[3], p[4]))
    runs[current_curve] = current
    return runs


def _collapse_run(run, n_steps):
    """Collapse a run to its (chord, side) sequence and certify contiguity.

    Bend points split one chord into several boundary darts, so consecutive
    equal step indices merge.  A run may cover the whole curve and revisit
    its starting chord (the two visits then hit different chord pieces).
    """
    seq = []
    for s, _, side in run:
        sgn = 1 if side == "L" else -1
        if not seq or seq[-1][0] != s:
            seq.append((s, sgn))
    if len(seq) >= 2:
        d = (seq[1][0] - seq[0][0]) % n_steps
        forward = d == 1
        for (a, _), (b, _) in zip(seq, seq[1:]):
            if (b - a) % n_steps != (1 if forward else n_steps - 1):
                raise ValueError("run is not a contiguous strand portion")
    else:
        forward = True
    return seq, forward


def _reduce_one_bigon(ov: Diagram, cyc, prov, fixed=0, moving=1) -> Diagram:
    """Reroute the ``moving`` curve across one bigon with the ``fixed`` one."""
    runs = _circle_runs(cyc, prov)
    if set(runs) != {fixed, moving}:
        raise ValueError("bigon circle does not involve the expected curves")
    x_steps = ov.curves[fixed]
    y_steps = ov.curves[moving]
    nx, ny = len(x_steps), len(y_steps)

    yseq, yfwd = _collapse_run(runs[moving], ny)
    y_path = [s for s, _ in yseq] if yfwd else [s for s, _ in reversed(yseq)]
    u, v = y_path[0], y_path[-1]
    removed = set()
    for t, t2 in zip(y_path, y_path[1:]):
        if (t2 - t) % ny != 1:
            raise ValueError("moving run is not contiguous")
        removed.add(t2)

    # x portion rewalked from the corner on y-chord u to the corner on
    # y-chord v: reverse of the circle order of the x run when the y run is
    # listed forward.
    xseq, _ = _collapse_run(runs[fixed], nx)
    x_path = list(reversed(xseq)) if yfwd else list(xseq)

    by_edge = {e: [c.param for c in lst]
               for e, lst in ov.edge_crossings().items()}

    def fresh_param(edge, near, sign):
        params = sorted(by_edge.get(edge, []))
        i = params.index(near)
        if sign > 0:
            hi = params[i + 1] if i + 1 < len(params) else Fraction(1)
            p = near + (hi - near) / 4
        else:
            lo = params[i - 1] if i > 0 else Fraction(0)
            p = near - (near - lo) / 4
        by_edge.setdefault(edge, []).append(p)
        by_edge[edge].sort()
        return p

    new_steps = []
    for idx in range(len(x_path) - 1):
        (t, sigma), (t2, _) = x_path[idx], x_path[idx + 1]
        if (t2 - t) % nx == 1:
            q = x_steps[t2][0]
        elif (t - t2) % nx == 1:
            q = x_steps[t][0]
        else:
            raise ValueError("x run is not contiguous")
        # place the new crossing on the non-region side of x
        face_t = x_steps[t][1]
        chord_in = x_steps[t][0]
        chord_out = x_steps[(t + 1) % nx][0]
        delta = None
        for trial in (Fraction(1), Fraction(-1)):
            p = fresh_param(q.edge, q.param, trial)
            s = _side_of_chord_on_edge(ov, face_t, chord_in, chord_out,
                                       q, p - q.param)
            if s == -sigma:
                delta = p
                break
            by_edge[q.edge].remove(p)
        if delta is None:
            raise RuntimeError("could not place rerouted crossing")
        new_steps.append((Crossing(q.edge, delta), x_steps[t2][1]))

    # assemble the new y curve
    first_face = x_steps[x_path[0][0]][1]
    out = []
    if (u % ny) not in removed:
        out.append((y_steps[u][0], first_face))
    out.extend(new_steps)
    i = (v + 1) % ny
    while i != u:
        if i not in removed:
            out.append(y_steps[i])
        i = (i + 1) % ny
    curves = [list(c) for c in ov.curves]
    curves[moving] = out
    return Diagram(ov.tri, curves)


def reduce_to_minimal_position(ov: Diagram, max_iter: int = 10000) -> Diagram:
    """Remove curve-curve bigons until all pairs are in minimal position."""
    current = ov
    last_count = None
    for _ in range(max_iter):
        cut = robust_cut_complex(current)
        found = _find_bigon(cut)
        if found is None:
            return current
        count = len(set(cut.vertex_xid.values()))
        if last_count is not None and count >= last_count:
            raise RuntimeError("bigon reduction failed to make progress")
        last_count = count
        cyc, prov, fixed, moving = found
        current = _reduce_one_bigon(current, cyc, prov, fixed, moving)
    raise RuntimeError("bigon reduction exceeded iteration limit")


def geometric_intersection_diagrams(dx: Diagram, dy: Diagram) -> int:
    """Minimal transverse crossing number of two curve diagrams."""
    reduced = reduce_to_minimal_position(overlay(dx, dy))
    return crossing_count(reduced)
