"""Isotopy classes of essential simple closed curves on N_{g,n}.

A :class:`CurveClass` wraps a tightened single-curve diagram on the fixed cone
triangulation of the two-polygon model, together with cached invariants.
Equality of classes is decided topologically: matching sidedness, minimal
intersection number (0 for 2-sided pairs, 1 for 1-sided pairs) and a
complement component certifying the isotopy (an annulus bounded by the two
curves, or a disk at the single crossing).  This test is exact and does not
rely on uniqueness of reduced normal coordinates.

Curves are constructed either by tracing admissible normal-coordinate vectors
(:func:`enumerate_classes`) or from *itineraries*: cyclic lists of the
labelled polygon edges the curve crosses, realised as doubled chord paths in
the two defining polygons.  ``["s1", "e1"]`` is the core of the first
crosscap; ``["e1", "e3"]`` is the 2-sided curve separating holes {2,3} from
the rest; crossing an ``s`` edge passes through that crosscap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cells import SurfaceClass, SurfaceSig, build_polygon_model, triangulate
from .diagram import (
    Crossing,
    Diagram,
    TrivialCurve,
    geometric_intersection_diagrams,
    overlay,
    reduce_to_minimal_position,
    robust_cut_complex,
    crossing_count,
    self_crossings,
    tighten,
)

ONE_SIDED = "1-sided"
TWO_SIDED = "2-sided"


class Trivial:
    """Marker for curves that are inessential (disk, Mobius or boundary)."""

    def __repr__(self):
        return "Trivial"


TRIVIAL = Trivial()


@dataclass(frozen=True)
class TopoType:
    """Topological type of a curve: sidedness plus cut-complement types."""

    sided: str
    complement: tuple

    def __str__(self):
        parts = " + ".join(str(s) for s in self.complement)
        return f"{self.sided}, complement {parts}"


class Surface:
    """The fixed model of N_{g,n} with caches for curve-class computations."""

    _instances = {}

    def __init__(self, sig: SurfaceSig):
        self.sig = sig
        self.complex = build_polygon_model(sig)
        self.tri = triangulate(self.complex)
        self._classes = []
        self._gi_cache = {}
        self._eq_cache = {}

    @classmethod
    def get(cls, g, n=0):
        if isinstance(g, SurfaceSig):
            sig = g
        else:
            sig = SurfaceSig(g, n)
        key = (sig.genus, sig.boundary)
        if key not in cls._instances:
            cls._instances[key] = cls(sig)
        return cls._instances[key]

    # -- labelled edges of the polygon model -------------------------------

    def edge_id(self, label):
        return self.tri.edge_by_label(label)

    def gap_edge(self, k):
        """Edge id of e_k (the gap between hole k and hole k+1), 1-based."""
        m = self.sig.holes
        k = (k - 1) % m + 1
        return self.edge_id(f"e{k}")

    def crosscap_edge(self, i):
        if not 1 <= i <= self.sig.genus:
            raise ValueError(f"no crosscap {i} on {self.sig}")
        return self.edge_id(f"s{i}")

    # -- interning and pairwise caches --------------------------------------

    def intern(self, curve: "CurveClass") -> "CurveClass":
        for known in self._classes:
            if known.fingerprint != curve.fingerprint:
                continue
            if isotopic(known, curve):
                return known
        curve._interned = True
        self._classes.append(curve)
        return curve

    def gi(self, a: "CurveClass", b: "CurveClass") -> int:
        # caching is keyed by object identity, which is only safe for
        # interned classes (they are kept alive by the surface)
        if not (a._interned and b._interned):
            return geometric_intersection_diagrams(a.diagram, b.diagram)
        key = (id(a), id(b)) if id(a) <= id(b) else (id(b), id(a))
        if key not in self._gi_cache:
            self._gi_cache[key] = geometric_intersection_diagrams(
                a.diagram, b.diagram)
        return self._gi_cache[key]


class CurveClass:
    """An essential simple closed curve up to isotopy."""

    def __init__(self, surface: Surface, diagram: Diagram, name=None):
        if len(diagram.curves) != 1:
            raise ValueError("a curve class wraps a single connected curve")
        self.surface = surface
        self.diagram = diagram
        self.name = name
        self._sided = diagram.sided(0)
        self._hom = diagram.homology_mod2(0)
        self._cut = None
        self._interned = False
        # co-orientation convention of the annulus neighbourhood (2-sided
        # cores only): +1 twists along the stored cyclic order of the diagram
        self.orientation = 1

    # -- invariants ---------------------------------------------------------

    @property
    def sidedness(self):
        return TWO_SIDED if self._sided else ONE_SIDED

    @property
    def is_two_sided(self):
        return self._sided

    @property
    def fingerprint(self):
        return (self._sided, self._hom)

    @property
    def weight(self):
        return self.diagram.total_weight()

    def cut_along(self):
        """Homeomorphism types of the complement components.

        Cutting a 2-sided curve is the classical cut; cutting a 1-sided curve
        removes an open Mobius neighbourhood, leaving one new boundary circle.
        """
        if self._cut is None:
            cut = robust_cut_complex(self.diagram)
            self._cut = tuple(sorted(
                (sc for sc, _ in cut.components()),
                key=lambda s: (s.orientable, s.genus, s.boundary)))
        return self._cut

    def topological_type(self) -> TopoType:
        return TopoType(self.sidedness, self.cut_along())

    def rename(self, name):
        self.name = name
        return self

    def to_json_dict(self):
        by_edge = self.diagram.edge_crossings()
        coords = [len(by_edge.get(e, []))
                  for e in sorted(self.surface.tri.edges)]
        return {"surface": [self.surface.sig.genus, self.surface.sig.boundary],
                "coords": coords}

    def __repr__(self):
        tag = self.name or f"{self.sidedness} w{self.weight}"
        return f"<curve {tag} on {self.surface.sig}>"


# ---------------------------------------------------------------------------
# essentiality and isotopy
# ---------------------------------------------------------------------------

def _full_curve_circle(circles, curve_index):
    """Circles made of one whole side of a single curve, no corners."""
    out = []
    for curves, has_surface, corners, prov in circles:
        if curves == {curve_index} and not has_surface and not corners:
            out.append(prov)
    return out


def classify_candidate(surface: Surface, diagram: Diagram):
    """Tighten a traced curve and decide whether it is essential.

    Returns a (non-interned) CurveClass, or TRIVIAL.
    """
    try:
        tight = tighten(diagram)
    except TrivialCurve:
        return TRIVIAL
    if not tight.sided(0):
        return CurveClass(surface, tight)
    cut = robust_cut_complex(tight)
    for sclass, circles in cut.component_report():
        full = _full_curve_circle(circles, 0)
        if not full:
            continue
        if sclass.is_disk and len(circles) == 1:
            return TRIVIAL
        if sclass.is_mobius_band and len(circles) == 1:
            return TRIVIAL
        if sclass.is_annulus:
            other = [c for c in circles
                     if not any(c[3] is p for p in full)]
            if len(full) == 1 and len(other) == 1:
                curves, has_surface, corners, _ = other[0]
                if not curves and has_surface:
                    return TRIVIAL
    return CurveClass(surface, tight)


def isotopic(a: CurveClass, b: CurveClass) -> bool:
    """Exact isotopy test for essential curves.

    Two 2-sided curves are isotopic iff they are disjoint and cobound an
    annulus; two 1-sided curves iff they meet once and a complement component
    is a disk touching that single crossing twice.
    """
    if a is b:
        return True
    if a.surface is not b.surface:
        return False
    if a.fingerprint != b.fingerprint:
        return False
    if not (a._interned and b._interned):
        return _isotopic_work(a, b)
    surf = a.surface
    key = (id(a), id(b)) if id(a) <= id(b) else (id(b), id(a))
    if key in surf._eq_cache:
        return surf._eq_cache[key]
    result = _isotopic_work(a, b)
    surf._eq_cache[key] = result
    return result


def _isotopic_work(a: CurveClass, b: CurveClass) -> bool:
    reduced = reduce_to_minimal_position(overlay(a.diagram, b.diagram))
    n = crossing_count(reduced)
    if a.is_two_sided:
        if n != 0:
            return False
        cut = robust_cut_complex(reduced)
        for sclass, circles in cut.component_report():
            if not sclass.is_annulus or len(circles) != 2:
                continue
            sides = {frozenset(c[0]) for c in circles if not c[1] and not c[2]}
            if sides == {frozenset({0}), frozenset({1})}:
                return True
        return False
    if n != 1:
        return False
    cut = robust_cut_complex(reduced)
    for sclass, circles in cut.component_report():
        if not sclass.is_disk or len(circles) != 1:
            continue
        curves, has_surface, corners, _ = circles[0]
        if curves != {0, 1} or has_surface:
            continue
        # the isotopy disk meets the unique crossing in two quadrants
        if len(corners) == 2 and corners[0] == corners[1]:
            return True
    return False


def geometric_intersection(a: CurveClass, b: CurveClass) -> int:
    if a is b or isotopic(a, b):
        raise ValueError("geometric intersection requires distinct classes")
    return a.surface.gi(a, b)


# ---------------------------------------------------------------------------
# normal-coordinate enumeration
# ---------------------------------------------------------------------------

def _face_slots(tri):
    """Per face: the three (edge, dart) slots."""
    return {f: [(tri.dart_edge[d], d) for d in ds]
            for f, ds in tri.faces.items()}


def admissible_weight_vectors(tri, max_weight, interior=None):
    """Yield weight vectors (dict edge -> int) with every face matching.

    A face with slot weights x, y, z is matched when x+y+z is even and the
    triangle inequalities hold.  Boundary edges always carry weight 0.
    """
    if interior is None:
        interior = sorted(e for e, ds in tri.edges.items() if len(ds) == 2)
    slots = _face_slots(tri)
    face_edges = {f: [e for e, _ in sl] for f, sl in slots.items()}
    # order edges so faces complete early
    order = []
    seen = set()
    for f in sorted(tri.faces):
        for e in face_edges[f]:
            if e not in seen and e in set(interior):
                seen.add(e)
                order.append(e)
    edge_faces = {}
    for f, es in face_edges.items():
        for e in es:
            edge_faces.setdefault(e, []).append(f)
    # boundary edges carry weight zero; fixing them here lets faces touching
    # the surface boundary participate in the matching checks
    weights = {e: 0 for e in tri.edges if len(tri.edges[e]) == 1}

    def face_ok(f, complete):
        ws = []
        missing = 0
        for e in face_edges[f]:
            if e in weights:
                ws.append(weights[e])
            else:
                missing += 1
        if missing:
            if not complete and len(ws) == 2:
                return True
            return True
        x, y, z = sorted(ws)
        return (x + y + z) % 2 == 0 and z <= x + y

    def rec(i, used):
        if i == len(order):
            if any(weights.values()):
                yield dict(weights)
            return
        e = order[i]
        for w in range(0, max_weight - used + 1):
            weights[e] = w
            ok = True
            for f in edge_faces[e]:
                if all(ee in weights for ee in face_edges[f]):
                    ws = sorted(weights[ee] for ee in face_edges[f])
                    if (ws[0] + ws[1] + ws[2]) % 2 != 0 or ws[2] > ws[0] + ws[1]:
                        ok = False
                        break
            if ok:
                yield from rec(i + 1, used + w)
        del weights[e]

    yield from rec(0, 0)


def trace_weights(tri, weights):
    """Resolve a matched weight vector into its normal multicurve.

    Returns a list of curves, each a step list for :class:`Diagram`.
    """
    crossings = {}
    for e, w in weights.items():
        crossings[e] = [Crossing(e, Fraction(k + 1, w + 1)) for k in range(w)]

    def local_ports(face, edge):
        dart = [d for d in tri.edges[edge] if tri.dart_face[d] == face]
        if len(dart) != 1:
            raise ValueError("edge is not a simple side of its face")
        d = dart[0]
        if d == tri.edges[edge][0] or tri.flip.get(edge, False):
            return list(crossings[edge])
        return list(reversed(crossings[edge]))

    # corner matching per face: the corner between consecutive slots k, k+1
    # consumes the tail of slot k and the head of slot k+1, innermost first.
    nxt = {}
    for f, ds in tri.faces.items():
        es = [tri.dart_edge[d] for d in ds]
        ws = [weights.get(e, 0) for e in es]
        corner = [(ws[k] + ws[(k + 1) % 3] - ws[(k + 2) % 3]) // 2
                  for k in range(3)]
        if any(c < 0 for c in corner):
            raise ValueError("weights do not satisfy the matching conditions")
        ports = [local_ports(f, e) if weights.get(e, 0) else []
                 for e in es]
        for k in range(3):
            n = corner[k]
            a, b = ports[k], ports[(k + 1) % 3]
            for j in range(n):
                ca = a[len(a) - 1 - j]
                cb = b[j]
                nxt[(id(ca), f)] = (ca, cb, f)
                nxt[(id(cb), f, "rev")] = (cb, ca, f)

    other_face = {}
    for e, ds in tri.edges.items():
        if len(ds) == 2:
            f0, f1 = tri.dart_face[ds[0]], tri.dart_face[ds[1]]
            other_face[e] = {f0: f1, f1: f0}

    # walk: state (crossing, face) meaning the curve crosses ``crossing`` and
    # then traverses ``face``.  The two states of a crossing correspond to the
    # two traversal directions, so after tracing a curve its reversed states
    # are marked used as well.
    state_used = set()
    curves = []
    all_states = []
    for e in sorted(crossings):
        for c in crossings[e]:
            for f in sorted(other_face[e]):
                all_states.append((c, f))
    for c0, f0 in all_states:
        if (id(c0), f0) in state_used:
            continue
        steps = []
        c, f = c0, f0
        while (id(c), f) not in state_used:
            state_used.add((id(c), f))
            steps.append((c, f))
            key = (id(c), f)
            if key in nxt and nxt[key][0] is c:
                _, c2, _ = nxt[key]
            else:
                _, c2, _ = nxt[(id(c), f, "rev")]
            c, f = c2, other_face[c2.edge][f]
        if (c, f) != (c0, f0):
            raise RuntimeError("normal trace did not close up")
        for i, (c, f) in enumerate(steps):
            nc = steps[(i + 1) % len(steps)][0]
            state_used.add((id(nc), f))
        curves.append(steps)
    return curves


def graded_weight_vectors(tri, max_weight):
    """Matched weight vectors sorted by total weight, then lexicographically."""
    vectors = list(admissible_weight_vectors(tri, max_weight))
    vectors.sort(key=lambda w: (sum(w.values()),
                                tuple(w.get(e, 0) for e in sorted(tri.edges))))
    return vectors


def enumerate_classes(surface: Surface, max_weight: int):
    """All curve classes admitting a normal representative of weight <= L.

    Walks matched weight vectors in graded lexicographic order, traces them,
    keeps connected essential curves and deduplicates by the isotopy test.
    """
    found = []
    for weights in graded_weight_vectors(surface.tri, max_weight):
        curves = trace_weights(surface.tri, weights)
        if len(curves) != 1:
            continue
        cand = classify_candidate(surface, Diagram(surface.tri, curves))
        if cand is TRIVIAL:
            continue
        c = surface.intern(cand)
        if not any(c is k for k in found):
            found.append(c)
    return found


# ---------------------------------------------------------------------------
# itinerary construction of named curves
# ---------------------------------------------------------------------------

def _polygon_layout(surface: Surface):
    """Per base polygon: list of (dart, edge, triangle, spoke_edge) by position.

    ``spoke_edge[k]`` is the spoke joining the corner before dart ``k`` to the
    cone point of that polygon.
    """
    tri = surface.tri
    base = surface.complex
    layout = {}
    for f in sorted(base.faces):
        ds = base.faces[f]
        entries = []
        for k, d in enumerate(ds):
            entries.append({
                "dart": d,
                "edge": base.dart_edge[d],
                "triangle": tri.dart_face[d],
                "spoke": tri.edge_by_label(f"spoke{f}.{k}"),
            })
        layout[f] = entries
    return layout


def _copy_of_dart(surface, dart):
    base = surface.complex
    return base.dart_face[dart]


def itinerary_curve(surface: Surface, tokens, name=None):
    """Build the curve crossing the named polygon edges in cyclic order.

    ``tokens`` is a list of edge labels ("s2", "e3", ...); each token is one
    transverse crossing of that edge of the two-polygon model.  Between
    consecutive crossings the curve runs as a chord through one polygon copy,
    alternating copies at each crossing.  The construction searches the small
    space of crossing orders on multiply-used edges for an embedded
    realisation and returns the tightened, verified curve class.
    """
    if len(tokens) % 2 != 0:
        raise ValueError("itineraries must cross the polygons an even number of times")
    tri = surface.tri
    base = surface.complex
    layout = _polygon_layout(surface)
    m = len(layout[0])
    edge_ids = [surface.edge_id(t) if isinstance(t, str) else t for t in tokens]
    n = len(edge_ids)

    # position of each token's edge inside each polygon copy
    pos_in_copy = {}
    for f, entries in layout.items():
        for k, ent in enumerate(entries):
            pos_in_copy[(f, ent["edge"])] = k

    # decide the copy of each chord: chord i runs from token i to token i+1;
    # copies alternate starting in polygon 0.
    chord_copy = [i % 2 for i in range(n)]

    counts = {}
    for e in edge_ids:
        counts[e] = counts.get(e, 0) + 1

    multi = sorted(e for e, c in counts.items() if c > 1)
    token_slots = {}
    for i, e in enumerate(edge_ids):
        token_slots.setdefault(e, []).append(i)

    def build(rank_of_token):
        crossings = [Crossing(e, Fraction(rank_of_token[i] + 1, counts[e] + 1))
                     for i, e in enumerate(edge_ids)]
        # chords: token i -> token i+1 inside copy chord_copy[i]
        chord_data = []
        for i in range(n):
            f = chord_copy[i]
            e1, e2 = edge_ids[i], edge_ids[(i + 1) % n]
            if (f, e1) not in pos_in_copy or (f, e2) not in pos_in_copy:
                raise ValueError("token edge missing from polygon copy")
            p, q = pos_in_copy[(f, e1)], pos_in_copy[(f, e2)]
            up = (q - p) % m
            down = (p - q) % m
            if up == 0:
                spokes = []   # same edge twice: direct return chord
                path = [p]
            elif up <= down:
                spokes = [(p + j) % m for j in range(1, up + 1)]
                path = [(p + j) % m for j in range(up + 1)]
            else:
                spokes = [(p - j + 1) % m for j in range(1, down + 1)]
                path = [(p - j) % m for j in range(down + 1)]
            chord_data.append((f, p, q, spokes, path))
        # radius per chord, larger spans closer to the cone point
        sizes = sorted({len(c[3]) for c in chord_data})
        radius = {}
        for i, (f, p, q, spokes, path) in enumerate(chord_data):
            r = Fraction(2 * sizes.index(len(spokes)) + 1,
                         2 * len(sizes) + 2) + Fraction(i + 1, 100 * (n + 2))
            radius[i] = r
        steps = []
        for i in range(n):
            f, p, q, spokes, path = chord_data[i]
            entries = layout[f]
            steps.append((crossings[i], entries[path[0]]["triangle"]))
            for j, sp in enumerate(spokes):
                sp_edge = entries[sp]["spoke"]
                steps.append((Crossing(sp_edge, radius[i]),
                              entries[path[j + 1]]["triangle"]))
        return Diagram(tri, [steps])

    perms = [list(itertools.permutations(range(counts[e]))) for e in multi]
    base_rank = {i: 0 for i in range(n)}
    for e in edge_ids:
        pass
    for combo in itertools.product(*perms) if perms else [()]:
        rank_of_token = {}
        for e in edge_ids:
            if e not in multi:
                for i in token_slots[e]:
                    rank_of_token[i] = 0
        for e, perm in zip(multi, combo):
            for j, i in enumerate(token_slots[e]):
                rank_of_token[i] = perm[j]
        try:
            diag = build(rank_of_token)
        except (ValueError, RuntimeError):
            continue
        if self_crossings(diag) == 0:
            cand = classify_candidate(surface, diag)
            if cand is TRIVIAL:
                raise ValueError(f"itinerary {tokens} is an inessential curve")
            return surface.intern(cand).rename(name) if name else surface.intern(cand)
    raise ValueError(f"no embedded realisation found for itinerary {tokens}")


def core_curve(surface: Surface, i: int, name=None):
    """The core a_i of the i-th crosscap."""
    return itinerary_curve(surface, [f"s{i}", f"e{i}"],
                           name=name or f"a{i}")


def one_sided_loop(surface: Surface, i: int, j: int, name=None):
    """a_{i,j}: through crosscap i, then around the holes between i and j.

    Realised by the doubled chord from the midpoint of s_i to a point of e_j;
    j = i is excluded (that is a_i itself) and j = i-1 gives a_i back.
    """
    g, holes = surface.sig.genus, surface.sig.holes
    if not 1 <= i <= g:
        raise ValueError(f"a_{{{i},{j}}}: no crosscap {i}")
    jj = (j - 1) % holes + 1
    if jj == i or jj == (i - 2) % holes + 1:
        raise ValueError(f"a_{{{i},{j}}} is isotopic to a_{i}; index rejected")
    return itinerary_curve(surface, [f"s{i}", f"e{jj}"],
                           name=name or f"a{i},{jj}")


def two_sided_chord(surface: Surface, i: int, j: int, name=None):
    """b_{i,j}: the 2-sided curve separating holes i+1..j from the rest."""
    holes = surface.sig.holes
    ii = (i - 1) % holes + 1
    jj = (j - 1) % holes + 1
    d = (jj - ii) % holes
    if d in (0, 1, holes - 1):
        raise ValueError(f"b_{{{i},{j}}} violates the distance-2 index rule")
    return itinerary_curve(surface, [f"e{ii}", f"e{jj}"],
                           name=name or f"b{ii},{jj}")


def hole_subset_curve(surface: Surface, holes_subset, name=None):
    """The 2-sided planar curve separating a set of holes from the rest.

    Crossing tokens are the gap edges where membership switches.
    """
    mset = set(holes_subset)
    holes = surface.sig.holes
    if not mset or len(mset) >= holes:
        raise ValueError("subset must be a proper nonempty set of holes")
    tokens = []
    for k in range(1, holes + 1):
        a = k in mset
        b = ((k % holes) + 1) in mset
        if a != b:
            tokens.append(f"e{k}")
    return itinerary_curve(surface, tokens, name=name)


# ---------------------------------------------------------------------------
# enumeration inside the complement of a curve system
# ---------------------------------------------------------------------------

def minimal_multicurve(classes):
    """One diagram realising the given classes in pairwise minimal position."""
    if not classes:
        raise ValueError("need at least one curve")
    diag = classes[0].diagram
    for c in classes[1:]:
        diag = reduce_to_minimal_position(overlay(diag, c.diagram))
    return diag


def enumerate_in_complement(surface: Surface, cutters, max_weight,
                            include_isotopic=False):
    """Curve classes disjoint from every cutter, via the cut surface.

    The cutters are realised in pairwise minimal position (they must admit a
    disjoint realisation), the surface is cut along all of them, and normal
    curves of the cut pieces up to ``max_weight`` are traced and mapped back.
    Classes isotopic to a cutter are dropped unless requested.
    """
    from .cells import triangulate as cone
    multi = minimal_multicurve(cutters)
    if crossing_count(multi) != 0:
        raise ValueError("cutters do not admit a disjoint realisation")
    cut = robust_cut_complex(multi)
    piece_tri = cone(cut.complex)
    cut_params = {e: [c.param for c in lst]
                  for e, lst in multi.edge_crossings().items()}

    def seg_bounds(e, idx):
        params = cut_params.get(e, [])
        lo = params[idx - 1] if idx > 0 else Fraction(0)
        hi = params[idx] if idx < len(params) else Fraction(1)
        return lo, hi

    found = []
    for weights in graded_weight_vectors(piece_tri, max_weight):
        curves = trace_weights(piece_tri, weights)
        if len(curves) != 1:
            continue
        mapped = _map_back(surface, cut, piece_tri, curves[0], seg_bounds)
        if mapped is None:
            continue
        cand = classify_candidate(surface, mapped)
        if cand is TRIVIAL:
            continue
        c = surface.intern(cand)
        if not include_isotopic and any(isotopic(c, k) for k in cutters):
            continue
        if not any(c is k for k in found):
            found.append(c)
    return found


def _map_back(surface, cut, piece_tri, steps, seg_bounds):
    """Transfer a curve on the coned cut surface back to the main surface.

    Spoke crossings of the cones are dropped (the curve stays inside one
    arrangement cell between segment crossings); segment crossings become
    crossings of the underlying edge at parameters inside the segment.
    """
    kept = []
    for c, f in steps:
        label = piece_tri.labels.get(c.edge)
        cell = piece_tri.face_origin[f]
        nface = cut.face_owner[cell]
        if isinstance(label, tuple) and label[0] == "seg":
            kept.append((c, label[1], label[2], nface))
        elif isinstance(label, str) and label.startswith("spoke"):
            continue
        else:
            raise RuntimeError(f"unexpected edge {label} in cut piece curve")
    if not kept:
        return None
    # choose parameters: per segment, preserve the order of the piece-level
    # crossings (measured in the segment's own reference frame)
    by_seg = {}
    for c, e, idx, nface in kept:
        orient = cut.seg_orient.get(c.edge, 1)
        key = (e, idx)
        local = c.param if orient > 0 else 1 - c.param
        by_seg.setdefault(key, []).append((local, id(c)))
    param_of = {}
    for key, lst in by_seg.items():
        lo, hi = seg_bounds(*key)
        lst.sort()
        m = len(lst)
        for rank, (_, cid) in enumerate(lst):
            param_of[cid] = lo + (hi - lo) * Fraction(rank + 1, m + 1)
    curve = []
    for c, e, idx, nface in kept:
        curve.append((Crossing(e, param_of[id(c)]), nface))
    return Diagram(surface.tri, [curve])
