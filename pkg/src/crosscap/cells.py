"""Combinatorial cell complexes for compact surfaces.

A surface is encoded by polygonal faces whose boundary darts are glued in
pairs.  Each glued edge carries a ``flip`` flag describing how the two dart
parametrisations match up:

* ``flip=False`` -- the standard gluing; parameter ``t`` on one dart meets
  parameter ``1-t`` on its partner (the two faces induce opposite directions
  on the edge, as happens when two polygons are laid side by side).
* ``flip=True`` -- the orientation-reversing gluing; ``t`` meets ``t``.
  Antipodal self-identifications of a polygon's boundary circle (crosscaps)
  produce exactly this kind of edge.

The main constructor is :func:`build_polygon_model`, which realises the
nonorientable surface N_{g,n} by gluing two (2g+2n)-gons: the two copies are
joined along the ``e``-labelled edges, every ``s``-labelled boundary circle is
closed up antipodally (one crosscap each) and the ``z``-labelled circles are
left as boundary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SurfaceSig:
    """Signature (genus, boundary count) of a nonorientable surface N_{g,n}."""

    genus: int
    boundary: int = 0

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("nonorientable genus must be at least 1")
        if self.boundary < 0:
            raise ValueError("boundary count must be non-negative")

    @property
    def euler_characteristic(self) -> int:
        return 2 - self.genus - self.boundary

    @property
    def holes(self) -> int:
        """Number of holes of the underlying holed sphere (crosscaps + boundaries)."""
        return self.genus + self.boundary

    @property
    def is_small_exceptional(self) -> bool:
        """True for the signatures excluded from the rigid-exhaustion theorem."""
        g, n = self.genus, self.boundary
        return (g, n) in {(1, 2), (2, 0), (2, 1)} or g + n == 4

    def __iter__(self):
        return iter((self.genus, self.boundary))

    def __str__(self):
        return f"N_{{{self.genus},{self.boundary}}}"


@dataclass(frozen=True)
class SurfaceClass:
    """Homeomorphism type of a compact connected surface."""

    orientable: bool
    genus: int
    boundary: int

    @property
    def euler_characteristic(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus - self.boundary
        return 2 - self.genus - self.boundary

    @property
    def is_disk(self) -> bool:
        return self.orientable and self.genus == 0 and self.boundary == 1

    @property
    def is_annulus(self) -> bool:
        return self.orientable and self.genus == 0 and self.boundary == 2

    @property
    def is_mobius_band(self) -> bool:
        return (not self.orientable) and self.genus == 1 and self.boundary == 1

    def __str__(self):
        kind = "S" if self.orientable else "N"
        return f"{kind}_{{{self.genus},{self.boundary}}}"


class CellComplex:
    """A surface built from polygonal faces with glued boundary darts.

    Darts are consecutive integers.  ``faces`` maps a face id to the cyclic
    tuple of its boundary darts.  ``edges`` maps an edge id to a tuple of one
    (boundary edge) or two (interior edge) darts, ``flip`` gives the gluing
    convention for interior edges and ``labels`` carries optional edge names.
    """

    def __init__(self, faces, edges, flip, labels=None):
        self.faces = {f: tuple(ds) for f, ds in faces.items()}
        self.edges = {e: tuple(ds) for e, ds in edges.items()}
        self.flip = dict(flip)
        self.labels = dict(labels or {})
        self.dart_face = {}
        self.dart_pos = {}
        for f, ds in self.faces.items():
            for i, d in enumerate(ds):
                if d in self.dart_face:
                    raise ValueError(f"dart {d} appears in two face slots")
                self.dart_face[d] = f
                self.dart_pos[d] = i
        self.dart_edge = {}
        for e, ds in self.edges.items():
            if len(ds) not in (1, 2):
                raise ValueError(f"edge {e} must have one or two darts")
            if len(ds) == 2 and ds[0] == ds[1]:
                raise ValueError(f"edge {e} glues a dart to itself")
            for d in ds:
                if d in self.dart_edge:
                    raise ValueError(f"dart {d} lies on two edges")
                self.dart_edge[d] = e
        for d in self.dart_face:
            if d not in self.dart_edge:
                raise ValueError(f"dart {d} has no edge")
        self._vertex_of = None
        self._n_vertices = None

    # -- basic traversal -------------------------------------------------

    def next_dart(self, d):
        f = self.dart_face[d]
        ds = self.faces[f]
        return ds[(self.dart_pos[d] + 1) % len(ds)]

    def prev_dart(self, d):
        f = self.dart_face[d]
        ds = self.faces[f]
        return ds[(self.dart_pos[d] - 1) % len(ds)]

    def partner(self, d):
        ds = self.edges[self.dart_edge[d]]
        if len(ds) == 1:
            return None
        return ds[1] if ds[0] == d else ds[0]

    def is_boundary_dart(self, d):
        return len(self.edges[self.dart_edge[d]]) == 1

    @property
    def boundary_darts(self):
        return [ds[0] for ds in self.edges.values() if len(ds) == 1]

    # -- vertices ---------------------------------------------------------

    def _endpoint_classes(self):
        """Union-find over dart endpoints (d, 0)=tail, (d, 1)=head."""
        if self._vertex_of is not None:
            return self._vertex_of
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for d in self.dart_face:
            parent[(d, 0)] = (d, 0)
            parent[(d, 1)] = (d, 1)
        for d in self.dart_face:
            union((d, 1), (self.next_dart(d), 0))
        for e, ds in self.edges.items():
            if len(ds) == 2:
                d0, d1 = ds
                if self.flip.get(e, False):
                    union((d0, 0), (d1, 0))
                    union((d0, 1), (d1, 1))
                else:
                    union((d0, 1), (d1, 0))
                    union((d0, 0), (d1, 1))
        roots = {}
        vertex_of = {}
        for x in parent:
            r = find(x)
            if r not in roots:
                roots[r] = len(roots)
            vertex_of[x] = roots[r]
        self._vertex_of = vertex_of
        self._n_vertices = len(roots)
        return vertex_of

    @property
    def n_vertices(self):
        self._endpoint_classes()
        return self._n_vertices

    @property
    def n_edges(self):
        return len(self.edges)

    @property
    def n_faces(self):
        return len(self.faces)

    @property
    def euler_characteristic(self):
        return self.n_vertices - self.n_edges + self.n_faces

    # -- connectivity and orientability -----------------------------------

    def face_components(self):
        """Connected components as lists of face ids (via glued edges)."""
        adj = {f: [] for f in self.faces}
        for e, ds in self.edges.items():
            if len(ds) == 2:
                f0, f1 = self.dart_face[ds[0]], self.dart_face[ds[1]]
                adj[f0].append(f1)
                adj[f1].append(f0)
        seen = set()
        comps = []
        for f in sorted(self.faces):
            if f in seen:
                continue
            comp = []
            stack = [f]
            seen.add(f)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self):
        return len(self.face_components()) <= 1

    def _component_orientable(self, comp):
        """Sign propagation: flip=True gluings force opposite face signs."""
        sign = {comp[0]: 1}
        stack = [comp[0]]
        comp_set = set(comp)
        adj = {f: [] for f in comp}
        for e, ds in self.edges.items():
            if len(ds) != 2:
                continue
            f0, f1 = self.dart_face[ds[0]], self.dart_face[ds[1]]
            if f0 in comp_set:
                rel = -1 if self.flip.get(e, False) else 1
                adj[f0].append((f1, rel))
                adj[f1].append((f0, rel))
        while stack:
            f = stack.pop()
            for g, rel in adj[f]:
                want = sign[f] * rel
                if g not in sign:
                    sign[g] = want
                    stack.append(g)
                elif sign[g] != want:
                    return False
        return True

    def _fan_other_end(self, d, i):
        """Walk the corner fan from boundary endpoint (d, i) to the other
        boundary endpoint around the same vertex.

        Darts along one boundary circle need not be consistently oriented on a
        nonorientable complex, so boundary traversal must rotate through the
        fan of corners instead of chaining heads to tails.
        """
        x, j = d, i
        while True:
            if j == 1:
                x, j = self.next_dart(x), 0
            else:
                x, j = self.prev_dart(x), 1
            if self.is_boundary_dart(x):
                return (x, j)
            p = self.partner(x)
            e = self.dart_edge[x]
            if self.flip.get(e, False):
                x, j = p, j
            else:
                x, j = p, 1 - j

    def boundary_cycles(self):
        """Boundary components as cyclic lists of boundary darts."""
        cycles = []
        seen = set()
        for d0 in sorted(self.boundary_darts):
            if d0 in seen:
                continue
            cyc = []
            d, i = d0, 1
            while True:
                cyc.append(d)
                seen.add(d)
                d, j = self._fan_other_end(d, i)
                i = 1 - j
                if d == d0 and i == 1:
                    break
            cycles.append(cyc)
        return cycles

    # -- classification ----------------------------------------------------

    def classify_components(self):
        """Return [(SurfaceClass, face list)] for each connected component."""
        comps = self.face_components()
        bd_comp = {}
        for cyc in self.boundary_cycles():
            f = self.dart_face[cyc[0]]
            bd_comp.setdefault(id(cyc), (cyc, f))
        out = []
        vertex_of = self._endpoint_classes()
        for comp in comps:
            comp_set = set(comp)
            verts = set()
            n_edges = 0
            for e, ds in self.edges.items():
                if self.dart_face[ds[0]] in comp_set:
                    n_edges += 1
                    for d in ds:
                        verts.add(vertex_of[(d, 0)])
                        verts.add(vertex_of[(d, 1)])
            chi = len(verts) - n_edges + len(comp)
            n_bd = sum(1 for cyc in self.boundary_cycles()
                       if self.dart_face[cyc[0]] in comp_set)
            orientable = self._component_orientable(comp)
            if orientable:
                genus2 = 2 - chi - n_bd
                if genus2 % 2 != 0 or genus2 < 0:
                    raise ValueError("inconsistent orientable Euler data")
                genus = genus2 // 2
            else:
                genus = 2 - chi - n_bd
                if genus < 1:
                    raise ValueError("inconsistent nonorientable Euler data")
            out.append((SurfaceClass(orientable, genus, n_bd), comp))
        return out

    def classify(self) -> SurfaceClass:
        """Homeomorphism type; requires a connected complex."""
        comps = self.classify_components()
        if len(comps) != 1:
            raise ValueError(
                "complex is disconnected; use classify_components")
        return comps[0][0]

    # -- JSON codec ---------------------------------------------------------

    def to_json(self) -> str:
        gluing = []
        for e in sorted(self.edges):
            ds = self.edges[e]
            rec = {"edge": e, "darts": list(ds)}
            if len(ds) == 2:
                rec["flip"] = bool(self.flip.get(e, False))
            if e in self.labels:
                rec["label"] = self.labels[e]
            gluing.append(rec)
        payload = {
            "version": 1,
            "darts": sorted(self.dart_face),
            "gluing": gluing,
            "faces": [{"face": f, "darts": list(self.faces[f])}
                      for f in sorted(self.faces)],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "CellComplex":
        payload = json.loads(text)
        if payload.get("version") != 1:
            raise ValueError("unsupported cell complex schema version")
        faces = {rec["face"]: tuple(rec["darts"]) for rec in payload["faces"]}
        edges = {}
        flip = {}
        labels = {}
        for rec in payload["gluing"]:
            e = rec["edge"]
            edges[e] = tuple(rec["darts"])
            if "flip" in rec:
                flip[e] = rec["flip"]
            if "label" in rec:
                labels[e] = rec["label"]
        return cls(faces, edges, flip, labels)


def polygon_edge_word(sig: SurfaceSig):
    """Boundary word of the defining (2g+2n)-gon: s1 e1 ... sg eg z1 e_{g+1} ...

    Every entry is a (kind, index) pair with kind in {"s", "e", "z"}.
    """
    g, n = sig.genus, sig.boundary
    word = []
    for i in range(1, g + 1):
        word.append(("s", i))
        word.append(("e", i))
    for j in range(1, n + 1):
        word.append(("z", j))
        word.append(("e", g + j))
    return word


def build_polygon_model(sig: SurfaceSig) -> CellComplex:
    """Two-polygon model of N_{g,n}.

    Copy ``A`` carries the boundary word of :func:`polygon_edge_word`; copy
    ``B`` is the mirror image (the reversed word).  The two copies are glued
    along every ``e`` edge, each ``s`` circle is identified antipodally
    (flip=True, one crosscap) and ``z`` circles remain as boundary.
    """
    if isinstance(sig, tuple):
        sig = SurfaceSig(*sig)
    word = polygon_edge_word(sig)
    m = len(word)
    # darts 0..m-1: copy A in word order; darts m..2m-1: copy B, reversed word.
    faces = {0: tuple(range(m)), 1: tuple(range(2 * m - 1, m - 1, -1))}
    dart_a = {lab: i for i, lab in enumerate(word)}
    dart_b = {lab: m + i for i, lab in enumerate(word)}
    edges = {}
    flip = {}
    labels = {}
    eid = 0
    for lab in word:
        kind, idx = lab
        if kind == "e":
            edges[eid] = (dart_a[lab], dart_b[lab])
            flip[eid] = False
        elif kind == "s":
            edges[eid] = (dart_a[lab], dart_b[lab])
            flip[eid] = True
        else:
            edges[eid] = (dart_a[lab],)
            eid += 1
            labels[eid - 1] = f"z{idx}A"
            edges[eid] = (dart_b[lab],)
            flip[eid] = False
            labels[eid] = f"z{idx}B"
            eid += 1
            continue
        labels[eid] = f"{kind}{idx}"
        eid += 1
    return CellComplex(faces, edges, flip, labels)


class Triangulation(CellComplex):
    """Cone triangulation of a cell complex.

    Every face is subdivided by coning from an interior point, so all faces
    are triangles.  Edge ids of the base complex are preserved, which keeps
    the ``s``/``e``/``z`` labels usable for curve construction.
    """

    def __init__(self, faces, edges, flip, labels=None, base=None):
        super().__init__(faces, edges, flip, labels)
        self.base = base
        for f, ds in self.faces.items():
            if len(ds) != 3:
                raise ValueError(f"face {f} of a triangulation must be a triangle")

    @property
    def interior_edges(self):
        return [e for e, ds in self.edges.items() if len(ds) == 2]

    def edge_by_label(self, label):
        for e, lab in self.labels.items():
            if lab == label:
                return e
        raise KeyError(f"no edge labelled {label!r}")


def triangulate(cc: CellComplex) -> Triangulation:
    """Cone every face of ``cc`` from an interior point.

    Deterministic: triangle ``(f, k)`` covers the k-th dart of face ``f`` and
    new ids are allocated in sorted face order.
    """
    next_dart = max(cc.dart_face) + 1
    next_edge = max(cc.edges) + 1
    next_face = 0
    faces = {}
    face_origin = {}
    edges = {e: ds for e, ds in cc.edges.items()}
    flip = dict(cc.flip)
    labels = dict(cc.labels)
    for f in sorted(cc.faces):
        ds = cc.faces[f]
        m = len(ds)
        if m < 2:
            raise ValueError("cannot cone a face with fewer than 2 sides")
        inward = {}
        outward = {}
        for k in range(m):
            inward[k] = next_dart
            outward[k] = next_dart + 1
            next_dart += 2
        for k in range(m):
            # spoke k joins tail(ds[k]) to the cone point; its darts are the
            # inward copy in triangle k-1 and the outward copy in triangle k.
            edges[next_edge] = (inward[k], outward[k])
            flip[next_edge] = False
            labels[next_edge] = f"spoke{f}.{k}"
            next_edge += 1
        for k in range(m):
            faces[next_face] = (ds[k], inward[(k + 1) % m], outward[k])
            face_origin[next_face] = f
            next_face += 1
    tri = Triangulation(faces, edges, flip, labels, base=cc)
    tri.face_origin = face_origin
    return tri


def classify(cc: CellComplex) -> SurfaceClass:
    return cc.classify()


def param_partner(flipped: bool, t: Fraction) -> Fraction:
    """Parameter on the partner dart matching parameter ``t``."""
    return t if flipped else Fraction(1) - t
