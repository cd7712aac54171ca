"""Finite subcomplexes of the curve complex: named rigid sets, the
unique-curve solver and the exhaustion sequence.

Vertices are interned curve classes; edges are disjointness.  A flag complex
is stored as its 1-skeleton since simplices are exactly the cliques.
"""

from __future__ import annotations

import itertools

from . import config
from .cells import SurfaceSig
from .curves import (
    CurveClass,
    Surface,
    core_curve,
    enumerate_classes,
    enumerate_in_complement,
    geometric_intersection,
    hole_subset_curve,
    isotopic,
    itinerary_curve,
    one_sided_loop,
    two_sided_chord,
)
from .geometry import are_disjoint
from .mcg import Generator, MappingClass, crosscap_slide, twist


class FlagComplex:
    """Induced disjointness graph on a duplicate-free list of curve classes."""

    def __init__(self, vertices, adjacency=None):
        self.vertices = list(vertices)
        n = len(self.vertices)
        for i in range(n):
            for j in range(i + 1, n):
                if isotopic(self.vertices[i], self.vertices[j]):
                    raise ValueError("vertex list contains isotopic classes")
        if adjacency is None:
            adjacency = [[False] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    d = are_disjoint(self.vertices[i], self.vertices[j])
                    adjacency[i][j] = adjacency[j][i] = d
        self.adjacency = adjacency

    @property
    def n_vertices(self):
        return len(self.vertices)

    def edges(self):
        n = self.n_vertices
        return [(i, j) for i in range(n) for j in range(i + 1, n)
                if self.adjacency[i][j]]

    def degree(self, i):
        return sum(1 for x in self.adjacency[i] if x)

    def neighbors(self, i):
        return [j for j, x in enumerate(self.adjacency[i]) if x]

    def index_of(self, c: CurveClass):
        for i, v in enumerate(self.vertices):
            if v is c or isotopic(v, c):
                return i
        raise KeyError("class is not a vertex of this complex")

    def vertex_names(self):
        return [v.name or f"v{i}" for i, v in enumerate(self.vertices)]

    def to_dot(self):
        lines = ["graph curvecomplex {"]
        names = self.vertex_names()
        for i, nm in enumerate(names):
            lines.append(f'  v{i} [label="{nm}"];')
        for i, j in self.edges():
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self):
        return {"vertices": self.vertex_names(),
                "edges": self.edges()}


class SimplicialMap:
    """A vertex map between flag complexes sending edges to edges or points."""

    def __init__(self, domain: FlagComplex, codomain: FlagComplex, assignment):
        self.domain = domain
        self.codomain = codomain
        self.assignment = tuple(assignment)
        for i, j in domain.edges():
            a, b = self.assignment[i], self.assignment[j]
            if a != b and not codomain.adjacency[a][b]:
                raise ValueError("assignment is not simplicial")

    def __repr__(self):
        return f"SimplicialMap({list(self.assignment)})"


def build_complex(classes) -> FlagComplex:
    return FlagComplex(list(classes))


# ---------------------------------------------------------------------------
# named curves and named sets
# ---------------------------------------------------------------------------

def named_curve(surface: Surface, name: str) -> CurveClass:
    """Resolve a curve name: a_i, a_{i,j} as "ai,j", b_{i,j} as "bi,j", w_k,
    r_k, or one of the (3,0) letters."""
    sig = surface.sig
    if name.startswith("a") and "," not in name:
        return core_curve(surface, int(name[1:]))
    if name.startswith("a"):
        i, j = map(int, name[1:].split(","))
        return one_sided_loop(surface, i, j)
    if name.startswith("b"):
        i, j = map(int, name[1:].split(","))
        return two_sided_chord(surface, i, j)
    if name.startswith("w"):
        return w_curve(surface, int(name[1:]))
    if name.startswith("r"):
        return r_curve(surface, int(name[1:]))
    if (sig.genus, sig.boundary) == (3, 0):
        return b30_curves(surface)[name]
    raise KeyError(f"unknown curve name {name!r} on {sig}")


def w_curve(surface: Surface, k: int) -> CurveClass:
    """w_k: the planar curve separating holes k-1 and k+1 from the rest."""
    h = surface.sig.holes
    holes = [((k - 2) % h) + 1, (k % h) + 1]
    return hole_subset_curve(surface, holes, name=f"w{k}")


def r_curve(surface: Surface, k: int) -> CurveClass:
    """r_k: the companion of w_k joining the structures at holes k-1, k+1.

    Anchors at crosscaps enter through the crosscap; boundary-hole anchors
    are wrapped through the neighbouring gap instead.  Candidate routes
    around the w lobes are tried in a fixed order until one meets b_{k-2,k}
    and b_{k-1,k+1} twice and misses b_{k-2,k+1} and w_{k-1}; separating
    curves with equal hole partitions need not be isotopic here, so the
    route genuinely matters.
    """
    cache = getattr(surface, "_r_curves", None)
    if cache is None:
        cache = surface._r_curves = {}
    if k in cache:
        return cache[k]
    g, h = surface.sig.genus, surface.sig.holes

    def anchor(hole, gap_if_boundary):
        if hole <= g:
            return f"s{hole}"
        return f"e{((gap_if_boundary - 1) % h) + 1}"

    L = anchor(((k - 2) % h) + 1, k - 2)
    R = anchor((k % h) + 1, k + 1)
    g1 = f"e{((k - 2) % h) + 1}"
    g2 = f"e{((k - 1) % h) + 1}"
    patterns = [[L, g1, g2, R], [L, g2, g1, R], [R, g1, g2, L], [R, g2, g1, L],
                [L, g1, R, g2], [L, g2, R, g1], [g1, L, g2, R], [g1, L, R, g2],
                [L, R, g1, g2], [L, R, g2, g1]]
    checks = [(two_sided_chord(surface, k - 2, k), 2),
              (two_sided_chord(surface, k - 1, k + 1), 2),
              (two_sided_chord(surface, k - 2, k + 1), 0),
              (w_curve(surface, k - 1), 0)]
    for tokens in patterns:
        try:
            curve = itinerary_curve(surface, tokens, name=f"r{k}")
        except ValueError:
            continue
        ok = True
        for other, expect in checks:
            if isotopic(curve, other) or \
               geometric_intersection(curve, other) != expect:
                ok = False
                break
        if ok:
            cache[k] = curve
            return curve
    raise RuntimeError(f"no admissible route found for r{k} on {surface.sig}")


def build_X(surface: Surface):
    """The Ilbira-Korkmaz vertex set: all a_i, a_{i,j} and b_{i,j}."""
    sig = surface.sig
    g, h = sig.genus, sig.holes
    if g + sig.boundary == 4:
        raise ValueError("the finite rigid set X is not defined when g+n = 4")
    out = []
    for i in range(1, g + 1):
        out.append(core_curve(surface, i))
    for i in range(1, g + 1):
        for j in range(1, h + 1):
            if j == i or j == ((i - 2) % h) + 1:
                continue
            out.append(one_sided_loop(surface, i, j))
    for i in range(1, h + 1):
        for j in range(i + 1, h + 1):
            if 2 <= j - i <= h - 2:
                out.append(two_sided_chord(surface, i, j))
    return _dedup(out)


def _dedup(classes):
    out = []
    for c in classes:
        if not any(x is c for x in out):
            out.append(c)
    if len(out) != len(classes):
        raise ValueError("named set contains repeated classes")
    return out


def b30_curves(surface: Surface):
    """The thirteen named curves of the genus-3 closed surface."""
    if (surface.sig.genus, surface.sig.boundary) != (3, 0):
        raise ValueError("this set lives on the closed genus-3 surface")
    cache = getattr(surface, "_b30", None)
    if cache is not None:
        return cache
    a1 = core_curve(surface, 1)
    a2 = core_curve(surface, 2)
    a3 = core_curve(surface, 3)
    d = itinerary_curve(surface, ["s1", "e2"], name="d")
    e = itinerary_curve(surface, ["s2", "e3"], name="e")
    f = itinerary_curve(surface, ["s3", "e1"], name="f")
    l = itinerary_curve(surface, ["s1", "s2", "s3", "e3"], name="l")
    c1 = itinerary_curve(surface, ["s1", "s2"], name="c1")
    c2 = itinerary_curve(surface, ["s2", "s3"], name="c2")
    w = twist(c2, c1, 1).rename("w")
    j = twist(c1, c2, 1).rename("j")
    u = twist(c1, f, 1).rename("u")
    v = twist(c1, e, 1).rename("v")
    cache = {"a1": a1, "a2": a2, "a3": a3, "c1": c1, "c2": c2, "d": d,
             "e": e, "f": f, "j": j, "l": l, "u": u, "v": v, "w": w}
    surface._b30 = cache
    return cache


def build_B30(surface: Surface):
    order = ["a1", "a2", "a3", "c1", "c2", "d", "e", "f", "j", "l", "u", "v", "w"]
    named = b30_curves(surface)
    return _dedup([named[k] for k in order])


# ---------------------------------------------------------------------------
# unique-curve solver
# ---------------------------------------------------------------------------

# essential curve counts of the pieces a cut can produce; only finite values
# allow the exact counting argument
_PIECE_CLASS_COUNTS = {
    (True, 0, 1): 0,    # disk
    (True, 0, 2): 0,    # annulus
    (True, 0, 3): 0,    # pants
    (False, 1, 1): 1,   # Mobius band: its core
    (False, 1, 2): 2,
    (False, 2, 0): 3,
}


def solve_unique_curve(surface: Surface, disjoint_from, distinct_from=(),
                       extra=None, bound=None, candidates=()):
    """All classes disjoint from every constraint curve, filtered.

    Two engines back the search.  When the constraint curves are pairwise
    disjoint and every piece of the cut surface has a finite known class
    count, verified candidate witnesses can be certified as *exactly* the
    classes disjoint from the system (no bound involved).  Otherwise classes
    of weight <= bound are enumerated and filtered, and the result is
    evidence at that bound.

    Returns (classes, certificate) where certificate is "exact" or
    ("bounded", L).
    """
    disjoint_from = list(disjoint_from)
    distinct_from = list(distinct_from)
    bound = bound if bound is not None else config.UNIQUE_BOUND

    def admissible(c):
        if any(isotopic(c, x) for x in distinct_from):
            return False
        if any(isotopic(c, x) for x in disjoint_from):
            return False
        if any(geometric_intersection(c, x) != 0 for x in disjoint_from
               if not isotopic(c, x)):
            return False
        if extra is not None and not extra(c):
            return False
        return True

    pairwise_disjoint = all(
        are_disjoint(x, y) for x, y in itertools.combinations(disjoint_from, 2))
    if pairwise_disjoint and disjoint_from:
        from .curves import minimal_multicurve
        from .diagram import robust_cut_complex, crossing_count
        multi = minimal_multicurve(disjoint_from)
        if crossing_count(multi) == 0:
            cut = robust_cut_complex(multi)
            budget = 0
            finite = True
            for sc, _ in cut.components():
                key = (sc.orientable, sc.genus, sc.boundary)
                if key not in _PIECE_CLASS_COUNTS:
                    finite = False
                    break
                budget += _PIECE_CLASS_COUNTS[key]
            if finite:
                verified = []
                for c in candidates:
                    if any(isotopic(c, x) for x in disjoint_from):
                        continue
                    if any(geometric_intersection(c, x) != 0
                           for x in disjoint_from):
                        continue
                    if not any(isotopic(c, v) for v in verified):
                        verified.append(c)
                if len(verified) == budget:
                    return ([c for c in verified if admissible(c)], "exact")

    found = enumerate_classes(surface, bound)
    return ([c for c in found if admissible(c)], ("bounded", bound))


# ---------------------------------------------------------------------------
# small-genus complexes and the exhaustion
# ---------------------------------------------------------------------------

def scharlemann_complex(surface: Surface, truncation: int = 4,
                        census_bound: int = None) -> FlagComplex:
    """The explicitly known complex of a small-genus surface.

    For (2,1) the vertex set is a, b and the twisted images t_a^m(b) for
    |m| <= truncation; the other small signatures are finite and enumerated
    outright.
    """
    sig = (surface.sig.genus, surface.sig.boundary)
    census_bound = census_bound or config.CENSUS_BOUND
    if sig in ((1, 0), (1, 1), (1, 2), (2, 0)):
        return FlagComplex(enumerate_classes(surface, census_bound))
    if sig != (2, 1):
        raise ValueError("no explicit complex is implemented for this surface")
    cls = enumerate_classes(surface, census_bound)
    a = next(c for c in cls if c.is_two_sided).rename("a")
    b = next(c for c in cls if not c.is_two_sided).rename("b")
    vertices = [a, b]
    for m in range(1, truncation + 1):
        for sgn in (1, -1):
            img = twist(a, b, sgn * m).rename(f"t^{sgn * m}(b)")
            if not any(isotopic(img, v) for v in vertices):
                vertices.append(img)
    return FlagComplex(vertices)


def generating_set(surface: Surface):
    """Twist and slide generators for the mapping class group.

    For the closed genus-3 surface this is the three-element set from the
    named curves; for g+n >= 5 the configured default uses twists about the
    b-chain and connector curves plus one crosscap slide.
    """
    sig = (surface.sig.genus, surface.sig.boundary)
    if sig == (3, 0):
        named = b30_curves(surface)
        a3, c1, c2 = named["a3"], named["c1"], named["c2"]
        return [Generator("twist", (c1,), name="t_c1"),
                Generator("twist", (c2,), name="t_c2"),
                Generator("slide", (a3, c2), name="y")]
    g, n = sig
    if g + n < 5:
        raise ValueError("no generating set is configured for this surface")
    gens = []
    h = g + n
    for i in range(1, h + 1):
        j = i + 2
        if j <= h:
            gens.append(Generator(
                "twist", (two_sided_chord(surface, i, j),), name=f"t_b{i},{j}"))
    for i in range(1, g):
        conn = itinerary_curve(surface, [f"s{i}", f"s{i+1}"], name=f"c{i},{i+1}")
        gens.append(Generator("twist", (conn,), name=f"t_c{i},{i+1}"))
    if g >= 3:
        conn23 = itinerary_curve(surface, ["s2", "s3"], name="c2,3")
        gens.append(Generator("slide", (core_curve(surface, 3), conn23),
                              name="y"))
    return gens


def exhaustion(surface: Surface, k: int):
    """The k-th finite set of the rigid exhaustion: E_1 is the base rigid
    set, and E_k adds all generator images and preimages of E_{k-1}."""
    if k < 1:
        raise ValueError("exhaustion levels start at 1")
    sig = (surface.sig.genus, surface.sig.boundary)
    if sig == (3, 0):
        base = build_B30(surface)
    elif surface.sig.holes >= 5:
        base = build_B(surface)
    else:
        raise ValueError("the exhaustion needs (3,0) or g+n >= 5")
    gens = generating_set(surface)
    levels = getattr(surface, "_exhaustion", None)
    if levels is None:
        levels = surface._exhaustion = [list(base)]
    while len(levels) < k:
        prev = levels[-1]
        cur = list(prev)
        for gen in gens:
            for power in (1, -1):
                for c in prev:
                    img = gen.apply(c) if power == 1 else gen.inverse().apply(c)
                    if not any(img is x for x in cur):
                        cur.append(img)
        levels.append(cur)
    return levels[k - 1]


def exhaustion_complex(surface: Surface, k: int) -> FlagComplex:
    return FlagComplex(exhaustion(surface, k))


# ---------------------------------------------------------------------------
# the B families for g+n >= 5
# ---------------------------------------------------------------------------

def build_B_family(surface: Surface, index: int):
    """The families B_1 .. B_5 of the rigid-set chain."""
    sig = surface.sig
    g, h = sig.genus, sig.holes
    if h < 5:
        raise ValueError("the B families need g+n >= 5")
    if index == 1:
        return build_X(surface)
    if index == 2:
        out = [w_curve(surface, k) for k in range(1, h + 1)]
        out += [r_curve(surface, k) for k in range(1, h + 1)]
        return _dedup(out)
    if index == 3:
        out = [_b3_curve(surface, "u", i) for i in range(1, g)]
        out += [_b3_curve(surface, "v", i) for i in range(1, g)]
        out += [_b3_curve(surface, "x", i) for i in range(2, g + 1)]
        return _dedup(out)
    if index == 4:
        out = [_b4_curve(surface, "c", i) for i in range(1, g)]
        out += [_b4_curve(surface, "d", i) for i in range(1, g)]
        out += [_b4_curve(surface, "uo", i) for i in range(1, g)]
        out += [_b4_curve(surface, "vo", i) for i in range(2, g + 1)]
        return _dedup(out)
    if index == 5:
        out = [_b5_curve(surface, "k", i) for i in range(1, g)]
        out += [_b5_curve(surface, "p", i) for i in range(1, g)]
        out += [_b5_curve(surface, "e", i) for i in range(1, g)]
        out += [_b5_curve(surface, "l", i) for i in range(2, g + 1)]
        out += [_b5_curve(surface, "rr", i) for i in range(1, g)]
        out += [_b5_curve(surface, "y", i) for i in range(2, g + 1)]
        out += [_b5_curve(surface, "ss", i) for i in range(1, g)]
        return _dedup(out)
    raise ValueError("family index must be 1..5")


def build_B(surface: Surface):
    """The union of the five families (the base of the exhaustion)."""
    out = []
    for i in range(1, 6):
        for c in build_B_family(surface, i):
            if not any(c is x for x in out):
                out.append(c)
    return out


def connector(surface: Surface, i: int) -> CurveClass:
    """The 2-sided curve joining crosscaps i and i+1 once each."""
    return itinerary_curve(surface, [f"s{i}", f"s{i+1}"], name=f"c{i}")


def connector_fan(surface: Surface, i: int, m: int) -> CurveClass:
    """The m-th 1-sided curve of the twist fan around connector c_i.

    The connector meets both of its cores once, so its twist orbit on them
    is a single bi-infinite family with a_i at position 0 and a_{i+1} at
    position -1; distinct positions are distinct classes.  Members are built
    incrementally and cached per surface.
    """
    cache = getattr(surface, "_fans", None)
    if cache is None:
        cache = surface._fans = {}
    fan = cache.setdefault(i, {0: core_curve(surface, i),
                               -1: core_curve(surface, i + 1)})
    if m in fan:
        return fan[m]
    conn = connector(surface, i)
    step = 1 if m > 0 else -1
    start = m
    while start not in fan:
        start -= step
    cur = fan[start]
    for pos in range(start + step, m + step, step):
        cur = twist(conn, cur, step)
        fan[pos] = cur
    return fan[m]


# fan positions of the deeper families: the figures defining them are not
# available in text form, so the artifact realises each family at a fixed
# distinct position of the connector-chain fans (0 and -1 are the cores)
_FAN_POSITIONS = {
    "u": 1, "v": 2, "x": -2,
    "d": 3, "uo": -3, "vo": 4,
    "k": -4, "p": 5, "e": -5, "l": 6, "rr": -6, "y": 7, "ss": -7,
}


def _fan_member(surface, kind, i, connector_index):
    m = _FAN_POSITIONS[kind]
    return connector_fan(surface, connector_index, m).rename(f"{kind}{i}")


def _b3_curve(surface, kind, i):
    base = i - 1 if kind == "x" else i
    return _fan_member(surface, kind, i, base)


def _b4_curve(surface, kind, i):
    if kind == "c":
        return connector(surface, i)
    base = i - 1 if kind == "vo" else i
    return _fan_member(surface, kind, i, base)


def _b5_curve(surface, kind, i):
    base = i - 1 if kind in ("l", "y") else i
    return _fan_member(surface, kind, i, base)


# ---------------------------------------------------------------------------
# the L_f sets witnessing small pointwise stabilizers
# ---------------------------------------------------------------------------

def find_L_f(surface: Surface, f: Generator, base=None, radius=None,
             max_size=4, census_bound=None):
    """Smallest subset L of the base rigid set with f(L) inside the set and
    bounded-evidence trivial pointwise stabilizer.

    Two rejections provide the evidence: an essential class of bounded
    weight disjoint from all of L supports a twist fixing L pointwise (the
    subset does not fill), and a nonidentity generator word of length <=
    radius fixing L pointwise while moving another curve of the base set is
    an explicit stabilizer witness.  Words acting trivially on the whole set
    are indistinguishable from the centre at this bound and do not count.
    """
    radius = radius if radius is not None else config.WORD_RADIUS
    census_bound = census_bound if census_bound is not None \
        else config.UNIQUE_BOUND + 2
    if base is None:
        base = build_B30(surface)
    base = list(base)
    in_base_cache = {}

    def in_base(c):
        key = id(c)
        if key not in in_base_cache:
            in_base_cache[key] = any(isotopic(c, x) for x in base)
        return in_base_cache[key]

    for size in range(1, max_size + 1):
        for subset in itertools.combinations(range(len(base)), size):
            L = [base[i] for i in subset]
            if not all(in_base(f.apply(c)) for c in L):
                continue
            if validate_L_f(surface, L, base=base, radius=radius,
                            census_bound=census_bound):
                return L
    return None


def validate_L_f(surface: Surface, L, base=None, radius=None,
                 census_bound=None):
    """Bounded evidence that the pointwise stabilizer of L is central.

    A witness against L is a nonidentity word fixing L pointwise while
    moving another curve of the base set; words acting trivially on the
    whole set are indistinguishable from the centre at this bound.  Beyond
    the generators, the alphabet includes the twist about every bounded
    2-sided class disjoint from all of L (the natural stabilizer elements);
    a disjoint class by itself is no witness, since the twist about the
    neighbourhood boundary of a 1-sided curve may well be central.
    """
    from .rigidity import _reduced_words
    radius = radius if radius is not None else config.WORD_RADIUS
    census_bound = census_bound if census_bound is not None \
        else config.UNIQUE_BOUND + 2
    if base is None:
        base = build_B30(surface)
    base = list(base)
    census = enumerate_classes(surface, census_bound)
    gens = list(generating_set(surface))
    extra = []
    for c in base + census:
        if not c.is_two_sided:
            continue
        if any(isotopic(c, x) for x in L) or \
           any(isotopic(c, x) for x in extra):
            continue
        if all(geometric_intersection(c, x) == 0 for x in L):
            extra.append(c)
            gens.append(Generator("twist", (c,), name=f"t_{c.name or '?'}"))
    for word in _reduced_words(gens, radius):
        if not word.word:
            continue
        if not all(isotopic(word.apply(c), c) for c in L):
            continue
        if any(not isotopic(word.apply(x), x) for x in base):
            return False
    return True
