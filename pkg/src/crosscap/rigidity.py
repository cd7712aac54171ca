"""Locally injective simplicial maps and bounded rigidity evidence.

A map between flag complexes is locally injective when it is injective on
the closed star of every vertex; equivalently no two vertices with a common
neighbour (or adjacent to each other) share an image, and edges never
collapse.  The enumerator backtracks over vertices in descending-degree
order with forward checking, which keeps the search tree small on the dense
complexes produced by the named rigid sets.

Certificates: a map is ``Induced(word)`` when a word in the mapping class
generators realises it on every vertex; ``NotInduced`` verdicts come with a
reason that a homeomorphism could never produce (a collapsed pair of
vertices, or a vertex whose topological type changes).  Word search is
bounded, so maps that are injective and type-preserving but not matched by a
short word stay ``Unknown``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import config
from .complexes import FlagComplex, SimplicialMap, build_complex, generating_set
from .curves import enumerate_classes, isotopic
from .mcg import MappingClass


@dataclass
class Induced:
    word: object

    @property
    def verdict(self):
        return "Induced"


@dataclass
class NotInduced:
    reason: str
    vertex: int = None

    @property
    def verdict(self):
        return "NotInduced"


@dataclass
class Unknown:
    radius: int

    @property
    def verdict(self):
        return "Unknown"


def is_locally_injective(m: SimplicialMap) -> bool:
    dom = m.domain
    asg = m.assignment
    n = dom.n_vertices
    for v in range(n):
        star = [v] + dom.neighbors(v)
        images = [asg[u] for u in star]
        if len(set(images)) != len(images):
            return False
    return True


def enumerate_locally_injective(domain: FlagComplex, codomain: FlagComplex,
                                limit: int = None):
    """All locally injective simplicial maps, in deterministic order.

    Vertices are assigned in descending-degree order (ties by index); a
    candidate image must be adjacent to the images of all previously
    assigned neighbours, and distinct from the images of anything sharing a
    star with the vertex.
    """
    n = domain.n_vertices
    m = codomain.n_vertices
    if n == 0:
        yield SimplicialMap(domain, codomain, ())
        return
    if m == 0:
        return
    order = sorted(range(n), key=lambda v: (-domain.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    # pairs that may never share an image: adjacent or sharing a neighbour
    conflict = [set() for _ in range(n)]
    for v in range(n):
        nb = set(domain.neighbors(v))
        for u in nb:
            conflict[v].add(u)
            for w in domain.neighbors(u):
                if w != v:
                    conflict[v].add(w)
    assignment = {}
    found = 0

    def candidates(v):
        out = range(m)
        for u in domain.neighbors(v):
            if u in assignment:
                img = assignment[u]
                out = [c for c in out if codomain.adjacency[c][img]]
        banned = {assignment[u] for u in conflict[v] if u in assignment}
        return [c for c in out if c not in banned]

    def rec(i):
        nonlocal found
        if limit is not None and found >= limit:
            return
        if i == n:
            found += 1
            yield SimplicialMap(domain, codomain,
                                [assignment[v] for v in range(n)])
            return
        v = order[i]
        for c in candidates(v):
            assignment[v] = c
            yield from rec(i + 1)
            del assignment[v]
            if limit is not None and found >= limit:
                return

    yield from rec(0)


def naive_locally_injective(domain: FlagComplex, codomain: FlagComplex):
    """Reference oracle: filter every vertex assignment (tiny inputs only)."""
    n, m = domain.n_vertices, codomain.n_vertices
    out = []
    for asg in itertools.product(range(m), repeat=n):
        ok = True
        for i, j in domain.edges():
            a, b = asg[i], asg[j]
            if a == b or not codomain.adjacency[a][b]:
                ok = False
                break
        if not ok:
            continue
        m_try = SimplicialMap(domain, codomain, asg)
        if is_locally_injective(m_try):
            out.append(m_try)
    return out


def _reduced_words(gens, radius):
    """Freely reduced generator words of length <= radius, identity first."""
    alphabet = []
    for g in gens:
        alphabet.append(g)
        alphabet.append(g.inverse())
    words = [()]
    frontier = [()]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for g in alphabet:
                if w and w[-1].kind == g.kind and \
                   w[-1].curves == g.curves and w[-1].power == -g.power:
                    continue
                nxt.append(w + (g,))
        words.extend(nxt)
        frontier = nxt
    return [MappingClass(w) for w in words]


def induced_certificate(m: SimplicialMap, radius: int = None):
    """Decide whether a locally injective map looks induced by a surface
    homeomorphism, within a bounded word search."""
    radius = radius if radius is not None else config.WORD_RADIUS
    dom, cod = m.domain, m.codomain
    if len(set(m.assignment)) != dom.n_vertices:
        return NotInduced("NonInjectiveOnComplex")
    for v, c in enumerate(dom.vertices):
        img = cod.vertices[m.assignment[v]]
        if c.topological_type() != img.topological_type():
            return NotInduced("TypeMismatch", vertex=v)
    if all(isotopic(c, cod.vertices[m.assignment[v]])
           for v, c in enumerate(dom.vertices)):
        return Induced(MappingClass())
    surface = dom.vertices[0].surface
    try:
        gens = generating_set(surface)
    except ValueError:
        return Unknown(radius)
    for word in _reduced_words(gens, radius):
        if all(isotopic(word.apply(c), cod.vertices[m.assignment[v]])
               for v, c in enumerate(dom.vertices)):
            return Induced(word)
    return Unknown(radius)


def rigidity_evidence(classes, bound: int = None, radius: int = None,
                      map_limit: int = 2000, surface=None):
    """Enumerate locally injective maps of the set into a truncated complex
    and certify each one.

    The codomain is the union of every class of weight <= bound with the set
    itself (so the identity is always present).  The report counts verdicts;
    for a rigid set no NotInduced map should ever appear, and the result is
    explicitly bounded evidence, not a proof.
    """
    classes = list(classes)
    bound = bound if bound is not None else config.CENSUS_BOUND
    radius = radius if radius is not None else config.WORD_RADIUS
    if not classes:
        return {
            "set_size": 0, "codomain_size": 0, "bound": bound,
            "radius": radius, "maps": 1,
            "counts": {"Induced": 1, "NotInduced": 0, "Unknown": 0},
            "not_induced": [],
            "note": "vacuous: the empty map is induced by the identity",
        }
    surface = surface or classes[0].surface
    cod_classes = list(classes)
    for c in enumerate_classes(surface, bound):
        if not any(c is x for x in cod_classes):
            cod_classes.append(c)
    domain = build_complex(classes)
    codomain = build_complex(cod_classes)
    counts = {"Induced": 0, "NotInduced": 0, "Unknown": 0}
    not_induced = []
    total = 0
    for m in enumerate_locally_injective(domain, codomain, limit=map_limit):
        total += 1
        cert = induced_certificate(m, radius)
        counts[cert.verdict] += 1
        if cert.verdict == "NotInduced":
            not_induced.append((m, cert))
    return {
        "set_size": len(classes),
        "codomain_size": codomain.n_vertices,
        "bound": bound,
        "radius": radius,
        "maps": total,
        "counts": counts,
        "not_induced": not_induced,
        "note": "bounded evidence: maps into the weight-truncated complex only",
    }
