"""Geometric intersection numbers and the configuration predicates built on
them: disjointness, bounded pants-decomposition maximality, pentagons and
induced paths.

The intersection number of two classes is computed by overlaying transverse
representatives and removing curve-curve bigons until none remain; a
transverse pair without bigons realises the minimal crossing number.
"""

from __future__ import annotations

import itertools

from .curves import (
    CurveClass,
    Surface,
    TRIVIAL,
    classify_candidate,
    enumerate_in_complement,
    geometric_intersection,
    isotopic,
    minimal_multicurve,
)
from .diagram import crossing_count, robust_cut_complex


def are_disjoint(x: CurveClass, y: CurveClass) -> bool:
    """True when the classes admit disjoint representatives."""
    return geometric_intersection(x, y) == 0


def intersection_matrix(classes):
    """Symmetric matrix of pairwise geometric intersection numbers."""
    n = len(classes)
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if isotopic(classes[i], classes[j]):
                raise ValueError("intersection matrix requires distinct classes")
            v = geometric_intersection(classes[i], classes[j])
            mat[i][j] = mat[j][i] = v
    return mat


def is_top_pants_decomposition(classes, bound, surface=None):
    """Bounded evidence that a disjoint curve system is maximal.

    Returns (verdict, certificate).  The system must be pairwise disjoint;
    maximality holds exactly when every complement piece is a pair of pants,
    which is certified structurally.  When a piece admits further curves, a
    violating class of weight <= bound is searched as the certificate.
    """
    classes = list(classes)
    surface = surface or classes[0].surface
    for x, y in itertools.combinations(classes, 2):
        if isotopic(x, y):
            return False, ("duplicate class", x, y)
        if geometric_intersection(x, y) != 0:
            return False, ("intersecting pair", x, y)
    multi = minimal_multicurve(classes)
    if crossing_count(multi) != 0:
        raise RuntimeError("disjoint classes failed to realise disjointly")
    cut = robust_cut_complex(multi)
    pieces = [sc for sc, _ in cut.components()]
    bad = [sc for sc in pieces
           if not (sc.orientable and sc.genus == 0 and sc.boundary == 3)]
    if not bad:
        return True, ("all complement pieces are pants", tuple(pieces))
    extra = enumerate_in_complement(surface, classes, bound)
    extra = [c for c in extra
             if not any(isotopic(c, x) for x in classes)]
    if extra:
        return False, ("curve disjoint from the system", extra[0])
    return False, ("non-pants piece but no witness at bound", bad[0], bound)


def verify_pentagon(c1, c2, c3, c4, c5) -> bool:
    """True when the disjointness graph of the five classes, in this cyclic
    order, is exactly the 5-cycle."""
    cs = [c1, c2, c3, c4, c5]
    for x, y in itertools.combinations(cs, 2):
        if isotopic(x, y):
            return False
    for i in range(5):
        for j in range(i + 1, 5):
            adjacent = (j - i) % 5 in (1, 4)
            disjoint = are_disjoint(cs[i], cs[j])
            if adjacent != disjoint:
                return False
    return True


def verify_induced_path(seq) -> bool:
    """Consecutive classes disjoint, non-consecutive classes intersecting."""
    seq = list(seq)
    if len(seq) < 2:
        raise ValueError("a path needs at least two classes")
    for x, y in itertools.combinations(seq, 2):
        if isotopic(x, y):
            return False
    n = len(seq)
    for i in range(n):
        for j in range(i + 1, n):
            disjoint = are_disjoint(seq[i], seq[j])
            if (j - i == 1) != disjoint:
                return False
    return True
