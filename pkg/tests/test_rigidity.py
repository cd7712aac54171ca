"""Locally injective maps, their enumeration and certificates."""

import random

import pytest

from crosscap.curves import Surface, core_curve, enumerate_classes, isotopic
from crosscap.complexes import (
    FlagComplex,
    SimplicialMap,
    b30_curves,
    build_B30,
    build_complex,
    scharlemann_complex,
)
from crosscap.mcg import twist
from crosscap.rigidity import (
    enumerate_locally_injective,
    induced_certificate,
    is_locally_injective,
    naive_locally_injective,
    rigidity_evidence,
)


def path_complex(n):
    fc = FlagComplex.__new__(FlagComplex)

    class Stub:
        def __init__(self, k):
            self.name = f"p{k}"
    fc.vertices = [Stub(k) for k in range(n)]
    fc.adjacency = [[abs(i - j) == 1 for j in range(n)] for i in range(n)]
    return fc


def test_identity_is_locally_injective():
    s = Surface.get(3, 0)
    fc = build_complex([core_curve(s, i) for i in (1, 2, 3)])
    assert is_locally_injective(SimplicialMap(fc, fc, [0, 1, 2]))


def test_star_collapse_detected():
    p3 = path_complex(3)
    collapse = SimplicialMap(p3, p3, [0, 1, 0])
    assert not is_locally_injective(collapse)


def test_edgeless_collapse_is_locally_injective():
    s = Surface.get(1, 2)
    fc = scharlemann_complex(s)
    m = SimplicialMap(fc, fc, [0, 0])
    assert is_locally_injective(m)
    cert = induced_certificate(m, radius=0)
    assert cert.verdict == "NotInduced"
    assert cert.reason == "NonInjectiveOnComplex"


def test_enumerator_matches_naive_on_paths():
    p3 = path_complex(3)
    fast = sorted(m.assignment for m in enumerate_locally_injective(p3, p3))
    slow = sorted(m.assignment for m in naive_locally_injective(p3, p3))
    assert fast == slow


def test_enumerator_matches_naive_randomized():
    rng = random.Random(11)
    for _ in range(40):
        n, m = rng.randint(1, 5), rng.randint(1, 5)

        def rand_complex(k):
            fc = FlagComplex.__new__(FlagComplex)

            class Stub:
                def __init__(self, i):
                    self.name = f"v{i}"
            fc.vertices = [Stub(i) for i in range(k)]
            adj = [[False] * k for _ in range(k)]
            for i in range(k):
                for j in range(i + 1, k):
                    adj[i][j] = adj[j][i] = rng.random() < 0.5
            fc.adjacency = adj
            return fc
        dom, cod = rand_complex(n), rand_complex(m)
        fast = sorted(x.assignment for x in enumerate_locally_injective(dom, cod))
        slow = sorted(x.assignment for x in naive_locally_injective(dom, cod))
        assert fast == slow


def test_empty_codomain():
    p2 = path_complex(2)
    empty = path_complex(0)
    assert list(enumerate_locally_injective(p2, empty)) == []


def test_limit_respected():
    p2 = path_complex(2)
    assert len(list(enumerate_locally_injective(p2, p2, limit=1))) == 1


def test_identity_certified_induced():
    s = Surface.get(3, 0)
    fc = build_complex(build_B30(s))
    ident = SimplicialMap(fc, fc, list(range(fc.n_vertices)))
    cert = induced_certificate(ident, radius=0)
    assert cert.verdict == "Induced"
    assert not cert.word.word


def test_generator_image_certified_induced():
    s = Surface.get(3, 0)
    N = b30_curves(s)
    sub = [N["c1"], N["c2"], N["w"]]
    images = [N["c1"], N["j"], N["c2"]]   # the first twist's action
    dom = build_complex(sub)
    cod = build_complex([N["c1"], N["c2"], N["w"], N["j"]])
    asg = [cod.index_of(x) for x in images]
    cert = induced_certificate(SimplicialMap(dom, cod, asg), radius=1)
    assert cert.verdict == "Induced"
    assert len(cert.word.word) == 1


def test_type_mismatch_detected_on_fan_map():
    s = Surface.get(2, 1)
    cls = enumerate_classes(s, 8)
    a = next(c for c in cls if c.is_two_sided)
    b = next(c for c in cls if not c.is_two_sided)
    far = twist(a, b, 3)
    dom = build_complex([a, b])
    cod = build_complex([a, b, far])
    m = SimplicialMap(dom, cod, [2, 1])
    assert is_locally_injective(m)
    cert = induced_certificate(m, radius=0)
    assert cert.verdict == "NotInduced" and cert.reason == "TypeMismatch"


def test_rigidity_evidence_finds_counterexample_for_single_a():
    # no finite set containing the 2-sided curve of the one-holed Klein
    # bottle is rigid: its twisted images give type-changing targets
    s = Surface.get(2, 1)
    cls = enumerate_classes(s, 8)
    a = next(c for c in cls if c.is_two_sided)
    report = rigidity_evidence([a], bound=8, radius=0)
    assert report["counts"]["NotInduced"] >= 1


def test_rigidity_evidence_empty_set_is_vacuous():
    s = Surface.get(3, 0)
    report = rigidity_evidence([], surface=s, bound=6, radius=0)
    assert report["maps"] == 1
    assert report["counts"] == {"Induced": 1, "NotInduced": 0, "Unknown": 0}
