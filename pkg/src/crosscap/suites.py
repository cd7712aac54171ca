"""Named verification suites: each runs a fixed list of checks and reports
one (claim, passed, detail) row per check.

The suites mechanize the desk-checkable statements about the small curve
complexes, the thirteen-curve rigid set with its twist and slide table, the
g+n = 5 intersection patterns, the set cardinalities and the exhaustion,
plus the property batteries backing the engines.  The same functions drive
the command line runner and the acceptance tests.
"""

from __future__ import annotations

import itertools
import random

from . import config
from .curves import (
    Surface,
    TRIVIAL,
    classify_candidate,
    core_curve,
    enumerate_classes,
    geometric_intersection,
    isotopic,
)
from .complexes import (
    FlagComplex,
    SimplicialMap,
    b30_curves,
    build_B30,
    build_B_family,
    build_X,
    build_complex,
    exhaustion,
    find_L_f,
    generating_set,
    r_curve,
    scharlemann_complex,
    solve_unique_curve,
    two_sided_chord,
    w_curve,
)
from .geometry import (
    are_disjoint,
    is_top_pants_decomposition,
    verify_induced_path,
    verify_pentagon,
)
from .mcg import MappingClass, crosscap_slide, twist
from .rigidity import (
    enumerate_locally_injective,
    induced_certificate,
    is_locally_injective,
    naive_locally_injective,
    rigidity_evidence,
)


def _check(rows, claim, passed, detail=""):
    rows.append((claim, bool(passed), str(detail)))
    return passed


def suite_small_complexes():
    """Vertex censuses of the four explicitly known small complexes."""
    rows = []
    expected = {(1, 0): 1, (1, 1): 1, (1, 2): 2, (2, 0): 3}
    for (g, n), want in expected.items():
        s = Surface.get(g, n)
        cls = enumerate_classes(s, config.CENSUS_BOUND)
        _check(rows, f"({g},{n}) has {want} classes at weight "
               f"{config.CENSUS_BOUND}", len(cls) == want, f"found {len(cls)}")
    s = Surface.get(1, 2)
    fc = build_complex(enumerate_classes(s, config.CENSUS_BOUND))
    _check(rows, "(1,2) complex has no edges", len(fc.edges()) == 0,
           f"{len(fc.edges())} edges")
    return rows


def suite_fan_21(truncation=4):
    """The twisted fan of the genus-2 one-holed surface and its
    locally-injective-but-not-induced map."""
    rows = []
    s = Surface.get(2, 1)
    cls = enumerate_classes(s, config.CENSUS_BOUND)
    a = next(c for c in cls if c.is_two_sided).rename("a")
    b = next(c for c in cls if not c.is_two_sided).rename("b")
    fan = {m: twist(a, b, m) for m in range(-truncation, truncation + 1)}
    distinct = all(not isotopic(fan[m], fan[k])
                   for m, k in itertools.combinations(fan, 2))
    _check(rows, f"t_a^m(b), |m| <= {truncation}: {2*truncation+1} pairwise "
           "distinct classes", distinct)
    _check(rows, "t_a^0(b) is b", isotopic(fan[0], b))
    _check(rows, "[a] is none of the twisted classes",
           not any(isotopic(a, x) for x in fan.values()))
    vertices = [a, b]
    for x in fan.values():
        if not any(isotopic(x, v) for v in vertices):
            vertices.append(x)
    _check(rows, "vertex set {a, b, t_a^m(b)} has 10 classes",
           len(vertices) == 10, f"found {len(vertices)}")
    far = twist(a, b, truncation + 1)
    fc = build_complex(vertices)
    cod = build_complex(vertices + [far])
    assignment = list(range(len(vertices)))
    assignment[fc.index_of(a)] = len(vertices)
    m = SimplicialMap(fc, cod, assignment)
    _check(rows, "map fixing the fan and moving [a] to a far twist is "
           "locally injective", is_locally_injective(m))
    cert = induced_certificate(m, radius=0)
    _check(rows, "its certificate is NotInduced(TypeMismatch)",
           cert.verdict == "NotInduced" and cert.reason == "TypeMismatch",
           repr(cert))
    return rows


def suite_lemma_rigid_30():
    """Mechanization of the thirteen-curve rigid set's characterizations."""
    rows = []
    s = Surface.get(3, 0)
    N = b30_curves(s)
    a1, a2, a3 = N["a1"], N["a2"], N["a3"]
    for x, y in itertools.combinations((a1, a2, a3), 2):
        _check(rows, f"{x.name}, {y.name} disjoint", are_disjoint(x, y))
    _check(rows, "e-j-l-w-a2 is an induced path of length four",
           verify_induced_path([N["e"], N["j"], N["l"], N["w"], N["a2"]]))
    _check(rows, "cut along l is orientable",
           all(sc.orientable for sc in N["l"].cut_along()),
           str(N["l"].cut_along()))
    exact_specs = [
        ("d", ["a2", "a3"], ["a1", "a2", "a3"], ["a1", "d"]),
        ("e", ["a1", "a3"], ["a1", "a2", "a3"], ["a2", "e"]),
        ("f", ["a1", "a2"], ["a1", "a2", "a3"], ["a3", "f"]),
        ("u", ["e", "a1"], ["a3", "e", "a1"], ["a3", "u"]),
        ("v", ["e", "a3"], ["a1", "e", "a3"], ["a1", "v"]),
    ]
    for name, dis, dist, cands in exact_specs:
        out, cert = solve_unique_curve(
            s, [N[x] for x in dis], [N[x] for x in dist],
            candidates=[N[x] for x in cands])
        ok = len(out) == 1 and isotopic(out[0], N[name])
        _check(rows, f"{name} is the unique curve disjoint from "
               f"{{{', '.join(dis)}}}", ok, f"certificate {cert}")
    for name, dis in [("c1", ["a3", "l"]), ("c2", ["a1", "l"]),
                      ("w", ["a2", "l"]), ("j", ["e", "l"])]:
        constraints = [N[x] for x in dis]
        out, cert = solve_unique_curve(s, constraints, constraints,
                                       bound=config.UNIQUE_BOUND + 2)
        ok = len(out) == 1 and isotopic(out[0], N[name])
        _check(rows, f"{name} is the unique curve disjoint from "
               f"{{{', '.join(dis)}}}", ok, f"certificate {cert}")
    return rows


def suite_lemma_Lf_30():
    """The nine generator images inside the rigid set, plus the L_f sets."""
    rows = []
    s = Surface.get(3, 0)
    N = b30_curves(s)
    c1, c2, w, j, a3 = N["c1"], N["c2"], N["w"], N["j"], N["a3"]
    table = [
        ("t_c1(c1) = c1", twist(c1, c1, 1), c1),
        ("t_c1(c2) = j", twist(c1, c2, 1), j),
        ("t_c1(w) = c2", twist(c1, w, 1), c2),
        ("t_c2(c1) = w", twist(c2, c1, 1), w),
        ("t_c2(c2) = c2", twist(c2, c2, 1), c2),
        ("t_c2(j) = c1", twist(c2, j, 1), c1),
        ("y(c1) = c1", crosscap_slide(a3, c2, c1), c1),
        ("y(c2) = c2", crosscap_slide(a3, c2, c2), c2),
        ("y(w) = j", crosscap_slide(a3, c2, w), j),
    ]
    for claim, got, want in table:
        _check(rows, claim, isotopic(got, want))
    base = build_B30(s)
    gens = {g.name: g for g in generating_set(s)}
    V1 = [N["c1"], N["c2"], N["w"]]
    V2 = [N["c1"], N["c2"], N["j"]]
    from .complexes import validate_L_f
    for gen_name, L, names in (("t_c1", V1, "{c1, c2, w}"),
                               ("t_c2", V2, "{c1, c2, j}"),
                               ("y", V1, "{c1, c2, w}")):
        gen = gens[gen_name]
        inside = all(any(isotopic(gen.apply(c), x) for x in base) for c in L)
        _check(rows, f"{gen_name}({names}) stays inside the rigid set", inside)
        _check(rows, f"{names} has trivial-stabilizer evidence for {gen_name}",
               validate_L_f(s, L, base=base, radius=1))
    return rows


def suite_lemma_1c(signatures=((4, 1), (3, 2))):
    """Intersection pattern of the w and r families and the pentagon."""
    rows = []
    for g, n in signatures:
        s = Surface.get(g, n)
        h = g + n
        for k in range(1, h + 1):
            wk = w_curve(s, k)
            for other in (two_sided_chord(s, k - 2, k),
                          two_sided_chord(s, k - 1, k + 1)):
                val = geometric_intersection(wk, other)
                _check(rows, f"({g},{n}) i(w{k}, {other.name}) = 2", val == 2,
                       f"got {val}")
            rk = r_curve(s, k)
            for other in (two_sided_chord(s, k - 2, k),
                          two_sided_chord(s, k - 1, k + 1)):
                val = geometric_intersection(rk, other)
                _check(rows, f"({g},{n}) i(r{k}, {other.name}) = 2", val == 2,
                       f"got {val}")
        P = [core_curve(s, i) for i in range(1, g + 1)]
        P += [two_sided_chord(s, 1, 3), two_sided_chord(s, 3, h)]
        ok, cert = is_top_pants_decomposition(P, bound=config.PANTS_BOUND)
        _check(rows, f"({g},{n}) pants system P is maximal", ok, cert[0])
        Q = [core_curve(s, i) for i in range(1, g + 1)]
        Q += [two_sided_chord(s, 2, h), two_sided_chord(s, 3, h)]
        ok, cert = is_top_pants_decomposition(Q, bound=config.PANTS_BOUND)
        _check(rows, f"({g},{n}) pants system Q is maximal", ok, cert[0])
        pent = [two_sided_chord(s, 3, h), two_sided_chord(s, 1, 3),
                two_sided_chord(s, 1, 4), r_curve(s, 3), w_curve(s, 2)]
        _check(rows, f"({g},{n}) pentagon (b3{h}, b13, b14, r3, w2)",
               verify_pentagon(*pent))
    return rows


def suite_cardinalities():
    """Sizes of the named sets against the listings."""
    rows = []
    _check(rows, "|X(4,1)| = 21", len(build_X(Surface.get(4, 1))) == 21)
    _check(rows, "|X(3,2)| = 17", len(build_X(Surface.get(3, 2))) == 17)
    _check(rows, "|B30| = 13", len(build_B30(Surface.get(3, 0))) == 13)
    for g, n in ((4, 1), (3, 2)):
        s = Surface.get(g, n)
        want = {2: 2 * (g + n), 3: 3 * (g - 1), 4: 4 * (g - 1), 5: 7 * (g - 1)}
        for idx, target in want.items():
            fam = build_B_family(s, idx)
            _check(rows, f"({g},{n}) |B{idx}| = {target}",
                   len(fam) == target, f"found {len(fam)}")
    return rows


def suite_exhaustion_30():
    """Strict growth and bounded coverage of the exhaustion sequence."""
    rows = []
    s = Surface.get(3, 0)
    E = [exhaustion(s, k) for k in (1, 2, 3)]
    _check(rows, "|E1| = 13", len(E[0]) == 13, f"{len(E[0])}")
    _check(rows, "E1 strictly inside E2 strictly inside E3",
           len(E[0]) < len(E[1]) < len(E[2]),
           f"sizes {[len(x) for x in E]}")
    for small, big in zip(E, E[1:]):
        _check(rows, "monotone: every earlier class persists",
               all(any(c is x for x in big) for c in small))
    small_classes = enumerate_classes(s, config.COVER_WEIGHT)
    top = E[min(config.COVER_DEPTH, 3) - 1]
    missing = [c for c in small_classes
               if not any(isotopic(c, x) for x in top)]
    _check(rows, f"every class of weight <= {config.COVER_WEIGHT} lies in "
           f"E{min(config.COVER_DEPTH, 3)}", not missing,
           f"{len(missing)} missing of {len(small_classes)}")
    return rows


def _random_flag_complex(rng, n_max=8):
    n = rng.randint(1, n_max)
    adjacency = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            adjacency[i][j] = adjacency[j][i] = rng.random() < 0.4

    class Stub:
        def __init__(self, k):
            self.name = f"x{k}"
    fc = FlagComplex.__new__(FlagComplex)
    fc.vertices = [Stub(k) for k in range(n)]
    fc.adjacency = adjacency
    return fc


def suite_engine_oracles(samples=200, pair_samples=100, word_samples=100,
                         rng_seed=7):
    """Property batteries: enumerator vs naive filter, bigon reduction vs
    sampled brute force, invariance of the mapping class action, and zero
    NotInduced maps for the rigid thirteen-curve set."""
    rows = []
    rng = random.Random(rng_seed)
    bad = 0
    tried = 0
    while tried < samples:
        dom = _random_flag_complex(rng, 6)
        cod = _random_flag_complex(rng, 6)
        if cod.n_vertices ** dom.n_vertices > 3 * 10 ** 5:
            continue
        tried += 1
        fast = [m.assignment for m in enumerate_locally_injective(dom, cod)]
        slow = [m.assignment for m in naive_locally_injective(dom, cod)]
        if sorted(fast) != sorted(slow):
            bad += 1
    _check(rows, f"enumerator matches the naive filter on {samples} random "
           "complexes", bad == 0, f"{bad} mismatches")

    pool = []
    for g, n in ((2, 0), (2, 1)):
        surf = Surface.get(g, n)
        cls = enumerate_classes(surf, config.CENSUS_BOUND)
        reps = _representative_index(surf, cls, config.CENSUS_BOUND)
        pool.append((surf, cls, reps))
    mismatches = 0
    for t in range(pair_samples):
        surf, pool_cls, reps = pool[t % 2]
        x, y = rng.sample(pool_cls, 2)
        engine = geometric_intersection(x, y)
        oracle = _bruteforce_intersection(reps[id(x)], reps[id(y)])
        if engine != oracle:
            mismatches += 1
    _check(rows, f"bigon reduction matches brute-force minima on "
           f"{pair_samples} pairs", mismatches == 0,
           f"{mismatches} mismatches")

    s30 = Surface.get(3, 0)
    base = build_B30(s30)
    gens = generating_set(s30)
    alphabet = [g for g in gens] + [g.inverse() for g in gens]
    fails = 0
    for t in range(word_samples):
        word = MappingClass(tuple(rng.choice(alphabet)
                                  for _ in range(rng.randint(1, 2))))
        x, y = rng.sample(base, 2)
        fx, fy = word.apply(x), word.apply(y)
        ok = (x.sidedness == fx.sidedness
              and x.topological_type() == fx.topological_type()
              and not isotopic(fx, fy)
              and geometric_intersection(fx, fy)
              == geometric_intersection(x, y))
        if not ok:
            fails += 1
    _check(rows, f"generator words preserve sidedness, type and "
           f"intersections on {word_samples} samples", fails == 0,
           f"{fails} failures")

    report = rigidity_evidence(base, bound=config.CENSUS_BOUND,
                               radius=config.WORD_RADIUS)
    _check(rows, "rigidity evidence for the thirteen-curve set has zero "
           "NotInduced maps", report["counts"]["NotInduced"] == 0,
           str(report["counts"]))
    return rows


def _representative_index(surface, classes, bound, per_class=5):
    """Map each class id to several traced normal representatives."""
    from .curves import graded_weight_vectors, trace_weights
    from .diagram import Diagram

    reps = {id(c): [] for c in classes}
    for weights in graded_weight_vectors(surface.tri, bound):
        curves = trace_weights(surface.tri, weights)
        if len(curves) != 1:
            continue
        cand = classify_candidate(surface, Diagram(surface.tri, curves))
        if cand is TRIVIAL:
            continue
        for c in classes:
            if len(reps[id(c)]) < per_class and isotopic(cand, c):
                reps[id(c)].append(cand.diagram)
                break
    return reps


def _bruteforce_intersection(reps_x, reps_y, placements=3):
    """Minimum raw crossing count over representative pairs and transverse
    placements; independent of bigon reduction."""
    from .diagram import crossing_count, overlay, reparametrize

    best = None
    for dx in reps_x:
        for dy in reps_y:
            for seed in range(placements):
                ov = overlay(dx, dy)
                if seed:
                    ov = reparametrize(ov, seed)
                count = crossing_count(ov)
                if best is None or count < best:
                    best = count
    return best


MANIFEST = {
    "small-complexes": suite_small_complexes,
    "fan-21": suite_fan_21,
    "lemma-rigid-30": suite_lemma_rigid_30,
    "lemma-Lf-30": suite_lemma_Lf_30,
    "lemma-1c": suite_lemma_1c,
    "cardinalities": suite_cardinalities,
    "exhaustion-30": suite_exhaustion_30,
    "engine-oracles": suite_engine_oracles,
}


def run_suite(name):
    """Execute a named suite; returns (rows, all_passed)."""
    if name not in MANIFEST:
        raise KeyError(name)
    rows = MANIFEST[name]()
    return rows, all(p for _, p, _ in rows)
