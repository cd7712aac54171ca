"""Named sets, flag complexes, the solver and the exhaustion."""

import pytest

from crosscap.curves import Surface, core_curve, enumerate_classes, isotopic
from crosscap.complexes import (
    FlagComplex,
    SimplicialMap,
    b30_curves,
    build_B30,
    build_X,
    build_complex,
    connector_fan,
    exhaustion,
    find_L_f,
    generating_set,
    named_curve,
    scharlemann_complex,
    solve_unique_curve,
)


def test_cores_form_a_triangle():
    s = Surface.get(3, 0)
    fc = build_complex([core_curve(s, i) for i in (1, 2, 3)])
    assert fc.n_vertices == 3
    assert len(fc.edges()) == 3


def test_path_complex_shape():
    s = Surface.get(3, 0)
    N = b30_curves(s)
    fc = build_complex([N[k] for k in ("e", "j", "l", "w", "a2")])
    assert sorted(fc.degree(i) for i in range(5)) == [1, 1, 2, 2, 2]


def test_duplicate_vertices_rejected():
    s = Surface.get(3, 0)
    a = core_curve(s, 1)
    with pytest.raises(ValueError):
        FlagComplex([a, a])


def test_b30_names_and_types():
    s = Surface.get(3, 0)
    N = b30_curves(s)
    assert len(N) == 13
    one_sided = {"a1", "a2", "a3", "d", "e", "f", "l", "u", "v"}
    for name, c in N.items():
        assert c.is_two_sided == (name not in one_sided), name


def test_build_X_counts():
    assert len(build_X(Surface.get(4, 1))) == 21
    assert len(build_X(Surface.get(3, 2))) == 17
    with pytest.raises(ValueError):
        build_X(Surface.get(2, 2))


def test_scharlemann_small():
    fc = scharlemann_complex(Surface.get(1, 2))
    assert fc.n_vertices == 2 and not fc.edges()
    fc = scharlemann_complex(Surface.get(2, 0))
    assert fc.n_vertices == 3


def test_scharlemann_2_1_truncation():
    fc = scharlemann_complex(Surface.get(2, 1), truncation=2)
    assert fc.n_vertices == 2 + 4


def test_solver_exact_route():
    s = Surface.get(3, 0)
    N = b30_curves(s)
    out, cert = solve_unique_curve(
        s, [N["a2"], N["a3"]], [N["a1"], N["a2"], N["a3"]],
        candidates=[N["a1"], N["d"]])
    assert cert == "exact"
    assert len(out) == 1 and isotopic(out[0], N["d"])


def test_solver_bounded_route():
    s = Surface.get(3, 0)
    N = b30_curves(s)
    constraints = [N["a3"], N["l"]]
    out, cert = solve_unique_curve(s, constraints, constraints, bound=12)
    assert cert == ("bounded", 12)
    assert len(out) == 1 and isotopic(out[0], N["c1"])


def test_solver_extra_predicate():
    s = Surface.get(3, 0)
    N = b30_curves(s)
    out, _ = solve_unique_curve(
        s, [], [], bound=12,
        extra=lambda c: (not c.is_two_sided
                         and all(p.orientable for p in c.cut_along())))
    assert len(out) == 1 and isotopic(out[0], N["l"])


def test_named_curve_resolution():
    s41 = Surface.get(4, 1)
    assert named_curve(s41, "a2").name == "a2"
    assert named_curve(s41, "b1,3").is_two_sided
    assert not named_curve(s41, "a1,3").is_two_sided
    s30 = Surface.get(3, 0)
    assert named_curve(s30, "l").name == "l"
    with pytest.raises(KeyError):
        named_curve(s30, "nope")


def test_connector_fan_positions_distinct():
    s = Surface.get(4, 1)
    members = [connector_fan(s, 1, m) for m in range(-3, 4)]
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            assert not isotopic(members[i], members[j])
    assert members[3] is core_curve(s, 1)
    assert members[2] is core_curve(s, 2)


def test_generating_set_30():
    s = Surface.get(3, 0)
    gens = generating_set(s)
    assert [g.name for g in gens] == ["t_c1", "t_c2", "y"]


def test_generating_set_rejects_small():
    with pytest.raises(ValueError):
        generating_set(Surface.get(2, 1))


def test_paper_Lf_choices_validate():
    from crosscap.complexes import validate_L_f
    s = Surface.get(3, 0)
    base = build_B30(s)
    N = b30_curves(s)
    V1 = [N["c1"], N["c2"], N["w"]]
    V2 = [N["c1"], N["c2"], N["j"]]
    assert validate_L_f(s, V1, base=base, radius=1)
    assert validate_L_f(s, V2, base=base, radius=1)
    # a single core is stabilized by twists about disjoint 2-sided curves
    assert not validate_L_f(s, [N["a1"]], base=base, radius=1)


def test_find_Lf_returns_a_validated_set():
    from crosscap.complexes import validate_L_f
    s = Surface.get(3, 0)
    base = build_B30(s)
    gen = generating_set(s)[0]
    L = find_L_f(s, gen, base=base, radius=1, max_size=2, census_bound=8)
    if L is not None:
        assert validate_L_f(s, L, base=base, radius=1, census_bound=8)
        assert all(any(isotopic(gen.apply(c), x) for x in base) for c in L)


def test_exhaustion_growth_and_monotonicity():
    s = Surface.get(3, 0)
    e1 = exhaustion(s, 1)
    e2 = exhaustion(s, 2)
    assert len(e1) == 13
    assert len(e1) < len(e2)
    assert all(any(c is x for x in e2) for c in e1)


def test_exports():
    s = Surface.get(3, 0)
    fc = build_complex(build_B30(s))
    dot = fc.to_dot()
    assert dot.count("--") == len(fc.edges())
    assert dot.count("label=") == 13
    payload = fc.to_json_dict()
    assert len(payload["vertices"]) == 13
    # stable across rebuilds
    assert fc.to_dot() == build_complex(build_B30(s)).to_dot()


def test_simplicial_map_validation():
    s = Surface.get(3, 0)
    fc = build_complex([core_curve(s, i) for i in (1, 2, 3)])
    SimplicialMap(fc, fc, [1, 2, 0])
    # collapsing an edge to a point is simplicial (though not locally injective)
    SimplicialMap(fc, fc, [0, 0, 1])


def test_simplicial_map_rejects_nonedge():
    s = Surface.get(3, 0)
    N = b30_curves(s)
    path = build_complex([N["e"], N["j"], N["l"]])
    with pytest.raises(ValueError):
        SimplicialMap(path, path, [0, 2, 1])
